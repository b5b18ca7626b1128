#pragma once

#include "hamrank/spectrum.hpp"

#include <optional>
#include <string_view>

namespace hamrank {

/// Whether a given theorem's threshold is met by the log-rank bound.
struct TheoremFlags {
    bool general_n_minus_2 = false;      ///< ceil(lg rank) >= n - 2
    bool small_a_applies = false;        ///< a <= floor(sqrt(n) / 4)
    bool small_a_full_n = false;         ///< applies and ceil(lg rank) == n
};

enum class ComplementRelation {
    equal_complexity,         ///< exact mode: a -> n - a, same function up to relabeling Alice's input
    complement_of_predicate,  ///< threshold mode: a -> n - a - 1, negated function
};

std::string_view to_string(ComplementRelation rel);

struct ComplementReduction {
    HammingInstance reduced;
    ComplementRelation relation;
};

struct BoundsReport {
    HammingInstance instance;
    ExactInt rank;
    int64_t d_lower = 0;      ///< ceil(lg rank); deterministic
    int64_t cstar_lower = 0;  ///< ceil(lg rank); entanglement + classical channel
    int64_t qstar_lower = 0;  ///< ceil(lg(rank) / 2); entanglement + quantum channel
    TheoremFlags theorem_flags;
    std::optional<ComplementReduction> complement;  ///< present when a > n/2 and a reduction exists
};

/// floor(sqrt(n) / 4), i.e. the largest a with a <= sqrt(n)/4.
int small_a_limit(int n);

BoundsReport log_rank_bounds(const HammingInstance& inst);

/// ceil(lg rank) >= n - 2 for every a <= n-1 (threshold) or a <= n (exact).
bool check_general_theorem(int n, Mode mode);

/// rank > 2^{n-1}, i.e. ceil(lg rank) == n, for every a <= floor(sqrt(n)/4).
bool check_small_a_theorem(int n, Mode mode);

/// Requires a > n/2 (and a < n in threshold mode, where a = n is constant).
ComplementReduction complement_reduce(const HammingInstance& inst);

}  // namespace hamrank
