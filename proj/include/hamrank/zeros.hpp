#pragma once

#include "hamrank/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hamrank {

inline constexpr int kMaxSweepN = 60;

struct ZeroLocus {
    int a = 0;
    int m = 0;
    friend bool operator==(const ZeroLocus&, const ZeroLocus&) = default;
};

/// Every (a, m) with 0 <= a, m <= n at which the eigenvalue vanishes, plus
/// any breach of the "at most a zeros for fixed a" bound.
struct ZeroCensus {
    int n = 0;
    Mode mode = Mode::threshold;
    std::vector<ZeroLocus> entries;
    std::vector<std::string> violations;

    bool contains(int a, int m) const;
    std::vector<int> weights_for(int a) const;
};

ZeroCensus census(int n, Mode mode);

struct ConsecutiveScan {
    int n = 0;
    bool holds = true;
    std::optional<ZeroLocus> counterexample;
    /// Zeros inside the lemma's triangle, each followed by a nonzero value.
    std::vector<ZeroLocus> witnesses;
    /// Zeros outside the triangle (a > m for f, a >= m for F). Recorded only.
    std::vector<ZeroLocus> outside_triangle;
};

/// For 0 <= a <= m < n: f(a,n,m) = 0 implies f(a,n,m+1) != 0.
ConsecutiveScan scan_no_consecutive_f(int n);
/// For 0 <= a < m < n: F(a,n,m) = 0 implies F(a,n,m+1) != 0.
ConsecutiveScan scan_no_consecutive_F(int n);

inline bool check_no_consecutive_f(int n) { return scan_no_consecutive_f(n).holds; }
inline bool check_no_consecutive_F(int n) { return scan_no_consecutive_F(n).holds; }

/// F(a,n,m) - f(a,n-1,m-1). Requires 1 <= m <= n and 0 <= a <= n-1.
ExactInt F_shift_residual(int a, int n, int m);

struct ConjectureRow {
    int n = 0;
    int a = 0;
    Mode mode = Mode::threshold;
    ExactInt rank;
    int64_t log_rank_bound = 0;  // ceil(lg rank)
    int target = 0;              // n + 1
};

/// Rank-side evidence for the n+1 conjectures over admissible a
/// (a <= n-1 threshold, a <= n exact). The bound never exceeds n, so every
/// row documents a gap that log-rank cannot close.
std::vector<ConjectureRow> conjecture_sweep(int max_n);

}  // namespace hamrank
