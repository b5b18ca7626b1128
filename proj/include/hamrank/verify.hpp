#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamrank {

/// One exhaustively checked property.
struct PropertyResult {
    std::string name;
    std::string range;
    bool pass = true;
    int64_t checked = 0;
    std::optional<std::string> counterexample;  // first failure only
    std::string note;
};

enum class VerifyGroup { lemmas, claims, eigen, theorems, all };

std::string_view to_string(VerifyGroup group);
VerifyGroup parse_verify_group(std::string_view text);

/// Largest max_n each group accepts; `all` clips to these per group.
int verify_cap(VerifyGroup group);

struct VerifyReport {
    VerifyGroup group = VerifyGroup::all;
    int max_n = 0;
    std::vector<PropertyResult> properties;
    bool all_pass() const;
};

/// max_n = 0 selects the group cap. Throws LimitError when max_n exceeds the
/// cap of a single group.
VerifyReport run_verification(VerifyGroup group, int max_n, uint64_t seed);

// Individual properties. Ranges are inclusive.

PropertyResult verify_no_consecutive_f(int max_n);
PropertyResult verify_no_consecutive_F(int max_n);
PropertyResult verify_zero_count_bound(int max_n);
PropertyResult verify_F_shift_identity(int max_n);
/// Zero of F at (a,n,m), m >= 1  <=>  zero of f at (a,n-1,m-1), read off the censuses.
PropertyResult verify_census_shift_correspondence(int max_n);

PropertyResult verify_claim_residual(int claim_id, int max_n);
PropertyResult verify_claim5(int max_n);
PropertyResult verify_claim6(int max_kma);
PropertyResult verify_deriv_shift(int max_uv);

/// Exhaustive over z for n <= 8, 100 seeded random z for 9 <= n <= 12.
PropertyResult verify_eigen_equation(int max_n, uint64_t seed);
/// Formula rank against two seeded primes for n <= min(max_n, 10) and the
/// Bareiss rank for n <= 6.
PropertyResult verify_rank_agreement(int max_n, uint64_t seed);

/// ceil(lg rank) >= n-2 for min_n <= n <= max_n, admissible a, both modes.
PropertyResult verify_general_theorem(int min_n, int max_n);
/// rank > 2^{n-1} for a <= sqrt(n)/4, 1 <= n <= max_n, both modes.
PropertyResult verify_small_a_theorem(int max_n);
/// zero_weights and rank agree for a and n-a in exact mode.
PropertyResult verify_exact_complement(int max_n);
/// |rank(M_a) - rank(M_{n-a-1})| <= 1 with oracle ranks, threshold mode.
PropertyResult verify_threshold_complement(int max_n, uint64_t seed);

}  // namespace hamrank
