#include "hamrank/bounds.hpp"

#include <algorithm>

namespace hamrank {

std::string_view to_string(ComplementRelation rel) {
    return rel == ComplementRelation::equal_complexity ? "equal complexity" : "complement of predicate";
}

int small_a_limit(int n) {
    // a <= sqrt(n)/4  <=>  16 a^2 <= n
    int a = 0;
    while (16 * (a + 1) * (a + 1) <= n) ++a;
    return a;
}

namespace {

bool reducible(const HammingInstance& inst) {
    if (2 * inst.a <= inst.n) return false;
    return inst.mode == Mode::exact || inst.a < inst.n;
}

}  // namespace

BoundsReport log_rank_bounds(const HammingInstance& inst) {
    BoundsReport report;
    report.instance = HammingInstance::make(inst.n, inst.a, inst.mode);
    report.rank = SpectrumTable(report.instance).rank();

    const int64_t lg = lg_ceil(report.rank);
    report.d_lower = lg;
    report.cstar_lower = lg;
    report.qstar_lower = (lg + 1) / 2;

    const int n = report.instance.n;
    report.theorem_flags.general_n_minus_2 = lg >= n - 2;
    report.theorem_flags.small_a_applies = report.instance.a <= small_a_limit(n);
    report.theorem_flags.small_a_full_n = report.theorem_flags.small_a_applies && lg == n;

    if (reducible(report.instance)) report.complement = complement_reduce(report.instance);
    return report;
}

bool check_general_theorem(int n, Mode mode) {
    const int max_a = mode == Mode::threshold ? n - 1 : n;
    for (int a = 0; a <= max_a; ++a)
        if (!log_rank_bounds(HammingInstance::make(n, a, mode)).theorem_flags.general_n_minus_2) return false;
    return true;
}

bool check_small_a_theorem(int n, Mode mode) {
    const ExactInt half = pow2(static_cast<uint64_t>(n - 1));
    for (int a = 0; a <= std::min(small_a_limit(n), n); ++a)
        if (SpectrumTable(HammingInstance::make(n, a, mode)).rank() <= half) return false;
    return true;
}

ComplementReduction complement_reduce(const HammingInstance& inst) {
    const auto checked = HammingInstance::make(inst.n, inst.a, inst.mode);
    if (2 * checked.a <= checked.n)
        throw std::invalid_argument("complement_reduce: requires a > n/2 (no reduction needed for a=" +
                                    std::to_string(checked.a) + ", n=" + std::to_string(checked.n) + ")");
    if (checked.mode == Mode::exact)
        return {HammingInstance::make(checked.n, checked.n - checked.a, Mode::exact), ComplementRelation::equal_complexity};
    if (checked.a == checked.n)
        throw std::invalid_argument("complement_reduce: threshold a = n is the constant function, nothing to reduce to");
    return {HammingInstance::make(checked.n, checked.n - checked.a - 1, Mode::threshold),
            ComplementRelation::complement_of_predicate};
}

}  // namespace hamrank
