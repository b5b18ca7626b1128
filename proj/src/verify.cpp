#include "hamrank/verify.hpp"

#include "hamrank/bounds.hpp"
#include "hamrank/genfunc.hpp"
#include "hamrank/matrixlab.hpp"
#include "hamrank/zeros.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>

namespace hamrank {

std::string_view to_string(VerifyGroup group) {
    switch (group) {
        case VerifyGroup::lemmas: return "lemmas";
        case VerifyGroup::claims: return "claims";
        case VerifyGroup::eigen: return "eigen";
        case VerifyGroup::theorems: return "theorems";
        default: return "all";
    }
}

VerifyGroup parse_verify_group(std::string_view text) {
    if (text == "lemmas") return VerifyGroup::lemmas;
    if (text == "claims") return VerifyGroup::claims;
    if (text == "eigen") return VerifyGroup::eigen;
    if (text == "theorems") return VerifyGroup::theorems;
    if (text == "all") return VerifyGroup::all;
    throw std::invalid_argument("unknown verify group '" + std::string(text) +
                                "' (expected lemmas|claims|eigen|theorems|all)");
}

int verify_cap(VerifyGroup group) {
    switch (group) {
        case VerifyGroup::lemmas: return kMaxSweepN;
        case VerifyGroup::claims: return 30;
        case VerifyGroup::eigen: return kMaxEigenCheckN;
        case VerifyGroup::theorems: return kMaxSweepN;
        default: return kMaxSweepN;
    }
}

bool VerifyReport::all_pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

namespace {

// Records the first failure only; later ones still count as checked.
class Tally {
public:
    Tally(std::string name, std::string range) {
        result_.name = std::move(name);
        result_.range = std::move(range);
    }
    void ok() { ++result_.checked; }
    void fail(std::string what) {
        ++result_.checked;
        if (result_.pass) result_.counterexample = std::move(what);
        result_.pass = false;
    }
    void expect(bool cond, const std::function<std::string()>& what) { cond ? ok() : fail(what()); }
    PropertyResult done(std::string note = {}) {
        result_.note = std::move(note);
        return std::move(result_);
    }

private:
    PropertyResult result_;
};

std::string tuple(std::initializer_list<std::pair<const char*, int64_t>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += ' ';
        s += k;
        s += '=';
        s += std::to_string(v);
    }
    return s;
}

std::string upto(const char* var, int lo, int hi) {
    return std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

void require_cap(int max_n, int cap, const char* what) {
    if (max_n > cap)
        throw LimitError(std::string(what) + ": max-n must be <= " + std::to_string(cap) + ", got " +
                         std::to_string(max_n));
}

PropertyResult consecutive(const char* name, int max_n, ConsecutiveScan (*scan)(int)) {
    require_cap(max_n, kMaxSweepN, name);
    Tally t(name, upto("n", 1, max_n));
    int64_t outside = 0;
    for (int n = 1; n <= max_n; ++n) {
        const ConsecutiveScan s = scan(n);
        outside += static_cast<int64_t>(s.outside_triangle.size());
        if (s.holds)
            t.ok();
        else
            t.fail(tuple({{"n", n}, {"a", s.counterexample->a}, {"m", s.counterexample->m}}));
    }
    return t.done(std::to_string(outside) + " zeros outside the lemma triangle recorded, not asserted");
}

}  // namespace

PropertyResult verify_no_consecutive_f(int max_n) {
    return consecutive("no_consecutive_zeros_f", max_n, &scan_no_consecutive_f);
}

PropertyResult verify_no_consecutive_F(int max_n) {
    return consecutive("no_consecutive_zeros_F", max_n, &scan_no_consecutive_F);
}

PropertyResult verify_zero_count_bound(int max_n) {
    require_cap(max_n, kMaxSweepN, "zero_count_bound");
    Tally t("zero_count_bound", upto("n", 1, max_n) + ", 0 <= a <= n, both modes");
    for (int n = 1; n <= max_n; ++n) {
        for (Mode mode : {Mode::threshold, Mode::exact}) {
            const ZeroCensus c = census(n, mode);
            for (int a = 0; a <= n; ++a) {
                const auto count = static_cast<int64_t>(c.weights_for(a).size());
                t.expect(count <= a, [&] {
                    return tuple({{"n", n}, {"a", a}, {"zeros", count}}) + " mode=" + std::string(to_string(mode));
                });
            }
        }
    }
    return t.done();
}

PropertyResult verify_F_shift_identity(int max_n) {
    require_cap(max_n, kMaxSweepN, "F_shift_identity");
    Tally t("F_shift_identity", upto("n", 1, max_n) + ", 1 <= m <= n, 0 <= a <= n-1");
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= n; ++m) {
            const auto big = F_by_distance(n, m);
            const auto small = f_by_distance(n - 1, m - 1);
            for (int a = 0; a <= n - 1; ++a)
                t.expect(big[a] == small[a], [&] { return tuple({{"a", a}, {"n", n}, {"m", m}}); });
        }
    }
    return t.done();
}

PropertyResult verify_census_shift_correspondence(int max_n) {
    require_cap(max_n, kMaxSweepN, "census_shift_correspondence");
    Tally t("census_shift_correspondence", upto("n", 2, max_n));
    for (int n = 2; n <= max_n; ++n) {
        const ZeroCensus big = census(n, Mode::threshold);
        const ZeroCensus small = census(n - 1, Mode::exact);
        for (int a = 0; a <= n - 1; ++a)
            for (int m = 1; m <= n; ++m)
                t.expect(big.contains(a, m) == small.contains(a, m - 1),
                         [&] { return tuple({{"a", a}, {"n", n}, {"m", m}}); });
    }
    return t.done();
}

PropertyResult verify_claim_residual(int claim_id, int max_n) {
    const std::string name = "claim" + std::to_string(claim_id) + "_residual";
    require_cap(max_n, verify_cap(VerifyGroup::claims), name.c_str());
    Tally t(name, "0 <= a <= m " + std::string(claim_id == 1 ? "< " : "<= ") + "n <= " + std::to_string(max_n));
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= n; ++m) {
            if (claim_id == 1 && m == n) continue;
            for (int a = 0; a <= m; ++a) {
                const ExactRat r = claim_residual(claim_id, a, m, n);
                t.expect(sgn(r) == 0, [&] { return tuple({{"a", a}, {"m", m}, {"n", n}}) + " residual=" + to_decimal(r); });
            }
        }
    return t.done();
}

PropertyResult verify_claim5(int max_n) {
    require_cap(max_n, verify_cap(VerifyGroup::claims), "claim5_biconditional");
    Tally t("claim5_biconditional", "0 <= a <= m < n <= " + std::to_string(max_n));
    PhiTable phi_of;
    int64_t engaged = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m < n; ++m)
            for (int a = 0; a <= m; ++a) {
                if (sgn(phi_of(n - m, m, a)) != 0) {
                    t.ok();
                    continue;
                }
                ++engaged;
                const bool lhs = sgn(phi_of(n - m - 1, m + 1, a)) == 0;
                const bool rhs = sgn(phi_of(n - m, m + 1, a)) == 0;
                t.expect(lhs == rhs, [&] { return tuple({{"a", a}, {"m", m}, {"n", n}}); });
            }
    return t.done(std::to_string(engaged) + " tuples satisfy the hypothesis");
}

PropertyResult verify_claim6(int max_kma) {
    require_cap(max_kma, verify_cap(VerifyGroup::claims), "claim6_propagation");
    Tally t("claim6_propagation", "1 <= k <= " + std::to_string(max_kma) + ", 0 <= m <= " + std::to_string(max_kma) +
                                      ", 1 <= a <= " + std::to_string(max_kma));
    PhiTable phi_of;
    int64_t engaged = 0;
    for (int k = 1; k <= max_kma; ++k)
        for (int m = 0; m <= max_kma; ++m)
            for (int a = 1; a <= max_kma; ++a) {
                if (!(sgn(phi_of(k, m, a)) == 0 && sgn(phi_of(k, m, a - 1)) == 0)) {
                    t.ok();
                    continue;
                }
                ++engaged;
                const bool propagated = sgn(phi_of(k - 1, m, a)) == 0 && sgn(phi_of(k - 1, m, a - 1)) == 0;
                t.expect(propagated, [&] { return tuple({{"k", k}, {"m", m}, {"a", a}}); });
            }
    return t.done(std::to_string(engaged) + " tuples satisfy the hypothesis");
}

PropertyResult verify_deriv_shift(int max_uv) {
    require_cap(max_uv, 40, "deriv_shift_residuals");
    Tally t("deriv_shift_residuals", "0 <= u, v <= " + std::to_string(max_uv) + ", 1 <= w <= u + v");
    PhiTable phi_of;
    for (int u = 0; u <= max_uv; ++u)
        for (int v = 0; v <= max_uv; ++v)
            for (int w = 1; w <= u + v; ++w) {
                const ExactInt base = phi_of(u, v, w);
                const ExactInt lower = phi_of(u, v, w - 1);
                const bool ok = phi_of(u, v + 1, w) == -base + w * lower && phi_of(u + 1, v, w) == base + w * lower;
                t.expect(ok, [&] { return tuple({{"u", u}, {"v", v}, {"w", w}}); });
            }
    return t.done();
}

PropertyResult verify_eigen_equation(int max_n, uint64_t seed) {
    require_cap(max_n, kMaxEigenCheckN, "eigen_equation");
    Tally t("eigen_equation", upto("n", 1, max_n) + ", 0 <= a <= n, both modes");
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= max_n; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact})
            for (int a = 0; a <= n; ++a) {
                const auto inst = HammingInstance::make(n, a, mode);
                const BitMatrix mat = BitMatrix::build(inst);
                const uint64_t dim = mat.dim();
                const auto check = [&](uint64_t z) {
                    const EigenCheck e = verify_eigen(mat, inst, z);
                    t.expect(e.holds, [&] {
                        return tuple({{"n", n}, {"a", a}, {"z", static_cast<int64_t>(z)}}) + " mode=" + std::string(to_string(mode));
                    });
                };
                if (n <= 8) {
                    for (uint64_t z = 0; z < dim; ++z) check(z);
                } else {
                    for (int i = 0; i < 100; ++i) check(rng() & (dim - 1));
                }
            }
    return t.done("exhaustive z for n <= 8, 100 seeded random z above");
}

PropertyResult verify_rank_agreement(int max_n, uint64_t seed) {
    require_cap(max_n, kMaxEigenCheckN, "rank_agreement");
    const int top = std::min(max_n, 10);
    Tally t("rank_agreement", upto("n", 1, top) + ", 0 <= a <= n, both modes");
    for (int n = 1; n <= top; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact})
            for (int a = 0; a <= n; ++a) {
                const auto oracle = n <= kMaxExactRankN ? RankOracle::both : RankOracle::modp;
                const RankReport r = rank_report(HammingInstance::make(n, a, mode), seed, oracle);
                t.expect(r.agree, [&] {
                    return tuple({{"n", n}, {"a", a}}) + " mode=" + std::string(to_string(mode)) +
                           " formula=" + to_decimal(r.formula_rank);
                });
            }
    return t.done("two primes in [2^61, 2^62] from seed " + std::to_string(seed) + "; Bareiss rank for n <= 6");
}

PropertyResult verify_general_theorem(int min_n, int max_n) {
    require_cap(max_n, kMaxSweepN, "general_theorem");
    Tally t("general_theorem_n_minus_2", upto("n", min_n, max_n) + ", admissible a, both modes");
    for (int n = std::max(1, min_n); n <= max_n; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact}) {
            const int max_a = mode == Mode::threshold ? n - 1 : n;
            for (int a = 0; a <= max_a; ++a) {
                const BoundsReport b = log_rank_bounds(HammingInstance::make(n, a, mode));
                t.expect(b.d_lower >= n - 2, [&] {
                    return tuple({{"n", n}, {"a", a}, {"bound", b.d_lower}}) + " mode=" + std::string(to_string(mode));
                });
            }
        }
    return t.done();
}

PropertyResult verify_small_a_theorem(int max_n) {
    require_cap(max_n, kMaxSweepN, "small_a_theorem");
    Tally t("small_a_theorem_full_n", upto("n", 1, max_n) + ", 0 <= a <= sqrt(n)/4, both modes");
    for (int n = 1; n <= max_n; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact})
            for (int a = 0; a <= small_a_limit(n); ++a) {
                const BoundsReport b = log_rank_bounds(HammingInstance::make(n, a, mode));
                t.expect(b.rank > pow2(n - 1) && b.d_lower == n, [&] {
                    return tuple({{"n", n}, {"a", a}}) + " mode=" + std::string(to_string(mode));
                });
            }
    return t.done("constant c = 1/4");
}

PropertyResult verify_exact_complement(int max_n) {
    const int top = std::min(max_n, 30);
    Tally t("exact_complement_symmetry", upto("n", 1, top) + ", 0 <= a <= n");
    for (int n = 1; n <= top; ++n)
        for (int a = 0; a <= n; ++a) {
            const SpectrumTable lhs(HammingInstance::make(n, a, Mode::exact));
            const SpectrumTable rhs(HammingInstance::make(n, n - a, Mode::exact));
            t.expect(lhs.rank() == rhs.rank() && lhs.zero_weights() == rhs.zero_weights(),
                     [&] { return tuple({{"n", n}, {"a", a}}); });
        }
    return t.done();
}

PropertyResult verify_threshold_complement(int max_n, uint64_t seed) {
    const int top = std::min(max_n, 8);
    Tally t("threshold_complement_rank", upto("n", 1, top) + ", 0 <= a <= n-1");
    const uint64_t prime = random_primes(seed, 1).front();
    for (int n = 1; n <= top; ++n) {
        const uint64_t full = (uint64_t{1} << n) - 1;
        for (int a = 0; a <= n - 1; ++a) {
            const auto inst = HammingInstance::make(n, a, Mode::threshold);
            const auto dual = HammingInstance::make(n, n - a - 1, Mode::threshold);
            const BitMatrix direct = BitMatrix::build(inst);
            const BitMatrix dual_mat = BitMatrix::build(dual);
            // 1 - M_{n-a-1}(complement(x), y) reproduces M_a entry for entry.
            const BitMatrix rebuilt = BitMatrix::from_predicate(n, a, Mode::threshold, [&](uint64_t x, uint64_t y) {
                return !dual_mat.at(x ^ full, y);
            });
            const int64_t r1 = rank_mod_p(direct, prime);
            const int64_t r2 = rank_mod_p(dual_mat, prime);
            t.expect(rebuilt == direct && std::abs(r1 - r2) <= 1, [&] {
                return tuple({{"n", n}, {"a", a}, {"rank_a", r1}, {"rank_dual", r2}});
            });
        }
    }
    return t.done("oracle rank mod a seeded prime");
}

VerifyReport run_verification(VerifyGroup group, int max_n, uint64_t seed) {
    if (max_n < 0) throw std::invalid_argument("max-n must be non-negative");
    if (group != VerifyGroup::all) require_cap(max_n, verify_cap(group), ("verify " + std::string(to_string(group))).c_str());

    VerifyReport report;
    report.group = group;
    report.max_n = max_n == 0 ? verify_cap(group) : max_n;
    const auto limit = [&](VerifyGroup g) { return max_n == 0 ? verify_cap(g) : std::min(max_n, verify_cap(g)); };
    auto& out = report.properties;

    if (group == VerifyGroup::lemmas || group == VerifyGroup::all) {
        const int n = limit(VerifyGroup::lemmas);
        out.push_back(verify_no_consecutive_f(n));
        out.push_back(verify_no_consecutive_F(n));
        out.push_back(verify_zero_count_bound(n));
        out.push_back(verify_F_shift_identity(n));
        out.push_back(verify_census_shift_correspondence(n));
    }
    if (group == VerifyGroup::claims || group == VerifyGroup::all) {
        const int n = limit(VerifyGroup::claims);
        for (int id = 1; id <= 4; ++id) out.push_back(verify_claim_residual(id, n));
        out.push_back(verify_claim5(n));
        out.push_back(verify_claim6(n));
        out.push_back(verify_deriv_shift(std::min(n, 40)));
    }
    if (group == VerifyGroup::eigen || group == VerifyGroup::all) {
        const int n = limit(VerifyGroup::eigen);
        out.push_back(verify_eigen_equation(n, seed));
        out.push_back(verify_rank_agreement(n, seed));
    }
    if (group == VerifyGroup::theorems || group == VerifyGroup::all) {
        const int n = limit(VerifyGroup::theorems);
        out.push_back(verify_general_theorem(10, n));
        out.push_back(verify_small_a_theorem(n));
        out.push_back(verify_exact_complement(n));
        out.push_back(verify_threshold_complement(n, seed));
    }
    return report;
}

}  // namespace hamrank
