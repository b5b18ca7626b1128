#include "hamrank/zeros.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hamrank;

namespace {

mpz_class threshold_oracle(int a, int n, int m) {
    mpz_class s = 0;
    for (int j = 0; j <= a; ++j) s += oracle::krawtchouk_poly(j, n, m);
    return s;
}

}  // namespace

TEST_CASE("census agrees with the polynomial oracle") {
    for (int n = 1; n <= 16; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact}) {
            const ZeroCensus c = census(n, mode);
            CHECK(c.n == n);
            CHECK(c.violations.empty());
            std::size_t expected = 0;
            for (int a = 0; a <= n; ++a)
                for (int m = 0; m <= n; ++m) {
                    const mpz_class v = mode == Mode::exact ? oracle::krawtchouk_poly(a, n, m) : threshold_oracle(a, n, m);
                    const bool zero = v == 0;
                    expected += zero;
                    CHECK(c.contains(a, m) == zero);
                }
            CHECK(c.entries.size() == expected);
        }
}

TEST_CASE("census weights and the zero-count bound") {
    const ZeroCensus c = census(4, Mode::exact);
    CHECK(c.weights_for(1) == std::vector<int>{2});
    CHECK(census(5, Mode::threshold).weights_for(1) == std::vector<int>{3});
    for (int n = 1; n <= 60; ++n)
        for (Mode mode : {Mode::threshold, Mode::exact}) {
            const ZeroCensus z = census(n, mode);
            CHECK(z.violations.empty());
            for (int a = 0; a <= n; ++a) CHECK(z.weights_for(a).size() <= static_cast<std::size_t>(a));
        }
}

TEST_CASE("no consecutive zeros of f inside the triangle") {
    for (int n = 1; n <= 60; ++n) {
        const auto s = scan_no_consecutive_f(n);
        CHECK(s.holds);
        CHECK_FALSE(s.counterexample.has_value());
        for (const auto& w : s.witnesses) {
            CHECK(w.a <= w.m);
            CHECK(w.m < n);
            CHECK(f_eval(w.a, n, w.m) == 0);
            CHECK(f_eval(w.a, n, w.m + 1) != 0);
        }
        for (const auto& o : s.outside_triangle) CHECK(o.a > o.m);
    }
    // f(1,4,2) = 0 followed by f(1,4,3) = -2.
    const auto s4 = scan_no_consecutive_f(4);
    CHECK(std::find(s4.witnesses.begin(), s4.witnesses.end(), ZeroLocus{1, 2}) != s4.witnesses.end());
}

TEST_CASE("no consecutive zeros of F inside the triangle") {
    for (int n = 1; n <= 60; ++n) {
        const auto s = scan_no_consecutive_F(n);
        CHECK(s.holds);
        for (const auto& w : s.witnesses) {
            CHECK(w.a < w.m);
            CHECK(F_eval(w.a, n, w.m) == 0);
            CHECK(F_eval(w.a, n, w.m + 1) != 0);
        }
        for (const auto& o : s.outside_triangle) CHECK(o.a >= o.m);
    }
    const auto s5 = scan_no_consecutive_F(5);
    CHECK(std::find(s5.witnesses.begin(), s5.witnesses.end(), ZeroLocus{1, 3}) != s5.witnesses.end());
    CHECK(check_no_consecutive_f(7));
    CHECK(check_no_consecutive_F(7));
}

TEST_CASE("F shift identity") {
    for (int n = 1; n <= 60; ++n)
        for (int m = 1; m <= n; ++m)
            for (int a = 0; a <= n - 1; ++a) CHECK(F_shift_residual(a, n, m) == 0);
    CHECK_THROWS_AS(F_shift_residual(0, 3, 0), std::invalid_argument);
}

TEST_CASE("conjecture sweep rows") {
    const auto rows = conjecture_sweep(12);
    std::size_t expected = 0;
    for (int n = 1; n <= 12; ++n) expected += n + (n + 1);
    CHECK(rows.size() == expected);
    for (const auto& r : rows) {
        CHECK(r.target == r.n + 1);
        CHECK(r.log_rank_bound <= r.n);
        CHECK(r.log_rank_bound == lg_ceil(r.rank));
        CHECK(r.rank == SpectrumTable(HammingInstance::make(r.n, r.a, r.mode)).rank());
        if (r.mode == Mode::threshold) CHECK(r.a <= r.n - 1);
    }
    CHECK_THROWS_AS(conjecture_sweep(61), LimitError);
}
