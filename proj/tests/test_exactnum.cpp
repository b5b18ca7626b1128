#include "hamrank/exactnum.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hamrank;

TEST_CASE("binomial matches the additive Pascal triangle") {
    for (int n = 0; n <= 40; ++n) {
        const auto row = oracle::pascal_row(n);
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == row[k]);
    }
}

TEST_CASE("binomial zero convention") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial past the cached rows") {
    const int64_t n = kBinomialCacheRows + 44;
    CHECK(binomial(n, 7) == binomial(n - 1, 6) + binomial(n - 1, 7));
    CHECK(binomial(n, n - 3) == binomial(n, 3));
    CHECK(binomial(300, 150) == oracle::pascal_row(300)[150]);
}

TEST_CASE("binomial symmetry and row sums") {
    for (int n = 0; n <= 64; ++n) {
        ExactInt sum = 0;
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
            sum += binomial(n, k);
        }
        CHECK(sum == pow2(n));
    }
}

TEST_CASE("lg floor and ceil") {
    CHECK(lg_floor(1) == 0);
    CHECK(lg_ceil(1) == 0);
    CHECK(lg_floor(22) == 4);
    CHECK(lg_ceil(22) == 5);
    CHECK(lg_ceil(32) == 5);
    CHECK(lg_ceil(33) == 6);
    for (uint64_t e = 0; e < 130; e += 7) {
        const ExactInt p = pow2(e);
        CHECK(lg_floor(p) == static_cast<int64_t>(e));
        CHECK(lg_ceil(p) == static_cast<int64_t>(e));
        CHECK(lg_ceil(p + 1) == static_cast<int64_t>(e) + 1);
        if (e > 1) CHECK(lg_floor(p - 1) == static_cast<int64_t>(e) - 1);
    }
    for (int v = 1; v < 5000; ++v) {
        const int64_t lo = lg_floor(v), hi = lg_ceil(v);
        CHECK(pow2(lo) <= v);
        CHECK(pow2(lo + 1) > v);
        CHECK(pow2(hi) >= v);
        if (hi > 0) CHECK(pow2(hi - 1) < v);
    }
    CHECK_THROWS_AS(lg_floor(0), std::invalid_argument);
    CHECK_THROWS_AS(lg_ceil(-4), std::invalid_argument);
}

TEST_CASE("power of two") {
    CHECK(is_power_of_two(1));
    CHECK(is_power_of_two(pow2(100)));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(22));
    CHECK_FALSE(is_power_of_two(-8));
}

TEST_CASE("rationals are canonical") {
    const ExactRat q = make_rat(6, -4);
    CHECK(q == ExactRat(-3, 2));
    CHECK(q.get_den() == 2);
    CHECK(is_reduced(q));
    CHECK(make_rat(0, -7) == 0);
    CHECK(make_rat(0, -7).get_den() == 1);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);

    ExactRat raw;
    raw.get_num() = 4;
    raw.get_den() = 6;
    CHECK_FALSE(is_reduced(raw));
    for (int a = -30; a <= 30; ++a)
        for (int b = 1; b <= 30; ++b) CHECK(is_reduced(make_rat(a, b)));
}

TEST_CASE("factorial and narrowing") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == ExactInt("2432902008176640000"));
    CHECK(to_int64(ExactInt("9223372036854775807")) == INT64_MAX);
    CHECK(to_int64(-5) == -5);
    CHECK_THROWS_AS(to_int64(pow2(63)), std::overflow_error);
    CHECK(to_decimal(pow2(70)) == "1180591620717411303424");
    CHECK(to_decimal(ExactRat(-1, 3)) == "-1/3");
}

TEST_CASE("limit error is a usage error") {
    const LimitError e("cap");
    const std::invalid_argument& base = e;
    CHECK(std::string(base.what()) == "cap");
}
