#include "hamrank/exactnum.hpp"

#include <vector>

namespace hamrank {

namespace {

using PascalTable = std::vector<std::vector<ExactInt>>;

const PascalTable& pascal_table() {
    static const PascalTable table = [] {
        PascalTable t(kBinomialCacheRows);
        for (int n = 0; n < kBinomialCacheRows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = 1;
            t[n][n] = 1;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace

ExactInt binomial(int64_t n, int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n < kBinomialCacheRows) return pascal_table()[n][k];
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int64_t lg_floor(const ExactInt& v) {
    if (sgn(v) <= 0) throw std::invalid_argument("lg_floor: argument must be >= 1");
    return static_cast<int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

bool is_power_of_two(const ExactInt& v) {
    if (sgn(v) <= 0) return false;
    return mpz_scan1(v.get_mpz_t(), 0) == mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
}

int64_t lg_ceil(const ExactInt& v) {
    if (sgn(v) <= 0) throw std::invalid_argument("lg_ceil: argument must be >= 1");
    const int64_t fl = lg_floor(v);
    return is_power_of_two(v) ? fl : fl + 1;
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

bool is_reduced(const ExactRat& q) {
    if (sgn(q.get_den()) <= 0) return false;
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

ExactInt pow2(uint64_t e) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

ExactInt factorial(uint64_t n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

int64_t to_int64(const ExactInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

}  // namespace hamrank
