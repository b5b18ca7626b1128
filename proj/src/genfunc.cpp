#include "hamrank/genfunc.hpp"

#include "hamrank/spectrum.hpp"

#include <algorithm>
#include <string>

namespace hamrank {

PolyZ::PolyZ(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    normalize();
}

PolyZ PolyZ::monomial(std::size_t power, ExactInt coeff) {
    std::vector<ExactInt> c(power + 1, ExactInt(0));
    c[power] = std::move(coeff);
    return PolyZ(std::move(c));
}

void PolyZ::normalize() {
    while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactInt PolyZ::evaluate(const ExactInt& x) const {
    ExactInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyZ operator+(const PolyZ& p, const PolyZ& q) {
    std::vector<ExactInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()), ExactInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return PolyZ(std::move(c));
}

PolyZ operator-(const PolyZ& p, const PolyZ& q) {
    std::vector<ExactInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()), ExactInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
    return PolyZ(std::move(c));
}

PolyZ operator*(const PolyZ& p, const PolyZ& q) {
    if (p.is_zero() || q.is_zero()) return PolyZ();
    std::vector<ExactInt> c(p.coeffs_.size() + q.coeffs_.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (sgn(p.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return PolyZ(std::move(c));
}

namespace {

// (x+1)^u and (x-1)^v written out from binomials.
PolyZ plus_one_power(int u) {
    std::vector<ExactInt> c(u + 1);
    for (int i = 0; i <= u; ++i) c[i] = binomial(u, i);
    return PolyZ(std::move(c));
}

PolyZ minus_one_power(int v) {
    std::vector<ExactInt> c(v + 1);
    for (int j = 0; j <= v; ++j) {
        c[j] = binomial(v, j);
        if ((v - j) & 1) c[j] = -c[j];
    }
    return PolyZ(std::move(c));
}

void require_nonnegative(int u, int v, int w, const char* who) {
    if (u < 0 || v < 0 || w < 0)
        throw std::invalid_argument(std::string(who) + ": arguments must be non-negative");
}

}  // namespace

PolyZ expand_pm(int u, int v) {
    require_nonnegative(u, v, 0, "expand_pm");
    if (u + v > kMaxExpansionDegree)
        throw LimitError("expand_pm: u + v must be <= " + std::to_string(kMaxExpansionDegree));
    return plus_one_power(u) * minus_one_power(v);
}

ExactInt phi(int u, int v, int w) {
    require_nonnegative(u, v, w, "phi");
    if (w > u + v) return 0;
    if (u + v <= kMaxExpansionDegree) return expand_pm(u, v).coeff(w) * factorial(w);
    // Past the expansion cap, read the one coefficient off the binomial convolution.
    ExactInt c = 0;
    for (int i = std::max(0, w - v); i <= std::min(u, w); ++i) {
        ExactInt term = binomial(u, i) * binomial(v, w - i);
        if ((v - (w - i)) & 1)
            c -= term;
        else
            c += term;
    }
    return c * factorial(w);
}

const PolyZ& PhiTable::expansion(int u, int v) {
    auto it = cache_.find({u, v});
    if (it == cache_.end()) it = cache_.emplace(std::pair{u, v}, expand_pm(u, v)).first;
    return it->second;
}

ExactInt PhiTable::operator()(int u, int v, int w) {
    require_nonnegative(u, v, w, "phi");
    if (w > u + v) return 0;
    return expansion(u, v).coeff(w) * factorial(w);
}

std::pair<ExactInt, ExactInt> deriv_shift_residuals(int u, int v, int w) {
    require_nonnegative(u, v, w, "deriv_shift_residuals");
    if (w == 0) throw std::invalid_argument("deriv_shift_residuals: w must be >= 1");
    const ExactInt base = phi(u, v, w);
    const ExactInt lower = phi(u, v, w - 1);
    ExactInt times_minus = phi(u, v + 1, w) - (-base + w * lower);
    ExactInt times_plus = phi(u + 1, v, w) - (base + w * lower);
    return {std::move(times_minus), std::move(times_plus)};
}

ExactRat g_coefficient(int a, int m, int n) {
    if (a < 0 || a > m || m > n)
        throw std::invalid_argument("g_coefficient: need 0 <= a <= m <= n");
    const PolyZ numerator = PolyZ::monomial(m + 1) - minus_one_power(m + 1);
    const PolyZ product = numerator * plus_one_power(n - m);
    return make_rat(product.coeff(a), m + 1);
}

namespace {

ExactRat sign_rat(int exponent) { return (exponent & 1) ? ExactRat(-1) : ExactRat(1); }

}  // namespace

ExactRat claim_residual(int claim_id, int a, int m, int n) {
    if (claim_id < 1 || claim_id > 4)
        throw std::invalid_argument("claim_residual: claim_id must be 1..4, got " + std::to_string(claim_id));
    if (a < 0 || a > m || m > n || (claim_id == 1 && m >= n))
        throw std::invalid_argument("claim_residual: parameters out of range for claim " + std::to_string(claim_id));

    switch (claim_id) {
        case 1: {
            const ExactRat rhs = make_rat(m + 1, n - m) * (ExactRat(n + 1 - a) * h_eval(a, m, n) - ExactRat(f_eval(a, n, m)));
            return ExactRat(f_eval(a, n, m + 1)) - rhs;
        }
        case 2:
            return h_eval(a, m, n) - sign_rat(m) * g_coefficient(a, m, n);
        case 3: {
            const ExactRat rhs = sign_rat(m + 1) * make_rat(1, m + 1) * make_rat(phi(n - m, m + 1, a), factorial(a));
            return h_eval(a, m, n) - rhs;
        }
        default: {
            const ExactRat rhs = sign_rat(m) * make_rat(phi(n - m, m, a), factorial(a));
            return ExactRat(f_eval(a, n, m)) - rhs;
        }
    }
}

bool claim5_holds(int a, int m, int n) {
    if (a < 0 || a > m || m >= n) throw std::invalid_argument("claim5_holds: need 0 <= a <= m < n");
    if (sgn(phi(n - m, m, a)) != 0) return true;
    return (sgn(phi(n - m - 1, m + 1, a)) == 0) == (sgn(phi(n - m, m + 1, a)) == 0);
}

bool claim6_hypothesis(int k, int m, int a) {
    if (k <= 0 || a <= 0 || m < 0) throw std::invalid_argument("claim6: need k > 0, a > 0, m >= 0");
    return sgn(phi(k, m, a)) == 0 && sgn(phi(k, m, a - 1)) == 0;
}

bool claim6_propagation(int k, int m, int a) {
    if (!claim6_hypothesis(k, m, a)) return true;
    return sgn(phi(k - 1, m, a)) == 0 && sgn(phi(k - 1, m, a - 1)) == 0;
}

}  // namespace hamrank
