#pragma once

#include "hamrank/exactnum.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hamrank {

/// Dense integer polynomial; coeffs()[i] is the coefficient of x^i.
/// The zero polynomial is the single coefficient {0}.
class PolyZ {
public:
    PolyZ() : coeffs_{0} {}
    explicit PolyZ(std::vector<ExactInt> coeffs);

    static PolyZ monomial(std::size_t power, ExactInt coeff = 1);

    const std::vector<ExactInt>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

    /// [x^k], zero past the degree.
    ExactInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExactInt(0); }
    ExactInt evaluate(const ExactInt& x) const;

    friend PolyZ operator+(const PolyZ& p, const PolyZ& q);
    friend PolyZ operator-(const PolyZ& p, const PolyZ& q);
    friend PolyZ operator*(const PolyZ& p, const PolyZ& q);
    friend bool operator==(const PolyZ& p, const PolyZ& q) { return p.coeffs_ == q.coeffs_; }

private:
    void normalize();
    std::vector<ExactInt> coeffs_;
};

inline constexpr int kMaxExpansionDegree = 128;

/// (x+1)^u (x-1)^v. Requires u, v >= 0 and u + v <= 128.
PolyZ expand_pm(int u, int v);

/// w-th derivative of (x+1)^u (x-1)^v at x = 0, i.e. w! [x^w].
ExactInt phi(int u, int v, int w);

/// phi with memoized expansions, for sweeps that revisit the same (u, v).
/// Not thread-safe; give each sweep its own table.
class PhiTable {
public:
    ExactInt operator()(int u, int v, int w);
    const PolyZ& expansion(int u, int v);

private:
    std::map<std::pair<int, int>, PolyZ> cache_;
};

/// Product-rule residuals for multiplying the base function by (x-1) and by
/// (x+1). Both components are zero when the identity holds. Requires w >= 1.
std::pair<ExactInt, ExactInt> deriv_shift_residuals(int u, int v, int w);

/// [x^a] of ((x^{m+1} - (x-1)^{m+1}) / (m+1)) * (x+1)^{n-m}, by polynomial
/// expansion. Requires 0 <= a <= m <= n.
ExactRat g_coefficient(int a, int m, int n);

/// Residual of the exact identity behind claim 1..4; zero when it holds.
///   1: f(a,n,m+1) - (m+1)/(n-m) * ((n+1-a) h(a,m,n) - f(a,n,m))      (m < n)
///   2: h(a,m,n) - (-1)^m g_coefficient(a,m,n)
///   3: h(a,m,n) - (-1)^{m+1}/(m+1) * phi(n-m, m+1, a) / a!
///   4: f(a,n,m) - (-1)^m / a! * phi(n-m, m, a)
ExactRat claim_residual(int claim_id, int a, int m, int n);

/// Claim 5 as a biconditional. Vacuously true when phi(n-m, m, a) != 0.
/// Requires 0 <= a <= m < n.
bool claim5_holds(int a, int m, int n);

/// Implication phi(k,m,a) = phi(k,m,a-1) = 0  =>  phi(k-1,m,a) = phi(k-1,m,a-1) = 0.
/// Requires k > 0, a > 0, m >= 0.
bool claim6_propagation(int k, int m, int a);

/// Whether the hypothesis of claim6_propagation holds at (k, m, a).
bool claim6_hypothesis(int k, int m, int a);

}  // namespace hamrank
