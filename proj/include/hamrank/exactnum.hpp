#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamrank {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Thrown when a request exceeds a materialization or sweep cap.
/// Derives from invalid_argument so callers can treat it as a usage error.
class LimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient with the zero convention: C(n,k) = 0 when k < 0,
/// k > n, or n < 0. Rows n < kBinomialCacheRows come from a table that is
/// built once on first use and never mutated afterwards.
ExactInt binomial(int64_t n, int64_t k);

inline constexpr int kBinomialCacheRows = 256;

/// Exact floor(lg v) and ceil(lg v) from the bit length. v must be >= 1.
int64_t lg_floor(const ExactInt& v);
int64_t lg_ceil(const ExactInt& v);

bool is_power_of_two(const ExactInt& v);

/// num/den in lowest terms with a positive denominator. den != 0.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

/// True iff q is already canonical (gcd 1, positive denominator).
bool is_reduced(const ExactRat& q);

ExactInt pow2(uint64_t e);
ExactInt factorial(uint64_t n);

inline std::string to_decimal(const ExactInt& v) { return v.get_str(10); }
inline std::string to_decimal(const ExactRat& q) { return q.get_str(10); }

/// Narrowing conversion; throws std::overflow_error if v does not fit.
int64_t to_int64(const ExactInt& v);

}  // namespace hamrank
