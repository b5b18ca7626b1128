#pragma once

#include "hamrank/spectrum.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hamrank {

inline constexpr int kMaxMatrixN = 14;
inline constexpr int kMaxModpRankN = 12;
inline constexpr int kMaxExactRankN = 6;
inline constexpr int kMaxEigenCheckN = 12;

inline int ham(uint64_t x, uint64_t y) { return __builtin_popcountll(x ^ y); }

/// Dense 2^n x 2^n 0/1 matrix with rows packed into 64-bit words.
/// Bit y of row x is entry (x, y). Immutable after construction.
class BitMatrix {
public:
    /// M_a or M_{=a}. Requires n <= kMaxMatrixN.
    static BitMatrix build(const HammingInstance& inst);
    /// Arbitrary matrix from an entry predicate; a/mode are carried as labels.
    static BitMatrix from_predicate(int n, int a, Mode mode, const std::function<bool(uint64_t, uint64_t)>& entry);

    /// Text format: "n a mode" then 2^n lines of 2^n '0'/'1' characters.
    static BitMatrix parse(std::string_view text);
    std::string to_text() const;

    int n() const { return n_; }
    int a() const { return a_; }
    Mode mode() const { return mode_; }
    uint64_t dim() const { return uint64_t{1} << n_; }
    std::size_t words_per_row() const { return words_; }

    bool at(uint64_t x, uint64_t y) const { return (bits_[x * words_ + (y >> 6)] >> (y & 63)) & 1u; }
    std::span<const uint64_t> row(uint64_t x) const { return {bits_.data() + x * words_, words_}; }
    uint64_t row_sum(uint64_t x) const;

    /// result(i, j) = this(row_perm[i], col_perm[j]).
    BitMatrix permuted(std::span<const uint64_t> row_perm, std::span<const uint64_t> col_perm) const;
    /// result(i, j) = 1 - this(i, j).
    BitMatrix negated() const;

    bool is_symmetric() const;
    /// Row x XOR c equals row x with columns re-indexed by y -> y XOR c, for every x and c.
    bool is_translation_invariant() const;
    /// Common row sum, if every row has the same one.
    std::optional<uint64_t> constant_row_sum() const;
    bool is_monochromatic() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    BitMatrix(int n, int a, Mode mode);
    void set(uint64_t x, uint64_t y) { bits_[x * words_ + (y >> 6)] |= uint64_t{1} << (y & 63); }

    int n_ = 0;
    int a_ = 0;
    Mode mode_ = Mode::threshold;
    std::size_t words_ = 1;
    std::vector<uint64_t> bits_;
};

inline BitMatrix build_matrix(const HammingInstance& inst) { return BitMatrix::build(inst); }

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t v);

/// Rank over Z/p by Gaussian elimination. p must be prime and < 2^63.
/// Never exceeds the rational rank. Requires n <= kMaxModpRankN.
int64_t rank_mod_p(const BitMatrix& mat, uint64_t prime);

/// Rational rank by fraction-free (Bareiss) elimination. Requires n <= kMaxExactRankN.
int64_t rank_exact_small(const BitMatrix& mat);

/// `count` distinct primes in [2^61, 2^62], drawn from mt19937_64(seed).
std::vector<uint64_t> random_primes(uint64_t seed, int count = 2);

enum class RankOracle { modp, exact, both };

std::string_view to_string(RankOracle oracle);
RankOracle parse_oracle(std::string_view text);

struct RankReport {
    HammingInstance instance;
    ExactInt formula_rank;
    uint64_t seed = 0;
    std::vector<uint64_t> primes;
    std::vector<int64_t> oracle_rank_modp;  // parallel to primes
    std::optional<int64_t> oracle_rank_exact;
    bool agree = false;
};

RankReport rank_report(const HammingInstance& inst, uint64_t seed, RankOracle oracle = RankOracle::modp);

struct EigenCheck {
    bool holds = false;
    int64_t eigenvalue = 0;
    std::optional<uint64_t> first_bad_row;
};

/// M v_z == eigenvalue(inst, popcount(z)) v_z, by direct matrix-vector product.
EigenCheck verify_eigen(const BitMatrix& mat, const HammingInstance& inst, uint64_t z);
/// Builds the matrix first. Requires n <= kMaxEigenCheckN.
EigenCheck verify_eigen(const HammingInstance& inst, uint64_t z);

}  // namespace hamrank
