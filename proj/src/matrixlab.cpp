#include "hamrank/matrixlab.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace hamrank {

BitMatrix::BitMatrix(int n, int a, Mode mode) : n_(n), a_(a), mode_(mode) {
    if (n < 0 || n > kMaxMatrixN)
        throw LimitError("matrix construction requires n <= " + std::to_string(kMaxMatrixN) + ", got n=" +
                         std::to_string(n));
    words_ = std::max<std::size_t>(1, dim() / 64);
    bits_.assign(dim() * words_, 0);
}

BitMatrix BitMatrix::build(const HammingInstance& inst) {
    const auto checked = HammingInstance::make(inst.n, inst.a, inst.mode);
    if (checked.n > kMaxMatrixN)
        throw LimitError("build_matrix requires n <= " + std::to_string(kMaxMatrixN) + ", got n=" +
                         std::to_string(checked.n));
    BitMatrix m(checked.n, checked.a, checked.mode);
    // Row 0 holds the accepted offsets; row x is row 0 re-indexed by y -> y XOR x.
    std::vector<uint64_t> offsets;
    for (uint64_t d = 0; d < m.dim(); ++d)
        if (checked.accepts(std::popcount(d))) offsets.push_back(d);
    for (uint64_t x = 0; x < m.dim(); ++x)
        for (uint64_t d : offsets) m.set(x, x ^ d);
    return m;
}

BitMatrix BitMatrix::from_predicate(int n, int a, Mode mode, const std::function<bool(uint64_t, uint64_t)>& entry) {
    BitMatrix m(n, a, mode);
    for (uint64_t x = 0; x < m.dim(); ++x)
        for (uint64_t y = 0; y < m.dim(); ++y)
            if (entry(x, y)) m.set(x, y);
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("matrix file: missing header line");
    std::istringstream hs(header);
    int n = -1, a = -1;
    std::string mode_text, extra;
    if (!(hs >> n >> a >> mode_text) || (hs >> extra))
        throw std::invalid_argument("matrix file: header must be 'n a mode'");
    if (n < 1 || n > kMaxMatrixN)
        throw LimitError("matrix file: n must satisfy 1 <= n <= " + std::to_string(kMaxMatrixN));
    if (a < 0 || a > n) throw std::invalid_argument("matrix file: a must satisfy 0 <= a <= n");
    BitMatrix m(n, a, parse_mode(mode_text));
    std::string line;
    for (uint64_t x = 0; x < m.dim(); ++x) {
        if (!std::getline(in, line))
            throw std::invalid_argument("matrix file: expected " + std::to_string(m.dim()) + " rows, got " +
                                        std::to_string(x));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != m.dim())
            throw std::invalid_argument("matrix file: row " + std::to_string(x) + " has length " +
                                        std::to_string(line.size()) + ", expected " + std::to_string(m.dim()));
        for (uint64_t y = 0; y < m.dim(); ++y) {
            if (line[y] == '1')
                m.set(x, y);
            else if (line[y] != '0')
                throw std::invalid_argument("matrix file: row " + std::to_string(x) + " contains a character other than 0/1");
        }
    }
    while (std::getline(in, line))
        if (!line.empty() && line != "\r") throw std::invalid_argument("matrix file: trailing content after last row");
    return m;
}

std::string BitMatrix::to_text() const {
    std::string out = std::to_string(n_) + " " + std::to_string(a_) + " " + std::string(to_string(mode_)) + "\n";
    out.reserve(out.size() + dim() * (dim() + 1));
    for (uint64_t x = 0; x < dim(); ++x) {
        for (uint64_t y = 0; y < dim(); ++y) out.push_back(at(x, y) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

uint64_t BitMatrix::row_sum(uint64_t x) const {
    uint64_t s = 0;
    for (uint64_t w : row(x)) s += std::popcount(w);
    return s;
}

BitMatrix BitMatrix::permuted(std::span<const uint64_t> row_perm, std::span<const uint64_t> col_perm) const {
    if (row_perm.size() != dim() || col_perm.size() != dim())
        throw std::invalid_argument("permuted: permutation length must equal the matrix dimension");
    BitMatrix m(n_, a_, mode_);
    for (uint64_t i = 0; i < dim(); ++i)
        for (uint64_t j = 0; j < dim(); ++j)
            if (at(row_perm[i], col_perm[j])) m.set(i, j);
    return m;
}

BitMatrix BitMatrix::negated() const {
    BitMatrix m(n_, a_, mode_);
    const uint64_t tail = dim() < 64 ? (uint64_t{1} << dim()) - 1 : ~uint64_t{0};
    for (std::size_t i = 0; i < bits_.size(); ++i) m.bits_[i] = ~bits_[i] & tail;
    return m;
}

bool BitMatrix::is_symmetric() const {
    for (uint64_t x = 0; x < dim(); ++x)
        for (uint64_t y = x + 1; y < dim(); ++y)
            if (at(x, y) != at(y, x)) return false;
    return true;
}

bool BitMatrix::is_translation_invariant() const {
    for (uint64_t c = 1; c < dim(); ++c)
        for (uint64_t x = 0; x < dim(); ++x)
            for (uint64_t y = 0; y < dim(); ++y)
                if (at(x ^ c, y) != at(x, y ^ c)) return false;
    return true;
}

std::optional<uint64_t> BitMatrix::constant_row_sum() const {
    const uint64_t s0 = row_sum(0);
    for (uint64_t x = 1; x < dim(); ++x)
        if (row_sum(x) != s0) return std::nullopt;
    return s0;
}

bool BitMatrix::is_monochromatic() const {
    const uint64_t s0 = row_sum(0);
    if (s0 != 0 && s0 != dim()) return false;
    for (uint64_t x = 1; x < dim(); ++x)
        if (row_sum(x) != s0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Primes

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>(u128(a) * b % m); }

uint64_t powmod(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (v % p == 0) return v == p;
    }
    uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t witness : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod(witness, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> random_primes(uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> primes;
    constexpr uint64_t lo = uint64_t{1} << 61;
    while (static_cast<int>(primes.size()) < count) {
        const uint64_t candidate = (lo + (rng() & (lo - 1))) | 1;
        if (is_prime_u64(candidate) && std::find(primes.begin(), primes.end(), candidate) == primes.end())
            primes.push_back(candidate);
    }
    return primes;
}

// ---------------------------------------------------------------------------
// Ranks

namespace {

// Shoup multiplication by a fixed factor w modulo p (p < 2^63).
struct FixedFactor {
    uint64_t w;
    uint64_t w_shoup;
    FixedFactor(uint64_t w_, uint64_t p) : w(w_), w_shoup(static_cast<uint64_t>((u128(w_) << 64) / p)) {}
    // Result in [0, 2p).
    uint64_t mul_lazy(uint64_t x, uint64_t p) const {
        const uint64_t q = static_cast<uint64_t>((u128(w_shoup) * x) >> 64);
        return w * x - q * p;
    }
};

uint64_t inverse_mod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

}  // namespace

int64_t rank_mod_p(const BitMatrix& mat, uint64_t prime) {
    if (!is_prime_u64(prime)) throw std::invalid_argument("rank_mod_p: modulus " + std::to_string(prime) + " is not prime");
    if (prime >= (uint64_t{1} << 63)) throw std::invalid_argument("rank_mod_p: modulus must be < 2^63");
    if (mat.n() > kMaxModpRankN)
        throw LimitError("rank_mod_p requires n <= " + std::to_string(kMaxModpRankN) + ", got n=" + std::to_string(mat.n()));

    const uint64_t dim = mat.dim();
    std::vector<uint64_t> a(dim * dim);
    for (uint64_t x = 0; x < dim; ++x)
        for (uint64_t y = 0; y < dim; ++y) a[x * dim + y] = mat.at(x, y) ? 1 % prime : 0;

    int64_t rank = 0;
    uint64_t pivot_row = 0;
    for (uint64_t col = 0; col < dim && pivot_row < dim; ++col) {
        uint64_t sel = pivot_row;
        while (sel < dim && a[sel * dim + col] == 0) ++sel;
        if (sel == dim) continue;
        if (sel != pivot_row)
            std::swap_ranges(a.begin() + sel * dim + col, a.begin() + sel * dim + dim, a.begin() + pivot_row * dim + col);

        uint64_t* piv = a.data() + pivot_row * dim;
        const FixedFactor scale(inverse_mod(piv[col], prime), prime);
        for (uint64_t j = col; j < dim; ++j) {
            uint64_t v = scale.mul_lazy(piv[j], prime);
            piv[j] = v >= prime ? v - prime : v;
        }
        for (uint64_t r = pivot_row + 1; r < dim; ++r) {
            uint64_t* row = a.data() + r * dim;
            const uint64_t lead = row[col];
            if (lead == 0) continue;
            const FixedFactor factor(lead, prime);
            for (uint64_t j = col; j < dim; ++j) {
                uint64_t t = factor.mul_lazy(piv[j], prime);
                if (t >= prime) t -= prime;
                const uint64_t v = row[j];
                row[j] = v >= t ? v - t : v + prime - t;
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int64_t rank_exact_small(const BitMatrix& mat) {
    if (mat.n() > kMaxExactRankN)
        throw LimitError("rank_exact_small requires n <= " + std::to_string(kMaxExactRankN) + ", got n=" +
                         std::to_string(mat.n()));
    const uint64_t dim = mat.dim();
    std::vector<std::vector<ExactInt>> a(dim, std::vector<ExactInt>(dim));
    for (uint64_t x = 0; x < dim; ++x)
        for (uint64_t y = 0; y < dim; ++y) a[x][y] = mat.at(x, y) ? 1 : 0;

    ExactInt prev = 1;
    uint64_t r = 0;
    ExactInt tmp;
    for (uint64_t c = 0; c < dim && r < dim; ++c) {
        uint64_t p = r;
        while (p < dim && sgn(a[p][c]) == 0) ++p;
        if (p == dim) continue;
        std::swap(a[p], a[r]);
        for (uint64_t i = r + 1; i < dim; ++i) {
            for (uint64_t j = c + 1; j < dim; ++j) {
                tmp = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int64_t>(r);
}

std::string_view to_string(RankOracle oracle) {
    switch (oracle) {
        case RankOracle::modp: return "modp";
        case RankOracle::exact: return "exact";
        default: return "both";
    }
}

RankOracle parse_oracle(std::string_view text) {
    if (text == "modp") return RankOracle::modp;
    if (text == "exact") return RankOracle::exact;
    if (text == "both") return RankOracle::both;
    throw std::invalid_argument("unknown oracle '" + std::string(text) + "' (expected modp|exact|both)");
}

RankReport rank_report(const HammingInstance& inst, uint64_t seed, RankOracle oracle) {
    RankReport report;
    report.instance = HammingInstance::make(inst.n, inst.a, inst.mode);
    report.formula_rank = SpectrumTable(report.instance).rank();
    report.seed = seed;

    const bool want_modp = oracle != RankOracle::exact;
    const bool want_exact = oracle != RankOracle::modp;
    if (want_modp && inst.n > kMaxModpRankN)
        throw LimitError("rank oracle mod p requires n <= " + std::to_string(kMaxModpRankN));
    if (want_exact && inst.n > kMaxExactRankN)
        throw LimitError("exact rank oracle requires n <= " + std::to_string(kMaxExactRankN));

    const BitMatrix mat = BitMatrix::build(report.instance);
    bool agree = true;
    if (want_modp) {
        report.primes = random_primes(seed, 2);
        for (uint64_t p : report.primes) {
            const int64_t r = rank_mod_p(mat, p);
            report.oracle_rank_modp.push_back(r);
            agree = agree && report.formula_rank == r;
        }
    }
    if (want_exact) {
        report.oracle_rank_exact = rank_exact_small(mat);
        agree = agree && report.formula_rank == *report.oracle_rank_exact;
    }
    report.agree = agree;
    return report;
}

// ---------------------------------------------------------------------------
// Eigen-equation

EigenCheck verify_eigen(const BitMatrix& mat, const HammingInstance& inst, uint64_t z) {
    if (mat.n() != inst.n) throw std::invalid_argument("verify_eigen: matrix and instance disagree on n");
    if (z >= mat.dim()) throw std::invalid_argument("verify_eigen: z must be < 2^n");

    EigenCheck check;
    check.eigenvalue = to_int64(eigenvalue(inst, std::popcount(z)));

    // Packed set of columns where v_z = +1; M v_z at row x is 2|row & plus| - |row|.
    const std::size_t words = mat.words_per_row();
    std::vector<uint64_t> plus(words, 0);
    for (uint64_t y = 0; y < mat.dim(); ++y)
        if (parity_entry(z, y) > 0) plus[y >> 6] |= uint64_t{1} << (y & 63);

    for (uint64_t x = 0; x < mat.dim(); ++x) {
        const auto row = mat.row(x);
        int64_t on_plus = 0, total = 0;
        for (std::size_t w = 0; w < words; ++w) {
            on_plus += std::popcount(row[w] & plus[w]);
            total += std::popcount(row[w]);
        }
        const int64_t product = 2 * on_plus - total;
        if (product != check.eigenvalue * parity_entry(z, x)) {
            check.first_bad_row = x;
            return check;
        }
    }
    check.holds = true;
    return check;
}

EigenCheck verify_eigen(const HammingInstance& inst, uint64_t z) {
    if (inst.n > kMaxEigenCheckN)
        throw LimitError("verify_eigen requires n <= " + std::to_string(kMaxEigenCheckN) + ", got n=" +
                         std::to_string(inst.n));
    return verify_eigen(BitMatrix::build(inst), inst, z);
}

}  // namespace hamrank
