#pragma once

#include "hamrank/exactnum.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamrank {

enum class Mode { threshold, exact };

std::string_view to_string(Mode mode);
/// Parses "threshold" / "exact"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

inline constexpr int kMaxFormulaN = 64;
inline constexpr int kMaxVectorN = 16;

/// Parameters of HAM_n^(a) (threshold: distance <= a) or HAM_n^(=a)
/// (exact: distance == a). Construct through make() to get validation.
struct HammingInstance {
    int n = 1;
    int a = 0;
    Mode mode = Mode::threshold;

    static HammingInstance make(int n, int a, Mode mode);

    /// Whether the matrix entry for a pair at distance d is 1.
    bool accepts(int distance) const { return mode == Mode::threshold ? distance <= a : distance == a; }

    friend bool operator==(const HammingInstance&, const HammingInstance&) = default;
};

// Canonical argument order throughout is (a, n, m): n is the string length,
// m the weight of the parity character.

/// sum_k C(m,k) C(n-m,a-k) (-1)^k. Requires 0 <= m <= n, 0 <= a <= n.
ExactInt f_eval(int a, int n, int m);

/// sum_{j<=a} f_eval(j,n,m).
ExactInt F_eval(int a, int n, int m);

/// f_eval(a,n,m) for a = 0..n, by direct summation.
std::vector<ExactInt> f_by_distance(int n, int m);
/// F_eval(a,n,m) for a = 0..n (running sums of f_by_distance).
std::vector<ExactInt> F_by_distance(int n, int m);

/// sum_i C(m,i) C(n-m,a-i) (-1)^i / (m-i+1). Requires 0 <= a <= m <= n.
ExactRat h_eval(int a, int m, int n);

/// Eigenvalue of the instance's matrix on every weight-m parity character.
ExactInt eigenvalue(const HammingInstance& inst, int m);

struct SpectrumRow {
    int m = 0;
    ExactInt eigenvalue;
    ExactInt multiplicity;
    bool is_zero = false;
};

class SpectrumTable {
public:
    explicit SpectrumTable(const HammingInstance& inst);

    const HammingInstance& instance() const { return instance_; }
    const std::vector<SpectrumRow>& rows() const { return rows_; }

    /// Sum of multiplicities over nonzero eigenvalues.
    const ExactInt& rank() const { return rank_; }
    std::vector<int> zero_weights() const;

    /// sum_m C(n,m) * eigenvalue(m)
    ExactInt trace() const;
    /// sum_m C(n,m) * eigenvalue(m)^2
    ExactInt trace_of_square() const;

private:
    HammingInstance instance_;
    std::vector<SpectrumRow> rows_;
    ExactInt rank_;
};

inline SpectrumTable spectrum_table(const HammingInstance& inst) { return SpectrumTable(inst); }

std::vector<int> zero_weights(const HammingInstance& inst);

/// Formula-level entry (-1)^{popcount(x & z)}; valid at any n.
inline int parity_entry(uint64_t z, uint64_t x) { return (__builtin_popcountll(x & z) & 1) ? -1 : 1; }

/// The materialized character v_z. Index x ascending, bit i of x is x_i.
class ParityVector {
public:
    ParityVector(uint64_t z, int n);

    uint64_t z() const { return z_; }
    int n() const { return n_; }
    const std::vector<int8_t>& entries() const { return entries_; }
    int8_t operator[](std::size_t x) const { return entries_[x]; }
    std::size_t size() const { return entries_.size(); }

private:
    uint64_t z_;
    int n_;
    std::vector<int8_t> entries_;
};

inline ParityVector parity_vector(uint64_t z, int n) { return ParityVector(z, n); }

int64_t dot(const ParityVector& u, const ParityVector& v);

}  // namespace hamrank
