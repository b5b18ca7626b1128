#include "hamrank/spectrum.hpp"

namespace hamrank {

std::string_view to_string(Mode mode) { return mode == Mode::threshold ? "threshold" : "exact"; }

Mode parse_mode(std::string_view text) {
    if (text == "threshold") return Mode::threshold;
    if (text == "exact") return Mode::exact;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected threshold|exact)");
}

HammingInstance HammingInstance::make(int n, int a, Mode mode) {
    if (n < 1 || n > kMaxFormulaN)
        throw std::invalid_argument("n must satisfy 1 <= n <= " + std::to_string(kMaxFormulaN) + ", got " +
                                    std::to_string(n));
    if (a < 0 || a > n)
        throw std::invalid_argument("a must satisfy 0 <= a <= n, got a=" + std::to_string(a) +
                                    " n=" + std::to_string(n));
    return HammingInstance{n, a, mode};
}

namespace {

void check_anm(int a, int n, int m, const char* who) {
    if (n < 0 || m < 0 || m > n || a < 0 || a > n)
        throw std::invalid_argument(std::string(who) + ": need 0 <= m <= n and 0 <= a <= n, got a=" +
                                    std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
}

}  // namespace

ExactInt f_eval(int a, int n, int m) {
    check_anm(a, n, m, "f_eval");
    ExactInt sum = 0;
    for (int k = 0; k <= a; ++k) {
        ExactInt term = binomial(m, k) * binomial(n - m, a - k);
        if (k & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

ExactInt F_eval(int a, int n, int m) {
    check_anm(a, n, m, "F_eval");
    ExactInt sum = 0;
    for (int j = 0; j <= a; ++j) sum += f_eval(j, n, m);
    return sum;
}

std::vector<ExactInt> f_by_distance(int n, int m) {
    check_anm(0, n, m, "f_by_distance");
    std::vector<ExactInt> out;
    out.reserve(n + 1);
    for (int a = 0; a <= n; ++a) out.push_back(f_eval(a, n, m));
    return out;
}

std::vector<ExactInt> F_by_distance(int n, int m) {
    auto out = f_by_distance(n, m);
    for (std::size_t a = 1; a < out.size(); ++a) out[a] += out[a - 1];
    return out;
}

ExactRat h_eval(int a, int m, int n) {
    if (a < 0 || a > m || m > n)
        throw std::invalid_argument("h_eval: need 0 <= a <= m <= n, got a=" + std::to_string(a) +
                                    " m=" + std::to_string(m) + " n=" + std::to_string(n));
    ExactRat sum = 0;
    for (int i = 0; i <= a; ++i) {
        ExactInt num = binomial(m, i) * binomial(n - m, a - i);
        if (i & 1) num = -num;
        sum += make_rat(num, m - i + 1);
    }
    return sum;
}

ExactInt eigenvalue(const HammingInstance& inst, int m) {
    return inst.mode == Mode::threshold ? F_eval(inst.a, inst.n, m) : f_eval(inst.a, inst.n, m);
}

SpectrumTable::SpectrumTable(const HammingInstance& inst) : instance_(HammingInstance::make(inst.n, inst.a, inst.mode)) {
    rows_.reserve(inst.n + 1);
    rank_ = 0;
    for (int m = 0; m <= inst.n; ++m) {
        SpectrumRow row;
        row.m = m;
        row.eigenvalue = eigenvalue(inst, m);
        row.multiplicity = binomial(inst.n, m);
        row.is_zero = sgn(row.eigenvalue) == 0;
        if (!row.is_zero) rank_ += row.multiplicity;
        rows_.push_back(std::move(row));
    }
}

std::vector<int> SpectrumTable::zero_weights() const {
    std::vector<int> out;
    for (const auto& row : rows_)
        if (row.is_zero) out.push_back(row.m);
    return out;
}

ExactInt SpectrumTable::trace() const {
    ExactInt t = 0;
    for (const auto& row : rows_) t += row.multiplicity * row.eigenvalue;
    return t;
}

ExactInt SpectrumTable::trace_of_square() const {
    ExactInt t = 0;
    for (const auto& row : rows_) t += row.multiplicity * row.eigenvalue * row.eigenvalue;
    return t;
}

std::vector<int> zero_weights(const HammingInstance& inst) {
    return SpectrumTable(inst).zero_weights();
}

ParityVector::ParityVector(uint64_t z, int n) : z_(z), n_(n) {
    if (n < 0 || n > kMaxVectorN)
        throw LimitError("parity_vector: materialization requires n <= " + std::to_string(kMaxVectorN) +
                         ", got n=" + std::to_string(n));
    const uint64_t len = uint64_t{1} << n;
    if (z >= len) throw std::invalid_argument("parity_vector: z must be < 2^n");
    entries_.resize(len);
    for (uint64_t x = 0; x < len; ++x) entries_[x] = static_cast<int8_t>(parity_entry(z, x));
}

int64_t dot(const ParityVector& u, const ParityVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
    int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

}  // namespace hamrank
