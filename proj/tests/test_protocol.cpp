#include "hamrank/protocol.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace hamrank;

namespace {

// Cost of an optimal protocol on a 2x2 matrix, by enumerating every tree of depth <= 2.
int dcc_2x2_oracle(const BitMatrix& m) {
    const bool a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    if (a == b && b == c && c == d) return 0;
    if ((a == b && c == d) || (a == c && b == d)) return 1;
    return 2;
}

ProtocolTree depth_one(Speaker who) {
    ProtocolTree t(1);
    const int l0 = t.add_leaf(0), l1 = t.add_leaf(1);
    t.set_root(t.add_internal(who, {0, 1}, l0, l1));
    return t;
}

}  // namespace

TEST_CASE("trivial threshold protocol computes the function on every pair") {
    for (int n = 1; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (Mode mode : {Mode::threshold, Mode::exact}) {
                const auto inst = HammingInstance::make(n, a, mode);
                const ProtocolTree t = trivial_threshold_protocol(inst);
                CHECK(t.cost() == n + 1);
                for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
                    for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
                        const Transcript tr = simulate(t, x, y);
                        CHECK(tr.output == (inst.accepts(oracle::popcount(x ^ y)) ? 1 : 0));
                        CHECK(tr.bits.size() == static_cast<std::size_t>(n + 1));
                        CHECK(replay(t, tr.bits) == tr.output);
                    }
            }
    CHECK_THROWS_AS(trivial_threshold_protocol(HammingInstance::make(11, 1, Mode::exact)), LimitError);
}

TEST_CASE("trivial threshold protocol up to n = 10") {
    for (int n = 7; n <= 10; ++n)
        for (int a : {0, n / 2, n - 1}) {
            const auto inst = HammingInstance::make(n, a, Mode::threshold);
            const ProtocolTree t = trivial_threshold_protocol(inst);
            long wrong = 0;
            for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
                for (uint64_t y = 0; y < (uint64_t{1} << n); ++y)
                    wrong += simulate(t, x, y).output != (oracle::popcount(x ^ y) <= a ? 1 : 0);
            CHECK(wrong == 0);
        }
}

TEST_CASE("trivial distance protocol") {
    for (int n = 1; n <= 5; ++n) {
        const ProtocolTree t = trivial_ham_protocol(n);
        const int width = static_cast<int>(lg_ceil(n + 1));
        CHECK(t.cost() == n + width);
        for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
            for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
                const Transcript tr = simulate(t, x, y);
                CHECK(tr.output == oracle::popcount(x ^ y));
                CHECK(replay(t, tr.bits) == tr.output);
            }
    }
    CHECK_THROWS_AS(trivial_ham_protocol(0), std::invalid_argument);
    CHECK_THROWS_AS(trivial_ham_protocol(9), LimitError);
}

TEST_CASE("tree validation") {
    ProtocolTree empty(1);
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    ProtocolTree short_table(2);
    const int l = short_table.add_leaf(0);
    short_table.set_root(short_table.add_internal(Speaker::alice, {0, 1}, l, l));
    CHECK_THROWS_AS(short_table.validate(), std::invalid_argument);

    ProtocolTree forward(1);
    forward.add_leaf(0);
    forward.add_internal(Speaker::bob, {0, 1}, 0, 5);
    forward.set_root(1);
    CHECK_THROWS_AS(forward.validate(), std::invalid_argument);

    ProtocolTree orphan(1);
    orphan.add_leaf(0);
    orphan.add_leaf(1);
    orphan.set_root(1);
    CHECK_THROWS_AS(orphan.validate(), std::invalid_argument);

    const ProtocolTree ok = depth_one(Speaker::alice);
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.cost() == 1);
    CHECK_THROWS_AS(replay(ok, {}), std::invalid_argument);
    CHECK_THROWS_AS(replay(ok, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(simulate(ok, 2, 0), std::invalid_argument);
}

TEST_CASE("exact search matches brute force on every 2x2 matrix") {
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        const BitMatrix m = BitMatrix::from_predicate(1, 0, Mode::exact, [&](uint64_t x, uint64_t y) {
            return (pattern >> (2 * x + y)) & 1u;
        });
        CHECK(exact_dcc(m) == dcc_2x2_oracle(m));
    }
    const BitMatrix identity = BitMatrix::build(HammingInstance::make(1, 0, Mode::exact));
    CHECK(exact_dcc(identity) == 2);
}

TEST_CASE("depth one protocols are found when they exist") {
    // Rows constant: Alice's one bit suffices.
    const BitMatrix rows = BitMatrix::from_predicate(2, 0, Mode::exact, [](uint64_t x, uint64_t) { return x >= 2; });
    CHECK(exact_dcc(rows) == 1);
    const BitMatrix cols = BitMatrix::from_predicate(2, 0, Mode::exact, [](uint64_t, uint64_t y) { return y & 1; });
    CHECK(exact_dcc(cols) == 1);
    const BitMatrix zero = BitMatrix::from_predicate(3, 0, Mode::exact, [](uint64_t, uint64_t) { return false; });
    CHECK(exact_dcc(zero) == 0);
    CHECK(depth_one(Speaker::bob).cost() == 1);
}

TEST_CASE("optimal protocol is correct and tight") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= n; ++a)
            for (Mode mode : {Mode::threshold, Mode::exact}) {
                const BitMatrix m = BitMatrix::build(HammingInstance::make(n, a, mode));
                const ProtocolTree t = optimal_protocol(m);
                CHECK(t.cost() == exact_dcc(m));
                for (uint64_t x = 0; x < m.dim(); ++x)
                    for (uint64_t y = 0; y < m.dim(); ++y) {
                        const Transcript tr = simulate(t, x, y);
                        CHECK(tr.output == (m.at(x, y) ? 1 : 0));
                        CHECK(replay(t, tr.bits) == tr.output);
                    }
            }
}

TEST_CASE("exact search is invariant under permutations") {
    const BitMatrix m = BitMatrix::build(HammingInstance::make(2, 1, Mode::exact));
    std::vector<uint64_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<uint64_t> cols = {perm[3], perm[1], perm[0], perm[2]};
        CHECK(exact_dcc(m.permuted(perm, cols)) == exact_dcc(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("threshold complement preserves exact complexity") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= n - 1; ++a) {
            const BitMatrix m = BitMatrix::build(HammingInstance::make(n, a, Mode::threshold));
            const BitMatrix c = BitMatrix::build(HammingInstance::make(n, n - a - 1, Mode::threshold));
            CHECK(exact_dcc(m) == exact_dcc(c));
            CHECK(exact_dcc(m) == exact_dcc(m.negated()));
        }
}

TEST_CASE("sandwich for all tiny instances") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= n; ++a)
            for (Mode mode : {Mode::threshold, Mode::exact}) {
                const auto s = sandwich_report(HammingInstance::make(n, a, mode));
                CHECK(s.holds);
                CHECK(s.upper == n + 1);
                CHECK(s.lower <= s.exact);
                CHECK(s.exact <= s.upper);
            }
    const auto s = sandwich_report(HammingInstance::make(2, 1, Mode::threshold));
    CHECK(s.lower == 2);
    CHECK(s.upper == 3);
    CHECK_THROWS_AS(sandwich_report(HammingInstance::make(4, 1, Mode::threshold)), LimitError);
    CHECK_THROWS_AS(exact_dcc(BitMatrix::build(HammingInstance::make(4, 1, Mode::threshold))), LimitError);
}

TEST_CASE("sandwich from a supplied matrix") {
    const BitMatrix zero = BitMatrix::from_predicate(2, 0, Mode::exact, [](uint64_t, uint64_t) { return false; });
    const auto z = sandwich_report(zero);
    CHECK(z.lower == 0);
    CHECK(z.exact == 0);
    CHECK(z.holds);
    const auto m = sandwich_report(BitMatrix::build(HammingInstance::make(3, 1, Mode::exact)));
    CHECK(m.holds);
    CHECK(m.lower == lg_ceil(SpectrumTable(HammingInstance::make(3, 1, Mode::exact)).rank()));
}
