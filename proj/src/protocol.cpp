#include "hamrank/protocol.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace hamrank {

int ProtocolTree::add_leaf(int64_t output) {
    ProtocolNode node;
    node.leaf = true;
    node.output = output;
    nodes_.push_back(std::move(node));
    validated_ = false;
    return static_cast<int>(nodes_.size()) - 1;
}

int ProtocolTree::add_internal(Speaker speaker, std::vector<uint8_t> bit_of, int on_zero, int on_one) {
    ProtocolNode node;
    node.leaf = false;
    node.speaker = speaker;
    node.bit_of = std::move(bit_of);
    node.child[0] = on_zero;
    node.child[1] = on_one;
    nodes_.push_back(std::move(node));
    validated_ = false;
    return static_cast<int>(nodes_.size()) - 1;
}

void ProtocolTree::validate() const {
    if (validated_) return;
    const int count = static_cast<int>(nodes_.size());
    if (root_ < 0 || root_ >= count) throw std::invalid_argument("protocol tree: root is not a node");
    const std::size_t inputs = std::size_t{1} << n_;
    std::vector<uint8_t> reached(count, 0);
    reached[root_] = 1;
    for (int i = count - 1; i >= 0; --i) {
        const auto& node = nodes_[i];
        if (node.leaf || !reached[i]) continue;
        if (node.bit_of.size() != inputs)
            throw std::invalid_argument("protocol tree: node " + std::to_string(i) + " has a bit table of size " +
                                        std::to_string(node.bit_of.size()) + ", expected " + std::to_string(inputs));
        for (int c : node.child) {
            if (c < 0 || c >= i)
                throw std::invalid_argument("protocol tree: node " + std::to_string(i) + " has an invalid child " +
                                            std::to_string(c));
            reached[c] = 1;
        }
    }
    for (int i = 0; i < count; ++i)
        if (!reached[i]) throw std::invalid_argument("protocol tree: node " + std::to_string(i) + " is unreachable");
    validated_ = true;
}

int ProtocolTree::cost() const {
    validate();
    std::vector<int> depth(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (!nodes_[i].leaf) depth[i] = 1 + std::max(depth[nodes_[i].child[0]], depth[nodes_[i].child[1]]);
    return depth[root_];
}

Transcript simulate(const ProtocolTree& tree, uint64_t x, uint64_t y) {
    tree.validate();
    const uint64_t inputs = uint64_t{1} << tree.n();
    if (x >= inputs || y >= inputs) throw std::invalid_argument("simulate: inputs must be < 2^n");
    Transcript t;
    int at = tree.root();
    while (!tree.nodes()[at].leaf) {
        const auto& node = tree.nodes()[at];
        const uint8_t bit = node.bit_of[node.speaker == Speaker::alice ? x : y] ? 1 : 0;
        t.bits.push_back(bit);
        at = node.child[bit];
    }
    t.output = tree.nodes()[at].output;
    return t;
}

int64_t replay(const ProtocolTree& tree, const std::vector<uint8_t>& bits) {
    tree.validate();
    int at = tree.root();
    std::size_t used = 0;
    while (!tree.nodes()[at].leaf) {
        if (used == bits.size()) throw std::invalid_argument("replay: transcript ends before a leaf");
        at = tree.nodes()[at].child[bits[used++] ? 1 : 0];
    }
    if (used != bits.size()) throw std::invalid_argument("replay: transcript continues past a leaf");
    return tree.nodes()[at].output;
}

namespace {

// Alice announces x_0, x_1, ... then `finish(x)` builds the subtree once x is known.
int alice_sends_input(ProtocolTree& tree, int n, int bit, uint64_t prefix, const std::function<int(uint64_t)>& finish) {
    if (bit == n) return finish(prefix);
    const int zero = alice_sends_input(tree, n, bit + 1, prefix, finish);
    const int one = alice_sends_input(tree, n, bit + 1, prefix | (uint64_t{1} << bit), finish);
    std::vector<uint8_t> table(std::size_t{1} << n);
    for (uint64_t x = 0; x < table.size(); ++x) table[x] = (x >> bit) & 1u;
    return tree.add_internal(Speaker::alice, std::move(table), zero, one);
}

}  // namespace

ProtocolTree trivial_threshold_protocol(const HammingInstance& inst) {
    const auto checked = HammingInstance::make(inst.n, inst.a, inst.mode);
    if (checked.n > kMaxTrivialProtocolN)
        throw LimitError("trivial_threshold_protocol requires n <= " + std::to_string(kMaxTrivialProtocolN));
    const int n = checked.n;
    ProtocolTree tree(n);
    const int root = alice_sends_input(tree, n, 0, 0, [&](uint64_t x) {
        const int no = tree.add_leaf(0);
        const int yes = tree.add_leaf(1);
        std::vector<uint8_t> table(std::size_t{1} << n);
        for (uint64_t y = 0; y < table.size(); ++y) table[y] = checked.accepts(ham(x, y)) ? 1 : 0;
        return tree.add_internal(Speaker::bob, std::move(table), no, yes);
    });
    tree.set_root(root);
    return tree;
}

ProtocolTree trivial_ham_protocol(int n) {
    if (n < 1) throw std::invalid_argument("trivial_ham_protocol: n must be >= 1");
    if (n > kMaxHamProtocolN) throw LimitError("trivial_ham_protocol requires n <= " + std::to_string(kMaxHamProtocolN));
    const int width = static_cast<int>(lg_ceil(ExactInt(n + 1)));
    ProtocolTree tree(n);
    // Bob sends bits of the distance, least significant first.
    std::function<int(uint64_t, int, int64_t)> bob_sends = [&](uint64_t x, int bit, int64_t known) -> int {
        if (bit == width) return tree.add_leaf(known);
        const int zero = bob_sends(x, bit + 1, known);
        const int one = bob_sends(x, bit + 1, known | (int64_t{1} << bit));
        std::vector<uint8_t> table(std::size_t{1} << n);
        for (uint64_t y = 0; y < table.size(); ++y) table[y] = (ham(x, y) >> bit) & 1;
        return tree.add_internal(Speaker::bob, std::move(table), zero, one);
    };
    tree.set_root(alice_sends_input(tree, n, 0, 0, [&](uint64_t x) { return bob_sends(x, 0, 0); }));
    return tree;
}

// ---------------------------------------------------------------------------
// Rectangle search

namespace {

class RectangleSearch {
public:
    explicit RectangleSearch(const BitMatrix& mat) : mat_(mat), dim_(static_cast<uint32_t>(mat.dim())) {
        if (mat.n() > kMaxSearchN)
            throw LimitError("exact_dcc requires n <= " + std::to_string(kMaxSearchN) + ", got n=" + std::to_string(mat.n()));
        rows_.resize(dim_);
        for (uint32_t x = 0; x < dim_; ++x) rows_[x] = static_cast<uint32_t>(mat.row(x)[0]);
        memo_.assign(std::size_t{1} << (2 * dim_), -1);
    }

    uint32_t full() const { return (uint32_t{1} << dim_) - 1; }

    int cost(uint32_t rows, uint32_t cols) {
        int8_t& slot = memo_[key(rows, cols)];
        if (slot >= 0) return slot;
        int best = 0;
        if (!monochromatic(rows, cols)) {
            best = 1 << 20;
            for (uint32_t part : splits(rows)) best = std::min(best, 1 + std::max(cost(part, cols), cost(rows ^ part, cols)));
            for (uint32_t part : splits(cols)) best = std::min(best, 1 + std::max(cost(rows, part), cost(rows, cols ^ part)));
        }
        slot = static_cast<int8_t>(best);
        return best;
    }

    int build(ProtocolTree& tree, uint32_t rows, uint32_t cols) {
        const int target = cost(rows, cols);
        if (target == 0) return tree.add_leaf(mat_.at(std::countr_zero(rows), std::countr_zero(cols)) ? 1 : 0);
        for (Speaker who : {Speaker::alice, Speaker::bob}) {
            const uint32_t side = who == Speaker::alice ? rows : cols;
            for (uint32_t part : splits(side)) {
                const uint32_t rest = side ^ part;
                const auto sub = [&](uint32_t s) { return who == Speaker::alice ? cost(s, cols) : cost(rows, s); };
                if (1 + std::max(sub(part), sub(rest)) != target) continue;
                int zero, one;
                if (who == Speaker::alice) {
                    zero = build(tree, part, cols);
                    one = build(tree, rest, cols);
                } else {
                    zero = build(tree, rows, part);
                    one = build(tree, rows, rest);
                }
                std::vector<uint8_t> table(dim_, 0);
                for (uint32_t i = 0; i < dim_; ++i) table[i] = (rest >> i) & 1u;
                return tree.add_internal(who, std::move(table), zero, one);
            }
        }
        throw std::logic_error("rectangle search: no split attains the memoized cost");
    }

private:
    std::size_t key(uint32_t rows, uint32_t cols) const { return (std::size_t{rows} << dim_) | cols; }

    bool monochromatic(uint32_t rows, uint32_t cols) const {
        bool seen_one = false, seen_zero = false;
        for (uint32_t r = rows; r; r &= r - 1) {
            const uint32_t hit = rows_[std::countr_zero(r)] & cols;
            seen_one = seen_one || hit != 0;
            seen_zero = seen_zero || hit != cols;
            if (seen_one && seen_zero) return false;
        }
        return true;
    }

    // Unordered two-block partitions of `set`: each proper nonempty subset containing the lowest element.
    static std::vector<uint32_t> splits(uint32_t set) {
        std::vector<uint32_t> out;
        const uint32_t low = set & (~set + 1);
        const uint32_t others = set ^ low;
        for (uint32_t sub = others;; sub = (sub - 1) & others) {
            const uint32_t part = sub | low;
            if (part != set) out.push_back(part);
            if (sub == 0) break;
        }
        return out;
    }

    const BitMatrix& mat_;
    uint32_t dim_;
    std::vector<uint32_t> rows_;
    std::vector<int8_t> memo_;
};

}  // namespace

int exact_dcc(const BitMatrix& mat) {
    RectangleSearch search(mat);
    return search.cost(search.full(), search.full());
}

ProtocolTree optimal_protocol(const BitMatrix& mat) {
    RectangleSearch search(mat);
    ProtocolTree tree(mat.n());
    tree.set_root(search.build(tree, search.full(), search.full()));
    return tree;
}

SandwichReport sandwich_report(const HammingInstance& inst) {
    const auto checked = HammingInstance::make(inst.n, inst.a, inst.mode);
    if (checked.n > kMaxSearchN) throw LimitError("sandwich_report requires n <= " + std::to_string(kMaxSearchN));
    SandwichReport report;
    report.instance = checked;
    report.lower = lg_ceil(SpectrumTable(checked).rank());
    report.exact = exact_dcc(BitMatrix::build(checked));
    report.upper = checked.n + 1;
    report.holds = report.lower <= report.exact && report.exact <= report.upper;
    return report;
}

SandwichReport sandwich_report(const BitMatrix& mat) {
    if (mat.n() > kMaxSearchN) throw LimitError("sandwich_report requires n <= " + std::to_string(kMaxSearchN));
    SandwichReport report;
    report.instance = HammingInstance{mat.n(), mat.a(), mat.mode()};
    const int64_t rank = rank_exact_small(mat);
    report.lower = rank == 0 ? 0 : lg_ceil(ExactInt(rank));
    report.exact = exact_dcc(mat);
    report.upper = mat.n() + 1;
    report.holds = report.lower <= report.exact && report.exact <= report.upper;
    return report;
}

}  // namespace hamrank
