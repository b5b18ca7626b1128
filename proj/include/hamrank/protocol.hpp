#pragma once

#include "hamrank/matrixlab.hpp"

#include <cstdint>
#include <vector>

namespace hamrank {

inline constexpr int kMaxTrivialProtocolN = 10;
inline constexpr int kMaxHamProtocolN = 8;
inline constexpr int kMaxSearchN = 3;

enum class Speaker : uint8_t { alice, bob };

struct ProtocolNode {
    bool leaf = true;
    int64_t output = 0;            // leaf label
    Speaker speaker = Speaker::alice;
    std::vector<uint8_t> bit_of;   // speaker's input -> bit sent; size 2^n
    int child[2] = {-1, -1};
};

/// Deterministic two-party protocol as a binary decision tree. Nodes are
/// appended bottom-up (children before parents), so child indices are
/// always smaller than their parent's.
class ProtocolTree {
public:
    explicit ProtocolTree(int n) : n_(n) {}

    int add_leaf(int64_t output);
    int add_internal(Speaker speaker, std::vector<uint8_t> bit_of, int on_zero, int on_one);
    void set_root(int root) {
        root_ = root;
        validated_ = false;
    }

    int n() const { return n_; }
    int root() const { return root_; }
    const std::vector<ProtocolNode>& nodes() const { return nodes_; }

    /// Throws std::invalid_argument on a dangling child, a table of the wrong
    /// size, a node unreachable from the root, or a non-bottom-up edge.
    void validate() const;

    /// Worst-case number of bits exchanged (maximum root-to-leaf depth).
    int cost() const;

private:
    int n_;
    int root_ = -1;
    std::vector<ProtocolNode> nodes_;
    mutable bool validated_ = false;  // cleared by every mutation
};

struct Transcript {
    int64_t output = 0;
    std::vector<uint8_t> bits;
};

Transcript simulate(const ProtocolTree& tree, uint64_t x, uint64_t y);

/// Output as seen by an observer holding only the transcript.
int64_t replay(const ProtocolTree& tree, const std::vector<uint8_t>& bits);

/// Alice sends x bit by bit, Bob answers with the function value. Cost n + 1.
ProtocolTree trivial_threshold_protocol(const HammingInstance& inst);

/// Alice sends x, Bob sends HAM(x,y) in ceil(lg(n+1)) bits. Leaves carry the distance.
ProtocolTree trivial_ham_protocol(int n);

/// Exact deterministic communication complexity by memoized recursion over
/// rectangles. Requires n <= kMaxSearchN.
int exact_dcc(const BitMatrix& mat);

/// A protocol achieving exact_dcc(mat), rebuilt from the same search.
ProtocolTree optimal_protocol(const BitMatrix& mat);

struct SandwichReport {
    HammingInstance instance;
    int64_t lower = 0;  // ceil(lg rank)
    int exact = 0;      // exact_dcc
    int upper = 0;      // n + 1
    bool holds = false; // lower <= exact <= upper
};

SandwichReport sandwich_report(const HammingInstance& inst);

/// Same for an externally supplied matrix; lower bound from the exact oracle rank.
SandwichReport sandwich_report(const BitMatrix& mat);

}  // namespace hamrank
