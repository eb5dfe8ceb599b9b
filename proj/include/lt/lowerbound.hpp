#pragma once

#include "lt/largeness.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace lt {

struct BlockAddress {
    std::vector<std::size_t> path;  // child indices from the root
    std::uint64_t level = 0;        // rank - path length
    bool operator==(const BlockAddress& o) const { return path == o.path && level == o.level; }
};

std::string to_string(const BlockAddress& a);

// the minimal omega^rank-large interval above base, built lazily
class CanonicalTree {
public:
    static constexpr std::size_t max_bits = 1u << 20;

    CanonicalTree(const Nat& base, std::uint64_t rank);

    const Nat& base() const { return node_->base; }
    std::uint64_t rank() const { return node_->rank; }
    // empty when the value has more than max_bits bits
    const std::optional<Nat>& max() const { return node_->max; }
    std::optional<Nat> cardinality() const;

    std::size_t child_count() const;
    CanonicalTree child(std::size_t j) const;
    std::vector<CanonicalTree> children() const;

    bool contains(const Nat& v) const;
    std::optional<BlockAddress> block_of(const Nat& v, std::uint64_t c) const;
    bool phi(const Nat& x, const Nat& y, std::uint64_t c) const;
    bool theta(const Nat& x, const Nat& y, const Nat& z) const;
    // rank of the node whose minimum is v (0 for leaves)
    std::uint64_t min_level(const Nat& v) const;
    unsigned f_x(const Nat& v) const;

    bool materializable(const Nat& budget) const;
    FinSet materialize(const Nat& budget) const;

private:
    struct Node {
        Nat base;
        std::uint64_t rank = 0;
        std::optional<Nat> max;
        std::mutex mu;
        std::map<std::size_t, std::shared_ptr<Node>> kids;  // filled on demand
    };
    explicit CanonicalTree(std::shared_ptr<Node> n) : node_(std::move(n)) {}
    static std::shared_ptr<Node> make(const Nat& base, std::uint64_t rank);
    std::shared_ptr<Node> kid(std::size_t j) const;
    // child containing v, v strictly above the base
    std::optional<std::size_t> child_index(const Nat& v) const;

    std::shared_ptr<Node> node_;
};

// T_X as a sentence over a coded table of theta_X; quantifiers run inclusively
Pi03Sentence export_tx(const CanonicalTree& t, std::uint64_t max_bits = 1u << 26);

// the apartness shortcut: theta_X(max A, min B, max B)
bool apart_shortcut(const CanonicalTree& t, const FinSet& a, const FinSet& b);

// canonical decomposition of an explicit minimal set (not necessarily an interval)
class MaterializedMinimal {
public:
    MaterializedMinimal(const FinSet& x, std::uint64_t n);
    const FinSet& set() const { return x_; }
    std::uint64_t rank() const { return n_; }
    std::optional<BlockAddress> block_of(const Nat& v, std::uint64_t c) const;
    bool phi(const Nat& x, const Nat& y, std::uint64_t c) const;
    bool theta(const Nat& x, const Nat& y, const Nat& z) const;
    std::vector<FinSet> children() const;

private:
    struct Node {
        std::size_t lo, hi;  // index range in x_
        std::uint64_t rank;
        std::vector<Node> kids;
    };
    Node build(std::size_t lo, std::size_t hi, std::uint64_t rank) const;
    FinSet x_;
    std::uint64_t n_;
    Node root_;
};

// elements of the tree that sit in no canonical block of level < depth
class BlockfreeView {
public:
    BlockfreeView(CanonicalTree t, std::uint64_t depth);
    bool contains(const Nat& v) const;
    const Nat& min() const { return t_.base(); }
    std::optional<Nat> count() const;
    FinSet materialize(const Nat& budget) const;

private:
    CanonicalTree t_;
    std::uint64_t depth_;
};

BlockfreeView zero_blockfree(const CanonicalTree& t);

enum class LowerBoundStatus { Verified, Consistent, Refuted, Inconclusive };
const char* to_string(LowerBoundStatus s);

struct LowerBoundResult {
    LowerBoundStatus status = LowerBoundStatus::Inconclusive;
    std::uint64_t checked = 0;   // subsets (exhaustive) or prefix elements (pruned)
    std::optional<FinSet> counterexample;
    std::string detail;
};

// rank must be 2n - 1; exhaustive needs a materializable tree of at most 20 elements
LowerBoundResult verify_lower_bound(const CanonicalTree& t, std::uint64_t n, bool exhaustive,
                                    std::uint64_t prefix_budget = 400);

}  // namespace lt
