#include "lt/lowerbound.hpp"

#include <functional>

namespace lt {

std::string to_string(const BlockAddress& a) {
    std::string s = "level " + std::to_string(a.level) + " path [";
    for (std::size_t i = 0; i < a.path.size(); ++i) s += (i ? "," : "") + std::to_string(a.path[i]);
    return s + "]";
}

namespace {

// shared by the symbolic and the materialized structures
template <class S>
bool theta_of(const S& s, std::uint64_t rank, const Nat& x, const Nat& y, const Nat& z) {
    if (!(s.contains(x) && s.contains(z) && z >= y)) return true;
    if (!(y > x && s.contains(y))) return false;
    for (std::uint64_t c = 0; c <= rank; ++c)
        if (s.phi(y, z, c) && !s.phi(x, y, c)) return true;
    return false;
}

}  // namespace

// ---- symbolic tree ----

std::shared_ptr<CanonicalTree::Node> CanonicalTree::make(const Nat& base, std::uint64_t rank) {
    auto n = std::make_shared<Node>();
    n->base = base;
    n->rank = rank;
    n->max = minimal_interval_max(base, rank, max_bits);
    return n;
}

CanonicalTree::CanonicalTree(const Nat& base, std::uint64_t rank) {
    if (base < 3) throw DomainError("tree base must be at least 3");
    node_ = make(base, rank);
}

std::optional<Nat> CanonicalTree::cardinality() const {
    if (!max()) return std::nullopt;
    return *max() - base() + 1;
}

std::size_t CanonicalTree::child_count() const {
    if (rank() == 0) return 0;
    auto k = to_u64(base());
    if (!k) throw DomainError("child count does not fit in a machine word");
    return *k;
}

std::shared_ptr<CanonicalTree::Node> CanonicalTree::kid(std::size_t j) const {
    Node& n = *node_;
    if (n.rank == 0 || Nat(j) >= n.base) throw DomainError("no child " + std::to_string(j));
    std::lock_guard<std::mutex> lk(n.mu);
    if (n.rank <= 2) {
        // closed forms: rank 1 children are singletons, rank 2 children start at 2^j (x+2) - 1
        if (!n.kids.count(j)) {
            Nat b = n.rank == 1 ? n.base + 1 + j : pow_nat(2, j) * (n.base + 2) - 1;
            n.kids[j] = make(b, n.rank - 1);
        }
        return n.kids[j];
    }
    while (n.kids.size() <= j) {
        Nat b = n.base + 1;
        if (!n.kids.empty()) {
            auto& last = n.kids.rbegin()->second;
            if (!last->max) throw DomainError("child lies beyond the representable range");
            b = *last->max + 1;
        }
        n.kids[n.kids.size()] = make(b, n.rank - 1);
    }
    return n.kids[j];
}

CanonicalTree CanonicalTree::child(std::size_t j) const { return CanonicalTree(kid(j)); }

std::vector<CanonicalTree> CanonicalTree::children() const {
    std::vector<CanonicalTree> r;
    for (std::size_t j = 0; j < child_count(); ++j) r.push_back(child(j));
    return r;
}

bool CanonicalTree::contains(const Nat& v) const {
    if (v < base()) return false;
    if (max()) return v <= *max();
    // the max has more than max_bits bits
    return msb(v) < max_bits;
}

std::optional<std::size_t> CanonicalTree::child_index(const Nat& v) const {
    const Node& n = *node_;
    if (n.rank == 1) return static_cast<std::size_t>(v - n.base - 1);
    if (n.rank == 2) return static_cast<std::size_t>(msb(Nat((v + 1) / (n.base + 2))));
    std::size_t cnt = child_count();
    for (std::size_t j = 0; j < cnt; ++j) {
        auto k = kid(j);
        if (!k->max || v <= *k->max) return j;
    }
    return std::nullopt;
}

std::optional<BlockAddress> CanonicalTree::block_of(const Nat& v, std::uint64_t c) const {
    if (c > rank() || !contains(v)) return std::nullopt;
    BlockAddress a;
    CanonicalTree cur = *this;
    while (true) {
        if (c == cur.rank()) {
            a.level = c;
            return a;
        }
        if (v == cur.base()) return std::nullopt;
        auto j = cur.child_index(v);
        if (!j) return std::nullopt;
        a.path.push_back(*j);
        cur = cur.child(*j);
    }
}

bool CanonicalTree::phi(const Nat& x, const Nat& y, std::uint64_t c) const {
    auto a = block_of(x, c);
    if (!a) return false;
    auto b = block_of(y, c);
    return b && *a == *b;
}

bool CanonicalTree::theta(const Nat& x, const Nat& y, const Nat& z) const { return theta_of(*this, rank(), x, y, z); }

std::uint64_t CanonicalTree::min_level(const Nat& v) const {
    if (!contains(v)) throw DomainError(v.str() + " is not in the tree");
    CanonicalTree cur = *this;
    while (v != cur.base()) cur = cur.child(*cur.child_index(v));
    return cur.rank();
}

unsigned CanonicalTree::f_x(const Nat& v) const { return unsigned(min_level(v) % 2); }

bool CanonicalTree::materializable(const Nat& budget) const {
    auto c = cardinality();
    return c && *c <= budget;
}

FinSet CanonicalTree::materialize(const Nat& budget) const {
    if (!materializable(budget)) {
        auto c = cardinality();
        throw DomainError("tree(" + base().str() + "," + std::to_string(rank()) + ") has " +
                          (c ? c->str() : std::string("more than 2^") + std::to_string(max_bits)) +
                          " elements; budget is " + budget.str());
    }
    return FinSet::interval(base(), *max());
}

// ---- T_X ----

Pi03Sentence export_tx(const CanonicalTree& t, std::uint64_t max_bits) {
    if (!t.max()) throw DomainError("tree too large to tabulate theta");
    Nat M = *t.max() + 2;
    Nat cells = M * M * M;
    if (cells > Nat(max_bits)) throw DomainError("theta table would need " + cells.str() + " bits");
    std::uint64_t m = *to_u64(M);
    std::vector<bool> bits(m * m * m, false);
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint64_t y = 0; y < m; ++y)
            for (std::uint64_t z = 0; z < m; ++z) bits[(x * m + y) * m + z] = t.theta(x, y, z);
    std::string ms = M.str();
    Pi03Sentence s = Pi03Sentence::from_text("x * " + ms + " * " + ms + " + y * " + ms + " + z in A", 0,
                                             SecondOrderParam(std::move(bits)));
    s.inclusive = true;
    s.label = "T_X(" + t.base().str() + "," + std::to_string(t.rank()) + ")";
    return s;
}

bool apart_shortcut(const CanonicalTree& t, const FinSet& a, const FinSet& b) {
    if (a.empty() || b.empty() || !(a.max() < b.min())) throw DomainError("apart_shortcut needs nonempty A < B");
    for (auto* s : {&a, &b})
        for (auto& v : s->elems())
            if (!t.contains(v)) throw DomainError(v.str() + " is not in the tree");
    return t.theta(a.max(), b.min(), b.max());
}

// ---- explicit minimal sets ----

MaterializedMinimal::MaterializedMinimal(const FinSet& x, std::uint64_t n) : x_(x), n_(n) {
    if (!is_minimal(x, n)) throw DomainError("set is not minimal omega^" + std::to_string(n) + "-large");
    root_ = build(0, x.size() - 1, n);
}

MaterializedMinimal::Node MaterializedMinimal::build(std::size_t lo, std::size_t hi, std::uint64_t rank) const {
    Node nd{lo, hi, rank, {}};
    if (rank == 0) {
        if (lo != hi) throw std::logic_error("minimal omega^0 block with several elements");
        return nd;
    }
    LargenessEngine eng(x_, Pi03Sentence::top());
    std::size_t cur = lo + 1;
    std::uint64_t need = *to_u64(x_[lo]);
    for (std::uint64_t i = 0; i < need; ++i) {
        auto e = eng.end(rank - 1, cur);
        if (!e || *e > hi) throw std::logic_error("decomposition ran past the block");
        nd.kids.push_back(build(cur, *e, rank - 1));
        cur = *e + 1;
    }
    if (cur != hi + 1) throw std::logic_error("decomposition leaves elements over");
    return nd;
}

std::vector<FinSet> MaterializedMinimal::children() const {
    std::vector<FinSet> r;
    for (auto& k : root_.kids) r.push_back(x_.slice(k.lo, k.hi));
    return r;
}

std::optional<BlockAddress> MaterializedMinimal::block_of(const Nat& v, std::uint64_t c) const {
    auto i = x_.index_of(v);
    if (!i || c > n_) return std::nullopt;
    BlockAddress a;
    const Node* cur = &root_;
    while (true) {
        if (c == cur->rank) {
            a.level = c;
            return a;
        }
        if (*i == cur->lo) return std::nullopt;
        std::size_t j = 0;
        while (cur->kids[j].hi < *i) ++j;
        a.path.push_back(j);
        cur = &cur->kids[j];
    }
}

bool MaterializedMinimal::phi(const Nat& x, const Nat& y, std::uint64_t c) const {
    auto a = block_of(x, c);
    if (!a) return false;
    auto b = block_of(y, c);
    return b && *a == *b;
}

namespace {
struct MinimalView {
    const MaterializedMinimal& m;
    bool contains(const Nat& v) const { return m.set().contains(v); }
    bool phi(const Nat& x, const Nat& y, std::uint64_t c) const { return m.phi(x, y, c); }
};
}  // namespace

bool MaterializedMinimal::theta(const Nat& x, const Nat& y, const Nat& z) const {
    return theta_of(MinimalView{*this}, n_, x, y, z);
}

// ---- blockfree view ----

BlockfreeView::BlockfreeView(CanonicalTree t, std::uint64_t depth) : t_(std::move(t)), depth_(depth) {
    if (depth > t_.rank()) throw DomainError("depth exceeds the rank");
}

BlockfreeView zero_blockfree(const CanonicalTree& t) {
    if (t.rank() == 0) throw DomainError("0-blockfree subset needs rank at least 1");
    return BlockfreeView(t, 1);
}

bool BlockfreeView::contains(const Nat& v) const { return t_.contains(v) && t_.min_level(v) >= depth_; }

std::optional<Nat> BlockfreeView::count() const {
    // nodes of rank >= depth
    std::function<std::optional<Nat>(const CanonicalTree&)> rec = [&](const CanonicalTree& n) -> std::optional<Nat> {
        if (n.rank() == depth_) return Nat(1);
        auto k = to_u64(n.base());
        if (!k || *k > 100000) return std::nullopt;
        Nat s = 1;
        for (std::size_t j = 0; j < *k; ++j) {
            auto c = rec(n.child(j));
            if (!c) return std::nullopt;
            s += *c;
        }
        return s;
    };
    return rec(t_);
}

FinSet BlockfreeView::materialize(const Nat& budget) const {
    auto c = count();
    if (!c || *c > budget) throw DomainError("blockfree view too large to materialize");
    std::vector<Nat> out;
    std::function<void(const CanonicalTree&)> rec = [&](const CanonicalTree& n) {
        out.push_back(n.base());
        if (n.rank() == depth_) return;
        for (auto& k : n.children()) rec(k);
    };
    rec(t_);
    return FinSet(out);
}

// ---- lower bound ----

const char* to_string(LowerBoundStatus s) {
    switch (s) {
        case LowerBoundStatus::Verified: return "verified";
        case LowerBoundStatus::Consistent: return "consistent";
        case LowerBoundStatus::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

LowerBoundResult verify_lower_bound(const CanonicalTree& t, std::uint64_t n, bool exhaustive,
                                    std::uint64_t prefix_budget) {
    if (n == 0 || t.rank() != 2 * n - 1) throw DomainError("tree rank must be 2n-1");
    LowerBoundResult r;
    if (exhaustive) {
        if (!t.materializable(20))
            throw DomainError("exhaustive mode needs a tree of at most 20 elements; use pruned mode");
        FinSet X = t.materialize(20);
        Pi03Sentence T = export_tx(t);
        std::size_t N = X.size();
        for (std::uint32_t m = 1; m < (std::uint32_t(1) << N); ++m) {
            std::vector<Nat> v;
            for (std::size_t i = 0; i < N; ++i)
                if (m >> i & 1) v.push_back(X[i]);
            ++r.checked;
            unsigned c0 = t.f_x(v[0]);
            bool hom = true;
            for (auto& e : v) hom = hom && t.f_x(e) == c0;
            if (!hom) continue;
            FinSet y(v);
            if (is_large(y, {n, 1, T})) {
                r.status = LowerBoundStatus::Refuted;
                r.counterexample = y;
                r.detail = "homogeneous omega^n-large(T_X) subset found";
                return r;
            }
        }
        r.status = LowerBoundStatus::Verified;
        r.detail = "all " + std::to_string(r.checked) + " nonempty subsets checked";
        return r;
    }
    // a homogeneous large set exists inside a prefix iff one of its colour classes is large
    Nat hi = t.base() + prefix_budget - 1;
    bool whole = t.max() && *t.max() <= hi;
    if (whole) hi = *t.max();
    std::vector<Nat> cls[2];
    for (Nat v = t.base(); v <= hi; ++v) {
        cls[t.f_x(v)].push_back(v);
        ++r.checked;
    }
    for (unsigned c = 0; c < 2; ++c) {
        if (cls[c].empty()) continue;
        FinSet C(cls[c]);
        LargenessEngine eng(C, [&](const Nat& a, const Nat& b, const Nat& d) { return t.theta(a, b, d); });
        if (auto e = eng.end(n, 0)) {
            r.status = LowerBoundStatus::Refuted;
            r.counterexample = C.slice(0, *e);
            r.detail = "colour " + std::to_string(c) + " class is omega^n-large(T_X)";
            return r;
        }
    }
    r.status = whole ? LowerBoundStatus::Verified : LowerBoundStatus::Consistent;
    r.detail = whole ? "colour classes of the whole set checked"
                     : "no homogeneous omega^n-large(T_X) subset among the first " + std::to_string(r.checked) +
                           " elements";
    return r;
}

}  // namespace lt
