#include "lt/core.hpp"

#include <algorithm>
#include <limits>

namespace lt {

Nat parse_nat(const std::string& s) {
    if (s.empty()) throw DomainError("empty numeral");
    for (char c : s)
        if (c < '0' || c > '9') throw DomainError("not a decimal numeral: " + s);
    return Nat(s);
}

std::string to_string(const Nat& n) { return n.str(); }

std::optional<std::uint64_t> to_u64(const Nat& n) {
    if (n < 0 || n > Nat(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
    return static_cast<std::uint64_t>(n);
}

Nat pow_nat(const Nat& base, std::uint64_t e) {
    Nat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "inconclusive";
    }
}

FinSet::FinSet(std::vector<Nat> elems, Nat floor) : elems_(std::move(elems)), floor_(std::move(floor)) {
    for (std::size_t i = 1; i < elems_.size(); ++i)
        if (!(elems_[i - 1] < elems_[i])) throw DomainError("set elements must be strictly increasing");
    if (!elems_.empty() && elems_.front() < floor_)
        throw DomainError("minimum " + elems_.front().str() + " is below the floor " + floor_.str());
}

FinSet FinSet::interval(const Nat& lo, const Nat& hi, Nat floor) {
    std::vector<Nat> v;
    for (Nat x = lo; x <= hi; ++x) v.push_back(x);
    return FinSet(std::move(v), std::move(floor));
}

FinSet FinSet::of(std::initializer_list<unsigned long long> xs, Nat floor) {
    std::vector<Nat> v;
    for (auto x : xs) v.emplace_back(x);
    return FinSet(std::move(v), std::move(floor));
}

const Nat& FinSet::min() const {
    if (elems_.empty()) throw DomainError("min of empty set");
    return elems_.front();
}

const Nat& FinSet::max() const {
    if (elems_.empty()) throw DomainError("max of empty set");
    return elems_.back();
}

bool FinSet::contains(const Nat& v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

std::optional<std::size_t> FinSet::index_of(const Nat& v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

bool FinSet::subset_of(const FinSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FinSet FinSet::slice(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi >= elems_.size()) throw DomainError("bad slice");
    return FinSet(std::vector<Nat>(elems_.begin() + lo, elems_.begin() + hi + 1), floor_);
}

FinSet FinSet::without(const Nat& v) const {
    std::vector<Nat> r;
    for (auto& x : elems_)
        if (x != v) r.push_back(x);
    return FinSet(std::move(r), floor_);
}

FinSet FinSet::with_floor(Nat f) const { return FinSet(elems_, std::move(f)); }

bool precedes(const FinSet& a, const FinSet& b) { return !a.empty() && !b.empty() && a.max() < b.min(); }

FinSet set_union(const FinSet& a, const FinSet& b) {
    std::vector<Nat> r;
    std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(), std::back_inserter(r));
    Nat f = a.floor() < b.floor() ? a.floor() : b.floor();
    return FinSet(std::move(r), f);
}

Sparsity parse_sparsity(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), ::toupper);
    if (u == "EXP4") return Sparsity::EXP4;
    if (u == "POLY2") return Sparsity::POLY2;
    if (u == "LINEAR") return Sparsity::LINEAR;
    if (u == "NONE") return Sparsity::NONE;
    throw DomainError("unknown sparsity policy: " + s);
}

const char* to_string(Sparsity p) {
    switch (p) {
        case Sparsity::EXP4: return "EXP4";
        case Sparsity::POLY2: return "POLY2";
        case Sparsity::LINEAR: return "LINEAR";
        default: return "NONE";
    }
}

Nat sparsity_threshold(Sparsity p, const Nat& x) {
    switch (p) {
        case Sparsity::EXP4: {
            auto e = to_u64(x);
            // 4^x for x beyond 2^32 cannot be materialized; callers only compare against set elements
            if (!e || *e > (1ull << 32)) throw DomainError("EXP4 threshold too large to evaluate");
            return pow_nat(Nat(4), *e);
        }
        case Sparsity::POLY2: return x * x;
        case Sparsity::LINEAR: return 2 * x;
        default: return x;
    }
}

bool is_sparse(const FinSet& x, Sparsity p) {
    if (p == Sparsity::NONE) return true;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const Nat& a = x[i - 1];
        const Nat& b = x[i];
        if (p == Sparsity::EXP4) {
            // 4^a < b  iff  2a < bitlength(b) roughly; compare exactly when small enough
            std::size_t bits = b == 0 ? 0 : msb(b) + 1;
            auto a64 = to_u64(a);
            if (!a64 || *a64 >= bits) return false;
            if (!(pow_nat(Nat(4), *a64) < b)) return false;
        } else if (!(sparsity_threshold(p, a) < b)) {
            return false;
        }
    }
    return true;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t tuple_rank(const std::vector<std::size_t>& t, std::size_t N) {
    std::uint64_t r = 0;
    std::size_t n = t.size();
    std::size_t start = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t v = start; v < t[p]; ++v) r += binom(N - v - 1, n - p - 1);
        start = t[p] + 1;
    }
    return r;
}

std::vector<std::size_t> tuple_unrank(std::uint64_t r, std::size_t n, std::size_t N) {
    std::vector<std::size_t> t;
    std::size_t v = 0;
    for (std::size_t p = 0; p < n; ++p) {
        while (true) {
            std::uint64_t c = binom(N - v - 1, n - p - 1);
            if (r < c) break;
            r -= c;
            ++v;
        }
        t.push_back(v);
        ++v;
    }
    return t;
}

ColoringTable::ColoringTable(FinSet domain, unsigned arity, unsigned colors, std::vector<unsigned> table)
    : domain_(std::move(domain)), arity_(arity), colors_(colors), table_(std::move(table)) {
    if (arity_ == 0) throw DomainError("coloring arity must be positive");
    if (colors_ == 0) throw DomainError("coloring needs at least one color");
    if (table_.size() != binom(domain_.size(), arity_))
        throw DomainError("coloring table has " + std::to_string(table_.size()) + " entries, expected " +
                          std::to_string(binom(domain_.size(), arity_)));
    for (unsigned c : table_)
        if (c >= colors_) throw DomainError("color value out of range");
}

ColoringTable::ColoringTable(FinSet domain, unsigned arity, unsigned colors)
    : ColoringTable(domain, arity, colors, std::vector<unsigned>(binom(domain.size(), arity), 0)) {}

unsigned ColoringTable::at_index(const std::vector<std::size_t>& t) const {
    return table_[tuple_rank(t, domain_.size())];
}

unsigned ColoringTable::at_values(const std::vector<Nat>& vs) const {
    std::vector<std::size_t> t;
    for (auto& v : vs) {
        auto i = domain_.index_of(v);
        if (!i) throw DomainError("value " + v.str() + " outside the coloring domain");
        t.push_back(*i);
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] >= t[i]) throw DomainError("tuple must be increasing");
    return at_index(t);
}

unsigned ColoringTable::at2(std::size_t i, std::size_t j) const {
    std::size_t N = domain_.size();
    // row i starts after all pairs (a,b) with a < i
    std::size_t r = i * (2 * N - i - 1) / 2 + (j - i - 1);
    return table_[r];
}

void ColoringTable::set_index(const std::vector<std::size_t>& t, unsigned c) {
    if (c >= colors_) throw DomainError("color value out of range");
    table_[tuple_rank(t, domain_.size())] = c;
}

void ColoringTable::set_rank(std::uint64_t r, unsigned c) {
    if (c >= colors_) throw DomainError("color value out of range");
    table_.at(r) = c;
}

FinSet index_domain(std::size_t n) {
    std::vector<Nat> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(i);
    return FinSet(std::move(v), 0);
}

ColoringTable ColoringTable::restrict_to(const FinSet& g) const {
    std::vector<std::size_t> pos;
    for (auto& v : g.elems()) {
        auto i = domain_.index_of(v);
        if (!i) throw DomainError("restriction set is not a subset of the coloring domain");
        pos.push_back(*i);
    }
    std::size_t m = pos.size();
    std::uint64_t cnt = binom(m, arity_);
    std::vector<unsigned> tab(cnt);
    for (std::uint64_t r = 0; r < cnt; ++r) {
        auto t = tuple_unrank(r, arity_, m);
        for (auto& x : t) x = pos[x];
        tab[r] = at_index(t);
    }
    return ColoringTable(index_domain(m), arity_, colors_, std::move(tab));
}

ColoringTable restrict_coloring(const ColoringTable& f, const FinSet& g) { return f.restrict_to(g); }

}  // namespace lt
