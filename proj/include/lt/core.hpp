#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lt {

using Nat = boost::multiprecision::cpp_int;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// thrown by searches whose work counter ran out
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& s);
std::string to_string(const Nat& n);
std::optional<std::uint64_t> to_u64(const Nat& n);
Nat pow_nat(const Nat& base, std::uint64_t e);

// three-valued answers for anything that may only be sampled
enum class Tri { False = 0, True = 1, Inconclusive = 2 };
const char* to_string(Tri t);

// cooperative work counter; limit 0 means unlimited
struct Budget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    bool exhausted = false;

    explicit Budget(std::uint64_t l = 0) : limit(l) {}
    // returns false once the limit is hit
    bool tick(std::uint64_t n = 1) {
        used += n;
        if (limit && used > limit) exhausted = true;
        return !exhausted;
    }
    void charge(std::uint64_t n = 1) {
        if (!tick(n)) throw BudgetExhausted("budget exhausted");
    }
};

class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<Nat> elems, Nat floor = 3);
    static FinSet interval(const Nat& lo, const Nat& hi, Nat floor = 3);
    static FinSet of(std::initializer_list<unsigned long long> xs, Nat floor = 3);

    const std::vector<Nat>& elems() const { return elems_; }
    const Nat& floor() const { return floor_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Nat& operator[](std::size_t i) const { return elems_[i]; }
    const Nat& min() const;
    const Nat& max() const;

    bool contains(const Nat& v) const;
    std::optional<std::size_t> index_of(const Nat& v) const;
    bool subset_of(const FinSet& other) const;

    // elements with index in [lo, hi]
    FinSet slice(std::size_t lo, std::size_t hi) const;
    FinSet without(const Nat& v) const;
    FinSet with_floor(Nat f) const;

    bool operator==(const FinSet& o) const { return elems_ == o.elems_; }

private:
    std::vector<Nat> elems_;
    Nat floor_ = 3;
};

// X < Y in the usual sense, both nonempty
bool precedes(const FinSet& a, const FinSet& b);
FinSet set_union(const FinSet& a, const FinSet& b);

enum class Sparsity { EXP4, POLY2, LINEAR, NONE };
Sparsity parse_sparsity(const std::string& s);
const char* to_string(Sparsity p);
Nat sparsity_threshold(Sparsity p, const Nat& x);
bool is_sparse(const FinSet& x, Sparsity p);

// rank of an increasing index tuple among all increasing n-tuples over [0,N)
std::uint64_t binom(std::uint64_t n, std::uint64_t k);
std::uint64_t tuple_rank(const std::vector<std::size_t>& t, std::size_t N);
std::vector<std::size_t> tuple_unrank(std::uint64_t r, std::size_t n, std::size_t N);

class ColoringTable {
public:
    ColoringTable() = default;
    ColoringTable(FinSet domain, unsigned arity, unsigned colors, std::vector<unsigned> table);
    // all-zero table
    ColoringTable(FinSet domain, unsigned arity, unsigned colors);

    const FinSet& domain() const { return domain_; }
    unsigned arity() const { return arity_; }
    unsigned colors() const { return colors_; }
    const std::vector<unsigned>& table() const { return table_; }
    std::size_t tuple_count() const { return table_.size(); }

    unsigned at_index(const std::vector<std::size_t>& t) const;
    unsigned at_values(const std::vector<Nat>& vs) const;
    unsigned at1(std::size_t i) const { return table_[i]; }
    unsigned at2(std::size_t i, std::size_t j) const;
    void set_index(const std::vector<std::size_t>& t, unsigned c);
    void set_rank(std::uint64_t r, unsigned c);

    // f_G over {0,..,|G|-1}
    ColoringTable restrict_to(const FinSet& g) const;

    bool operator==(const ColoringTable& o) const {
        return domain_ == o.domain_ && arity_ == o.arity_ && colors_ == o.colors_ && table_ == o.table_;
    }

private:
    FinSet domain_;
    unsigned arity_ = 1;
    unsigned colors_ = 2;
    std::vector<unsigned> table_;
};

ColoringTable restrict_coloring(const ColoringTable& f, const FinSet& g);

// index domain {0..n-1}, floor 0
FinSet index_domain(std::size_t n);

}  // namespace lt
