#pragma once

#include "lt/core.hpp"
#include "lt/formula.hpp"
#include "lt/io.hpp"

#include <functional>
#include <optional>
#include <unordered_map>

namespace lt {

struct LargenessSpec {
    std::uint64_t n = 0;
    std::uint64_t k = 1;
    Pi03Sentence T = Pi03Sentence::top();
};

struct CertBlock;

// Leaf: omega^0, witness is an element.  Power: omega^{e}, witness is min X and the blocks
// cover X \ min X as omega^{e-1} pieces.  Mult: omega^{e} * k, k blocks of exponent e.
// Block ranges index into the set the node certifies.
struct Certificate {
    enum Kind { Leaf, Power, Mult } kind = Leaf;
    std::uint64_t exponent = 0;
    Nat witness;
    std::vector<CertBlock> blocks;
};

struct CertBlock {
    std::size_t start = 0, end = 0;
    Certificate cert;
};

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
bool operator==(const Certificate& a, const Certificate& b);

// literal evaluation of the bounded apartness sentence
bool t_apart(const FinSet& x, const FinSet& y, const Pi03Sentence& T);
bool t_apart_values(const Nat& max_x, const Nat& min_y, const Nat& max_y, const Pi03Sentence& T);

// memoizing apartness oracle: caches, per (x, y), how far z can go before theta fails
class ApartChecker {
public:
    explicit ApartChecker(const Pi03Sentence& T) : T_(T) {}
    bool apart(const Nat& max_x, const Nat& min_y, const Nat& max_y);
    const Pi03Sentence& sentence() const { return T_; }

private:
    struct Entry {
        std::uint64_t ok_below = 0;  // theta holds for all z < ok_below
        bool failed = false;         // theta fails at z = ok_below
    };
    bool holds_below(std::uint64_t x, std::uint64_t y, std::uint64_t zb);
    const Pi03Sentence& T_;
    std::unordered_map<std::uint64_t, Entry> cache_;
};

enum class SearchMode { Exhaustive, Greedy };

// apartness decided by (max A, min B, max B)
using ApartFn = std::function<bool(const Nat&, const Nat&, const Nat&)>;

// block-structure engine over a fixed set; all queries are on index intervals X[i..j]
class LargenessEngine {
public:
    LargenessEngine(const FinSet& x, const Pi03Sentence& T, SearchMode mode = SearchMode::Exhaustive);
    // structural apartness instead of a sentence; floor stays 3
    LargenessEngine(const FinSet& x, ApartFn apart, SearchMode mode = SearchMode::Exhaustive);

    // least j with X[i..j] omega^n-large(T)
    std::optional<std::size_t> end(std::uint64_t n, std::size_t i);
    bool large(std::uint64_t n, std::size_t i, std::size_t j);
    // k pairwise apart omega^n blocks inside X[lo..hi]; returns block starts
    std::optional<std::vector<std::size_t>> chain(std::uint64_t n, std::uint64_t k, std::size_t lo, std::size_t hi);
    std::optional<std::size_t> chain_end(std::uint64_t n, std::uint64_t k, std::size_t lo);

    // certificate for X[i..j], which must be large
    Certificate certify(std::uint64_t n, std::size_t i, std::size_t j);
    std::optional<Certificate> certify_spec(std::uint64_t n, std::uint64_t k);

    const FinSet& set() const { return X_; }

private:
    bool apart_idx(std::size_t e, std::size_t s, std::size_t e2);
    std::optional<std::uint64_t> small_count(std::size_t i) const;

    const FinSet& X_;
    const Pi03Sentence& T_;
    SearchMode mode_;
    bool top_;
    ApartChecker apart_;
    ApartFn custom_;
    std::unordered_map<std::uint64_t, std::optional<std::size_t>> end_memo_;
    std::unordered_map<std::uint64_t, bool> apart_memo_;
};

std::optional<Certificate> check_large(const FinSet& x, const LargenessSpec& spec,
                                       SearchMode mode = SearchMode::Exhaustive);
bool is_large(const FinSet& x, const LargenessSpec& spec);
bool verify_certificate(const FinSet& x, const Certificate& cert, const LargenessSpec& spec, bool paranoid = false);

// S subset of U; re-expresses a certificate for S as one for U (largeness is closed under supersets)
Certificate lift_certificate(const FinSet& s, const Certificate& c, const FinSet& u);

// max of the minimal omega^n-large interval above x; nullopt when it exceeds 2^max_bits
std::optional<Nat> minimal_interval_max(const Nat& x, std::uint64_t n, std::size_t max_bits = 1u << 20);

struct MinimalIntervalResult {
    std::optional<FinSet> set;        // empty on overflow
    std::optional<Nat> cardinality;   // empty when not even representable
    bool validated = false;           // is_minimal was run and passed
};
MinimalIntervalResult minimal_large_interval(const Nat& x, std::uint64_t n, const Nat& budget);
bool is_minimal(const FinSet& x, std::uint64_t n);

// all omega^n-decompositions of X (plain largeness), up to `limit` of them
std::vector<std::vector<FinSet>> decompositions(const FinSet& x, std::uint64_t n, std::size_t limit = 16);

struct ExtractResult {
    FinSet set;
    Certificate cert;
    std::string route;           // "proof" or "class-search"
    std::uint64_t counting_steps = 0;
    std::uint64_t counting_failures = 0;     // regroupings where no color had enough blocks
    std::uint64_t sparsity_shortfalls = 0;   // steps where min X * max X_{t-1} < min X_t failed
};

struct PigeonholeOptions {
    Sparsity policy = Sparsity::NONE;
    bool fallback = true;  // search color classes when the regrouping step runs short
};

ExtractResult pigeonhole_extract(const FinSet& x, const ColoringTable& f, std::uint64_t b, const Pi03Sentence& T,
                                 const PigeonholeOptions& opt = {});

struct DecomposeResult {
    std::vector<FinSet> blocks;
    std::vector<Certificate> certs;
};
DecomposeResult decompose_mixed(const FinSet& x, std::uint64_t n, std::uint64_t m, const Pi03Sentence& T);

struct FuseResult {
    FinSet set;
    Certificate cert;
};
FuseResult fuse(const std::vector<FinSet>& blocks, std::uint64_t a, std::uint64_t b, const Pi03Sentence& T);

}  // namespace lt
