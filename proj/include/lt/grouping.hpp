#pragma once

#include "lt/largeness.hpp"

namespace lt {

// a superset-closed size notion for blocks and transversals
struct LSpec {
    enum Kind { LARGENESS, CARD_AT_LEAST } kind = CARD_AT_LEAST;
    LargenessSpec spec;
    std::uint64_t m = 0;

    static LSpec largeness(LargenessSpec s) { return LSpec{LARGENESS, std::move(s), 0}; }
    static LSpec card(std::uint64_t m) { return LSpec{CARD_AT_LEAST, {}, m}; }
    bool holds(const FinSet& h) const;
    // length of the shortest prefix of h that satisfies the spec
    std::optional<std::size_t> min_prefix(const FinSet& h) const;
    std::string describe() const;
};

LSpec parse_lspec(const std::string& s);  // "card:M" or "large:N[:K]" (TOP inside)

struct GroupingWitness {
    std::vector<FinSet> blocks;
    ColoringTable coloring;
};

json to_json(const GroupingWitness& w);
GroupingWitness grouping_from_json(const json& j);

// first failing condition, or nullopt; throws DomainError on a malformed witness
std::optional<std::string> grouping_violation(const GroupingWitness& w, const LSpec& l0, const LSpec& l1,
                                              const Pi03Sentence& T, std::uint64_t transversal_cap = 1u << 20);
bool is_grouping(const GroupingWitness& w, const LSpec& l0, const LSpec& l1, const Pi03Sentence& T);

enum class SearchStatus { Found, None, Inconclusive };
const char* to_string(SearchStatus s);

struct GroupingSearch {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<GroupingWitness> witness;
    std::string reason;
    std::uint64_t nodes = 0;
};

GroupingSearch find_grouping(const FinSet& z, const ColoringTable& f, const LSpec& l0, const LSpec& l1,
                             const Pi03Sentence& T, Budget& budget);

struct KsResult {
    std::optional<FinSet> set;
    std::optional<Certificate> cert;
    unsigned color = 0;
    bool complete = false;  // search ran to the end, so absence is proven
    std::uint64_t nodes = 0;
};

KsResult ks_homogeneous(const FinSet& x, const ColoringTable& f, const LargenessSpec& target, Budget& budget);

}  // namespace lt
