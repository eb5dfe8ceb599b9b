#include "lt/grouping.hpp"

#include <functional>

namespace lt {

bool LSpec::holds(const FinSet& h) const {
    if (kind == CARD_AT_LEAST) return h.size() >= m;
    if (h.empty()) return false;
    return is_large(h, spec);
}

std::optional<std::size_t> LSpec::min_prefix(const FinSet& h) const {
    if (h.empty()) return std::nullopt;
    if (kind == CARD_AT_LEAST) {
        std::size_t need = std::max<std::uint64_t>(m, 1);
        if (h.size() < need) return std::nullopt;
        return need;
    }
    if (h.min() < spec.T.floor()) return std::nullopt;
    LargenessEngine eng(h, spec.T);
    auto e = spec.k == 1 ? eng.end(spec.n, 0) : eng.chain_end(spec.n, spec.k, 0);
    if (!e) return std::nullopt;
    return *e + 1;
}

std::string LSpec::describe() const {
    if (kind == CARD_AT_LEAST) return "card>=" + std::to_string(m);
    std::string r = "omega^" + std::to_string(spec.n);
    if (spec.k != 1) r += "*" + std::to_string(spec.k);
    return r + (spec.T.is_top() ? "" : "(T)");
}

LSpec parse_lspec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DomainError("spec must look like card:M or large:N[:K]");
    std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    auto num = [](const std::string& t) {
        auto v = to_u64(parse_nat(t));
        if (!v) throw DomainError("number too large: " + t);
        return *v;
    };
    if (kind == "card") return LSpec::card(num(rest));
    if (kind == "large") {
        LargenessSpec sp;
        auto c2 = rest.find(':');
        sp.n = num(rest.substr(0, c2));
        if (c2 != std::string::npos) sp.k = num(rest.substr(c2 + 1));
        return LSpec::largeness(sp);
    }
    throw DomainError("unknown spec kind '" + kind + "'");
}

json to_json(const GroupingWitness& w) {
    json bs = json::array();
    for (auto& b : w.blocks) bs.push_back(to_json(b));
    return json{{"blocks", bs}, {"coloring", to_json(w.coloring)}};
}

GroupingWitness grouping_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("coloring"))
        throw DomainError("grouping witness needs 'blocks' and 'coloring'");
    GroupingWitness w;
    for (auto& b : j["blocks"]) w.blocks.push_back(finset_from_json(b));
    w.coloring = coloring_from_json(j["coloring"]);
    return w;
}

namespace {

// all transversals, or just the pointwise-largest one; returns false as soon as one fails
bool transversals_ok(const std::vector<FinSet>& blocks, const LSpec& l1, std::uint64_t cap, Nat floor) {
    std::size_t k = blocks.size();
    if (l1.kind == LSpec::CARD_AT_LEAST) return k >= l1.m;
    if (k == 0) return false;
    if (l1.spec.T.is_top()) {
        // shifting an element up never helps plain largeness, so the maxima are the worst case
        std::vector<Nat> mx;
        for (auto& b : blocks) mx.push_back(b.max());
        return l1.holds(FinSet(mx, floor));
    }
    Nat count = 1;
    for (auto& b : blocks) count *= b.size();
    if (count > cap) throw BudgetExhausted("too many transversals to enumerate");
    std::vector<std::size_t> pos(k, 0);
    while (true) {
        std::vector<Nat> h;
        for (std::size_t i = 0; i < k; ++i) h.push_back(blocks[i][pos[i]]);
        if (!l1.holds(FinSet(h, floor))) return false;
        std::size_t i = 0;
        while (i < k && ++pos[i] == blocks[i].size()) pos[i++] = 0;
        if (i == k) return true;
    }
}

}  // namespace

std::optional<std::string> grouping_violation(const GroupingWitness& w, const LSpec& l0, const LSpec& l1,
                                              const Pi03Sentence& T, std::uint64_t transversal_cap) {
    const auto& bs = w.blocks;
    const ColoringTable& f = w.coloring;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (bs[i].empty()) throw DomainError("grouping: empty block");
        if (i && !precedes(bs[i - 1], bs[i])) throw DomainError("grouping: blocks must be increasing and disjoint");
        for (auto& v : bs[i].elems())
            if (!f.domain().contains(v)) throw DomainError("grouping: coloring does not cover " + v.str());
    }
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (!l0.holds(bs[i])) return "block " + std::to_string(i) + " is not " + l0.describe();
    Nat floor = bs.empty() ? Nat(3) : bs[0].floor();
    if (!transversals_ok(bs, l1, transversal_cap, floor)) return "a transversal is not " + l1.describe();

    // cross products over every index set of size arity
    unsigned n = f.arity();
    std::vector<std::vector<std::size_t>> idx(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (auto& v : bs[i].elems()) idx[i].push_back(*f.domain().index_of(v));
    std::vector<std::size_t> H;
    std::optional<std::string> bad;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (bad) return;
        if (H.size() == n) {
            std::optional<unsigned> col;
            std::vector<std::size_t> t(n);
            std::function<void(std::size_t)> prod = [&](std::size_t d) {
                if (bad) return;
                if (d == n) {
                    unsigned c = f.at_index(t);
                    if (col && *col != c) {
                        bad = "f is not monochromatic on the product of blocks";
                        for (auto h : H) *bad += " " + std::to_string(h);
                    }
                    col = c;
                    return;
                }
                for (auto v : idx[H[d]]) {
                    t[d] = v;
                    prod(d + 1);
                }
            };
            prod(0);
            return;
        }
        for (std::size_t i = from; i < bs.size(); ++i) {
            H.push_back(i);
            choose(i + 1);
            H.pop_back();
        }
    };
    choose(0);
    if (bad) return bad;
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (!t_apart(bs[i], bs[j], T))
                return "blocks " + std::to_string(i) + " and " + std::to_string(j) + " are not T-apart";
    return std::nullopt;
}

bool is_grouping(const GroupingWitness& w, const LSpec& l0, const LSpec& l1, const Pi03Sentence& T) {
    return !grouping_violation(w, l0, l1, T).has_value();
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        default: return "inconclusive";
    }
}

namespace {

struct GroupingSearcher {
    const FinSet& Z;
    const ColoringTable& f;
    const LSpec& l0;
    const LSpec& l1;
    const Pi03Sentence& T;
    Budget& budget;
    std::size_t N;
    std::vector<std::size_t> dom;  // domain index of Z[i]
    std::vector<std::vector<std::size_t>> blocks;  // indices into Z
    std::optional<GroupingWitness> found;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    unsigned col(std::size_t i, std::size_t j) const { return f.at2(dom[i], dom[j]); }

    FinSet as_set(const std::vector<std::size_t>& ix) const {
        std::vector<Nat> v;
        for (auto i : ix) v.push_back(Z[i]);
        return FinSet(v, Z.floor());
    }

    std::vector<FinSet> current() const {
        std::vector<FinSet> r;
        for (auto& b : blocks) r.push_back(as_set(b));
        return r;
    }

    bool satisfied() {
        if (l1.kind == LSpec::CARD_AT_LEAST) return blocks.size() >= std::max<std::uint64_t>(l1.m, 1);
        if (blocks.empty()) return false;
        return transversals_ok(current(), l1, 1u << 16, Z.floor());
    }

    bool tick() {
        ++nodes;
        if (!budget.tick()) out_of_budget = true;
        return !out_of_budget;
    }

    // colour of s against block b if uniform
    std::optional<unsigned> profile(const std::vector<std::size_t>& b, std::size_t s) const {
        unsigned c = col(b[0], s);
        for (auto x : b)
            if (col(x, s) != c) return std::nullopt;
        return c;
    }

    bool compatible(const std::vector<std::size_t>& blk) {
        // new block against all earlier ones: one colour per pair of blocks, and apart
        for (auto& b : blocks) {
            unsigned c = col(b[0], blk[0]);
            for (auto x : b)
                for (auto y : blk)
                    if (col(x, y) != c) return false;
            if (!T.is_top() && !t_apart(as_set(b), as_set(blk), T)) return false;
        }
        return true;
    }

    void finish() {
        GroupingWitness w{current(), f};
        found = w;
    }

    // block starts at s and takes the least L0-large prefix of the compatible candidates
    bool restricted(std::size_t lo, const std::vector<std::size_t>& room) {
        if (satisfied()) {
            finish();
            return true;
        }
        if (l1.kind == LSpec::CARD_AT_LEAST) {
            std::uint64_t need = l1.m - blocks.size();
            if (lo >= N || room[lo] < need) return false;
        }
        for (std::size_t p = lo; p < N; ++p) {
            if (!tick()) return false;
            std::vector<unsigned> prof;
            bool ok = true;
            for (auto& b : blocks) {
                auto c = profile(b, p);
                if (!c) {
                    ok = false;
                    break;
                }
                prof.push_back(*c);
            }
            if (!ok) continue;
            std::vector<std::size_t> cand{p};
            for (std::size_t q = p + 1; q < N; ++q) {
                bool same = true;
                for (std::size_t i = 0; i < blocks.size() && same; ++i) {
                    auto c = profile(blocks[i], q);
                    same = c && *c == prof[i];
                }
                if (same) cand.push_back(q);
            }
            auto len = l0.min_prefix(as_set(cand));
            if (!len) continue;
            cand.resize(*len);
            if (!compatible(cand)) continue;
            blocks.push_back(cand);
            if (restricted(cand.back() + 1, room)) return true;
            blocks.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }

    // every block any subset; only for tiny Z
    bool complete(std::size_t lo) {
        if (satisfied()) {
            finish();
            return true;
        }
        if (lo >= N) return false;
        std::size_t rest = N - lo;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << rest); ++mask) {
            if (!tick()) return false;
            std::vector<std::size_t> blk;
            for (std::size_t q = 0; q < rest; ++q)
                if (mask >> q & 1) blk.push_back(lo + q);
            if (!l0.holds(as_set(blk))) continue;
            if (!compatible(blk)) continue;
            blocks.push_back(blk);
            if (complete(blk.back() + 1)) return true;
            blocks.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

GroupingSearch find_grouping(const FinSet& z, const ColoringTable& f, const LSpec& l0, const LSpec& l1,
                             const Pi03Sentence& T, Budget& budget) {
    if (f.arity() != 2) throw DomainError("find_grouping: coloring must have arity 2");
    if (!z.subset_of(f.domain())) throw DomainError("find_grouping: coloring does not cover Z");
    GroupingSearcher s{z, f, l0, l1, T, budget, z.size(), {}, {}, {}, 0, false};
    for (auto& v : z.elems()) s.dom.push_back(*f.domain().index_of(v));
    GroupingSearch r;

    // room[p]: most disjoint L0-large intervals in Z[p..], ignoring colours and apartness
    std::vector<std::size_t> room(z.size() + 1, 0);
    for (std::size_t p = z.size(); p-- > 0;) {
        auto len = l0.min_prefix(z.slice(p, z.size() - 1).with_floor(0));
        if (l0.kind == LSpec::LARGENESS && z[p] < l0.spec.T.floor()) len.reset();
        room[p] = std::max(room[p + 1], len ? 1 + room[p + len.value()] : std::size_t(0));
    }
    if (l1.kind == LSpec::CARD_AT_LEAST && room[0] < l1.m) {
        r.status = SearchStatus::None;
        r.reason = "Z holds at most " + std::to_string(room[0]) + " disjoint " + l0.describe() + " blocks";
        return r;
    }
    bool small = z.size() <= 10;
    bool ok = small ? s.complete(0) : s.restricted(0, room);
    r.nodes = s.nodes;
    if (ok) {
        auto v = grouping_violation(*s.found, l0, l1, T);
        if (v) throw std::logic_error("find_grouping produced an invalid witness: " + *v);
        r.status = SearchStatus::Found;
        r.witness = s.found;
        return r;
    }
    if (s.out_of_budget) {
        r.reason = "budget exhausted after " + std::to_string(s.nodes) + " nodes";
    } else if (small) {
        r.status = SearchStatus::None;
        r.reason = "exhaustive search over all block sequences";
    } else {
        r.reason = "prefix-block search exhausted; not a proof of absence";
    }
    return r;
}

KsResult ks_homogeneous(const FinSet& x, const ColoringTable& f, const LargenessSpec& target, Budget& budget) {
    if (f.arity() != 2) throw DomainError("ks_homogeneous: coloring must have arity 2");
    if (!x.subset_of(f.domain())) throw DomainError("ks_homogeneous: coloring does not cover X");
    KsResult r;
    std::size_t N = x.size();
    std::vector<std::size_t> dom;
    for (auto& v : x.elems()) dom.push_back(*f.domain().index_of(v));
    bool exhausted = false;
    auto as_set = [&](const std::vector<std::size_t>& ix) {
        std::vector<Nat> v;
        for (auto i : ix) v.push_back(x[i]);
        return FinSet(v, x.floor());
    };
    auto large = [&](const std::vector<std::size_t>& ix) { return !ix.empty() && is_large(as_set(ix), target); };

    std::vector<std::size_t> chosen;
    std::function<bool(unsigned, const std::vector<std::size_t>&)> dfs = [&](unsigned c,
                                                                             const std::vector<std::size_t>& cand) {
        ++r.nodes;
        if (!budget.tick()) {
            exhausted = true;
            return false;
        }
        if (large(chosen)) return true;
        for (std::size_t j = 0; j < cand.size(); ++j) {
            // every extension from here on lives inside chosen + cand[j..]
            std::vector<std::size_t> hull = chosen;
            hull.insert(hull.end(), cand.begin() + j, cand.end());
            if (!large(hull)) return false;
            std::size_t v = cand[j];
            std::vector<std::size_t> next;
            for (std::size_t q = j + 1; q < cand.size(); ++q)
                if (f.at2(dom[v], dom[cand[q]]) == c) next.push_back(cand[q]);
            chosen.push_back(v);
            if (dfs(c, next)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    };
    std::vector<std::size_t> all(N);
    for (std::size_t i = 0; i < N; ++i) all[i] = i;
    for (unsigned c = 0; c < f.colors(); ++c) {
        chosen.clear();
        if (dfs(c, all)) {
            FinSet y = as_set(chosen);
            for (std::size_t i = 0; i < chosen.size(); ++i)
                for (std::size_t j = i + 1; j < chosen.size(); ++j)
                    if (f.at2(dom[chosen[i]], dom[chosen[j]]) != c)
                        throw std::logic_error("ks_homogeneous: output not homogeneous");
            r.cert = check_large(y, target);
            if (!r.cert) throw std::logic_error("ks_homogeneous: output not large");
            r.set = y;
            r.color = c;
            r.complete = true;
            return r;
        }
        if (exhausted) return r;
    }
    r.complete = true;
    return r;
}

}  // namespace lt
