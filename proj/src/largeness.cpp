#include "lt/largeness.hpp"

#include <algorithm>
#include <functional>

namespace lt {

// ---- certificates <-> json ----

static const char* kind_name(Certificate::Kind k) {
    switch (k) {
        case Certificate::Leaf: return "leaf";
        case Certificate::Power: return "power";
        default: return "mult";
    }
}

json to_json(const Certificate& c) {
    json j{{"kind", kind_name(c.kind)}, {"exponent", c.exponent}};
    if (c.kind == Certificate::Leaf) j["element"] = c.witness.str();
    if (c.kind == Certificate::Power) j["min"] = c.witness.str();
    if (c.kind != Certificate::Leaf) {
        json bs = json::array();
        for (auto& b : c.blocks) bs.push_back(json{{"start", b.start}, {"end", b.end}, {"cert", to_json(b.cert)}});
        j["blocks"] = bs;
    }
    return j;
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("exponent"))
        throw DomainError("certificate needs 'kind' and 'exponent'");
    Certificate c;
    std::string k = j["kind"].get<std::string>();
    c.exponent = j["exponent"].get<std::uint64_t>();
    if (k == "leaf") {
        c.kind = Certificate::Leaf;
        c.witness = parse_nat(j.at("element").get<std::string>());
        return c;
    }
    if (k == "power") {
        c.kind = Certificate::Power;
        c.witness = parse_nat(j.at("min").get<std::string>());
    } else if (k == "mult") {
        c.kind = Certificate::Mult;
    } else {
        throw DomainError("unknown certificate kind '" + k + "'");
    }
    for (auto& b : j.at("blocks"))
        c.blocks.push_back(CertBlock{b.at("start").get<std::size_t>(), b.at("end").get<std::size_t>(),
                                     certificate_from_json(b.at("cert"))});
    return c;
}

bool operator==(const Certificate& a, const Certificate& b) {
    if (a.kind != b.kind || a.exponent != b.exponent || a.witness != b.witness || a.blocks.size() != b.blocks.size())
        return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].start != b.blocks[i].start || a.blocks[i].end != b.blocks[i].end ||
            !(a.blocks[i].cert == b.blocks[i].cert))
            return false;
    return true;
}

// ---- apartness ----

bool t_apart_values(const Nat& max_x, const Nat& min_y, const Nat& max_y, const Pi03Sentence& T) {
    if (T.is_top()) return true;
    Nat d = T.inclusive ? 1 : 0;
    Nat xb = max_x + d, yb = min_y + d, zb = max_y + d;
    for (Nat x = 0; x < xb; ++x) {
        bool found = false;
        for (Nat y = 0; y < yb && !found; ++y) {
            bool all = true;
            for (Nat z = 0; z < zb; ++z)
                if (!T.holds(x, y, z)) {
                    all = false;
                    break;
                }
            found = all;
        }
        if (!found) return false;
    }
    return true;
}

bool t_apart(const FinSet& x, const FinSet& y, const Pi03Sentence& T) {
    if (x.empty() || y.empty()) throw DomainError("apartness needs nonempty sets");
    if (!(x.max() < y.min())) throw DomainError("apartness needs max X < min Y");
    return t_apart_values(x.max(), y.min(), y.max(), T);
}

bool ApartChecker::holds_below(std::uint64_t x, std::uint64_t y, std::uint64_t zb) {
    Entry& e = cache_[(x << 32) | y];
    if (e.ok_below >= zb) return true;
    if (e.failed) return false;
    for (std::uint64_t z = e.ok_below; z < zb; ++z) {
        if (!T_.holds(x, y, z)) {
            e.ok_below = z;
            e.failed = true;
            return false;
        }
    }
    e.ok_below = zb;
    return true;
}

bool ApartChecker::apart(const Nat& max_x, const Nat& min_y, const Nat& max_y) {
    if (T_.is_top()) return true;
    std::uint64_t d = T_.inclusive ? 1 : 0;
    auto mx = to_u64(max_x), my = to_u64(min_y), mz = to_u64(max_y);
    constexpr std::uint64_t lim = 1u << 30;
    if (!mx || !my || !mz || *mx >= lim || *my >= lim || *mz >= lim) return t_apart_values(max_x, min_y, max_y, T_);
    std::uint64_t xb = *mx + d, yb = *my + d, zb = *mz + d;
    for (std::uint64_t x = 0; x < xb; ++x) {
        bool found = false;
        for (std::uint64_t y = 0; y < yb && !found; ++y) found = holds_below(x, y, zb);
        if (!found) return false;
    }
    return true;
}

// ---- engine ----

LargenessEngine::LargenessEngine(const FinSet& x, const Pi03Sentence& T, SearchMode mode)
    : X_(x), T_(T), mode_(mode), top_(T.is_top()), apart_(T) {}

static const Pi03Sentence& top_sentence() {
    static const Pi03Sentence t = Pi03Sentence::top();
    return t;
}

LargenessEngine::LargenessEngine(const FinSet& x, ApartFn apart, SearchMode mode)
    : X_(x), T_(top_sentence()), mode_(mode), top_(false), apart_(top_sentence()), custom_(std::move(apart)) {}

std::optional<std::uint64_t> LargenessEngine::small_count(std::size_t i) const {
    auto v = to_u64(X_[i]);
    if (!v || *v > X_.size()) return std::nullopt;
    return v;
}

bool LargenessEngine::apart_idx(std::size_t e, std::size_t s, std::size_t e2) {
    if (top_) return true;
    std::uint64_t key = (std::uint64_t(e) << 42) | (std::uint64_t(s) << 21) | std::uint64_t(e2);
    auto it = apart_memo_.find(key);
    if (it != apart_memo_.end()) return it->second;
    bool r = custom_ ? custom_(X_[e], X_[s], X_[e2]) : apart_.apart(X_[e], X_[s], X_[e2]);
    apart_memo_[key] = r;
    return r;
}

std::optional<std::size_t> LargenessEngine::end(std::uint64_t n, std::size_t i) {
    std::size_t N = X_.size();
    if (i >= N) return std::nullopt;
    if (n == 0) return i;
    // an omega^n-large set has more than n elements
    if (n >= N - i) return std::nullopt;
    std::uint64_t key = (n << 32) | i;
    auto it = end_memo_.find(key);
    if (it != end_memo_.end()) return it->second;
    std::optional<std::size_t> r;
    auto k = small_count(i);
    if (k && *k <= N - i - 1) r = chain_end(n - 1, *k, i + 1);
    end_memo_[key] = r;
    return r;
}

bool LargenessEngine::large(std::uint64_t n, std::size_t i, std::size_t j) {
    auto e = end(n, i);
    return e && *e <= j;
}

std::optional<std::size_t> LargenessEngine::chain_end(std::uint64_t n, std::uint64_t k, std::size_t lo) {
    std::size_t N = X_.size();
    if (k == 0) return lo == 0 ? std::nullopt : std::optional<std::size_t>(lo - 1);
    if (top_ || mode_ == SearchMode::Greedy) {
        std::size_t s = lo;
        std::optional<std::size_t> prev;
        for (std::uint64_t t = 0; t < k; ++t) {
            std::optional<std::size_t> e;
            while (s < N) {
                e = end(n, s);
                if (e && (!prev || apart_idx(*prev, s, *e))) break;
                // with TOP, later starts only end later
                if (top_) return std::nullopt;
                e.reset();
                ++s;
            }
            if (!e) return std::nullopt;
            prev = e;
            s = *e + 1;
        }
        return prev;
    }
    // forward reachability over block starts
    std::vector<char> reach(N, 0);
    bool any = false;
    for (std::size_t s = lo; s < N; ++s)
        if (end(n, s)) reach[s] = 1, any = true;
    for (std::uint64_t t = 1; t < k && any; ++t) {
        std::vector<char> nxt(N, 0);
        any = false;
        for (std::size_t s2 = lo; s2 < N; ++s2) {
            auto e2 = end(n, s2);
            if (!e2) continue;
            for (std::size_t s = lo; s < s2; ++s) {
                if (!reach[s]) continue;
                auto e = *end(n, s);
                if (e < s2 && apart_idx(e, s2, *e2)) {
                    nxt[s2] = 1;
                    any = true;
                    break;
                }
            }
        }
        reach.swap(nxt);
    }
    if (!any) return std::nullopt;
    std::optional<std::size_t> best;
    for (std::size_t s = lo; s < N; ++s)
        if (reach[s]) {
            auto e = *end(n, s);
            if (!best || e < *best) best = e;
        }
    return best;
}

std::optional<std::vector<std::size_t>> LargenessEngine::chain(std::uint64_t n, std::uint64_t k, std::size_t lo,
                                                               std::size_t hi) {
    std::size_t N = X_.size();
    std::vector<std::size_t> starts;
    if (k == 0) return starts;
    if (top_ || mode_ == SearchMode::Greedy) {
        std::size_t s = lo;
        std::optional<std::size_t> prev;
        for (std::uint64_t t = 0; t < k; ++t) {
            bool ok = false;
            for (; s <= hi && s < N; ++s) {
                auto e = end(n, s);
                if (e && *e <= hi && (!prev || apart_idx(*prev, s, *e))) {
                    starts.push_back(s);
                    prev = e;
                    s = *e + 1;
                    ok = true;
                    break;
                }
                if (top_) return std::nullopt;
            }
            if (!ok) return std::nullopt;
        }
        return starts;
    }
    // lexicographically least start sequence, with memoized dead ends
    std::vector<std::vector<char>> dead(k, std::vector<char>(N, 0));
    std::function<bool(std::uint64_t, std::size_t)> dfs = [&](std::uint64_t t, std::size_t s) -> bool {
        if (dead[t][s]) return false;
        std::size_t e = *end(n, s);
        starts.push_back(s);
        if (t + 1 == k) return true;
        for (std::size_t s2 = e + 1; s2 <= hi && s2 < N; ++s2) {
            auto e2 = end(n, s2);
            if (!e2 || *e2 > hi) continue;
            if (!apart_idx(e, s2, *e2)) continue;
            if (dfs(t + 1, s2)) return true;
        }
        starts.pop_back();
        dead[t][s] = 1;
        return false;
    };
    for (std::size_t s = lo; s <= hi && s < N; ++s) {
        auto e = end(n, s);
        if (!e || *e > hi) continue;
        if (dfs(0, s)) return starts;
    }
    return std::nullopt;
}

Certificate LargenessEngine::certify(std::uint64_t n, std::size_t i, std::size_t j) {
    Certificate c;
    c.exponent = n;
    c.witness = X_[i];
    if (n == 0) {
        c.kind = Certificate::Leaf;
        return c;
    }
    c.kind = Certificate::Power;
    auto k = small_count(i);
    auto starts = k ? chain(n - 1, *k, i + 1, j) : std::nullopt;
    if (!starts) throw std::logic_error("certify called on a set that is not large");
    for (std::size_t s : *starts) {
        std::size_t e = *end(n - 1, s);
        c.blocks.push_back(CertBlock{s - i, e - i, certify(n - 1, s, e)});
    }
    return c;
}

std::optional<Certificate> LargenessEngine::certify_spec(std::uint64_t n, std::uint64_t k) {
    std::size_t N = X_.size();
    if (N == 0 || k == 0) return std::nullopt;
    if (X_.min() < T_.floor() || X_.min() < X_.floor()) return std::nullopt;
    if (k == 1) {
        if (!end(n, 0)) return std::nullopt;
        return certify(n, 0, N - 1);
    }
    auto starts = chain(n, k, 0, N - 1);
    if (!starts) return std::nullopt;
    Certificate c;
    c.kind = Certificate::Mult;
    c.exponent = n;
    for (std::size_t s : *starts) {
        std::size_t e = *end(n, s);
        c.blocks.push_back(CertBlock{s, e, certify(n, s, e)});
    }
    return c;
}

std::optional<Certificate> check_large(const FinSet& x, const LargenessSpec& spec, SearchMode mode) {
    LargenessEngine eng(x, spec.T, mode);
    return eng.certify_spec(spec.n, spec.k);
}

bool is_large(const FinSet& x, const LargenessSpec& spec) { return check_large(x, spec).has_value(); }

// ---- verification ----

namespace {

struct Verifier {
    const Pi03Sentence& T;
    bool paranoid;

    bool blocks_ok(const FinSet& x, const std::vector<CertBlock>& bs, std::size_t first, std::uint64_t child_exp) {
        std::vector<FinSet> sets;
        std::size_t prev_end = 0;
        bool have_prev = false;
        for (auto& b : bs) {
            if (b.start < first || b.start > b.end || b.end >= x.size()) return false;
            if (have_prev && b.start <= prev_end) return false;  // overlapping or out of order
            prev_end = b.end;
            have_prev = true;
            FinSet sub = x.slice(b.start, b.end);
            if (b.cert.exponent != child_exp) return false;
            if (!node(sub, b.cert)) return false;
            sets.push_back(std::move(sub));
        }
        for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
            if (!t_apart(sets[i], sets[i + 1], T)) return false;
            if (paranoid)
                for (std::size_t j = i + 2; j < sets.size(); ++j)
                    if (!t_apart(sets[i], sets[j], T)) return false;
        }
        return true;
    }

    bool node(const FinSet& x, const Certificate& c) {
        if (x.empty()) return false;
        switch (c.kind) {
            case Certificate::Leaf: return c.exponent == 0 && c.blocks.empty() && x.contains(c.witness);
            case Certificate::Power: {
                if (c.exponent == 0 || c.witness != x.min()) return false;
                if (Nat(c.blocks.size()) != x.min()) return false;
                return blocks_ok(x, c.blocks, 1, c.exponent - 1);
            }
            case Certificate::Mult: return false;  // only allowed at the root
        }
        return false;
    }
};

}  // namespace

bool verify_certificate(const FinSet& x, const Certificate& cert, const LargenessSpec& spec, bool paranoid) {
    if (x.empty()) return false;
    if (x.min() < spec.T.floor() || x.min() < x.floor()) return false;
    if (cert.exponent != spec.n) return false;
    Verifier v{spec.T, paranoid};
    if (spec.k == 1) return cert.kind != Certificate::Mult && v.node(x, cert);
    if (cert.kind != Certificate::Mult || cert.blocks.size() != spec.k) return false;
    return v.blocks_ok(x, cert.blocks, 0, spec.n);
}

// ---- lifting ----

Certificate lift_certificate(const FinSet& s, const Certificate& c, const FinSet& u) {
    if (!s.subset_of(u)) throw DomainError("lift: not a subset");
    Certificate r;
    r.kind = c.kind;
    r.exponent = c.exponent;
    if (c.kind == Certificate::Leaf) {
        r.witness = c.witness;
        return r;
    }
    std::size_t take = c.blocks.size();
    if (c.kind == Certificate::Power) {
        r.witness = u.min();
        auto m = to_u64(u.min());
        // a smaller minimum asks for fewer blocks
        if (!m || *m > take) throw DomainError("lift: certificate has too few blocks");
        take = *m;
    }
    for (std::size_t t = 0; t < take; ++t) {
        auto& b = c.blocks[t];
        FinSet bs = s.slice(b.start, b.end);
        std::size_t lo = *u.index_of(bs.min()), hi = *u.index_of(bs.max());
        FinSet ub = u.slice(lo, hi);
        r.blocks.push_back(CertBlock{lo, hi, lift_certificate(bs, b.cert, ub)});
    }
    return r;
}

// ---- minimal intervals ----

std::optional<Nat> minimal_interval_max(const Nat& x, std::uint64_t n, std::size_t max_bits) {
    auto too_big = [&](const Nat& v) { return v != 0 && msb(v) >= max_bits; };
    if (too_big(x)) return std::nullopt;
    if (n == 0) return x;
    if (n == 1) return 2 * x;
    if (n == 2) {
        auto e = to_u64(x);
        if (!e || *e >= max_bits) return std::nullopt;
        Nat m = pow_nat(Nat(2), *e) * (x + 2) - 2;
        if (too_big(m)) return std::nullopt;
        return m;
    }
    Nat b = x + 1;
    for (Nat j = 0; j < x; ++j) {
        auto m = minimal_interval_max(b, n - 1, max_bits);
        if (!m) return std::nullopt;
        b = *m + 1;
    }
    return b - 1;
}

bool is_minimal(const FinSet& x, std::uint64_t n) {
    LargenessSpec sp{n, 1, Pi03Sentence::top()};
    if (!is_large(x, sp)) return false;
    for (auto& v : x.elems()) {
        FinSet y = x.without(v);
        if (!y.empty() && is_large(y, sp)) return false;
    }
    return true;
}

MinimalIntervalResult minimal_large_interval(const Nat& x, std::uint64_t n, const Nat& budget) {
    if (x < 3) throw DomainError("base must respect the floor 3");
    MinimalIntervalResult r;
    auto m = minimal_interval_max(x, n);
    if (!m) return r;
    r.cardinality = *m - x + 1;
    if (*r.cardinality > budget) return r;
    r.set = FinSet::interval(x, *m);
    // validation costs roughly |X|^2 * n; skip it on big intervals
    if (*r.cardinality <= 5000) {
        r.validated = is_minimal(*r.set, n);
        if (!r.validated) throw std::logic_error("recurrence produced a non-minimal interval");
    }
    return r;
}

// ---- decompositions ----

std::vector<std::vector<FinSet>> decompositions(const FinSet& x, std::uint64_t n, std::size_t limit) {
    std::vector<std::vector<FinSet>> out;
    if (n == 0 || x.empty()) return out;
    auto need = to_u64(x.min());
    if (!need || *need > x.size()) return out;
    Pi03Sentence top = Pi03Sentence::top();
    LargenessEngine eng(x, top);
    LargenessSpec child{n - 1, 1, top};
    std::size_t N = x.size();
    std::vector<FinSet> cur;

    std::function<void(std::size_t)> rec = [&](std::size_t lo) {
        if (out.size() >= limit) return;
        std::size_t t = cur.size();
        if (t >= *need) out.push_back(cur);
        for (std::size_t s = lo; s < N; ++s)
            for (std::size_t e = s; e < N; ++e) {
                if (out.size() >= limit) return;
                if (!eng.large(n - 1, s, e)) continue;
                std::uint64_t rest = t + 1 < *need ? *need - t - 1 : 0;
                if (rest && !eng.chain_end(n - 1, rest, e + 1)) break;
                // choose which interior elements to keep; prune once even keeping the rest fails
                std::vector<Nat> chosen{x[s]};
                std::function<void(std::size_t)> pick = [&](std::size_t p) {
                    if (out.size() >= limit) return;
                    if (p >= e) {
                        std::vector<Nat> b = chosen;
                        if (e != s) b.push_back(x[e]);
                        FinSet bs(b, x.floor());
                        if (!is_large(bs, child)) return;
                        cur.push_back(bs);
                        rec(e + 1);
                        cur.pop_back();
                        return;
                    }
                    std::vector<Nat> optimistic = chosen;
                    for (std::size_t q = p; q <= e; ++q) optimistic.push_back(x[q]);
                    if (!is_large(FinSet(optimistic, x.floor()), child)) return;
                    chosen.push_back(x[p]);
                    pick(p + 1);
                    chosen.pop_back();
                    pick(p + 1);
                };
                pick(s + 1);
            }
    };
    rec(1);
    return out;
}

// ---- Lemma: pigeonhole extraction ----

namespace {

std::vector<FinSet> block_sets(const FinSet& x, const Certificate& c) {
    std::vector<FinSet> r;
    for (auto& b : c.blocks) r.push_back(x.slice(b.start, b.end));
    return r;
}

struct Pigeonhole {
    const ColoringTable& f;
    const Pi03Sentence& T;
    ExtractResult& stats;

    unsigned color(const Nat& v) const { return f.at_values({v}); }

    bool homogeneous(const FinSet& s) const {
        for (auto& v : s.elems())
            if (color(v) != color(s.min())) return false;
        return true;
    }

    // returns a homogeneous omega^b-large(T) subset with certificate, or nullopt if the regrouping ran short
    std::optional<std::pair<FinSet, Certificate>> run(const FinSet& x, std::uint64_t b) {
        if (b == 0) {
            FinSet one({x.min()}, x.floor());
            Certificate c;
            c.kind = Certificate::Leaf;
            c.witness = x.min();
            return std::make_pair(one, c);
        }
        auto cx = check_large(x, {2 * b, 1, T});
        if (!cx) throw DomainError("pigeonhole: input is not omega^{2b}-large(T)");
        auto blocks = block_sets(x, *cx);
        if (homogeneous(blocks[0])) {
            auto c0 = check_large(blocks[0], {b, 1, T});
            if (!c0) throw std::logic_error("omega^{2b-1}-large block is not omega^b-large");
            return std::make_pair(blocks[0], *c0);
        }
        // maximal t with f[X_0 u .. u X_{t-1}] covering f[X_t]
        std::vector<std::set<unsigned>> seen_before(blocks.size() + 1);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            seen_before[i + 1] = seen_before[i];
            for (auto& v : blocks[i].elems()) seen_before[i + 1].insert(color(v));
        }
        std::optional<std::size_t> t;
        for (std::size_t i = 1; i < blocks.size(); ++i) {
            bool covered = true;
            for (auto& v : blocks[i].elems())
                if (!seen_before[i].count(color(v))) {
                    covered = false;
                    break;
                }
            if (covered) t = i;
        }
        if (!t) throw DomainError("pigeonhole: no covering block; coloring uses at least min X colors");
        ++stats.counting_steps;
        const FinSet& xt = blocks[*t];
        if (!(x.min() * blocks[*t - 1].max() < xt.min())) ++stats.sparsity_shortfalls;

        const Certificate& ct = cx->blocks[*t].cert;
        auto ys = block_sets(xt, ct);
        std::vector<std::pair<FinSet, Certificate>> zs;
        std::map<unsigned, std::vector<std::size_t>> by_color;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            auto z = run(ys[j], b - 1);
            if (!z) return std::nullopt;
            by_color[color(z->first.min())].push_back(zs.size());
            zs.push_back(std::move(*z));
        }
        // earlier element x of color c; the lemma needs at least x blocks of color c
        std::optional<std::pair<Nat, unsigned>> pick;
        for (auto& [c, idx] : by_color) {
            std::optional<Nat> xc;
            for (std::size_t i = 0; i < *t && !xc; ++i)
                for (auto& v : blocks[i].elems())
                    if (color(v) == c) {
                        xc = v;
                        break;
                    }
            if (!xc || Nat(idx.size()) < *xc) continue;
            if (!pick || *xc < pick->first) pick = std::make_pair(*xc, c);
        }
        if (!pick) {
            ++stats.counting_failures;
            return std::nullopt;
        }
        auto& idx = by_color[pick->second];
        std::size_t take = static_cast<std::size_t>(pick->first);
        std::vector<Nat> elems{pick->first};
        for (std::size_t q = 0; q < take; ++q)
            for (auto& v : zs[idx[q]].first.elems()) elems.push_back(v);
        FinSet y(elems, x.floor());
        Certificate c;
        c.kind = Certificate::Power;
        c.exponent = b;
        c.witness = pick->first;
        std::size_t pos = 1;
        for (std::size_t q = 0; q < take; ++q) {
            std::size_t len = zs[idx[q]].first.size();
            c.blocks.push_back(CertBlock{pos, pos + len - 1, zs[idx[q]].second});
            pos += len;
        }
        return std::make_pair(y, c);
    }
};

}  // namespace

ExtractResult pigeonhole_extract(const FinSet& x, const ColoringTable& f, std::uint64_t b, const Pi03Sentence& T,
                                 const PigeonholeOptions& opt) {
    if (f.arity() != 1) throw DomainError("pigeonhole: coloring must have arity 1");
    if (x.empty()) throw DomainError("pigeonhole: empty set");
    if (!x.subset_of(f.domain())) throw DomainError("pigeonhole: coloring does not cover X");
    for (auto& v : x.elems())
        if (Nat(f.at_values({v})) >= x.min()) throw DomainError("pigeonhole: coloring must map into min X colors");
    if (!is_sparse(x, opt.policy)) throw DomainError(std::string("pigeonhole: set is not ") + to_string(opt.policy) + "-sparse");
    if (!check_large(x, {2 * b, 1, T})) throw DomainError("pigeonhole: input is not omega^{2b}-large(T)");

    ExtractResult res;
    Pigeonhole ph{f, T, res};
    auto r = ph.run(x, b);
    LargenessSpec spec{b, 1, T};
    if (r) {
        res.set = r->first;
        res.cert = r->second;
        res.route = "proof";
    } else {
        if (!opt.fallback)
            throw DomainError("pigeonhole: regrouping step ran short; the sparsity policy is too weak for this instance");
        // superset closure: some color class is omega^b-large(T) iff a homogeneous subset is
        std::map<unsigned, std::vector<Nat>> classes;
        for (auto& v : x.elems()) classes[f.at_values({v})].push_back(v);
        bool found = false;
        for (auto& [c, vs] : classes) {
            FinSet cl(vs, x.floor());
            LargenessEngine eng(cl, T);
            auto e = eng.end(b, 0);
            if (!e) continue;
            res.set = cl.slice(0, *e);
            res.cert = *check_large(res.set, spec);
            res.route = "class-search";
            found = true;
            break;
        }
        if (!found) throw std::logic_error("pigeonhole: no color class is large; lemma hypothesis violated");
    }
    if (!verify_certificate(res.set, res.cert, spec) || !ph.homogeneous(res.set))
        throw std::logic_error("pigeonhole: produced output failed re-validation");
    return res;
}

// ---- Lemma: mixed decomposition ----

DecomposeResult decompose_mixed(const FinSet& x, std::uint64_t n, std::uint64_t m, const Pi03Sentence& T) {
    auto cx = check_large(x, {n + m + 1, 1, T});
    if (!cx) throw DomainError("decompose: input is not omega^{n+m+1}-large(T)");
    auto top = block_sets(x, *cx);
    if (top.size() < 2) throw DomainError("decompose: fewer than two blocks");

    std::function<std::vector<FinSet>(const FinSet&, const FinSet&, std::uint64_t)> stmt =
        [&](const FinSet& y0, const FinSet& y1, std::uint64_t mm) -> std::vector<FinSet> {
        if (mm == 0) return {y0, y1};
        auto c1 = check_large(y1, {n + mm, 1, T});
        if (!c1) throw std::logic_error("decompose: block lost its largeness");
        auto zs = block_sets(y1, *c1);
        auto need = to_u64(y0.min());
        if (!need || 2 * *need > zs.size()) throw std::logic_error("decompose: not enough sub-blocks");
        std::vector<FinSet> fam{y0};
        for (std::uint64_t j = 0; j < *need; ++j) {
            auto sub = stmt(zs[2 * j], zs[2 * j + 1], mm - 1);
            fam.insert(fam.end(), sub.begin(), sub.end());
        }
        return fam;
    };
    auto fam = stmt(top[0], top[1], m);

    DecomposeResult r;
    std::vector<Nat> minima;
    for (auto& b : fam) {
        // shrink to the least omega^n-large prefix; keeps the minimum, apartness survives subsets
        LargenessEngine eng(b, T);
        auto e = eng.end(n, 0);
        if (!e) throw std::logic_error("decompose: block is not omega^n-large(T)");
        FinSet s = b.slice(0, *e);
        r.certs.push_back(*check_large(s, {n, 1, T}));
        r.blocks.push_back(s);
        minima.push_back(s.min());
    }
    for (std::size_t i = 0; i + 1 < r.blocks.size(); ++i)
        if (!t_apart(r.blocks[i], r.blocks[i + 1], T)) throw std::logic_error("decompose: consecutive blocks not apart");
    if (!is_large(FinSet(minima, x.floor()), {m, 1, Pi03Sentence::top()}))
        throw std::logic_error("decompose: minima are not omega^m-large");
    return r;
}

// ---- Lemma: fusing apart blocks ----

FuseResult fuse(const std::vector<FinSet>& blocks, std::uint64_t a, std::uint64_t b, const Pi03Sentence& T) {
    if (blocks.size() < 2) throw DomainError("fuse: need at least two blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) throw DomainError("fuse: empty block");
        if (i && !precedes(blocks[i - 1], blocks[i])) throw DomainError("fuse: blocks must be increasing");
        if (!is_large(blocks[i], {a, 1, T})) throw DomainError("fuse: block is not omega^a-large(T)");
        if (i && !t_apart(blocks[i - 1], blocks[i], T)) throw DomainError("fuse: blocks are not pairwise T-apart");
    }
    Nat fl = blocks[0].floor();

    std::function<FuseResult(const std::vector<FinSet>&, std::uint64_t)> rec =
        [&](const std::vector<FinSet>& xs, std::uint64_t bb) -> FuseResult {
        std::vector<Nat> maxima;
        for (auto& s : xs) maxima.push_back(s.max());
        FinSet M(maxima, fl);
        auto cm = check_large(M, {bb + 1, 1, T});
        if (!cm) throw DomainError("fuse: maxima are not omega^{b+1}-large(T)");
        std::vector<Nat> u{xs[0].max()};
        for (std::size_t s = 1; s < xs.size(); ++s)
            for (auto& v : xs[s].elems()) u.push_back(v);
        FinSet U(u, fl);
        if (bb == 0) {
            auto c1 = check_large(xs[1], {a, 1, T});
            return {U, lift_certificate(xs[1], *c1, U)};
        }
        std::vector<Nat> v{M.min()};
        Certificate c;
        c.kind = Certificate::Power;
        c.exponent = a + bb;
        c.witness = M.min();
        std::vector<std::pair<FinSet, Certificate>> ws;
        for (auto& blk : cm->blocks) {
            FinSet z = M.slice(blk.start, blk.end);
            std::vector<FinSet> sub;
            for (auto& s : xs)
                if (z.contains(s.max())) sub.push_back(s);
            auto w = rec(sub, bb - 1);
            std::size_t start = v.size();
            for (auto& e : w.set.elems()) v.push_back(e);
            c.blocks.push_back(CertBlock{start, v.size() - 1, w.cert});
        }
        FinSet V(v, fl);
        return {U, lift_certificate(V, c, U)};
    };
    auto r = rec(blocks, b);
    if (!verify_certificate(r.set, r.cert, {a + b, 1, T})) throw std::logic_error("fuse: assembled certificate rejected");
    return r;
}

}  // namespace lt
