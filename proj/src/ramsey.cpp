#include "lt/ramsey.hpp"

#include <functional>
#include <map>
#include <random>
#include <thread>

namespace lt {

namespace {

using Mask = std::uint32_t;

FinSet pick(const FinSet& z, Mask m) {
    std::vector<Nat> v;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (m >> i & 1) v.push_back(z[i]);
    return FinSet(v, z.floor());
}

// k^count, or nullopt past the cap
std::optional<std::uint64_t> space_size(std::uint64_t k, std::uint64_t count, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (k == 0) return 0;
        if (r > cap / k) return std::nullopt;
        r *= k;
    }
    return r;
}

std::vector<unsigned> digits(std::uint64_t idx, unsigned k, std::size_t len) {
    std::vector<unsigned> t(len);
    for (std::size_t i = 0; i < len; ++i) {
        t[i] = unsigned(idx % k);
        idx /= k;
    }
    return t;
}

// is there a Y with Psi(f,Y) satisfying `good`?  `good` must be superset-closed for the pruning
bool exists_psi_set(const FinSet& z, const ColoringTable& f, const RtLikeStatement& g,
                    const std::function<bool(const FinSet&)>& good) {
    std::size_t N = z.size();
    if (!g.hereditary()) {
        if (N > 16) throw DomainError("non-hereditary statements are only searched on sets of size <= 16");
        for (Mask m = 1; m < (Mask(1) << N); ++m) {
            FinSet y = pick(z, m);
            if (good(y) && g.psi(f, y)) return true;
        }
        return false;
    }
    std::vector<std::size_t> chosen;
    auto as_set = [&](const std::vector<std::size_t>& ix) {
        std::vector<Nat> v;
        for (auto i : ix) v.push_back(z[i]);
        return FinSet(v, z.floor());
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (!chosen.empty()) {
            FinSet y = as_set(chosen);
            if (!g.psi0(f.restrict_to(y))) return false;
            if (good(y)) return true;
        }
        for (std::size_t j = from; j < N; ++j) {
            std::vector<std::size_t> hull = chosen;
            for (std::size_t q = j; q < N; ++q) hull.push_back(q);
            if (!good(as_set(hull))) return false;
            chosen.push_back(j);
            if (dfs(j + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(0);
}

}  // namespace

TriResult is_large_gamma(const FinSet& z, std::uint64_t r, std::uint64_t s, const Pi03Sentence& T,
                         const RtLikeStatement& gamma, const EvalMode& mode) {
    TriResult res;
    if (z.empty()) return {Tri::False, "empty set"};
    std::size_t N = z.size();
    std::uint64_t tuples = binom(N, gamma.arity);
    LargenessSpec spec{r, s, T};
    auto good = [&](const FinSet& y) { return is_large(y, spec); };
    auto check = [&](std::uint64_t idx, std::vector<unsigned> tab) -> bool {
        (void)idx;
        ColoringTable f(z.with_floor(0), gamma.arity, gamma.colors, std::move(tab));
        return exists_psi_set(z, f, gamma, good);
    };
    auto count = space_size(gamma.colors, tuples, mode.ceiling);
    if (!mode.sampled) {
        if (!count) throw DomainError("coloring space exceeds the exact-mode ceiling");
        unsigned th = std::max(1u, mode.threads);
        std::vector<std::optional<std::uint64_t>> first_bad(th);
        auto work = [&](unsigned t) {
            std::uint64_t lo = *count * t / th, hi = *count * (t + 1) / th;
            for (std::uint64_t i = lo; i < hi; ++i)
                if (!check(i, digits(i, gamma.colors, tuples))) {
                    first_bad[t] = i;
                    return;
                }
        };
        if (th == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < th; ++t) pool.emplace_back(work, t);
            for (auto& p : pool) p.join();
        }
        for (auto& b : first_bad)
            if (b) return {Tri::False, "coloring #" + std::to_string(*b) + " has no suitable Y"};
        return {Tri::True, "all " + std::to_string(*count) + " colorings checked"};
    }
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<unsigned> col(0, gamma.colors - 1);
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
        std::vector<unsigned> tab(tuples);
        for (auto& c : tab) c = col(rng);
        if (!check(t, tab)) return {Tri::False, "sampled coloring " + std::to_string(t) + " has no suitable Y"};
    }
    return {Tri::Inconclusive, "no counterexample in " + std::to_string(mode.trials) + " samples"};
}

// ---- density ----

namespace {

struct Density {
    const FinSet& Z;
    const DensityParams& P;
    std::mt19937_64 rng;
    std::map<std::pair<Mask, std::uint64_t>, Tri> memo, cmemo;
    std::string reason;

    Density(const FinSet& z, const DensityParams& p) : Z(z), P(p), rng(p.mode.seed) {}

    static Tri join_or(Tri a, Tri b) {
        if (a == Tri::True || b == Tri::True) return Tri::True;
        if (a == Tri::Inconclusive || b == Tri::Inconclusive) return Tri::Inconclusive;
        return Tri::False;
    }

    std::vector<std::size_t> members(Mask m) const {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < Z.size(); ++i)
            if (m >> i & 1) r.push_back(i);
        return r;
    }

    // some subset of `mask` is lvl-dense
    Tri contains(Mask mask, std::uint64_t lvl) {
        if (lvl == 0) return dense(mask, 0);  // omega-large(T) is superset-closed
        auto key = std::make_pair(mask, lvl);
        auto it = cmemo.find(key);
        if (it != cmemo.end()) return it->second;
        Tri r = Tri::False;
        for (Mask sub = mask; sub && r != Tri::True; sub = (sub - 1) & mask) r = join_or(r, dense(sub, lvl));
        cmemo[key] = r;
        return r;
    }

    // runs fn on every colouring (or on samples); returns false from the first fn == false
    enum Cover { Full, Partial };
    template <class Fn>
    std::pair<bool, Cover> colorings(std::uint64_t slots, unsigned k, Fn fn) {
        auto count = space_size(k, slots, P.mode.ceiling);
        if (count) {
            for (std::uint64_t i = 0; i < *count; ++i)
                if (!fn(digits(i, k, slots))) return {false, Full};
            return {true, Full};
        }
        if (!P.mode.sampled) throw DomainError("coloring space exceeds the exact-mode ceiling");
        std::uniform_int_distribution<unsigned> col(0, k - 1);
        for (std::uint64_t t = 0; t < P.mode.trials; ++t) {
            std::vector<unsigned> tab(slots);
            for (auto& c : tab) c = col(rng);
            if (!fn(tab)) return {false, Partial};
        }
        return {true, Partial};
    }

    Tri dense(Mask mask, std::uint64_t lvl) {
        if (!mask) return Tri::False;
        auto key = std::make_pair(mask, lvl);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Tri r = compute(mask, lvl);
        memo[key] = r;
        return r;
    }

    Tri compute(Mask mask, std::uint64_t lvl) {
        FinSet Y = pick(Z, mask);
        const Pi03Sentence& T = P.sentence;
        if (Y.min() < T.floor()) return Tri::False;
        if (lvl == 0) return is_large(Y, {1, 1, T}) ? Tri::True : Tri::False;
        auto idx = members(mask);
        std::size_t n = idx.size();
        bool partial = false;
        Tri verdict = Tri::True;
        auto fail = [&](Tri t, const std::string& why) {
            // a definite miss makes the whole thing false; an unknown one only taints it
            if (t == Tri::False) {
                verdict = Tri::False;
                if (reason.empty()) reason = why;
                return false;
            }
            if (t == Tri::Inconclusive) verdict = Tri::Inconclusive;
            return true;
        };

        // (d) some dense Y' with forall x < min Y exists y < min Y' forall z < max Y' theta
        {
            Tri d = Tri::False;
            for (Mask sub = mask; sub && d != Tri::True; sub = (sub - 1) & mask) {
                auto ys = members(sub);
                if (!t_apart_values(Y.min(), Z[ys.front()], Z[ys.back()], T)) continue;
                d = join_or(d, dense(sub, lvl - 1));
            }
            if (!fail(d, "item (d) fails on " + finset_brief(Y))) return Tri::False;
        }
        // (b) interval partitions into l <= min Y pieces
        {
            auto lmax = to_u64(Y.min());
            std::size_t L = std::min<std::uint64_t>(lmax.value_or(n), n);
            for (std::size_t l = 1; l <= L; ++l) {
                // cut positions chosen among n-1 gaps
                std::vector<std::size_t> cuts(l - 1);
                for (std::size_t i = 0; i + 1 < l; ++i) cuts[i] = i + 1;
                while (true) {
                    Tri any = Tri::False;
                    std::size_t prev = 0;
                    for (std::size_t p = 0; p < l && any != Tri::True; ++p) {
                        std::size_t end = p + 1 < l ? cuts[p] : n;
                        Mask piece = 0;
                        for (std::size_t q = prev; q < end; ++q) piece |= Mask(1) << idx[q];
                        any = join_or(any, dense(piece, lvl - 1));
                        prev = end;
                    }
                    if (!fail(any, "item (b) fails for a " + std::to_string(l) + "-piece partition of " +
                                       finset_brief(Y)))
                        return Tri::False;
                    // next combination of cuts
                    int i = int(l) - 2;
                    while (i >= 0 && cuts[i] == n - (l - 1) + i) --i;
                    if (i < 0) break;
                    ++cuts[i];
                    for (std::size_t j = i + 1; j + 1 < l; ++j) cuts[j] = cuts[j - 1] + 1;
                }
            }
        }
        // (c) colourings Y -> min Y with a dense homogeneous subset
        {
            auto k = to_u64(Y.min());
            if (!k || *k > 64) throw DomainError("item (c) needs min Z <= 64");
            auto res = colorings(n, unsigned(*k), [&](const std::vector<unsigned>& h) {
                std::vector<Mask> cls(*k, 0);
                for (std::size_t i = 0; i < n; ++i) cls[h[i]] |= Mask(1) << idx[i];
                Tri any = Tri::False;
                for (auto c : cls)
                    if (c && any != Tri::True) any = join_or(any, contains(c, lvl - 1));
                return fail(any, "item (c) fails on " + finset_brief(Y));
            });
            if (verdict == Tri::False) return Tri::False;
            if (res.second == Partial) partial = true;
        }
        // (a) colourings of [Y]^n with a dense Psi-subset
        {
            const RtLikeStatement& g = P.statement;
            std::uint64_t slots = binom(n, g.arity);
            FinSet dom = Y.with_floor(0);
            auto res = colorings(slots, g.colors, [&](const std::vector<unsigned>& tab) {
                ColoringTable f(dom, g.arity, g.colors, tab);
                Tri any = Tri::False;
                for (Mask sub = mask; sub && any != Tri::True; sub = (sub - 1) & mask) {
                    FinSet ys = pick(Z, sub);
                    if (!g.psi(f, ys)) continue;
                    any = join_or(any, dense(sub, lvl - 1));
                }
                return fail(any, "item (a) fails on " + finset_brief(Y));
            });
            if (verdict == Tri::False) return Tri::False;
            if (res.second == Partial) partial = true;
        }
        if (partial && verdict == Tri::True) verdict = Tri::Inconclusive;
        return verdict;
    }
};

}  // namespace

TriResult is_n_dense(const FinSet& z, const DensityParams& p) {
    if (z.empty()) return {Tri::False, "empty set"};
    if (p.m > 0 && z.size() > 20) throw DomainError("density above level 0 is only evaluated on sets of size <= 20");
    if (p.m == 0) {
        bool ok = is_large(z, {1, 1, p.sentence});
        return {ok ? Tri::True : Tri::False, ok ? "omega-large(T)" : "not omega-large(T)"};
    }
    Density d(z, p);
    Mask all = z.size() == 32 ? ~Mask(0) : (Mask(1) << z.size()) - 1;
    Tri r = d.dense(all, p.m);
    if (p.mode.sampled && r == Tri::True) r = Tri::Inconclusive;
    std::string why = r == Tri::False ? d.reason : (r == Tri::True ? "all items hold" : "sampled; no counterexample");
    return {r, why};
}

// ---- EM ----

bool is_em_transitive(const ColoringTable& f, const FinSet& y) {
    std::vector<std::size_t> ix;
    for (auto& v : y.elems()) {
        auto i = f.domain().index_of(v);
        if (!i) throw DomainError("coloring does not cover " + v.str());
        ix.push_back(*i);
    }
    std::size_t n = ix.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                unsigned ab = f.at2(ix[a], ix[b]), bc = f.at2(ix[b], ix[c]);
                if (ab == bc && f.at2(ix[a], ix[c]) != ab) return false;
            }
    return true;
}

ExtractionOutcome em_extract(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T,
                             Budget& budget, const EmOptions& opt) {
    if (f.arity() != 2) throw DomainError("em: coloring must have arity 2");
    if (!x.subset_of(f.domain())) throw DomainError("em: coloring does not cover X");
    ExtractionOutcome out;
    if (x.empty()) {
        out.status = SearchStatus::None;
        out.stage = "input";
        out.reason = "empty set";
        return out;
    }
    if (n == 0) {
        FinSet one({x.min()}, x.floor());
        Certificate c;
        c.witness = x.min();
        out = {SearchStatus::Found, one, c, "base", ""};
        return out;
    }
    if (n - 1 >= opt.block_exp.size()) throw DomainError("em: no block exponent configured for this n");
    LSpec l0 = LSpec::largeness({opt.block_exp[n - 1], 1, T});
    LSpec l1 = LSpec::largeness({opt.transversal_exp, 1, Pi03Sentence::top()});
    auto gs = find_grouping(x, f, l0, l1, T, budget);
    if (gs.status != SearchStatus::Found) {
        out.status = gs.status == SearchStatus::None ? SearchStatus::None : SearchStatus::Inconclusive;
        out.stage = "grouping";
        out.reason = gs.reason;
        return out;
    }
    const auto& blocks = gs.witness->blocks;
    std::vector<FinSet> inner;
    for (auto& b : blocks) {
        auto r = em_extract(b, f, n - 1, T, budget, opt);
        if (r.status != SearchStatus::Found) {
            r.stage = "inner/" + r.stage;
            if (r.status == SearchStatus::None) r.status = SearchStatus::Inconclusive;
            return r;
        }
        inner.push_back(*r.set);
    }

    // block tournament; colour between blocks is constant by the grouping
    std::size_t k = blocks.size();
    auto bc = [&](std::size_t i, std::size_t j) { return f.at_values({blocks[i].min(), blocks[j].min()}); };
    std::vector<std::size_t> chosen;
    bool exhausted = false;
    auto minima_large = [&](const std::vector<std::size_t>& ix) {
        if (ix.empty()) return false;
        std::vector<Nat> v;
        for (auto i : ix) v.push_back(inner[i].min());
        return is_large(FinSet(v, x.floor()), {1, 1, Pi03Sentence::top()});
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        if (!budget.tick()) {
            exhausted = true;
            return false;
        }
        if (minima_large(chosen)) return true;
        for (std::size_t j = from; j < k; ++j) {
            std::vector<std::size_t> hull = chosen;
            for (std::size_t q = j; q < k; ++q) hull.push_back(q);
            if (!minima_large(hull)) return false;
            bool ok = true;
            for (std::size_t a = 0; a < chosen.size() && ok; ++a)
                for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
                    unsigned ab = bc(chosen[a], chosen[b]), bj = bc(chosen[b], j);
                    if (ab == bj && bc(chosen[a], j) != ab) ok = false;
                }
            if (!ok) continue;
            chosen.push_back(j);
            if (dfs(j + 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    };
    if (!dfs(0)) {
        out.status = SearchStatus::Inconclusive;
        out.stage = "selection";
        out.reason = exhausted ? "budget exhausted" : "no transitive block selection with omega-large minima";
        return out;
    }
    std::vector<Nat> u;
    for (auto i : chosen)
        for (auto& v : inner[i].elems()) u.push_back(v);
    FinSet U(u, x.floor());
    if (!is_em_transitive(f, U)) throw std::logic_error("em: union is not transitive");
    auto cert = check_large(U, {n, 1, T});
    if (!cert || !verify_certificate(U, *cert, {n, 1, T})) throw std::logic_error("em: union is not omega^n-large(T)");
    out = {SearchStatus::Found, U, cert, "grouping+selection", ""};
    return out;
}

// ---- ADS ----

SuccessorReading parse_successor_reading(const std::string& s) {
    if (s == "drop-max") return SuccessorReading::DropMax;
    if (s == "apart-point") return SuccessorReading::ApartPoint;
    throw DomainError("unknown successor reading '" + s + "' (drop-max|apart-point)");
}

namespace {

// H is alpha-large(T), alpha = omega^k or omega^k + 1
bool alpha_large(const FinSet& h, std::uint64_t k, bool plus_one, const Pi03Sentence& T, SuccessorReading rd) {
    if (h.empty()) return false;
    if (!plus_one) return is_large(h, {k, 1, T});
    if (h.size() < 2) return false;
    if (rd == SuccessorReading::DropMax) return is_large(h.without(h.max()), {k, 1, T});
    // some omega^k-large(T) interval of H followed by a point apart from it
    if (h.min() < T.floor()) return false;
    LargenessEngine eng(h, T);
    for (std::size_t s = 0; s < h.size(); ++s) {
        auto e = eng.end(k, s);
        if (!e) continue;
        for (std::size_t q = *e + 1; q < h.size(); ++q)
            if (t_apart_values(h[*e], h[q], h[q], T)) return true;
    }
    return false;
}

}  // namespace

std::optional<FinSet> long_interval(const FinSet& x, const ColoringTable& f, const Nat& lo, const Nat& hi, unsigned i,
                                    std::uint64_t k, bool plus_one, const Pi03Sentence& T,
                                    SuccessorReading reading) {
    auto xi = x.index_of(lo), yi = x.index_of(hi);
    if (!xi || !yi || *xi >= *yi) throw DomainError("long: need x < y in X");
    const ColoringTable& F = f;
    auto col = [&](const Nat& a, const Nat& b) { return F.at_values({a, b}); };
    if (col(lo, hi) != i) return std::nullopt;
    // candidates h in (x,y) with f(x,h) = f(h,y) = i
    std::vector<Nat> cand;
    for (std::size_t p = *xi + 1; p < *yi; ++p)
        if (col(lo, x[p]) == i && col(x[p], hi) == i) cand.push_back(x[p]);
    const Nat& top = x.max();
    std::vector<Nat> chosen{lo};
    auto mk = [&](const std::vector<Nat>& v) { return FinSet(v, x.floor()); };
    std::optional<FinSet> found;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        FinSet h = mk(chosen);
        if (alpha_large(h, k, plus_one, T, reading)) {
            // a bigger max only makes apartness harder, so stop either way
            if (t_apart_values(h.max(), hi, top, T)) {
                found = h;
                return true;
            }
            return false;
        }
        for (std::size_t j = from; j < cand.size(); ++j) {
            std::vector<Nat> hull = chosen;
            hull.insert(hull.end(), cand.begin() + j, cand.end());
            if (!alpha_large(mk(hull), k, plus_one, T, reading)) return false;
            bool ok = true;
            for (std::size_t q = 1; q < chosen.size() && ok; ++q) ok = col(chosen[q], cand[j]) == i;
            if (!ok) continue;
            chosen.push_back(cand[j]);
            if (dfs(j + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(0);
    return found;
}

QColoring ads_q_coloring(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T,
                         SuccessorReading reading) {
    if (f.arity() != 2 || f.colors() != 2) throw DomainError("ads: coloring must be a 2-coloring of pairs");
    if (!x.subset_of(f.domain())) throw DomainError("ads: coloring does not cover X");
    if (!is_em_transitive(f, x)) throw DomainError("ads: coloring is not transitive");
    if (n == 0) throw DomainError("ads: n must be at least 1");
    std::size_t N = x.size();
    QColoring out;
    out.q = ColoringTable(x, 2, unsigned(4 * n));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            const Nat &lo = x[a], &hi = x[b];
            unsigned i = f.at_values({lo, hi});
            auto is_long = [&](std::uint64_t k, bool p1) {
                return long_interval(x, f, lo, hi, i, k, p1, T, reading);
            };
            if (!is_long(0, false))
                throw DomainError("ads: [" + lo.str() + "," + hi.str() + "] is not even (" + std::to_string(i) +
                                  ", omega^0)-long(T); Q is undefined there");
            std::uint64_t k = 0;
            bool plus = false;
            // highest level reached; (i, omega^{k+1})-long implies (i, omega^k + 1)-long
            while (true) {
                if (!plus) {
                    if (!is_long(k, true)) break;
                    plus = true;
                } else {
                    if (k + 1 >= n) {
                        if (auto h = is_long(n, false); h && !out.homogeneous) {
                            out.homogeneous = *h;
                            out.homogeneous_color = i;
                        }
                        break;
                    }
                    if (!is_long(k + 1, false)) break;
                    ++k;
                    plus = false;
                }
            }
            out.q.set_index({a, b}, unsigned(4 * k + 2 * i + (plus ? 1 : 0)));
        }
    return out;
}

AdsOutcome ads_extract(const FinSet& x, const ColoringTable& f, std::uint64_t n, const Pi03Sentence& T, Budget& budget,
                       SuccessorReading reading) {
    AdsOutcome out;
    auto q = ads_q_coloring(x, f, n, T, reading);
    auto finish = [&](const FinSet& h, const std::string& route) {
        auto c = check_large(h, {n, 1, T});
        if (!c || !is_homogeneous(f, h)) throw std::logic_error("ads: produced set failed re-validation");
        out.result = {SearchStatus::Found, h, c, route, ""};
    };
    if (q.homogeneous) {
        finish(*q.homogeneous, "long-interval");
    }
    auto ks = ks_homogeneous(x, q.q, {1, 1, Pi03Sentence::top()}, budget);
    if (ks.set) out.q_homogeneous = ks.set;
    if (out.result.status == SearchStatus::Found) return out;
    // the rest of the argument is not constructive at desk scale; search directly
    auto direct = ks_homogeneous(x, f, {n, 1, T}, budget);
    if (direct.set) {
        finish(*direct.set, "direct-search");
        return out;
    }
    out.result.stage = "direct-search";
    if (direct.complete) {
        out.result.status = SearchStatus::None;
        out.result.reason = "no f-homogeneous omega^n-large(T) subset exists";
    } else {
        out.result.reason = "budget exhausted";
    }
    return out;
}

// ---- bounds ----

std::vector<BoundsRow> bounds_table(std::uint64_t n_max, std::uint64_t k) {
    std::vector<BoundsRow> rows;
    Nat em_base = pow_nat(16, 6) + 1;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        BoundsRow r;
        r.n = n;
        Nat N = n;
        r.pigeonhole = 2 * N;
        r.grouping_chain = {2 * N, 4 * N + 1, 16 * N + 5, pow_nat(16, k) * (N + 1)};
        r.em = pow_nat(em_base, n);
        r.ads = 4 * N + 4;
        r.rt22 = pow_nat(em_base, 4 * n + 4);
        if (n > 0) r.lower = 2 * N - 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string bounds_tsv(const std::vector<BoundsRow>& rows) {
    std::string s = "n\tpigeonhole\tgroup_2n\tgroup_4n+1\tgroup_16n+5\tgroup_16^k(n+1)\tem\tads\trt22\tlower\n";
    for (auto& r : rows) {
        s += std::to_string(r.n) + "\t" + r.pigeonhole.str();
        for (auto& g : r.grouping_chain) s += "\t" + g.str();
        s += "\t" + r.em.str() + "\t" + r.ads.str() + "\t" + r.rt22.str() + "\t" + (r.lower ? r.lower->str() : "-") + "\n";
    }
    return s;
}

}  // namespace lt
