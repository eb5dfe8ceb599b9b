// independent reference implementations used by the unit tests and the acceptance run
#pragma once

#include "lt/formula.hpp"
#include "lt/largeness.hpp"

#include <functional>
#include <map>
#include <random>
#include <unordered_map>

namespace oracle {

using lt::Nat;
using u64 = std::uint64_t;

// ---- formulas: direct recursion over the AST with plain integer arithmetic ----

inline Nat term(const lt::TermP& t, std::map<std::string, Nat>& env, const Nat& a) {
    switch (t->kind) {
        case lt::Term::Num: return t->value;
        case lt::Term::ConstA: return a;
        case lt::Term::Var: return env.at(t->name);
        case lt::Term::Add: return term(t->l, env, a) + term(t->r, env, a);
        case lt::Term::Mul: return term(t->l, env, a) * term(t->r, env, a);
        case lt::Term::Pow: {
            Nat b = term(t->l, env, a), r = 1;
            for (Nat i = 0; i < t->value; ++i) r *= b;
            return r;
        }
    }
    return 0;
}

inline bool formula(const lt::FormulaP& f, std::map<std::string, Nat>& env, const Nat& a,
                    const std::vector<bool>& A) {
    using F = lt::Formula;
    switch (f->kind) {
        case F::True: return true;
        case F::False: return false;
        case F::Lt: return term(f->s, env, a) < term(f->t, env, a);
        case F::Le: return term(f->s, env, a) <= term(f->t, env, a);
        case F::Eq: return term(f->s, env, a) == term(f->t, env, a);
        case F::In: {
            Nat p = term(f->s, env, a);
            return p < A.size() && A[std::size_t(p)];
        }
        case F::Not: return !formula(f->p, env, a, A);
        case F::And: return formula(f->p, env, a, A) && formula(f->q, env, a, A);
        case F::Or: return formula(f->p, env, a, A) || formula(f->q, env, a, A);
        case F::Implies: return !formula(f->p, env, a, A) || formula(f->q, env, a, A);
        case F::Forall:
        case F::Exists: {
            Nat b = term(f->t, env, a);
            bool ex = f->kind == F::Exists;
            auto saved = env.find(f->var) == env.end() ? std::optional<Nat>() : std::optional<Nat>(env[f->var]);
            bool res = !ex;
            for (Nat v = 0; v < b; ++v) {
                env[f->var] = v;
                if (formula(f->p, env, a, A) == ex) {
                    res = ex;
                    break;
                }
            }
            if (saved) env[f->var] = *saved;
            else env.erase(f->var);
            return res;
        }
    }
    return false;
}

// literal apartness straight from the quantifier pattern
inline bool apart(u64 max_x, u64 min_y, u64 max_y, const lt::Pi03Sentence& T) {
    u64 d = T.inclusive ? 1 : 0;
    std::vector<bool> bits = T.A.bits();
    for (u64 x = 0; x < max_x + d; ++x) {
        bool found = false;
        for (u64 y = 0; y < min_y + d && !found; ++y) {
            bool all = true;
            for (u64 z = 0; z < max_y + d && all; ++z) {
                std::map<std::string, Nat> env{{"x", x}, {"y", y}, {"z", z}};
                all = formula(T.theta, env, T.a, bits);
            }
            found = all;
        }
        if (!found) return false;
    }
    return true;
}

// ---- TOP largeness over a small universe, sets as bitmasks, blocks arbitrary ordered subsets ----

class TopLarge {
public:
    explicit TopLarge(std::vector<u64> universe) : U(std::move(universe)) {}

    // mask is omega^n * k-large
    bool large(u64 mask, u64 n, u64 k) {
        if (k == 0) return true;
        if (!mask) return false;
        u64 key = (mask << 12) | (n << 8) | std::min<u64>(k, 255);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool r;
        if (k == 1 && n == 0) {
            r = true;
        } else if (k == 1) {
            int lo = __builtin_ctzll(mask);
            r = large(mask & ~(u64(1) << lo), n - 1, U[lo]);
        } else {
            // a first block B, then k-1 blocks strictly above max B
            r = false;
            for (u64 b = mask; b && !r; b = (b - 1) & mask) {
                int hi = 63 - __builtin_clzll(b);
                u64 rest = mask & ~((u64(2) << hi) - 1);
                if (large(b, n, 1) && large(rest, n, k - 1)) r = true;
            }
        }
        memo[key] = r;
        return r;
    }

private:
    std::vector<u64> U;
    std::unordered_map<u64, bool> memo;
};

// ---- largeness(T) for tiny sets: explicit block lists, all pairs checked ----

inline bool t_large(const std::vector<u64>& s, u64 n, u64 k, const lt::Pi03Sentence& T);

inline bool t_blocks(const std::vector<u64>& s, u64 n, u64 k, const lt::Pi03Sentence& T,
                     std::vector<std::vector<u64>>& chosen) {
    if (chosen.size() == k) {
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                if (!apart(chosen[i].back(), chosen[j].front(), chosen[j].back(), T)) return false;
        return true;
    }
    u64 floor_v = chosen.empty() ? 0 : chosen.back().back() + 1;
    std::vector<u64> avail;
    for (u64 v : s)
        if (v >= floor_v) avail.push_back(v);
    for (u64 m = 1; m < (u64(1) << avail.size()); ++m) {
        std::vector<u64> b;
        for (std::size_t i = 0; i < avail.size(); ++i)
            if (m >> i & 1) b.push_back(avail[i]);
        if (!t_large(b, n, 1, T)) continue;
        chosen.push_back(b);
        bool ok = t_blocks(s, n, k, T, chosen);
        chosen.pop_back();
        if (ok) return true;
    }
    return false;
}

inline bool t_large(const std::vector<u64>& s, u64 n, u64 k, const lt::Pi03Sentence& T) {
    if (s.empty()) return false;
    if (s.front() < 3) return false;
    if (k == 1 && n == 0) return true;
    std::vector<std::vector<u64>> chosen;
    if (k == 1) {
        std::vector<u64> rest(s.begin() + 1, s.end());
        return t_blocks(rest, n - 1, s.front(), T, chosen);
    }
    return t_blocks(s, n, k, T, chosen);
}

// ---- homogeneity by direct tuple enumeration ----

inline bool homogeneous(const lt::ColoringTable& f, const std::vector<std::size_t>& idx) {
    unsigned n = f.arity();
    if (idx.size() < n) return true;
    std::optional<unsigned> col;
    std::vector<std::size_t> t(n);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t d) {
        if (d == n) {
            std::vector<std::size_t> tup;
            for (auto i : t) tup.push_back(idx[i]);
            unsigned c = f.at_index(tup);
            if (col && *col != c) return false;
            col = c;
            return true;
        }
        for (std::size_t i = from; i < idx.size(); ++i) {
            t[d] = i;
            if (!rec(i + 1, d + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

inline lt::ColoringTable random_coloring(const lt::FinSet& dom, unsigned arity, unsigned colors, std::mt19937_64& rng) {
    std::vector<unsigned> tab(lt::binom(dom.size(), arity));
    std::uniform_int_distribution<unsigned> d(0, colors - 1);
    for (auto& c : tab) c = d(rng);
    return lt::ColoringTable(dom, arity, colors, tab);
}

inline std::vector<u64> values(const lt::FinSet& s) {
    std::vector<u64> v;
    for (auto& e : s.elems()) v.push_back(*lt::to_u64(e));
    return v;
}

// ---- random bounded formulas over x, y, z ----

struct FormulaGen {
    std::mt19937_64& rng;
    int pick(int n) { return int(std::uniform_int_distribution<int>(0, n - 1)(rng)); }

    lt::TermP term(int depth, const std::vector<std::string>& vars) {
        int c = depth <= 0 ? pick(3) : pick(6);
        switch (c) {
            case 0: return lt::num(pick(5));
            case 1: return lt::var(vars[pick(int(vars.size()))]);
            case 2: return lt::const_a();
            case 3: return lt::add(term(depth - 1, vars), term(depth - 1, vars));
            case 4: return lt::mul(term(depth - 1, vars), term(depth - 1, vars));
            default: return lt::power(term(depth - 1, vars), pick(3));
        }
    }
    lt::FormulaP atom(const std::vector<std::string>& vars) {
        switch (pick(5)) {
            case 0: return lt::f_lt(term(1, vars), term(1, vars));
            case 1: return lt::f_le(term(1, vars), term(1, vars));
            case 2: return lt::f_eq(term(1, vars), term(1, vars));
            case 3: return lt::f_in(term(1, vars));
            default: return pick(2) ? lt::f_true() : lt::f_false();
        }
    }
    lt::FormulaP formula(int depth, std::vector<std::string> vars) {
        if (depth <= 0) return atom(vars);
        switch (pick(8)) {
            case 0: return lt::f_not(formula(depth - 1, vars));
            case 1: return lt::f_and(formula(depth - 1, vars), formula(depth - 1, vars));
            case 2: return lt::f_or(formula(depth - 1, vars), formula(depth - 1, vars));
            case 3: return lt::f_implies(formula(depth - 1, vars), formula(depth - 1, vars));
            case 4:
            case 5: {
                std::string v = vars.size() < 4 ? "u" : vars.size() < 5 ? "v" : "w";
                auto bound = term(0, vars);
                auto nv = vars;
                nv.push_back(v);
                auto body = formula(depth - 1, nv);
                return pick(2) ? lt::f_forall(v, bound, body) : lt::f_exists(v, bound, body);
            }
            default: return atom(vars);
        }
    }
    // AST size at most max_size
    lt::FormulaP small(std::size_t max_size) {
        while (true) {
            auto f = formula(pick(4), {"x", "y", "z"});
            if (lt::ast_size(f) <= max_size) return f;
        }
    }
};

}  // namespace oracle
