#include "lt/formula.hpp"

#include <cctype>
#include <functional>

namespace lt {

TermP num(const Nat& v) { return std::make_shared<Term>(Term{Term::Num, v, {}, nullptr, nullptr}); }
TermP var(const std::string& n) { return std::make_shared<Term>(Term{Term::Var, 0, n, nullptr, nullptr}); }
TermP const_a() { return std::make_shared<Term>(Term{Term::ConstA, 0, {}, nullptr, nullptr}); }
TermP add(TermP a, TermP b) { return std::make_shared<Term>(Term{Term::Add, 0, {}, a, b}); }
TermP mul(TermP a, TermP b) { return std::make_shared<Term>(Term{Term::Mul, 0, {}, a, b}); }
TermP power(TermP a, const Nat& e) { return std::make_shared<Term>(Term{Term::Pow, e, {}, a, nullptr}); }

static FormulaP mk(Formula::Kind k, TermP s = nullptr, TermP t = nullptr, FormulaP p = nullptr,
                   FormulaP q = nullptr, std::string v = {}) {
    return std::make_shared<Formula>(Formula{k, s, t, p, q, std::move(v)});
}
FormulaP f_true() { return mk(Formula::True); }
FormulaP f_false() { return mk(Formula::False); }
FormulaP f_lt(TermP a, TermP b) { return mk(Formula::Lt, a, b); }
FormulaP f_le(TermP a, TermP b) { return mk(Formula::Le, a, b); }
FormulaP f_eq(TermP a, TermP b) { return mk(Formula::Eq, a, b); }
FormulaP f_in(TermP a) { return mk(Formula::In, a); }
FormulaP f_not(FormulaP p) { return mk(Formula::Not, nullptr, nullptr, p); }
FormulaP f_and(FormulaP p, FormulaP q) { return mk(Formula::And, nullptr, nullptr, p, q); }
FormulaP f_or(FormulaP p, FormulaP q) { return mk(Formula::Or, nullptr, nullptr, p, q); }
FormulaP f_implies(FormulaP p, FormulaP q) { return mk(Formula::Implies, nullptr, nullptr, p, q); }
FormulaP f_forall(const std::string& v, TermP b, FormulaP body) {
    return mk(Formula::Forall, nullptr, b, body, nullptr, v);
}
FormulaP f_exists(const std::string& v, TermP b, FormulaP body) {
    return mk(Formula::Exists, nullptr, b, body, nullptr, v);
}

// ---- lexer ----

namespace {

struct Tok {
    enum Kind { Ident, Numeral, Sym, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c > 127) throw ParseError("non-ASCII character", i);
        std::size_t st = i;
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_' || s[i] == '\'')) ++i;
            out.push_back({Tok::Ident, s.substr(st, i - st), st});
        } else if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            out.push_back({Tok::Numeral, s.substr(st, i - st), st});
        } else if (s.compare(i, 2, "<=") == 0 || s.compare(i, 2, "->") == 0) {
            out.push_back({Tok::Sym, s.substr(i, 2), st});
            i += 2;
        } else if (std::string("<=+*^().").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), st});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + char(c) + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string> kKeywords = {"forall", "exists", "and", "or", "not", "in", "true", "false"};

struct Parser {
    std::vector<Tok> toks;
    std::size_t i = 0;
    std::vector<std::string> scope;  // bound variables, innermost last
    std::set<std::string> free;

    const Tok& peek() const { return toks[i]; }
    bool is(const std::string& t) const {
        return (peek().kind == Tok::Sym || peek().kind == Tok::Ident) && peek().text == t;
    }
    void expect(const std::string& t) {
        if (!is(t)) throw ParseError("expected '" + t + "'" + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"), peek().pos);
        ++i;
    }
    bool known(const std::string& v) const {
        for (auto& s : scope)
            if (s == v) return true;
        return free.count(v) > 0;
    }

    std::string variable_name() {
        const Tok& t = peek();
        if (t.kind != Tok::Ident || kKeywords.count(t.text) || t.text == "a" || t.text == "A")
            throw ParseError("expected a variable name", t.pos);
        ++i;
        return t.text;
    }

    TermP primary() {
        const Tok& t = peek();
        if (t.kind == Tok::Numeral) {
            ++i;
            return num(Nat(t.text));
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "a") {
                ++i;
                return const_a();
            }
            if (t.text == "A" || kKeywords.count(t.text)) throw ParseError("unexpected '" + t.text + "' in term", t.pos);
            if (!known(t.text)) throw ParseError("unknown identifier '" + t.text + "'", t.pos);
            ++i;
            return var(t.text);
        }
        if (is("(")) {
            ++i;
            TermP r = term();
            expect(")");
            return r;
        }
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
    TermP pow_term() {
        TermP b = primary();
        while (is("^")) {
            ++i;
            if (peek().kind != Tok::Numeral) throw ParseError("exponent must be a numeral", peek().pos);
            b = power(b, Nat(peek().text));
            ++i;
        }
        return b;
    }
    TermP prod() {
        TermP l = pow_term();
        while (is("*")) {
            ++i;
            l = mul(l, pow_term());
        }
        return l;
    }
    TermP term() {
        TermP l = prod();
        while (is("+")) {
            ++i;
            l = add(l, prod());
        }
        return l;
    }

    FormulaP atom() {
        if (is("true")) {
            ++i;
            return f_true();
        }
        if (is("false")) {
            ++i;
            return f_false();
        }
        if (is("(")) {
            // a parenthesised formula, or a term in parentheses starting an atom
            std::size_t save = i;
            auto save_scope = scope;
            try {
                ++i;
                FormulaP f = formula();
                expect(")");
                if (!(is("<") || is("<=") || is("=") || is("+") || is("*") || is("^") || is("in"))) return f;
            } catch (const ParseError&) {
            }
            i = save;
            scope = save_scope;
        }
        TermP l = term();
        if (is("<")) {
            ++i;
            return f_lt(l, term());
        }
        if (is("<=")) {
            ++i;
            return f_le(l, term());
        }
        if (is("=")) {
            ++i;
            return f_eq(l, term());
        }
        if (is("in")) {
            ++i;
            if (!is("A")) throw ParseError("expected 'A' after 'in'", peek().pos);
            ++i;
            return f_in(l);
        }
        throw ParseError("expected a comparison ('<', '<=', '=') or 'in A'", peek().pos);
    }

    FormulaP quantified() {
        bool fa = is("forall");
        ++i;
        std::size_t vpos = peek().pos;
        std::string v = variable_name();
        if (!is("<")) throw ParseError("quantifier over '" + v + "' needs a bound '<' term", vpos);
        ++i;
        TermP b = term();
        expect(".");
        scope.push_back(v);
        FormulaP body = formula();
        scope.pop_back();
        return fa ? f_forall(v, b, body) : f_exists(v, b, body);
    }

    FormulaP unary() {
        if (is("not")) {
            ++i;
            return f_not(unary());
        }
        if (is("forall") || is("exists")) return quantified();
        return atom();
    }
    FormulaP conj() {
        FormulaP l = unary();
        while (is("and")) {
            ++i;
            l = f_and(l, unary());
        }
        return l;
    }
    FormulaP disj() {
        FormulaP l = conj();
        while (is("or")) {
            ++i;
            l = f_or(l, conj());
        }
        return l;
    }
    FormulaP formula() {
        FormulaP l = disj();
        if (is("->")) {
            ++i;
            return f_implies(l, formula());
        }
        return l;
    }
};

}  // namespace

FormulaP parse_formula(const std::string& text, const std::set<std::string>& free_vars) {
    Parser p{lex(text), 0, {}, free_vars};
    FormulaP f = p.formula();
    if (p.peek().kind != Tok::End) throw ParseError("trailing input '" + p.peek().text + "'", p.peek().pos);
    return f;
}

TermP parse_term(const std::string& text, const std::set<std::string>& free_vars) {
    Parser p{lex(text), 0, {}, free_vars};
    TermP t = p.term();
    if (p.peek().kind != Tok::End) throw ParseError("trailing input '" + p.peek().text + "'", p.peek().pos);
    return t;
}

// ---- printing ----

std::string print(const TermP& t) {
    switch (t->kind) {
        case Term::Num: return t->value.str();
        case Term::ConstA: return "a";
        case Term::Var: return t->name;
        case Term::Add: return "(" + print(t->l) + " + " + print(t->r) + ")";
        case Term::Mul: return "(" + print(t->l) + " * " + print(t->r) + ")";
        case Term::Pow: return "(" + print(t->l) + " ^ " + t->value.str() + ")";
    }
    return "?";
}

std::string print(const FormulaP& f) {
    switch (f->kind) {
        case Formula::True: return "true";
        case Formula::False: return "false";
        case Formula::Lt: return print(f->s) + " < " + print(f->t);
        case Formula::Le: return print(f->s) + " <= " + print(f->t);
        case Formula::Eq: return print(f->s) + " = " + print(f->t);
        case Formula::In: return print(f->s) + " in A";
        case Formula::Not: return "not (" + print(f->p) + ")";
        case Formula::And: return "(" + print(f->p) + " and " + print(f->q) + ")";
        case Formula::Or: return "(" + print(f->p) + " or " + print(f->q) + ")";
        case Formula::Implies: return "(" + print(f->p) + " -> " + print(f->q) + ")";
        case Formula::Forall:
        case Formula::Exists:
            return std::string("(") + (f->kind == Formula::Forall ? "forall " : "exists ") + f->var + " < " +
                   print(f->t) + " . " + print(f->p) + ")";
    }
    return "?";
}

bool equal(const TermP& a, const TermP& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Num: return a->value == b->value;
        case Term::ConstA: return true;
        case Term::Var: return a->name == b->name;
        case Term::Pow: return a->value == b->value && equal(a->l, b->l);
        default: return equal(a->l, b->l) && equal(a->r, b->r);
    }
}

bool equal(const FormulaP& a, const FormulaP& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->var != b->var) return false;
    return equal(a->s, b->s) && equal(a->t, b->t) && equal(a->p, b->p) && equal(a->q, b->q);
}

static void term_vars(const TermP& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == Term::Var) out.insert(t->name);
    term_vars(t->l, out);
    term_vars(t->r, out);
}

std::set<std::string> free_vars(const FormulaP& f) {
    std::set<std::string> out;
    if (!f) return out;
    term_vars(f->s, out);
    term_vars(f->t, out);
    if (f->kind == Formula::Forall || f->kind == Formula::Exists) {
        auto inner = free_vars(f->p);
        inner.erase(f->var);
        out.insert(inner.begin(), inner.end());
    } else {
        auto p = free_vars(f->p), q = free_vars(f->q);
        out.insert(p.begin(), p.end());
        out.insert(q.begin(), q.end());
    }
    return out;
}

std::size_t ast_size(const TermP& t) { return t ? 1 + ast_size(t->l) + ast_size(t->r) : 0; }
std::size_t ast_size(const FormulaP& f) {
    return f ? 1 + ast_size(f->s) + ast_size(f->t) + ast_size(f->p) + ast_size(f->q) : 0;
}

static TermP subst_term(const TermP& t, const std::map<std::string, std::string>& ren) {
    if (!t) return t;
    switch (t->kind) {
        case Term::Var: {
            auto it = ren.find(t->name);
            return it == ren.end() ? t : var(it->second);
        }
        case Term::Add: return add(subst_term(t->l, ren), subst_term(t->r, ren));
        case Term::Mul: return mul(subst_term(t->l, ren), subst_term(t->r, ren));
        case Term::Pow: return power(subst_term(t->l, ren), t->value);
        default: return t;
    }
}

FormulaP substitute(const FormulaP& f, const std::map<std::string, std::string>& ren) {
    if (!f) return f;
    switch (f->kind) {
        case Formula::Forall:
        case Formula::Exists: {
            auto inner = ren;
            inner.erase(f->var);
            for (auto& [from, to] : inner)
                if (to == f->var) throw DomainError("substitution would capture variable " + to);
            return mk(f->kind, nullptr, subst_term(f->t, ren), substitute(f->p, inner), nullptr, f->var);
        }
        default:
            return mk(f->kind, subst_term(f->s, ren), subst_term(f->t, ren), substitute(f->p, ren),
                      substitute(f->q, ren), f->var);
    }
}

// ---- evaluation ----

SecondOrderParam SecondOrderParam::from_string(const std::string& s) {
    std::vector<bool> b;
    for (char c : s) {
        if (c == '0' || c == '1')
            b.push_back(c == '1');
        else if (!std::isspace((unsigned char)c))
            throw DomainError("second-order parameter must be a binary string");
    }
    return SecondOrderParam(std::move(b));
}

bool SecondOrderParam::member(const Nat& pos) const {
    if (pos >= bits_.size()) return false;
    return bits_[static_cast<std::size_t>(pos)];
}

std::string SecondOrderParam::to_string() const {
    std::string s;
    for (bool b : bits_) s += b ? '1' : '0';
    return s;
}

Nat eval_term(const TermP& t, const Env& env, const Nat& a) {
    switch (t->kind) {
        case Term::Num: return t->value;
        case Term::ConstA: return a;
        case Term::Var: {
            auto it = env.find(t->name);
            if (it == env.end()) throw DomainError("variable '" + t->name + "' is not assigned");
            return it->second;
        }
        case Term::Add: return eval_term(t->l, env, a) + eval_term(t->r, env, a);
        case Term::Mul: return eval_term(t->l, env, a) * eval_term(t->r, env, a);
        case Term::Pow: {
            auto e = to_u64(t->value);
            if (!e || *e > 100000) throw DomainError("exponent too large to evaluate");
            return pow_nat(eval_term(t->l, env, a), *e);
        }
    }
    return 0;
}

namespace {

constexpr std::uint64_t kMaxQuantifierRange = 1ull << 40;

bool ev(const FormulaP& f, Env& env, const Nat& a, const SecondOrderParam& A, EvalStats* st) {
    switch (f->kind) {
        case Formula::True: return true;
        case Formula::False: return false;
        case Formula::Lt: return eval_term(f->s, env, a) < eval_term(f->t, env, a);
        case Formula::Le: return eval_term(f->s, env, a) <= eval_term(f->t, env, a);
        case Formula::Eq: return eval_term(f->s, env, a) == eval_term(f->t, env, a);
        case Formula::In: {
            Nat v = eval_term(f->s, env, a);
            if (st && A.exceeds(v)) ++st->beyond_length;
            return A.member(v);
        }
        case Formula::Not: return !ev(f->p, env, a, A, st);
        case Formula::And: return ev(f->p, env, a, A, st) && ev(f->q, env, a, A, st);
        case Formula::Or: return ev(f->p, env, a, A, st) || ev(f->q, env, a, A, st);
        case Formula::Implies: return !ev(f->p, env, a, A, st) || ev(f->q, env, a, A, st);
        case Formula::Forall:
        case Formula::Exists: {
            Nat bound = eval_term(f->t, env, a);
            auto b = to_u64(bound);
            if (!b || *b > kMaxQuantifierRange) throw DomainError("quantifier bound too large to enumerate");
            bool univ = f->kind == Formula::Forall;
            // shadowing: save any outer binding of the same name
            auto it = env.find(f->var);
            std::optional<Nat> saved;
            if (it != env.end()) saved = it->second;
            bool result = univ;
            for (std::uint64_t v = 0; v < *b; ++v) {
                env[f->var] = v;
                bool r = ev(f->p, env, a, A, st);
                if (univ && !r) {
                    result = false;
                    break;
                }
                if (!univ && r) {
                    result = true;
                    break;
                }
            }
            if (saved)
                env[f->var] = *saved;
            else
                env.erase(f->var);
            return result;
        }
    }
    return false;
}

}  // namespace

bool eval(const FormulaP& f, const Env& env, const Nat& a, const SecondOrderParam& A, EvalStats* st) {
    for (auto& v : free_vars(f))
        if (!env.count(v)) throw DomainError("free variable '" + v + "' is not assigned");
    Env e = env;
    return ev(f, e, a, A, st);
}

// ---- sentences ----

Pi03Sentence Pi03Sentence::top() {
    Pi03Sentence s;
    s.theta = f_true();
    s.label = "top";
    return s;
}

Pi03Sentence Pi03Sentence::from_text(const std::string& theta, const Nat& a, SecondOrderParam A) {
    Pi03Sentence s;
    s.theta = parse_formula(theta, {"x", "y", "z"});
    s.a = a;
    s.A = std::move(A);
    s.label = theta;
    return s;
}

bool Pi03Sentence::is_top() const { return theta && theta->kind == Formula::True; }

Nat Pi03Sentence::floor() const { return a > 3 ? a : Nat(3); }

bool Pi03Sentence::holds(const Nat& x, const Nat& y, const Nat& z) const {
    if (is_top()) return true;
    Env e{{"x", x}, {"y", y}, {"z", z}};
    Env scratch = e;
    return ev(theta, scratch, a, A, nullptr);
}

// ---- RT-like statements ----

Psi0Kind parse_psi0(const std::string& s) {
    std::string u;
    for (char c : s) u += (c == '-' ? '_' : (char)std::toupper((unsigned char)c));
    if (u == "HOMOGENEOUS") return Psi0Kind::HOMOGENEOUS;
    if (u == "TRANSITIVE") return Psi0Kind::TRANSITIVE;
    if (u == "MONOTONE_ASCENDING" || u == "MONOTONE_ASC") return Psi0Kind::MONOTONE_ASC;
    if (u == "MONOTONE_DESCENDING" || u == "MONOTONE_DESC") return Psi0Kind::MONOTONE_DESC;
    if (u == "TRUE") return Psi0Kind::TRUE_;
    throw DomainError("unknown built-in predicate: " + s);
}

const char* to_string(Psi0Kind k) {
    switch (k) {
        case Psi0Kind::HOMOGENEOUS: return "HOMOGENEOUS";
        case Psi0Kind::TRANSITIVE: return "TRANSITIVE";
        case Psi0Kind::MONOTONE_ASC: return "MONOTONE-ASCENDING";
        case Psi0Kind::MONOTONE_DESC: return "MONOTONE-DESCENDING";
        case Psi0Kind::TRUE_: return "TRUE";
        default: return "FORMULA";
    }
}

RtLikeStatement RtLikeStatement::builtin(unsigned n, unsigned k, Psi0Kind kind) {
    if (kind == Psi0Kind::FORMULA) throw DomainError("use RtLikeStatement::formula");
    if (kind == Psi0Kind::TRANSITIVE && n != 2) throw DomainError("TRANSITIVE needs arity 2");
    RtLikeStatement s;
    s.arity = n;
    s.colors = k;
    s.kind = kind;
    return s;
}

RtLikeStatement RtLikeStatement::formula(unsigned n, unsigned k, const std::string& text) {
    RtLikeStatement s;
    s.arity = n;
    s.colors = k;
    s.kind = Psi0Kind::FORMULA;
    s.psi0_formula = parse_formula(text, {});
    return s;
}

static bool transitive_table(const ColoringTable& f) {
    std::size_t N = f.domain().size();
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = x + 1; y < N; ++y) {
            unsigned c = f.at2(x, y);
            for (std::size_t z = y + 1; z < N; ++z)
                if (f.at2(y, z) == c && f.at2(x, z) != c) return false;
        }
    return true;
}

bool RtLikeStatement::psi0(const ColoringTable& g) const {
    const auto& t = g.table();
    switch (kind) {
        case Psi0Kind::TRUE_: return true;
        case Psi0Kind::HOMOGENEOUS:
            for (auto c : t)
                if (c != t.front()) return false;
            return true;
        case Psi0Kind::TRANSITIVE: return transitive_table(g);
        case Psi0Kind::MONOTONE_ASC:
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i] < t[i - 1]) return false;
            return true;
        case Psi0Kind::MONOTONE_DESC:
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i] > t[i - 1]) return false;
            return true;
        case Psi0Kind::FORMULA: {
            std::vector<bool> bits;
            for (auto c : t) bits.push_back(c != 0);
            return eval(psi0_formula, {}, Nat(g.domain().size()), SecondOrderParam(bits));
        }
    }
    return false;
}

bool RtLikeStatement::psi(const ColoringTable& f, const FinSet& y) const {
    if (hereditary()) return psi0(f.restrict_to(y));
    if (y.size() > 16) throw DomainError("formula predicates are checked on every subset; set too large");
    std::size_t m = y.size();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Nat> g;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) g.push_back(y[i]);
        if (!psi0(f.restrict_to(FinSet(g, 0)))) return false;
    }
    return true;
}

bool is_homogeneous(const ColoringTable& f, const FinSet& y) {
    return RtLikeStatement::builtin(f.arity(), f.colors(), Psi0Kind::HOMOGENEOUS).psi0(f.restrict_to(y));
}

bool is_transitive(const ColoringTable& f, const FinSet& y) { return transitive_table(f.restrict_to(y)); }

// ---- quantifier prefixes ----

bool QuantHeader::operator==(const QuantHeader& o) const {
    return forall == o.forall && var == o.var && equal(bound, o.bound);
}

PrefixSentence parse_prefixed(const std::string& text) {
    auto toks = lex(text);
    std::size_t i = 0;
    std::vector<std::pair<QuantHeader, std::size_t>> headers;  // header, token index after '.'
    std::set<std::string> seen;
    std::size_t last_unbounded_end = std::string::npos;
    // scan quantifier headers; bound terms may mention earlier prefix variables
    while (toks[i].kind == Tok::Ident && (toks[i].text == "forall" || toks[i].text == "exists")) {
        QuantHeader h;
        h.forall = toks[i].text == "forall";
        ++i;
        if (toks[i].kind != Tok::Ident) throw ParseError("expected a variable", toks[i].pos);
        h.var = toks[i].text;
        ++i;
        if (toks[i].kind == Tok::Sym && toks[i].text == "<") {
            // bounded header: find the '.' ending the bound term
            std::size_t j = i + 1;
            int depth = 0;
            while (toks[j].kind != Tok::End && !(depth == 0 && toks[j].kind == Tok::Sym && toks[j].text == ".")) {
                if (toks[j].text == "(") ++depth;
                if (toks[j].text == ")") --depth;
                ++j;
            }
            if (toks[j].kind == Tok::End) throw ParseError("expected '.' after quantifier bound", toks[j].pos);
            std::string bt = text.substr(toks[i + 1].pos, toks[j].pos - toks[i + 1].pos);
            std::set<std::string> fv = seen;
            fv.erase("A");
            fv.erase("a");
            h.bound = parse_term(bt, fv);
            i = j + 1;
        } else if (toks[i].kind == Tok::Sym && toks[i].text == ".") {
            ++i;
            last_unbounded_end = headers.size() + 1;
        } else {
            throw ParseError("expected '.' or '<' after quantified variable", toks[i].pos);
        }
        seen.insert(h.var);
        headers.push_back({h, i});
    }
    if (last_unbounded_end == std::string::npos) throw DomainError("no unbounded quantifier prefix found");
    PrefixSentence s;
    std::set<std::string> fv;
    for (std::size_t k = 0; k < last_unbounded_end; ++k) {
        s.prefix.push_back(headers[k].first);
        fv.insert(headers[k].first.var);
    }
    fv.erase("A");
    fv.erase("a");
    std::size_t core_tok = headers[last_unbounded_end - 1].second;
    s.core = parse_formula(text.substr(toks[core_tok].pos), fv);
    return s;
}

std::string print(const PrefixSentence& s) {
    std::string r;
    for (auto& h : s.prefix) {
        r += h.forall ? "forall " : "exists ";
        r += h.var;
        if (h.bound) r += " < " + print(h.bound);
        r += " . ";
    }
    return r + print(s.core);
}

PrefixSentence weakly_pi04_transform(const PrefixSentence& s) {
    const auto& p = s.prefix;
    std::size_t k = 0;
    auto bad = [](const std::string& why) { return DomainError("not of the form [forall A][forall a] exists x forall y exists z theta: " + why); };
    if (k < p.size() && p[k].forall && p[k].var == "A" && !p[k].bound) ++k;
    if (k < p.size() && p[k].forall && p[k].var == "a" && !p[k].bound) ++k;
    if (p.size() - k != 3) throw bad("expected exactly three first-order quantifiers after the parameters");
    const auto &qx = p[k], &qy = p[k + 1], &qz = p[k + 2];
    if (qx.bound || qy.bound || qz.bound) throw bad("prefix quantifiers must be unbounded");
    if (qx.forall || !qy.forall || qz.forall) throw bad("quantifier pattern must be exists-forall-exists");
    if (qx.var == "A" || qx.var == "a" || qy.var == "A" || qy.var == "a" || qz.var == "A" || qz.var == "a")
        throw bad("parameters must come first");

    std::set<std::string> used;
    std::function<void(const FormulaP&)> collect = [&](const FormulaP& f) {
        if (!f) return;
        if (!f->var.empty()) used.insert(f->var);
        term_vars(f->s, used);
        term_vars(f->t, used);
        collect(f->p);
        collect(f->q);
    };
    collect(s.core);
    for (auto& h : p) used.insert(h.var);
    auto fresh = [&](std::string v) {
        do v += "'";
        while (used.count(v));
        used.insert(v);
        return v;
    };
    std::string xp = fresh(qx.var), yp = fresh(qy.var);

    PrefixSentence out;
    out.prefix.assign(p.begin(), p.begin() + k);
    out.prefix.push_back(qx);
    out.prefix.push_back(qy);
    out.prefix.push_back(QuantHeader{false, xp, var(qx.var)});
    out.prefix.push_back(QuantHeader{true, yp, var(qy.var)});
    out.prefix.push_back(qz);
    out.core = substitute(s.core, {{qx.var, xp}, {qy.var, yp}});
    return out;
}

}  // namespace lt
