#pragma once

#include "lt/core.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lt {

struct Term;
struct Formula;
using TermP = std::shared_ptr<const Term>;
using FormulaP = std::shared_ptr<const Formula>;

struct Term {
    enum Kind { Num, ConstA, Var, Add, Mul, Pow } kind;
    Nat value;         // numeral, or exponent for Pow
    std::string name;  // Var
    TermP l, r;
};

struct Formula {
    enum Kind { True, False, Lt, Le, Eq, In, Not, And, Or, Implies, Forall, Exists } kind;
    TermP s, t;        // atoms (In uses s only); quantifier bound in t
    FormulaP p, q;     // connectives; quantifier body in p
    std::string var;   // quantifier variable
};

struct ParseError : DomainError {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : DomainError("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}
};

// builders
TermP num(const Nat& v);
TermP var(const std::string& name);
TermP const_a();
TermP add(TermP a, TermP b);
TermP mul(TermP a, TermP b);
TermP power(TermP a, const Nat& e);
FormulaP f_true();
FormulaP f_false();
FormulaP f_lt(TermP a, TermP b);
FormulaP f_le(TermP a, TermP b);
FormulaP f_eq(TermP a, TermP b);
FormulaP f_in(TermP a);
FormulaP f_not(FormulaP p);
FormulaP f_and(FormulaP p, FormulaP q);
FormulaP f_or(FormulaP p, FormulaP q);
FormulaP f_implies(FormulaP p, FormulaP q);
FormulaP f_forall(const std::string& v, TermP bound, FormulaP body);
FormulaP f_exists(const std::string& v, TermP bound, FormulaP body);

// free identifiers must come from `free_vars`; 'a' and 'A' are reserved
FormulaP parse_formula(const std::string& text, const std::set<std::string>& free_vars = {"x", "y", "z"});
TermP parse_term(const std::string& text, const std::set<std::string>& free_vars = {"x", "y", "z"});
std::string print(const FormulaP& f);
std::string print(const TermP& t);

bool equal(const TermP& a, const TermP& b);
bool equal(const FormulaP& a, const FormulaP& b);
std::set<std::string> free_vars(const FormulaP& f);
std::size_t ast_size(const FormulaP& f);
std::size_t ast_size(const TermP& t);

// replaces free occurrences of variables
FormulaP substitute(const FormulaP& f, const std::map<std::string, std::string>& ren);

class SecondOrderParam {
public:
    SecondOrderParam() = default;
    explicit SecondOrderParam(std::vector<bool> bits) : bits_(std::move(bits)) {}
    static SecondOrderParam from_string(const std::string& bits);
    std::size_t length() const { return bits_.size(); }
    // positions at or beyond the coded length read as false
    bool member(const Nat& pos) const;
    bool exceeds(const Nat& pos) const { return pos >= bits_.size(); }
    const std::vector<bool>& bits() const { return bits_; }
    std::string to_string() const;

private:
    std::vector<bool> bits_;
};

using Env = std::map<std::string, Nat>;

struct EvalStats {
    std::uint64_t beyond_length = 0;  // membership queries past the coded length
};

Nat eval_term(const TermP& t, const Env& env, const Nat& a);
bool eval(const FormulaP& f, const Env& env, const Nat& a, const SecondOrderParam& A, EvalStats* st = nullptr);

// forall x exists y forall z theta(x,y,z)
struct Pi03Sentence {
    FormulaP theta;
    Nat a = 0;
    SecondOrderParam A;
    // when set, apartness quantifiers run over x <= max X, y <= min Y, z <= max Y
    bool inclusive = false;
    std::string label;

    static Pi03Sentence top();
    static Pi03Sentence from_text(const std::string& theta, const Nat& a = 0, SecondOrderParam A = {});
    bool is_top() const;
    Nat floor() const;  // max(3, a)
    bool holds(const Nat& x, const Nat& y, const Nat& z) const;
};

enum class Psi0Kind { HOMOGENEOUS, TRANSITIVE, MONOTONE_ASC, MONOTONE_DESC, TRUE_, FORMULA };
Psi0Kind parse_psi0(const std::string& s);
const char* to_string(Psi0Kind k);

struct RtLikeStatement {
    unsigned arity = 2;
    unsigned colors = 2;
    Psi0Kind kind = Psi0Kind::HOMOGENEOUS;
    FormulaP psi0_formula;  // read with a = |G| and A = the table (color != 0) in lexicographic tuple order

    static RtLikeStatement builtin(unsigned n, unsigned k, Psi0Kind kind);
    static RtLikeStatement formula(unsigned n, unsigned k, const std::string& text);

    bool psi0(const ColoringTable& fG) const;
    // built-ins are closed under taking sub-colorings, so checking f_Y suffices
    bool hereditary() const { return kind != Psi0Kind::FORMULA; }
    // Psi(f,Y): every G subset of Y satisfies psi0(f_G)
    bool psi(const ColoringTable& f, const FinSet& y) const;
};

bool is_homogeneous(const ColoringTable& f, const FinSet& y);
bool is_transitive(const ColoringTable& f, const FinSet& y);

// quantifier-prefix sentences for the weakly forall-Pi04 transform
struct QuantHeader {
    bool forall = true;
    std::string var;
    TermP bound;  // null when unbounded
    bool operator==(const QuantHeader& o) const;
};

struct PrefixSentence {
    std::vector<QuantHeader> prefix;
    FormulaP core;
};

// the prefix is the run of headers up to and including the last unbounded one
PrefixSentence parse_prefixed(const std::string& text);
std::string print(const PrefixSentence& s);
PrefixSentence weakly_pi04_transform(const PrefixSentence& s);

}  // namespace lt
