#include "../oracles.hpp"

#include <doctest.h>

using namespace lt;

TEST_CASE("parsing") {
    auto f = parse_formula("forall z < y . x < z");
    CHECK(f->kind == Formula::Forall);
    CHECK(f->var == "z");
    CHECK(free_vars(f) == std::set<std::string>{"x", "y"});
    CHECK_THROWS_AS(parse_formula("forall z . x < z"), ParseError);
    CHECK_THROWS_AS(parse_formula("x <"), ParseError);
    CHECK_THROWS_AS(parse_formula("q < 1"), ParseError);

    auto g = parse_formula("exists y < x + 1 . y = x", {"x"});
    for (unsigned x = 0; x < 10; ++x) CHECK(eval(g, {{"x", x}}, 0, {}));
}

TEST_CASE("evaluation examples") {
    CHECK(eval(f_true(), {}, 0, {}));
    CHECK(eval(parse_formula("exists y < 1 . 0 = 0", {}), {}, 0, {}));
    auto A = SecondOrderParam::from_string("010000");
    CHECK_FALSE(eval(parse_formula("5 in A", {}), {}, 0, A));
    CHECK(eval(parse_formula("1 in A", {}), {}, 0, A));
    EvalStats st;
    CHECK_FALSE(eval(parse_formula("9 in A", {}), {}, 0, A, &st));
    CHECK(st.beyond_length == 1);
    CHECK(eval(parse_formula("a * a = 9", {}), {}, 3, {}));
    CHECK(eval(parse_formula("x ^ 3 = 27", {"x"}), {{"x", 3}}, 0, {}));
}

TEST_CASE("printing round trips and agrees with the naive evaluator") {
    std::mt19937_64 rng(7);
    oracle::FormulaGen gen{rng};
    std::uniform_int_distribution<unsigned> val(0, 16);
    for (int i = 0; i < 2000; ++i) {
        auto f = gen.small(8);
        auto back = parse_formula(print(f));
        REQUIRE(equal(f, back));
        std::vector<bool> bits(12);
        for (std::size_t b = 0; b < bits.size(); ++b) bits[b] = rng() & 1;
        Env env{{"x", val(rng)}, {"y", val(rng)}, {"z", val(rng)}};
        Nat a = val(rng);
        std::map<std::string, Nat> e2(env.begin(), env.end());
        CHECK(eval(f, env, a, SecondOrderParam(bits)) == oracle::formula(f, e2, a, bits));
    }
}

TEST_CASE("substitution respects binders") {
    auto f = parse_formula("x < y and forall x < 3 . x < z");
    auto g = substitute(f, {{"x", "q"}});
    CHECK(print(g) == print(parse_formula("q < y and forall x < 3 . x < z", {"q", "y", "z"})));
}

TEST_CASE("weak transform") {
    auto s = parse_prefixed("exists x . forall y . exists z . x + y < z");
    auto t = weakly_pi04_transform(s);
    REQUIRE(t.prefix.size() == 5);
    CHECK_FALSE(t.prefix[0].forall);
    CHECK(t.prefix[1].forall);
    CHECK_FALSE(t.prefix[2].forall);
    CHECK(t.prefix[2].var == "x'");
    CHECK(print(t.prefix[2].bound) == "x");
    CHECK(t.prefix[3].forall);
    CHECK(t.prefix[3].var == "y'");
    CHECK(print(t.prefix[3].bound) == "y");
    CHECK_FALSE(t.prefix[4].forall);
    CHECK(t.prefix[4].var == "z");
    CHECK(print(t.core) == print(parse_formula("x' + y' < z", {"x'", "y'", "z"})));

    // no x or y in the body: the bounded pair is still inserted
    auto u = weakly_pi04_transform(parse_prefixed("exists x . forall y . exists z . z = z"));
    CHECK(u.prefix.size() == 5);
    CHECK_THROWS_AS(weakly_pi04_transform(t), DomainError);
    CHECK_THROWS_AS(weakly_pi04_transform(parse_prefixed("forall x . forall y . exists z . z = z")), DomainError);

    auto w = weakly_pi04_transform(parse_prefixed("forall A . forall a . exists x . forall y . exists z . z in A"));
    CHECK(w.prefix.size() == 7);
}

TEST_CASE("pi03 sentences") {
    auto top = Pi03Sentence::top();
    CHECK(top.is_top());
    CHECK(top.floor() == 3);
    auto s = Pi03Sentence::from_text("y = x + 1 and true", 7);
    CHECK_FALSE(s.is_top());
    CHECK(s.floor() == 7);
    CHECK(s.holds(2, 3, 0));
    CHECK_FALSE(s.holds(2, 4, 0));
}

TEST_CASE("psi0 built-ins") {
    FinSet d = FinSet::of({3, 4, 5, 6});
    ColoringTable f(d, 2, 2);
    CHECK(is_homogeneous(f, d));
    CHECK(is_transitive(f, d));
    f.set_index({0, 1}, 1);
    f.set_index({1, 2}, 1);
    CHECK_FALSE(is_transitive(f, FinSet::of({3, 4, 5})));
    CHECK_FALSE(is_homogeneous(f, d));
    CHECK(is_homogeneous(f, FinSet::of({3, 5, 6})));
    auto st = RtLikeStatement::builtin(2, 2, Psi0Kind::HOMOGENEOUS);
    CHECK(st.psi(f, FinSet::of({3, 5, 6})));
    CHECK_FALSE(st.psi(f, FinSet::of({3, 4, 5})));
    CHECK(parse_psi0("transitive") == Psi0Kind::TRANSITIVE);
    CHECK_THROWS_AS(parse_psi0("nope"), DomainError);
}
