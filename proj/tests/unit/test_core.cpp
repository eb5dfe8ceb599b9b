#include "lt/io.hpp"

#include <doctest.h>

using namespace lt;

TEST_CASE("finset basics") {
    auto s = FinSet::of({3, 5, 9});
    CHECK_THROWS_AS(FinSet::of({5, 3}), DomainError);
    CHECK(s.size() == 3);
    CHECK(s.min() == 3);
    CHECK(s.max() == 9);
    CHECK(s.index_of(Nat(9)) == std::optional<std::size_t>(2));
    CHECK_FALSE(s.contains(4));
    CHECK(FinSet::interval(3, 6).size() == 4);
    CHECK(s.slice(1, 2) == FinSet::of({5, 9}));
    CHECK(s.without(5) == FinSet::of({3, 9}));
    CHECK(FinSet::of({3, 9}).subset_of(s));
    CHECK_THROWS_AS(FinSet::of({1, 4}), DomainError);
    CHECK_THROWS_AS(FinSet().min(), DomainError);
}

TEST_CASE("sparsity") {
    Nat big = pow_nat(4, 65) + 1;
    FinSet s({3, 65, big});
    CHECK(is_sparse(s, Sparsity::EXP4));
    CHECK_FALSE(is_sparse(FinSet::of({3, 4}), Sparsity::EXP4));
    for (auto p : {Sparsity::EXP4, Sparsity::POLY2, Sparsity::LINEAR, Sparsity::NONE})
        CHECK(is_sparse(FinSet::of({7}), p));
    CHECK(parse_sparsity("exp4") == Sparsity::EXP4);
    CHECK_THROWS_AS(parse_sparsity("cubic"), DomainError);
}

TEST_CASE("tuple ranking round trip") {
    for (std::size_t N = 0; N <= 7; ++N)
        for (std::size_t n = 1; n <= 3 && n <= N; ++n) {
            auto total = binom(N, n);
            for (std::uint64_t r = 0; r < total; ++r) CHECK(tuple_rank(tuple_unrank(r, n, N), N) == r);
        }
    CHECK(binom(36, 2) == 630);
}

TEST_CASE("restriction") {
    FinSet d = FinSet::of({3, 4, 5});
    ColoringTable f(d, 1, 2, {1, 0, 1});
    auto g = f.restrict_to(FinSet::of({3, 5}));
    CHECK(g.table() == std::vector<unsigned>{1, 1});
    CHECK(g.domain() == index_domain(2));
    CHECK(f.restrict_to(d).table() == f.table());

    ColoringTable h(FinSet::of({3, 4, 5, 6}), 2, 2);
    h.set_index({1, 3}, 1);
    auto hg = h.restrict_to(FinSet::of({4, 6}));
    CHECK(hg.at2(0, 1) == 1);
    CHECK_THROWS_AS(h.restrict_to(FinSet::of({4, 7})), DomainError);
}

TEST_CASE("json round trips") {
    FinSet s({3, pow_nat(2, 100)});
    CHECK(finset_from_json(to_json(s)) == s);
    CHECK(parse_finset_text("3\n4\n 7\n") == FinSet::of({3, 4, 7}));
    CHECK(parse_finset_text("[3, 4, \"7\"]") == FinSet::of({3, 4, 7}));
    ColoringTable f(FinSet::of({3, 4, 5}), 2, 3, {0, 2, 1});
    CHECK(coloring_from_json(to_json(f)) == f);
}

TEST_CASE("budget") {
    Budget b(3);
    CHECK(b.tick());
    CHECK(b.tick(2));
    CHECK_FALSE(b.tick());
    Budget c(1);
    c.charge();
    CHECK_THROWS_AS(c.charge(), BudgetExhausted);
    Budget unlimited;
    CHECK(unlimited.tick(1000000));
}
