#include "../oracles.hpp"
#include "lt/lowerbound.hpp"

#include <doctest.h>

using namespace lt;

TEST_CASE("canonical trees") {
    CanonicalTree t1(3, 1), t2(3, 2);
    CHECK(*t1.max() == 6);
    CHECK(*t2.max() == 38);
    CHECK(*t2.cardinality() == 36);
    REQUIRE(t2.child_count() == 3);
    CHECK(t2.child(0).base() == 4);
    CHECK(t2.child(1).base() == 9);
    CHECK(t2.child(2).base() == 19);
    CHECK(t2.materialize(1000) == FinSet::interval(3, 38));
    CHECK(t2.contains(38));
    CHECK_FALSE(t2.contains(39));
    // closed forms against the interval recursion
    for (unsigned x = 3; x < 12; ++x)
        for (unsigned r = 0; r <= 2; ++r) CHECK(*CanonicalTree(x, r).max() == *minimal_interval_max(x, r));
    CanonicalTree t3(3, 3);
    CHECK_FALSE(t3.max());
    CHECK(t3.child(1).base() == 95);
    CHECK_FALSE(t3.materializable(1000000));
}

TEST_CASE("block navigation") {
    CanonicalTree t(3, 2);
    CHECK_FALSE(t.block_of(3, 1));
    auto b = t.block_of(7, 1);
    REQUIRE(b);
    CHECK(b->path == std::vector<std::size_t>{0});
    CHECK(b->level == 1);
    CHECK_FALSE(t.block_of(4, 0));
    CHECK(t.phi(5, 8, 1));
    CHECK_FALSE(t.phi(8, 9, 1));
    for (unsigned v = 3; v <= 38; ++v) CHECK(t.phi(v, v, 2));
    CHECK(CanonicalTree(3, 1).theta(4, 5, 5));
    CHECK(t.theta(6, 9, 18));
    CHECK(t.theta(100, 3, 4));  // x outside the set
    CHECK(t.f_x(3) == 0);
    CHECK(t.f_x(4) == 1);
    CHECK(t.f_x(5) == 0);
}

TEST_CASE("explicit minimal sets decompose like the tree") {
    CanonicalTree t(3, 2);
    MaterializedMinimal m(t.materialize(1000), 2);
    for (unsigned x = 3; x <= 38; ++x)
        for (unsigned y = 3; y <= 38; ++y)
            for (unsigned c = 0; c <= 2; ++c) CHECK(m.phi(x, y, c) == t.phi(x, y, c));
    auto kids = m.children();
    REQUIRE(kids.size() == 3);
    CHECK(kids[1] == FinSet::interval(9, 18));
}

TEST_CASE("blockfree subsets") {
    CanonicalTree t1(3, 1), t2(3, 2);
    CHECK(zero_blockfree(t1).materialize(100) == FinSet::of({3}));
    auto bf = zero_blockfree(t2).materialize(100);
    CHECK(bf == FinSet::of({3, 4, 9, 19}));
    CHECK(is_minimal(bf, 1));
    CHECK(BlockfreeView(t2, 2).materialize(100) == FinSet::of({3}));
}

TEST_CASE("structural apartness matches the exported sentence") {
    CanonicalTree t(3, 1);
    auto T = export_tx(t);
    CHECK(T.inclusive);
    FinSet X = t.materialize(100);
    std::vector<std::uint64_t> v = oracle::values(X);
    std::size_t N = v.size();
    for (std::uint32_t a = 1; a < (1u << N); ++a)
        for (std::uint32_t b = 1; b < (1u << N); ++b) {
            int ha = 31 - __builtin_clz(a), lb = __builtin_ctz(b);
            if (ha >= lb) continue;
            std::vector<Nat> av, bv;
            for (std::size_t i = 0; i < N; ++i) {
                if (a >> i & 1) av.push_back(v[i]);
                if (b >> i & 1) bv.push_back(v[i]);
            }
            FinSet A(av), B(bv);
            CHECK(apart_shortcut(t, A, B) == t_apart(A, B, T));
            CHECK(t_apart(A, B, T) == oracle::apart(v[ha], v[lb], *to_u64(B.max()), T));
        }
    CanonicalTree t2(3, 2);
    CHECK(apart_shortcut(t2, FinSet::of({5, 6}), FinSet::interval(9, 18)));
    CHECK(apart_shortcut(t2, FinSet::of({5}), FinSet::of({7})));
}

TEST_CASE("self largeness") {
    CanonicalTree t(3, 2);
    auto T = export_tx(t);
    CHECK(check_large(t.materialize(100), {2, 1, T}));
}

TEST_CASE("lower bound at n = 1") {
    for (unsigned base : {3u, 5u}) {
        CanonicalTree t(base, 1);
        auto r = verify_lower_bound(t, 1, true);
        CHECK(r.status == LowerBoundStatus::Verified);
        CHECK(r.checked == (std::uint64_t(1) << (base + 1)) - 1);
        FinSet X = t.materialize(100);
        for (auto& v : X.elems()) CHECK(t.f_x(v) == (v == X.min() ? 1u : 0u));
    }
    CHECK_THROWS_AS(verify_lower_bound(CanonicalTree(3, 2), 1, true), DomainError);
}

TEST_CASE("pruned check on a huge tree") {
    CanonicalTree t(3, 3);
    auto r = verify_lower_bound(t, 2, false, 120);
    CHECK(r.status == LowerBoundStatus::Consistent);
}
