#include "../oracles.hpp"

#include <doctest.h>

using namespace lt;

namespace {
FinSet from_mask(const std::vector<std::uint64_t>& U, std::uint64_t m) {
    std::vector<Nat> v;
    for (std::size_t i = 0; i < U.size(); ++i)
        if (m >> i & 1) v.push_back(U[i]);
    return FinSet(v);
}
}  // namespace

TEST_CASE("small examples") {
    CHECK(check_large(FinSet::of({3, 4, 5, 6}), {1, 1, Pi03Sentence::top()}));
    CHECK_FALSE(check_large(FinSet::of({3, 4, 5}), {1, 1, Pi03Sentence::top()}));
    CHECK(check_large(FinSet::of({17}), {0, 1, Pi03Sentence::from_text("y < x")}));

    auto c = check_large(FinSet::interval(3, 38), {2, 1, Pi03Sentence::top()});
    REQUIRE(c);
    CHECK(c->kind == Certificate::Power);
    REQUIRE(c->blocks.size() == 3);
    CHECK(c->blocks[0].start == 1);
    CHECK(c->blocks[0].end == 5);
    CHECK(c->blocks[1].start == 6);
    CHECK(c->blocks[1].end == 15);
    CHECK(c->blocks[2].start == 16);
    CHECK(c->blocks[2].end == 35);
    CHECK_FALSE(check_large(FinSet::interval(3, 37), {2, 1, Pi03Sentence::top()}));
}

TEST_CASE("apartness examples") {
    auto X = FinSet::of({3, 4}), Y = FinSet::of({9, 10});
    CHECK(t_apart(X, Y, Pi03Sentence::top()));
    CHECK(t_apart(X, Y, Pi03Sentence::from_text("y = x + 1 and true")));
    CHECK_FALSE(t_apart(X, Y, Pi03Sentence::from_text("y < x")));
    CHECK_THROWS_AS(t_apart(Y, X, Pi03Sentence::top()), DomainError);
    CHECK_THROWS_AS(t_apart(FinSet::of({3, 5}), FinSet::of({4, 6}), Pi03Sentence::top()), DomainError);

    auto T = Pi03Sentence::from_text("x + z < y * y");
    ApartChecker ac(T);
    for (unsigned a = 3; a < 12; ++a)
        for (unsigned b = a + 1; b < 14; ++b)
            for (unsigned c = b; c < 16; ++c) CHECK(ac.apart(a, b, c) == oracle::apart(a, b, c, T));
}

TEST_CASE("TOP largeness agrees with the block enumerator on subsets of [3,12]") {
    std::vector<std::uint64_t> U;
    for (unsigned v = 3; v <= 12; ++v) U.push_back(v);
    oracle::TopLarge bf(U);
    auto top = Pi03Sentence::top();
    for (std::uint64_t m = 1; m < (1u << U.size()); ++m) {
        FinSet X = from_mask(U, m);
        for (std::uint64_t n = 0; n <= 2; ++n)
            for (std::uint64_t k = 1; k <= 3; ++k) {
                auto c = check_large(X, {n, k, top});
                REQUIRE(bool(c) == bf.large(m, n, k));
                if (c) CHECK(verify_certificate(X, *c, {n, k, top}, true));
            }
    }
}

TEST_CASE("largeness(T) agrees with the literal oracle on small sets") {
    std::vector<Pi03Sentence> Ts = {Pi03Sentence::from_text("y = x + 1 and true"),
                                    Pi03Sentence::from_text("x + x < y or z < y"),
                                    Pi03Sentence::from_text("z < x * y + 3")};
    auto incl = Pi03Sentence::from_text("x < y");
    incl.inclusive = true;
    Ts.push_back(incl);
    std::vector<std::uint64_t> U = {3, 4, 5, 6, 8, 11, 13};
    for (auto& T : Ts)
        for (std::uint64_t m = 1; m < (1u << U.size()); ++m) {
            FinSet X = from_mask(U, m);
            auto xv = oracle::values(X);
            for (std::uint64_t n = 0; n <= 1; ++n)
                for (std::uint64_t k = 1; k <= 2; ++k) {
                    auto c = check_large(X, {n, k, T});
                    CAPTURE(T.label);
                    CAPTURE(finset_brief(X));
                    REQUIRE(bool(c) == oracle::t_large(xv, n, k, T));
                    if (c) CHECK(verify_certificate(X, *c, {n, k, T}, true));
                }
        }
}

TEST_CASE("greedy is sound and matches exhaustive on random sets") {
    std::mt19937_64 rng(3);
    auto T = Pi03Sentence::from_text("x + x < y or z < y");
    for (int t = 0; t < 300; ++t) {
        std::vector<Nat> v;
        for (unsigned x = 3; x < 50; ++x)
            if (rng() % 3) v.push_back(x);
        FinSet X(v);
        for (std::uint64_t n = 1; n <= 2; ++n) {
            auto g = check_large(X, {n, 1, T}, SearchMode::Greedy);
            auto e = check_large(X, {n, 1, T});
            if (g) CHECK(verify_certificate(X, *g, {n, 1, T}));
            CHECK(bool(g) == bool(e));
        }
    }
}

TEST_CASE("certificate verification rejects tampering") {
    auto top = Pi03Sentence::top();
    FinSet X = FinSet::interval(3, 38);
    auto c = *check_large(X, {2, 1, top});
    CHECK(verify_certificate(X, c, {2, 1, top}));
    CHECK_FALSE(verify_certificate(X, c, {1, 1, top}));
    CHECK_FALSE(verify_certificate(X, c, {3, 1, top}));
    auto bad = c;
    bad.blocks[1].start = 5;  // overlaps the first block
    CHECK_FALSE(verify_certificate(X, bad, {2, 1, top}));
    auto short_ = c;
    short_.blocks.pop_back();
    CHECK_FALSE(verify_certificate(X, short_, {2, 1, top}));
    CHECK(certificate_from_json(to_json(c)) == c);

    FinSet Y = FinSet::of({3, 4, 5, 6});
    auto cy = *check_large(Y, {1, 1, top});
    auto lifted = lift_certificate(Y, cy, FinSet::of({3, 4, 5, 6, 7, 9}));
    CHECK(verify_certificate(FinSet::of({3, 4, 5, 6, 7, 9}), lifted, {1, 1, top}));
}

TEST_CASE("minimal intervals") {
    CHECK(minimal_interval_max(3, 0) == std::optional<Nat>(3));
    CHECK(minimal_interval_max(3, 1) == std::optional<Nat>(6));
    CHECK(minimal_interval_max(3, 2) == std::optional<Nat>(38));
    for (unsigned x = 3; x < 20; ++x) {
        CHECK(*minimal_interval_max(x, 1) == 2 * x);
        CHECK(*minimal_interval_max(x, 2) == pow_nat(2, x) * (x + 2) - 2);
    }
    auto r1 = minimal_large_interval(3, 1, 1000000);
    REQUIRE(r1.set);
    CHECK(*r1.set == FinSet::of({3, 4, 5, 6}));
    auto r2 = minimal_large_interval(3, 2, 1000000);
    REQUIRE(r2.set);
    CHECK(*r2.set == FinSet::interval(3, 38));
    CHECK(r2.validated);
    auto r3 = minimal_large_interval(3, 3, 1000000);
    CHECK_FALSE(r3.set);
    CHECK(is_minimal(FinSet::of({3, 4, 5, 6}), 1));
    CHECK_FALSE(is_minimal(FinSet::of({3, 4, 5, 6, 7}), 1));
    CHECK(is_minimal(FinSet::interval(3, 38), 2));
    CHECK(decompositions(FinSet::interval(3, 38), 2).size() == 1);
    CHECK(decompositions(FinSet::of({3, 4, 5, 6, 7}), 1).size() > 1);
}

TEST_CASE("pigeonhole extraction") {
    auto top = Pi03Sentence::top();
    FinSet X = FinSet::interval(3, 38);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        auto f = oracle::random_coloring(X, 1, 3, rng);
        auto r = pigeonhole_extract(X, f, 1, top);
        REQUIRE(r.set.subset_of(X));
        CHECK(verify_certificate(r.set, r.cert, {1, 1, top}));
        std::vector<std::size_t> idx;
        for (auto& v : r.set.elems()) idx.push_back(*X.index_of(v));
        CHECK(oracle::homogeneous(f, idx));
    }
    // b = 0 gives a singleton
    auto f = oracle::random_coloring(FinSet::of({3, 4, 5}), 1, 3, rng);
    CHECK(pigeonhole_extract(FinSet::of({3, 4, 5}), f, 0, top).set.size() == 1);
    // constant colour: the first omega-large block
    ColoringTable zero(X, 1, 3);
    auto z = pigeonhole_extract(X, zero, 1, top);
    CHECK(check_large(z.set, {1, 1, top}));
}

TEST_CASE("mixed decomposition and fusion") {
    auto top = Pi03Sentence::top();
    auto d = decompose_mixed(FinSet::interval(3, 38), 0, 1, top);
    REQUIRE(d.blocks.size() >= 2);
    std::vector<Nat> mins;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        CHECK_FALSE(d.blocks[i].empty());
        if (i) CHECK(precedes(d.blocks[i - 1], d.blocks[i]));
        mins.push_back(d.blocks[i].min());
    }
    CHECK(check_large(FinSet(mins), {1, 1, top}));

    std::vector<FinSet> singles;
    for (unsigned v = 3; v <= 38; ++v) singles.push_back(FinSet::of({v}));
    auto fz = fuse(singles, 0, 1, top);
    CHECK(verify_certificate(fz.set, fz.cert, {1, 1, top}));
    CHECK_THROWS_AS(fuse({FinSet::of({3})}, 0, 0, top), DomainError);
}
