#include "../oracles.hpp"
#include "lt/ramsey.hpp"

#include <doctest.h>

using namespace lt;

namespace {
const Pi03Sentence TOP = Pi03Sentence::top();

bool omega_large(const std::vector<std::uint64_t>& s) { return !s.empty() && s.size() >= s.front() + 1; }

// 1-dense(TOP) with Psi0 = TRUE, straight from the four items
bool dense1(const std::vector<std::uint64_t>& z) {
    if (!omega_large(z)) return false;  // items (a) and (d)
    std::size_t n = z.size();
    std::uint64_t k = z.front();
    // (b): interval partitions into at most min Z pieces
    std::function<bool(std::size_t, std::uint64_t)> part = [&](std::size_t from, std::uint64_t pieces) -> bool {
        // true if every partition of z[from..] into at most `pieces` intervals has an omega-large piece
        if (from == n) return false;
        if (pieces == 0) return true;  // no partition exists
        for (std::size_t end = from + 1; end <= n; ++end) {
            std::vector<std::uint64_t> piece(z.begin() + from, z.begin() + end);
            if (omega_large(piece)) continue;
            if (end == n) return false;
            if (!part(end, pieces - 1)) return false;
        }
        return true;
    };
    if (!part(0, k)) return false;
    // (c): colourings into min Z
    std::vector<unsigned> h(n, 0);
    while (true) {
        bool some = false;
        for (unsigned c = 0; c < k && !some; ++c) {
            std::vector<std::uint64_t> cls;
            for (std::size_t i = 0; i < n; ++i)
                if (h[i] == c) cls.push_back(z[i]);
            some = omega_large(cls);
        }
        if (!some) return false;
        std::size_t i = 0;
        while (i < n && ++h[i] == k) h[i++] = 0;
        if (i == n) break;
    }
    return true;
}
}  // namespace

TEST_CASE("gamma largeness with a trivial psi0 is plain largeness") {
    auto g = RtLikeStatement::builtin(1, 2, Psi0Kind::TRUE_);
    for (unsigned hi = 5; hi <= 9; ++hi) {
        FinSet Z = FinSet::interval(3, hi);
        auto r = is_large_gamma(Z, 1, 1, TOP, g);
        CHECK(r.value == (check_large(Z, {1, 1, TOP}) ? Tri::True : Tri::False));
    }
}

TEST_CASE("gamma largeness for homogeneity of pairs") {
    auto g = RtLikeStatement::builtin(2, 2, Psi0Kind::HOMOGENEOUS);
    // omega^0 * 2: any two points are homogeneous for pairs
    CHECK(is_large_gamma(FinSet::of({3, 4}), 0, 2, TOP, g).value == Tri::True);
    // omega-large homogeneous sets need >= 4 points; 5 points admit a bad colouring
    CHECK(is_large_gamma(FinSet::interval(3, 7), 1, 1, TOP, g).value == Tri::False);
    EvalMode par;
    par.threads = 4;
    CHECK(is_large_gamma(FinSet::interval(3, 7), 1, 1, TOP, g, par).value == Tri::False);
    EvalMode s;
    s.sampled = true;
    s.trials = 30;
    CHECK(is_large_gamma(FinSet::of({3, 4}), 0, 2, TOP, g, s).value == Tri::Inconclusive);
}

TEST_CASE("density level 0 and level 1") {
    DensityParams p{RtLikeStatement::builtin(1, 2, Psi0Kind::TRUE_), TOP, 0, {}};
    CHECK(is_n_dense(FinSet::of({3, 4, 5, 6}), p).value == Tri::True);
    CHECK(is_n_dense(FinSet::of({3, 4, 5}), p).value == Tri::False);

    p.m = 1;
    std::vector<std::uint64_t> U = {3, 4, 5, 6, 7, 8, 9, 10};
    for (std::uint32_t m = 1; m < (1u << U.size()); ++m) {
        if (__builtin_popcount(m) > 7) continue;
        std::vector<std::uint64_t> z;
        std::vector<Nat> zn;
        for (std::size_t i = 0; i < U.size(); ++i)
            if (m >> i & 1) {
                z.push_back(U[i]);
                zn.push_back(U[i]);
            }
        FinSet Z(zn);
        CAPTURE(finset_brief(Z));
        CHECK(is_n_dense(Z, p).value == (dense1(z) ? Tri::True : Tri::False));
    }
}

TEST_CASE("sampled density never claims truth") {
    DensityParams p{RtLikeStatement::builtin(1, 2, Psi0Kind::TRUE_), TOP, 1, {}};
    p.mode.sampled = true;
    p.mode.ceiling = 10;
    p.mode.trials = 20;
    // no interval this small is 1-dense: item (b) always fails first
    DensityParams q = p;
    q.mode.sampled = false;
    for (unsigned hi = 4; hi <= 22; ++hi) {
        FinSet Z = FinSet::interval(3, hi);
        CHECK(is_n_dense(Z, p).value != Tri::True);
        CHECK(is_n_dense(Z, q).value == Tri::False);
    }
    EvalMode tight;
    tight.ceiling = 10;
    CHECK_THROWS_AS(is_large_gamma(FinSet::interval(3, 9), 1, 1, TOP,
                                   RtLikeStatement::builtin(2, 2, Psi0Kind::HOMOGENEOUS), tight),
                    DomainError);
}

TEST_CASE("em extraction") {
    FinSet X = FinSet::interval(3, 38);
    std::mt19937_64 rng(2);
    Budget b0(10);
    auto f0 = oracle::random_coloring(X, 2, 2, rng);
    auto base = em_extract(X, f0, 0, TOP, b0);
    CHECK(base.status == SearchStatus::Found);
    CHECK(base.set->size() == 1);

    // colour of a pair depends on its left end only: transitive everywhere
    ColoringTable f(X, 2, 2);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) f.set_index({i, j}, unsigned(i % 3 == 0));
    CHECK(is_em_transitive(f, X));
    Budget b(2000000);
    auto r = em_extract(X, f, 1, TOP, b);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(is_em_transitive(f, *r.set));
    CHECK(verify_certificate(*r.set, *r.cert, {1, 1, TOP}));

    for (int t = 0; t < 10; ++t) {
        auto g = oracle::random_coloring(X, 2, 2, rng);
        Budget bb(500000);
        auto e = em_extract(X, g, 1, TOP, bb);
        if (e.status == SearchStatus::Found) {
            CHECK(is_em_transitive(g, *e.set));
            CHECK(verify_certificate(*e.set, *e.cert, {1, 1, TOP}));
        }
    }
}

TEST_CASE("ads colouring") {
    FinSet X = FinSet::interval(3, 20);
    ColoringTable zero(X, 2, 2);
    auto q = ads_q_coloring(X, zero, 1, TOP);
    for (auto c : q.q.table()) CHECK(c % 4 < 2);

    ColoringTable bad(FinSet::of({3, 4, 5}), 2, 2, {1, 0, 1});
    CHECK_THROWS_AS(ads_q_coloring(FinSet::of({3, 4, 5}), bad, 1, TOP), DomainError);
    CHECK(parse_successor_reading("apart-point") == SuccessorReading::ApartPoint);
    CHECK_THROWS_AS(parse_successor_reading("other"), DomainError);

    ColoringTable f(FinSet::interval(3, 38), 2, 2);
    for (std::size_t i = 0; i < 36; ++i)
        for (std::size_t j = i + 1; j < 36; ++j) f.set_index({i, j}, unsigned(i % 2));
    Budget b(2000000);
    auto r = ads_extract(FinSet::interval(3, 38), f, 1, TOP, b);
    if (r.result.status == SearchStatus::Found) {
        CHECK(oracle::homogeneous(f, [&] {
            std::vector<std::size_t> ix;
            for (auto& v : r.result.set->elems()) ix.push_back(std::size_t(*to_u64(v)) - 3);
            return ix;
        }()));
        CHECK(check_large(*r.result.set, {1, 1, TOP}));
    }
}

TEST_CASE("bounds table") {
    auto rows = bounds_table(50, 2);
    auto& r1 = rows[1];
    CHECK(r1.n == 1);
    CHECK(r1.pigeonhole == 2);
    CHECK(r1.ads == 8);
    CHECK(*r1.lower == 1);
    CHECK(r1.em == Nat(16777217));
    CHECK(r1.rt22 == pow_nat(pow_nat(16, 6) + 1, 8));
    CHECK_FALSE(rows[0].lower);
    for (std::size_t n = 1; n <= 50; ++n) CHECK(*rows[n].lower < rows[n].pigeonhole);
    auto tsv = bounds_tsv(bounds_table(3, 2));
    CHECK(tsv.rfind("n\t", 0) == 0);
}
