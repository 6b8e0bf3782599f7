#include "oracles.hpp"
#include "support.hpp"

#include "monosize/random.hpp"
#include "monosize/size.hpp"

using namespace monosize;
using testing::error_code_of;
using testing::ideal;

using Covers = std::vector<std::vector<std::size_t>>;

TEST_CASE("size of a maximal ideal and of a single variable") {
    auto r = size(ideal("(x1, x2, x3)"));
    CHECK(r.v == 1);
    CHECK(r.h == 3);
    CHECK(r.size == 0);
    r = size(ideal("(x1)", 2));
    CHECK(r.v == 1);
    CHECK(r.h == 1);
    CHECK(r.size == 1);
    CHECK(r.inessential == std::vector<std::size_t>{1});
}

TEST_CASE("size of two disjoint squares") {
    const auto r = size(ideal("(x1^2,x2^2) & (x3^2,x4^2)"));
    CHECK(r.v == 2);
    CHECK(r.h == 4);
    CHECK(r.size == 1);
}

TEST_CASE("four components on four variables") {
    // (x1^2,x2) & (x2,x3) & (x3,x4) & (x2,x4); the first and third cover
    const auto i = ideal("(x1^2,x2) & (x2,x3) & (x3,x4) & (x2,x4)");
    const auto d = irreducible_decomposition(i);
    const auto comps = oracle::exps_of(d);
    REQUIRE(comps.size() == 4);
    CHECK(oracle::brute_size(comps, 4) == 1);
    const auto r = size_of_decomposition(d);
    CHECK(r.v == 2);
    CHECK(r.size == 1);
    const auto f = minimal_covers(d);
    CHECK(f.w == 1);
    CHECK(f.cardinality == 2);
    // canonical order: (x3,x4) (x2,x4) (x2,x3) (x1^2,x2)
    CHECK(f.covers == Covers{{0, 3}});
    CHECK(f.covers == oracle::brute_covers(comps, 2));
}

TEST_CASE("three components on three variables") {
    const auto d = irreducible_decomposition(ideal("(x1^2,x2) & (x1,x3) & (x2,x3)"));
    const auto r = size_of_decomposition(d);
    CHECK(r.size == 1);
    const auto f = minimal_covers(d);
    CHECK(f.covers == Covers{{0, 1}, {0, 2}, {1, 2}});
    CHECK(f.share_a_cover(0, 2));
    CHECK(f.in_some_cover(1));
}

TEST_CASE("three components on four variables") {
    const auto d = irreducible_decomposition(ideal("(x1^2,x2) & (x3,x4) & (x1,x4^2)"));
    CHECK(size_of_decomposition(d).size == 1);
    const auto f = minimal_covers(d);
    // canonical order: (x3,x4) (x1,x4^2) (x1^2,x2)
    CHECK(f.covers == Covers{{0, 2}});
    CHECK(f.renumbering == std::vector<std::size_t>{0, 2, 1});
    CHECK_FALSE(f.share_a_cover(0, 1));
    CHECK_FALSE(f.in_some_cover(1));
}

TEST_CASE("two nested components on two variables") {
    for (Exponent k = 1; k <= 4; ++k) {
        const Monomial q1{k + 1, k}, q2{1, k + 1};
        const auto d = irredundantize({IrreducibleComponent(q1), IrreducibleComponent(q2)}, 2);
        CHECK(d.size() == 2);
        CHECK(size_of_decomposition(d).size == 0);
        const auto rad = radical(d);
        REQUIRE(rad.size() == 1);
        CHECK(rad[0] == IrreducibleComponent{1, 1});
    }
}

TEST_CASE("radical") {
    const auto single = irredundantize({{2, 1}}, 2);
    CHECK(radical(single)[0] == IrreducibleComponent{1, 1});
    const auto sq = irredundantize({{1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(radical(sq) == sq);
}

TEST_CASE("embedded primes separate size from the radical") {
    // (x1*x2, x2^3) = (x2) & (x1, x2^3)
    const auto i = ideal("(x1*x2, x2^3)");
    CHECK(size(i).size == 0);
    CHECK(size(recompose(radical(irreducible_decomposition(i)))).size == 1);
}

TEST_CASE("degenerate input and caps") {
    CHECK(error_code_of([] { size(MonomialIdeal::unit(2)); }) == ErrorCode::degenerate_ideal);
    CHECK(error_code_of([] { size(MonomialIdeal::zero(2)); }) == ErrorCode::degenerate_ideal);
    Caps caps;
    caps.max_cover_components = 1;
    const auto d = irreducible_decomposition(ideal("(x1*x2)"));
    CHECK(error_code_of([&] { minimal_covers(d, caps); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("minimum_cover edge cases") {
    CHECK(minimum_cover({}).empty());
    std::vector<VarSet> empties(2, VarSet(3));
    CHECK(minimum_cover(empties).empty());
}

TEST_CASE("size and covers agree with exhaustive enumeration") {
    SplitMix64 rng(99);
    const RandomBounds bounds{5, 5, 3};
    for (int trial = 0; trial < 400; ++trial) {
        const auto i = random_ideal(rng, bounds);
        const auto d = irreducible_decomposition(i);
        const auto comps = oracle::exps_of(d);
        CAPTURE(render(i));
        const auto [v, h] = oracle::brute_cover(comps);
        const auto r = size_of_decomposition(d);
        CHECK(r.v == v);
        CHECK(r.h == h);
        CHECK(r.size == v + (i.ambient() - h) - 1);
        CHECK(r.inessential.size() == i.ambient() - h);
        CHECK(r.witness.size() == v);
        const auto f = minimal_covers(d);
        CHECK(f.covers == oracle::brute_covers(comps, v));
        if (r.inessential.empty())
            CHECK(f.cardinality == f.w + 1);
        for (const auto &cover : f.covers) {
            VarSet u(i.ambient()), all(i.ambient());
            for (auto c : cover)
                u |= d[c].support();
            for (const auto &c : d.components())
                all |= c.support();
            CHECK(u == all);
        }
    }
}

TEST_CASE("inessential variables add one each") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = random_ideal(rng, {4, 4, 3});
        const std::size_t extra = rng.between(1, 3);
        std::vector<Monomial> gens;
        for (const auto &g : i.generators()) {
            std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
            e.resize(i.ambient() + extra, 0);
            gens.emplace_back(e);
        }
        const MonomialIdeal embedded(i.ambient() + extra, gens);
        CHECK(size(embedded).size == size(i).size + extra);
    }
}

TEST_CASE("fewer associated primes never lowers the size") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = random_component_ideal(rng, {4, 4, 3});
        const auto d = irreducible_decomposition(i);
        if (d.size() < 2)
            continue;
        std::vector<IrreducibleComponent> kept;
        for (std::size_t c = 0; c < d.size(); ++c)
            if (c == 0 || rng.below(2))
                kept.push_back(d[c]);
        const auto j = irredundantize(kept, d.ambient());
        CHECK(size_of_decomposition(j).size >= size_of_decomposition(d).size);
    }
}

TEST_CASE("size is a radical invariant without embedded primes") {
    SplitMix64 rng(31);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto i = random_ideal(rng, {4, 4, 3});
        const auto d = irreducible_decomposition(i);
        bool embedded = false;
        for (std::size_t a = 0; a < d.size(); ++a)
            for (std::size_t b = 0; b < d.size(); ++b)
                embedded = embedded || (a != b && d[a].support().is_subset_of(d[b].support()));
        if (embedded)
            continue;
        ++tested;
        CHECK(size(recompose(radical(d))).size == size(i).size);
    }
    CHECK(tested > 100);
}
