#include "oracles.hpp"
#include "support.hpp"

#include "monosize/decomposition.hpp"
#include "monosize/random.hpp"

#include <algorithm>

using namespace monosize;
using testing::error_code_of;
using testing::ideal;

namespace {

void check_irredundant(const Decomposition &d, const MonomialIdeal &i) {
    CHECK(recompose(d) == i);
    for (std::size_t j = 0; j < d.size(); ++j) {
        std::vector<IrreducibleComponent> rest;
        for (std::size_t t = 0; t < d.size(); ++t)
            if (t != j)
                rest.push_back(d[t]);
        if (rest.empty())
            continue;
        CHECK_FALSE(ideal_leq(recompose(rest, d.ambient()), d[j].as_ideal()));
    }
}

} // namespace

TEST_CASE("component basics") {
    const IrreducibleComponent q{2, 0, 1};
    CHECK(q.support().members() == std::vector<std::size_t>{0, 2});
    CHECK(q.as_ideal() == ideal("(x1^2, x3)"));
    CHECK(q.radical() == IrreducibleComponent{1, 0, 1});
    CHECK(error_code_of([] { IrreducibleComponent{0, 0}; }) == ErrorCode::invalid_argument);
    CHECK(component_leq({2, 1}, {1, 1}));
    CHECK_FALSE(component_leq({1, 1}, {1, 0}));
    CHECK(component_leq({1, 0}, {1, 1}));
    CHECK(component_leq({1, 1, 0}, {1, 0, 0}) == false);
}

TEST_CASE("component_leq agrees with ideal containment") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        Monomial a(3), b(3);
        for (std::size_t k = 0; k < 3; ++k) {
            a[k] = Exponent(rng.below(3));
            b[k] = Exponent(rng.below(3));
        }
        if (a.is_one() || b.is_one())
            continue;
        const IrreducibleComponent qa(a), qb(b);
        CHECK(component_leq(qa, qb) == ideal_leq(qa.as_ideal(), qb.as_ideal()));
    }
}

TEST_CASE("irreducible_decomposition of an irreducible ideal") {
    const auto d = irreducible_decomposition(ideal("(x1^2, x2)"));
    REQUIRE(d.size() == 1);
    CHECK(d[0] == IrreducibleComponent{2, 1});
}

TEST_CASE("irreducible_decomposition of (x1^2*x2, x1*x3)") {
    const auto i = ideal("(x1^2*x2, x1*x3)");
    const std::vector<Monomial> frozen{{0, 1, 1}, {1, 0, 0}, {2, 0, 1}};
    CHECK(oracle::decomposition(i) == frozen);
    const auto d = irreducible_decomposition(i);
    CHECK(oracle::exps_of(d) == frozen);
    check_irredundant(d, i);
}

TEST_CASE("irreducible_decomposition recovers two disjoint components") {
    const auto i = ideal("(x1^2*x3^2, x1^2*x4^2, x2^2*x3^2, x2^2*x4^2)");
    const auto d = irreducible_decomposition(i);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == IrreducibleComponent{0, 0, 2, 2});
    CHECK(d[1] == IrreducibleComponent{2, 2, 0, 0});
}

TEST_CASE("irreducible_decomposition rejects degenerate ideals") {
    CHECK(error_code_of([] { irreducible_decomposition(MonomialIdeal::zero(2)); }) ==
          ErrorCode::degenerate_ideal);
    CHECK(error_code_of([] { irreducible_decomposition(MonomialIdeal::unit(2)); }) ==
          ErrorCode::degenerate_ideal);
}

TEST_CASE("component cap") {
    Caps caps;
    caps.max_components = 2;
    CHECK(error_code_of([&] { irreducible_decomposition(ideal("(x1*x2, x2*x3, x1*x3)"), caps); }) ==
          ErrorCode::cap_exceeded);
}

TEST_CASE("irredundantize") {
    auto d = irredundantize({{1, 0}, {1, 1}}, 2);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == IrreducibleComponent{1, 0});
    const std::vector<IrreducibleComponent> clean{{0, 1, 1}, {1, 0, 0}, {2, 0, 1}};
    const auto kept = irredundantize(clean, 3);
    CHECK(std::vector(kept.components().begin(), kept.components().end()) == clean);
    // raw split of x1^2*x2 gives (x1^2, x1*x3) and (x2, x1*x3), whose components are
    // (x1) (x1^2,x3) (x1,x2) (x2,x3)
    auto raw = irredundantize({{1, 0, 0}, {2, 0, 1}, {1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(oracle::exps_of(raw) == std::vector<Monomial>{{0, 1, 1}, {1, 0, 0}, {2, 0, 1}});
    CHECK(error_code_of([] { irredundantize({}, 2); }) == ErrorCode::invalid_argument);
}

TEST_CASE("recompose") {
    CHECK(recompose(irredundantize({{2, 1}}, 2)) == ideal("(x1^2, x2)"));
    CHECK(recompose(irredundantize({{2, 2, 0, 0}, {0, 0, 2, 2}}, 4)) ==
          ideal("(x1^2*x3^2, x1^2*x4^2, x2^2*x3^2, x2^2*x4^2)"));
    CHECK(recompose(Decomposition(3)).is_unit());
}

TEST_CASE("decomposition matches the incremental oracle and round-trips") {
    SplitMix64 rng(77);
    const RandomBounds bounds{5, 5, 4};
    for (int trial = 0; trial < 400; ++trial) {
        const auto i = random_ideal(rng, bounds);
        const auto d = irreducible_decomposition(i);
        CAPTURE(render(i));
        CHECK(oracle::exps_of(d) == oracle::decomposition(i));
        check_irredundant(d, i);
        // components are irreducible and distinct
        CHECK(std::adjacent_find(d.components().begin(), d.components().end()) ==
              d.components().end());
    }
}

TEST_CASE("decomposition ignores generator order") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = random_ideal(rng, {4, 5, 3});
        std::vector<Monomial> gens(i.generators().begin(), i.generators().end());
        for (std::size_t k = gens.size(); k > 1; --k)
            std::swap(gens[k - 1], gens[rng.below(k)]);
        // redundant extra generators must not matter either
        gens.push_back(lcm(gens.front(), gens.back()));
        const MonomialIdeal shuffled(i.ambient(), gens);
        CHECK(irreducible_decomposition(shuffled) == irreducible_decomposition(i));
        const auto d = irreducible_decomposition(i);
        std::vector<IrreducibleComponent> comps(d.components().begin(), d.components().end());
        std::reverse(comps.begin(), comps.end());
        CHECK(irredundantize(comps, i.ambient()) == d);
    }
}

TEST_CASE("squarefree ideals decompose into their minimal primes") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = random_ideal(rng, {5, 5, 1});
        const auto d = irreducible_decomposition(i);
        for (std::size_t a = 0; a < d.size(); ++a) {
            CHECK(d[a] == d[a].radical());
            for (std::size_t b = 0; b < d.size(); ++b)
                if (a != b)
                    CHECK_FALSE(d[a].support().is_subset_of(d[b].support()));
        }
    }
}
