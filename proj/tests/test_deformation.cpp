#include "oracles.hpp"
#include "support.hpp"

#include "monosize/deformation.hpp"
#include "monosize/random.hpp"
#include "monosize/size.hpp"

using namespace monosize;
using testing::error_code_of;
using testing::ideal;

namespace {

// x, y, z, t, w are x1 .. x5
const char *const base_ideal = "(x1*x2*x4, x1*x2*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x3*x4*x5)";
const char *const first_image = "(x1*x2*x4, x1*x2*x5, x1*x4^3*x5, x2*x3*x4^2, x2*x3*x5, x3*x4*x5)";
const char *const second_image =
    "(x1^3*x2^4*x4, x1^2*x2^2*x5, x1*x4^3*x5^3, x2^3*x3*x4^2, x2*x3^2*x5^2, x3^3*x4*x5^4)";

// canonical generator order: ztw yzw yzt xtw xyw xyt
const DeformationVectors first_eps{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0},
                                   {0, 0, 0, 2, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
const DeformationVectors second_eps{{0, 0, 2, 0, 3}, {0, 0, 1, 0, 1}, {0, 2, 0, 1, 0},
                                    {0, 0, 0, 2, 2}, {1, 1, 0, 0, 0}, {2, 3, 0, 0, 0}};

/// Literal reading of the MSY condition using the library-free helpers below.
bool oracle_generic(const MonomialIdeal &i) {
    const auto g = i.generators();
    const std::size_t n = i.ambient();
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            bool tie = false;
            for (std::size_t k = 0; k < n; ++k)
                tie = tie || (g[a][k] == g[b][k] && g[a][k] > 0);
            if (!tie)
                continue;
            Monomial l(n);
            for (std::size_t k = 0; k < n; ++k)
                l[k] = std::max(g[a][k], g[b][k]);
            bool found = false;
            for (std::size_t c = 0; c < g.size() && !found; ++c) {
                if (c == a || c == b)
                    continue;
                bool strict = true;
                for (std::size_t k = 0; k < n; ++k) {
                    if (l[k] == 0)
                        continue;
                    Monomial q = l;
                    --q[k];
                    for (std::size_t s = 0; s < n; ++s)
                        strict = strict && g[c][s] <= q[s];
                }
                found = strict;
            }
            if (!found)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("worked deformation example") {
    const auto i = ideal(base_ideal);
    REQUIRE(i.size() == 6);
    CHECK(render(i.generators()[0]) == "x3*x4*x5");
    CHECK(render(i.generators()[5]) == "x1*x2*x4");

    CHECK(render(irreducible_decomposition(i), true) == "(x4, x5) & (x2, x5) & (x2, x4) & (x1, x3)");
    CHECK(validate_deformation(i, first_eps));
    CHECK(validate_deformation(i, second_eps));
    const auto e1 = apply_deformation(i, first_eps);
    const auto e2 = apply_deformation(i, second_eps);
    CHECK(e1 == ideal(first_image));
    CHECK(e2 == ideal(second_image));

    CHECK_FALSE(is_generic(i));
    CHECK_FALSE(is_generic(e1));
    CHECK(is_generic(e2));
    CHECK_FALSE(is_strongly_generic(e1));
    // x^3y^4t and z^3tw^4 share the t-degree 1
    CHECK_FALSE(is_strongly_generic(e2));

    const auto r1 = size_under_deformation(i, first_eps);
    CHECK(r1.size_i == 2);
    CHECK(r1.size_eps == 1);
    CHECK(r1.inequality_holds);
    const auto r2 = size_under_deformation(i, second_eps);
    CHECK(r2.size_eps == 1);
    CHECK(r2.generic);
}

TEST_CASE("validate_deformation") {
    const auto i = ideal("(x1*x2, x2^2)");
    CHECK(validate_deformation(i, zero_deformation(i)));
    // canonical order is x2^2, x1*x2; raising x1*x2 in x2 ties the order
    CHECK_FALSE(validate_deformation(i, {{0, 0}, {0, 1}}));
    CHECK(validate_deformation(i, {{0, 1}, {0, 1}}));
    // zero pattern
    CHECK_FALSE(validate_deformation(i, {{1, 0}, {0, 0}}));
    CHECK(error_code_of([&] { validate_deformation(i, {{0, 0}}); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([&] { validate_deformation(i, {{0, 0}, {0}}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("apply_deformation") {
    const auto i = ideal("(x1*x2, x2^2, x1^3)");
    CHECK(apply_deformation(i, zero_deformation(i)) == i);
    CHECK(error_code_of([&] { apply_deformation(i, {{0, 0}, {0, 0}, {5, 5}}); }) ==
          ErrorCode::invalid_deformation);
}

TEST_CASE("genericity edge cases") {
    CHECK(is_generic(ideal("(x1^2*x2)")));
    CHECK(is_strongly_generic(ideal("(x1^2*x2)")));
    CHECK(is_strongly_generic(ideal("(x1*x2, x1^2)")));
    CHECK_FALSE(is_strongly_generic(ideal("(x1*x2, x1*x3)")));
    CHECK(is_strongly_generic(ideal("(x1*x2^2, x1^2*x2)")));
}

TEST_CASE("generic deformations of small ideals") {
    const auto i = ideal("(x1*x2, x1^2)");
    const auto eps = find_generic_deformation(i, 0);
    CHECK(validate_deformation(i, eps));
    CHECK(is_strongly_generic(apply_deformation(i, eps)));

    const auto sg = ideal("(x1*x2^2, x1^2*x2)");
    CHECK(find_generic_deformation(sg, 5) == zero_deformation(sg));

    const auto base = ideal(base_ideal);
    const auto found = find_generic_deformation(base, 0);
    CHECK(validate_deformation(base, found));
    CHECK(is_strongly_generic(apply_deformation(base, found)));
    CHECK(find_generic_deformation(base, 0) == found);
}

TEST_CASE("genericity and synthesized deformations on random ideals") {
    SplitMix64 rng(53);
    int strict = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto i = random_ideal(rng, {5, 5, 3});
        CAPTURE(render(i));
        CHECK(is_generic(i) == oracle_generic(i));
        if (is_strongly_generic(i)) {
            CHECK(is_generic(i));
            CHECK(find_generic_deformation(i, trial) == zero_deformation(i));
        }
        const auto eps = find_generic_deformation(i, trial);
        CHECK(validate_deformation(i, eps));
        const auto deformed = apply_deformation(i, eps);
        CHECK(deformed.size() == i.size());
        CHECK(is_strongly_generic(deformed));
        CHECK(oracle_generic(deformed));
        // every bump stays within the number of generators
        for (const auto &row : eps)
            for (auto e : row)
                CHECK(e < i.size());
        const auto r = size_under_deformation(i, eps);
        CHECK(r.generic);
        CHECK(r.size_i >= r.size_eps);
        strict += r.size_i > r.size_eps;
    }
    CHECK(strict > 0);
}
