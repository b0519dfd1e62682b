#include "helpers.hpp"

#include "rootfold/affine.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("admissible set sizes") {
    struct Row {
        LocalGroupDatum lgd;
        IVec mu;
        std::size_t size;
    };
    std::vector<Row> rows = {
        {local("A2", Isogeny::GeneralLinear, {}), {1, 0, 0}, 7},
        {local("A3", Isogeny::GeneralLinear, {}), {1, 1, 0, 0}, 33},
        {local("B2", Isogeny::Adjoint, {}), {1, 0}, 13},
        {local("A1", Isogeny::Adjoint, {}), {1}, 3},
    };
    for (auto& r : rows) {
        CAPTURE(r.lgd.label);
        ExtendedAffineWeylGroup g(r.lgd);
        AffineSet adm = admissible_set(g, r.mu);
        CHECK(adm.size() == r.size);
        CHECK(adm == admissible_set_absolute(g, r.mu));
        ExtremalReport e = extremal_translations(g, r.mu);
        CHECK(e.matches);
        CHECK(e.dominance_bridge);
    }
}

TEST_CASE("length, words and inverses are consistent") {
    ExtendedAffineWeylGroup g(local("A2", Isogeny::SimplyConnected, {{1, 0}}));
    AffineSet interval = g.lower_interval(g.translation(image_in_coinvariants(g, {2, 2})));
    CHECK(interval.size() > 5);
    for (const auto& x : interval) {
        AffineElement omega;
        auto word = g.reduced_word(x, &omega);
        CHECK(static_cast<std::int64_t>(word.size()) == g.length(x));
        CHECK(g.length(omega) == 0);
        AffineElement y = omega;
        for (int s : word) y = g.times_simple(y, s);
        CHECK(y == x);
        CHECK(g.length(g.inverse(x)) == g.length(x));
        CHECK(g.multiply(x, g.inverse(x)) == g.identity());
        CHECK(g.bruhat_leq(x, x));
        CHECK(g.bruhat_leq(omega, x));
    }
}

TEST_CASE("torsion in the coinvariants is central and of length zero") {
    ExtendedAffineWeylGroup g(local("A2", Isogeny::GeneralLinear, {{1, 0}}));
    REQUIRE(g.lattice().torsion_factors.size() == 1);
    CoinvariantElement t = g.lattice().project({0, 1, 0});
    AffineElement x = g.translation(t);
    CHECK(g.length(x) == 0);
    for (int s = 0; s < g.num_simple(); ++s)
        CHECK(g.multiply(x, g.simple_reflection(s)) == g.multiply(g.simple_reflection(s), x));
    CHECK(admissible_set(g, {1, 0, 0}).size() == 5);
}

TEST_CASE("fixed affine group of unramified SU(3)") {
    ExtendedAffineWeylGroup g(local("A2", Isogeny::SimplyConnected, {}, {1, 0}));
    FixedAffineGroup f(g);
    REQUIRE(f.num_simple() == 2);
    CHECK(f.weight(0) == 3);
    CHECK(f.weight(1) == 1);
    // Infinite dihedral: the Coxeter matrix entry is 0 for infinity.
    CHECK(f.coxeter_matrix()[0][1] == 0);
    for (int s = 0; s < f.num_simple(); ++s) CHECK(f.is_fixed(f.simple(s)));
}
