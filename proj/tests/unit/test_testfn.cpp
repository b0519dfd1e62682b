#include "helpers.hpp"

#include "rootfold/testfn.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("split central functions have weight-multiplicity coefficients") {
    LocalGroupDatum gl3 = local("A2", Isogeny::GeneralLinear, {});
    FixedPointDatum h = fixed_point_datum(gl3);
    for (const auto& mu : rational_dominant_envelope(h, 6)) {
        CAPTURE(to_string(mu));
        CentralFunction c = central_function(gl3, mu);
        CHECK(c.ok());
        CHECK(matches_weight_multiplicities(gl3, mu, c.geometric));
    }
    CentralFunction adj = central_function(gl3, {2, 1, 0});
    CHECK(adj.geometric.at(h.project({1, 1, 1})) == Cyclotomic(Int(2)));
    CHECK_THROWS_AS(matches_weight_multiplicities(local("A2", Isogeny::SimplyConnected, {}, {1, 0}), {1, 1}, adj.geometric),
                    InputError);
}

TEST_CASE("unramified SU(3)") {
    LocalGroupDatum su3 = local("A2", Isogeny::SimplyConnected, {}, {1, 0});
    FixedPointDatum h = fixed_point_datum(su3);
    CentralFunction c = central_function(su3, {1, 1});
    CHECK(c.ok());
    // The trace on the zero weight space of the adjoint representation vanishes.
    CHECK(c.geometric.size() == 1);
    CentralFunction c2 = central_function(su3, {2, 2});
    CHECK(c2.ok());
    CHECK(c2.geometric.at(h.project({0, 0})) == Cyclotomic(Int(1)));
}

TEST_CASE("ramified tower for U(3)") {
    TowerConfig cfg;
    cfg.label = "u3";
    cfg.base = local("A2", Isogeny::GeneralLinear, {{1, 0}});
    CHECK(ramification_index(cfg) == 2);
    FixedPointDatum base = fixed_point_datum(unramified_level(cfg, 1));
    for (int j : {1, 2}) {
        TestFunction tf = test_function(cfg, {1, 0, 0}, j);
        CHECK(tf.ok());
        CHECK_FALSE(tf.degenerate);
        ZExpansion expected{{base.project({1, 0, 0}), Cyclotomic(Int(1))}, {base.project({0, 1, 0}), Cyclotomic(Int(1))}};
        CHECK(tf.expansion == expected);
        CHECK(ramified_descent_check(cfg, {1, 0, 0}, j).ok());
    }
    CHECK(ramified_descent_check(cfg, {0, 0, 0}).ok());
    CHECK(ramified_descent_check(cfg, {2, 1, 0}).ok());
}

TEST_CASE("degenerate tower reproduces the central function") {
    TowerConfig cfg;
    cfg.label = "su3";
    cfg.base = local("A2", Isogeny::SimplyConnected, {}, {1, 0});
    cfg.sub_inertia_generators = cfg.base.inertia_generators;
    for (int j : {1, 2}) {
        TestFunction tf = test_function(cfg, {1, 1}, j);
        CHECK(tf.degenerate);
        REQUIRE(tf.matches_central_function.has_value());
        CHECK(*tf.matches_central_function);
        CHECK(tf.ok());
    }
}

TEST_CASE("tower validation") {
    TowerConfig cfg;
    cfg.base = local("A2", Isogeny::SimplyConnected, {}, {1, 0});
    cfg.sub_inertia_generators = {automorphism_from_permutation(cfg.base.datum, {1, 0})};
    CHECK_THROWS_AS(validate_tower(cfg), InputError);
    cfg.sub_inertia_generators.clear();
    cfg.residue_degree = 0;
    CHECK_THROWS_AS(validate_tower(cfg), InputError);
}
