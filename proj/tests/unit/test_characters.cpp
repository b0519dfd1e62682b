#include "helpers.hpp"

#include "../support/sl3_oracle.hpp"
#include "rootfold/characters.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
    for (const char* type : {"A2", "B3", "G2", "D4", "F4"}) {
        CAPTURE(type);
        RootDatum d = build_datum(type, Isogeny::SimplyConnected);
        for (const auto& mu : dominant_envelope(d, 14)) {
            CAPTURE(to_string(mu));
            CHECK(MultiplicityTable(d, mu).dimension() == weyl_dimension(d, mu));
        }
    }
}

TEST_CASE("small representations") {
    RootDatum a2 = build_datum("A2", Isogeny::Adjoint);
    CHECK(weyl_dimension(a2, {1, 1}) == 8);
    CHECK(weight_multiplicity(a2, {1, 1}, {0, 0}) == 2);
    RootDatum e6 = build_datum("E6", Isogeny::SimplyConnected);
    IVec w1(6, 0);
    w1[0] = 1;
    CHECK(weyl_dimension(e6, w1) == 27);
    RootDatum g2 = build_datum("G2", Isogeny::SimplyConnected);
    CHECK(weyl_dimension(g2, {1, 0}) * weyl_dimension(g2, {0, 1}) == 7 * 14);
}

TEST_CASE("twining character of the adjoint representation matches explicit matrices") {
    RootDatum g = build_datum("A2", Isogeny::SimplyConnected);
    RootDatum dual = dual_datum(g);
    DatumAutomorphism sigma = dual_automorphism(automorphism_from_permutation(g, {1, 0}));
    IVec theta = vadd(dual.simple_root(0), dual.simple_root(1));
    TwiningCharacter tw(dual, sigma, theta);
    for (const auto& [w, trace] : sl3_oracle::fixed_weight_traces()) {
        IVec weight = vadd(vscale(w.first, dual.simple_root(0)), vscale(w.second, dual.simple_root(1)));
        CAPTURE(to_string(weight));
        CHECK(tw(weight) == trace);
    }
    CHECK(tw.folded().datum.semisimple_rank == 1);
}

TEST_CASE("fixed-point data have the expected types") {
    struct Row {
        LocalGroupDatum lgd;
        const char* type;
    };
    for (auto& r : std::vector<Row>{{local("A2", Isogeny::SimplyConnected, {{1, 0}}), "A1"},
                                    {local("A4", Isogeny::SimplyConnected, {{3, 2, 1, 0}}), "B2"},
                                    {local("D4", Isogeny::Adjoint, {{2, 1, 3, 0}}), "G2"},
                                    {local("E6", Isogeny::SimplyConnected, {{5, 1, 4, 3, 2, 0}}), "F4"}}) {
        FixedPointDatum h = fixed_point_datum(r.lgd);
        CHECK(classify_cartan(h.datum.cartan()).type == r.type);
        CHECK(h.matches_reduced_images);
    }
}

TEST_CASE("branching for the ramified unitary group with torsion") {
    FixedPointDatum h = fixed_point_datum(local("A2", Isogeny::GeneralLinear, {{1, 0}}));
    auto env = rational_dominant_envelope(h, 8);
    CHECK(env == std::vector<IVec>{{0, 0, 0}, {1, 0, -1}, {2, 0, -2}});
    for (const auto& mu : env) {
        BranchingResult b = branch(h, mu);
        CHECK(b.ok());
    }
}

TEST_CASE("weight equality and invariants bookkeeping") {
    FixedPointDatum h = fixed_point_datum(local("A4", Isogeny::SimplyConnected, {{3, 2, 1, 0}}));
    for (const auto& mu : rational_dominant_envelope(h, 12)) {
        CAPTURE(to_string(mu));
        CHECK(weight_equality_check(h, mu));
        CHECK(branch(h, mu).ok());
    }
}
