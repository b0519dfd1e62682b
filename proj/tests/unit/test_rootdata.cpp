#include "rootfold/rootdata.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("positive root counts and Weyl group orders") {
    struct Row {
        const char* type;
        int positive;
        std::size_t order;
    };
    for (Row r : {Row{"A2", 3, 6}, Row{"B3", 9, 48}, Row{"C3", 9, 48}, Row{"D4", 12, 192}, Row{"G2", 6, 12},
                  Row{"F4", 24, 1152}, Row{"E6", 36, 51840}}) {
        CAPTURE(r.type);
        RootDatum d = build_datum(r.type, Isogeny::SimplyConnected);
        CHECK(d.num_positive == r.positive);
        CHECK(weyl_group_order(d) == r.order);
    }
}

TEST_CASE("dual datum swaps roots and coroots") {
    for (const char* t : {"B3", "G2", "A3", "C2"}) {
        CAPTURE(t);
        RootDatum d = build_datum(t, Isogeny::SimplyConnected);
        RootDatum e = dual_datum(d);
        CHECK(e.rank == d.rank);
        CHECK(transpose(e.cartan()) == d.cartan());
        for (int i = 0; i < d.semisimple_rank; ++i) {
            CHECK(e.simple_root(i) == d.simple_coroot(i));
            CHECK(e.simple_coroot(i) == d.simple_root(i));
        }
    }
}

TEST_CASE("classification names") {
    CHECK(classify_cartan(cartan_matrix_of_type("B3")).type == "B3");
    CHECK(classify_cartan(cartan_matrix_of_type("C3")).type == "C3");
    CHECK(classify_cartan(cartan_matrix_of_type("A2xG2")).type == "A2xG2");
    CHECK(classify_cartan(cartan_matrix_of_type("E6")).type == "E6");
    CHECK_THROWS_AS(classify_cartan({{2, -3}, {-3, 2}}), InputError);
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(cartan_matrix_of_type("D4")).size() == 6);
    CHECK(diagram_automorphisms(cartan_matrix_of_type("A3")).size() == 2);
    CHECK(diagram_automorphisms(cartan_matrix_of_type("B3")).size() == 1);
    RootDatum d = build_datum("A3", Isogeny::SimplyConnected);
    CHECK_THROWS_AS(automorphism_from_permutation(d, {1, 0, 2}), InputError);
    DatumAutomorphism flip = automorphism_from_permutation(d, {2, 1, 0});
    CHECK(compose(flip, flip).is_identity());
    // The dual matrix is the inverse transpose.
    CHECK(matmul(transpose(flip.on_lattice), flip.on_dual) == identity_matrix(d.rank));
}

TEST_CASE("Weyl orbit sizes and dominant representatives") {
    RootDatum d = build_datum("A2", Isogeny::GeneralLinear);
    CHECK(weyl_orbit(d, {1, 0, 0}).size() == 3);
    CHECK(weyl_orbit(d, {2, 1, 0}).size() == 6);
    CHECK(dominant_representative(d, {0, 2, 1}).dominant == IVec{2, 1, 0});
    CHECK(dominance_leq(d, {1, 1, 1}, {2, 1, 0}));
    CHECK_FALSE(dominance_leq(d, {2, 1, 0}, {1, 1, 1}));
    CHECK(weight_set(d, {2, 1, 0}).size() == 7);
}
