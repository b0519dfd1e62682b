#include "helpers.hpp"

#include "rootfold/echelonnage.hpp"

#include <doctest.h>

using namespace rootfold;

namespace {

std::vector<std::int64_t> all_parameters(const Echelonnage& e) {
    std::vector<std::int64_t> v = e.parameters.finite;
    v.insert(v.end(), e.parameters.affine.begin(), e.parameters.affine.end());
    return v;
}

bool all_checks(const Echelonnage& e) {
    return e.breve_duality && e.relative_dual_is_norm && e.relative_tilde_dual_is_mod_norm && e.halving_matches &&
           e.non_divisible_is_tilde && e.non_multipliable_is_relative && e.special_criteria_agree;
}

}  // namespace

TEST_CASE("unramified odd unitary groups carry parameters 3 and 1") {
    Echelonnage a2 = compute_echelonnage(local("A2", Isogeny::SimplyConnected, {}, {1, 0}));
    CHECK(all_checks(a2));
    CHECK(all_parameters(a2) == std::vector<std::int64_t>{3, 1});
    CHECK(a2.special == std::vector<bool>{true});
    CHECK(a2.union_type == "BC1");

    Echelonnage a4 = compute_echelonnage(local("A4", Isogeny::SimplyConnected, {}, {3, 2, 1, 0}));
    CHECK(all_checks(a4));
    CHECK(all_parameters(a4) == std::vector<std::int64_t>{2, 3, 1});
    CHECK(a4.relative.system.type() == "C2");
}

TEST_CASE("other quasi-split forms") {
    Echelonnage d4 = compute_echelonnage(local("D4", Isogeny::Adjoint, {}, {2, 1, 3, 0}));
    CHECK(all_checks(d4));
    CHECK(all_parameters(d4) == std::vector<std::int64_t>{3, 1, 1});

    Echelonnage e6 = compute_echelonnage(local("E6", Isogeny::SimplyConnected, {}, {5, 1, 4, 3, 2, 0}));
    CHECK(all_checks(e6));
    CHECK(all_parameters(e6) == std::vector<std::int64_t>{2, 1, 2, 1, 1});

    Echelonnage a3 = compute_echelonnage(local("A3", Isogeny::SimplyConnected, {}, {2, 1, 0}));
    CHECK(all_checks(a3));
    CHECK(all_parameters(a3) == std::vector<std::int64_t>{2, 1, 1});
}

TEST_CASE("ramified groups and split groups have equal parameters") {
    for (auto lgd : {local("A2", Isogeny::SimplyConnected, {{1, 0}}), local("A4", Isogeny::SimplyConnected, {{3, 2, 1, 0}}),
                     local("B3", Isogeny::Adjoint, {}), local("E6", Isogeny::SimplyConnected, {{5, 1, 4, 3, 2, 0}})}) {
        CAPTURE(lgd.label);
        Echelonnage e = compute_echelonnage(lgd);
        CHECK(all_checks(e));
        for (auto v : all_parameters(e)) CHECK(v == 1);
    }
}

TEST_CASE("parameter overrides replace folding values") {
    Echelonnage e = compute_echelonnage(local("A2", Isogeny::SimplyConnected, {}, {1, 0}), {{"s0", 5}});
    CHECK(all_parameters(e) == std::vector<std::int64_t>{3, 5});
    CHECK(e.folding_parameters.affine == std::vector<std::int64_t>{1});
}
