#include "rootfold/folding.hpp"

#include <doctest.h>

using namespace rootfold;

namespace {

std::vector<QMat> flip_group(const RootDatum& d, const std::vector<int>& perm) {
    return permutation_matrices(generate_group(d, {automorphism_from_permutation(d, perm)}));
}

}  // namespace

TEST_CASE("A2n flip folds to (B, C, B, C)") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        RootDatum d = build_datum("A" + std::to_string(2 * n), Isogeny::SimplyConnected);
        std::vector<int> perm;
        for (int i = 2 * n - 1; i >= 0; --i) perm.push_back(i);
        auto group = flip_group(d, perm);
        RootSystem s = root_system_of(d);
        const std::string b = n == 1 ? "A1" : "B" + std::to_string(n);
        const std::string c = n == 1 ? "A1" : "C" + std::to_string(n);
        CHECK(fold(s, group, FoldOp::Restriction).system.type() == b);
        CHECK(fold(s, group, FoldOp::ModifiedRestriction).system.type() == c);
        CHECK(fold(s, group, FoldOp::Norm).system.type() == b);
        CHECK(fold(s, group, FoldOp::ModifiedNorm).system.type() == c);
    }
}

TEST_CASE("odd flips and triality") {
    RootDatum a3 = build_datum("A3", Isogeny::SimplyConnected);
    DualityReport r = verify_duality(root_system_of(a3), flip_group(a3, {2, 1, 0}));
    CHECK(r.ok());
    CHECK(r.norm_type == "B2");
    CHECK(r.restriction_type == "C2");

    RootDatum d4 = build_datum("D4", Isogeny::SimplyConnected);
    DualityReport t = verify_duality(root_system_of(d4), flip_group(d4, {2, 1, 3, 0}));
    CHECK(t.ok());
    CHECK(t.group_order == 3);
    CHECK(t.fixed_weyl_order == 12);
}

TEST_CASE("duality holds for every subgroup in small ranks") {
    for (const char* type : {"A2", "A3", "A4", "D4", "A2xA2", "A1xA1xA1"}) {
        CAPTURE(type);
        RootDatum d = build_datum(type, Isogeny::SimplyConnected);
        RootSystem s = root_system_of(d);
        for (const auto& gens : automorphism_subgroups(d.cartan())) {
            std::vector<DatumAutomorphism> autos;
            for (const auto& p : gens) autos.push_back(automorphism_from_permutation(d, p));
            CHECK(verify_duality(s, permutation_matrices(generate_group(d, autos))).ok());
        }
    }
}

TEST_CASE("dual system of B is C") {
    RootSystem b3 = root_system_of(build_datum("B3", Isogeny::SimplyConnected));
    CHECK(dual_system(b3).type() == "C3");
    CHECK(weyl_order(b3) == 48);
}
