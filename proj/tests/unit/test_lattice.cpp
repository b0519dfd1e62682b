#include "rootfold/lattice.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace rootfold;

TEST_CASE("checked arithmetic reports overflow as a resource error") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked::add(big, 1), ResourceError);
    CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), ResourceError);
    CHECK(checked::mul(-3, 7) == -21);
}

TEST_CASE("smith form of a small matrix") {
    SmithForm s = smith_normal_form(to_big({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    REQUIRE(s.diagonal.size() == 3);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 6);
    CHECK(s.diagonal[2] == 12);
}

TEST_CASE("smith form diagonal divides and reconstructs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
        IMat m(rows, IVec(cols));
        for (auto& r : m)
            for (auto& x : r) x = entry(rng);
        SmithForm s = smith_normal_form(to_big(m));
        // left * m * right is diagonal.
        BigMat bm = to_big(m);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Int acc = 0;
                for (int k = 0; k < rows; ++k)
                    for (int l = 0; l < cols; ++l) acc += s.left[i][k] * bm[k][l] * s.right[l][j];
                Int expected = (i == j && i < static_cast<int>(s.diagonal.size())) ? s.diagonal[i] : Int(0);
                CHECK(acc == expected);
            }
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
}

TEST_CASE("integer kernel") {
    IMat k = integer_kernel({{1, 1, 1}});
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("coinvariants of the flip on Z^3 have 2-torsion") {
    // (x1, x2, x3) -> (-x3, -x2, -x1)
    IMat flip{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
    CoinvariantLattice c = coinvariants(LatticeAction::generate(3, {flip}));
    CHECK(c.free_rank == 1);
    REQUIRE(c.torsion_factors.size() == 1);
    CHECK(c.torsion_factors[0] == 2);
    // e2 is 2-torsion, and e1 is identified with -e3.
    CoinvariantElement e2 = c.project({0, 1, 0});
    CHECK(c.scale(2, e2) == c.zero());
    CHECK(e2 != c.zero());
    CHECK(c.project({1, 0, 0}) == c.project({0, 0, -1}));
    // Lift then project is the identity.
    for (const auto& y : std::vector<IVec>{{3, -1, 2}, {0, 1, 0}, {-2, 5, 1}}) {
        CoinvariantElement e = c.project(y);
        CHECK(c.project(c.lift(e)) == e);
    }
}

TEST_CASE("coinvariants of a permutation action are torsion free") {
    IMat swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CoinvariantLattice c = coinvariants(LatticeAction::generate(3, {swap}));
    CHECK(c.free_rank == 2);
    CHECK(c.torsion_free());
    CHECK(invariants(LatticeAction::generate(3, {swap})).size() == 2);
}
