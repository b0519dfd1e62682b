#include "helpers.hpp"

#include "rootfold/hecke.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("Laurent polynomial arithmetic") {
    Laurent v = Laurent::monomial(1), vi = Laurent::monomial(-1);
    CHECK(v * vi == Laurent(Int(1)));
    CHECK((v + vi).bar() == v + vi);
    CHECK((v - vi).bar() == vi - v);
    CHECK(((v + Laurent(Int(1))) * (v - Laurent(Int(1)))).to_string() == "v^2 - 1");
    CHECK(vi.in_negative_part());
    CHECK_FALSE(Laurent(Int(1)).in_negative_part());
    CHECK((v * v + Laurent(Int(3))).at_one() == 4);
}

namespace {

struct Setup {
    LocalGroupDatum lgd;
    ExtendedAffineWeylGroup g;
    FixedAffineGroup f;
    FixedPointDatum h;
    HeckeAlgebra hecke;
    explicit Setup(LocalGroupDatum l) : lgd(std::move(l)), g(lgd), f(g), h(fixed_point_datum(lgd)), hecke(f) {}
    Laurent kl(const IVec& lower, const IVec& upper) {
        return hecke.kl_polynomial(f.max_double_coset(h.project(lower)), f.max_double_coset(h.project(upper)));
    }
};

}  // namespace

TEST_CASE("quadratic relation in the T-basis") {
    Setup s(local("A2", Isogeny::SimplyConnected, {}, {1, 0}));
    for (int i = 0; i < s.f.num_simple(); ++i) {
        const Int one = 1;
        HeckeElement t = s.hecke.standard(s.f.simple(i));
        HeckeElement sq = s.hecke.multiply_standard(t, t);
        const std::int64_t q = 2 * s.f.weight(i);
        CHECK(sq.at(s.f.simple(i)) == Laurent::monomial(q) - Laurent(one));
        CHECK(sq.at(s.g.identity()) == Laurent::monomial(q));
        CHECK(sq.size() == 2);
    }
}

TEST_CASE("split KL values are Lusztig q-analogues") {
    Setup s(local("A2", Isogeny::GeneralLinear, {}));
    // Zero weight of the adjoint representation: 1 + q.
    CHECK(s.kl({1, 1, 1}, {2, 1, 0}).to_string() == "v^2 + 1");
    CHECK(s.kl({2, 1, 1}, {2, 2, 0}).to_string() == "1");
    Setup b(local("B2", Isogeny::Adjoint, {}));
    CHECK(b.kl({0, 0}, {2, 0}).to_string() == "v^4 + 1");
}

TEST_CASE("unequal parameters for unramified SU(3)") {
    Setup s(local("A2", Isogeny::SimplyConnected, {}, {1, 0}));
    CHECK(s.kl({0, 0}, {1, 1}).to_string() == "-v^2 + 1");
    CHECK(s.kl({0, 0}, {2, 2}).to_string() == "v^4 - v^2 + 1");
    CHECK(s.kl({1, 1}, {2, 2}).to_string() == "-v^2 + 1");
    for (const auto& mu : rational_dominant_envelope(s.h, 8)) {
        AffineElement top = s.f.max_double_coset(s.h.project(mu));
        CHECK(s.hecke.canonical_is_bar_invariant(top));
        const HeckeElement& c = s.hecke.canonical(top);
        CHECK(c.at(top) == Laurent(Int(1)));
        for (const auto& [x, p] : c) {
            CHECK(s.f.bruhat_leq(x, top));
            if (x != top) CHECK(p.in_negative_part());
        }
    }
    CHECK_THROWS_AS(s.kl({1, 1}, {0, 0}), InputError);
}

TEST_CASE("geometric basis routes agree") {
    for (auto lgd : {local("A2", Isogeny::SimplyConnected, {}, {1, 0}), local("A3", Isogeny::SimplyConnected, {}, {2, 1, 0}),
                     local("A2", Isogeny::GeneralLinear, {{1, 0}}), local("B2", Isogeny::Adjoint, {})}) {
        CAPTURE(lgd.label);
        Setup s(lgd);
        for (const auto& mu : rational_dominant_envelope(s.h, 6)) {
            GeometricBasisElement gb = geometric_basis(s.h, s.h.project(mu), &s.hecke);
            CHECK(gb.routes_agree);
            CHECK(gb.top_coefficient_one);
        }
    }
}
