#include "rootfold/cyclotomic.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
}

TEST_CASE("roots of unity") {
    Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic z2 = z * z;
    CHECK(z * z2 == Cyclotomic(Int(1)));
    CHECK(Cyclotomic(Int(1)) + z + z2 == Cyclotomic(Int(0)));
    CHECK((z + z2).is_integer());
    CHECK((z + z2).as_integer() == -1);
    // Mixed orders meet in the common field.
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(Int(-1)));
    CHECK((i * z).order() % 12 == 0);
    CHECK(Cyclotomic::root_of_unity(6, 2) == z);
}

TEST_CASE("exact division and printing") {
    Cyclotomic a = Cyclotomic(Int(4), 3) + Cyclotomic::root_of_unity(3, 1) * Cyclotomic(Int(2));
    CHECK(a.divided_by(2) == Cyclotomic(Int(2), 3) + Cyclotomic::root_of_unity(3, 1));
    CHECK_THROWS_AS(a.divided_by(3), TheoremViolation);
    CHECK(Cyclotomic(Int(5), 3).to_string() == "5");
    CHECK(Cyclotomic::root_of_unity(3, 1).to_string() == "z3");
    CHECK((Cyclotomic(Int(1), 3) - Cyclotomic::root_of_unity(3, 1) * Cyclotomic(Int(2))).to_string() == "1 - 2*z3");
    auto v = Cyclotomic::root_of_unity(4, 1).approximate();
    CHECK(v.imag() == doctest::Approx(1.0));
}
