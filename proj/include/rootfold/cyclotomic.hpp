#pragma once

#include "rootfold/arith.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rootfold {

// Element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1).
// Values of different orders are compared and combined in the common
// cyclotomic field of the least common multiple.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Int(0)) {}
    explicit Cyclotomic(const Int& c, int order = 1);
    static Cyclotomic root_of_unity(int order, int k);

    int order() const { return order_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Cyclotomic promote(int order) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Exact division by a rational integer; throws TheoremViolation otherwise.
    Cyclotomic divided_by(const Int& d) const;
    bool is_zero() const;
    bool is_integer() const;
    Int as_integer() const;  // throws unless is_integer()
    // Integers print plainly; otherwise a polynomial in zN = exp(2 pi i / N).
    std::string to_string() const;
    std::complex<double> approximate() const;

private:
    int order_ = 1;
    std::vector<Int> coeffs_;
};

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(int n);

}  // namespace rootfold
