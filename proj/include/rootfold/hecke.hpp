#pragma once

#include "rootfold/affine.hpp"
#include "rootfold/characters.hpp"
#include "rootfold/cyclotomic.hpp"

#include <functional>
#include <map>
#include <string>

namespace rootfold {

// Laurent polynomial in v = q^{1/2} with integer coefficients.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Int& c) {
        if (c != 0) terms_[0] = c;
    }
    static Laurent monomial(std::int64_t exponent, const Int& c = 1);

    const std::map<std::int64_t, Int>& terms() const { return terms_; }
    Int coefficient(std::int64_t e) const;
    bool is_zero() const { return terms_.empty(); }
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    Laurent bar() const;  // v -> v^{-1}
    Laurent shifted(std::int64_t k) const;  // times v^k
    Int at_one() const;
    bool in_negative_part() const;  // all exponents < 0
    std::string to_string() const;

private:
    std::map<std::int64_t, Int> terms_;
    void add_term(std::int64_t e, const Int& c);
};

using HeckeElement = std::map<AffineElement, Laurent>;

// Iwahori-Hecke algebra of the Frobenius-fixed group with weights L. Works in
// the normalized basis t_w = v^{-L(w)} T_w, where t_s^2 = (v_s - v_s^{-1}) t_s + 1
// with v_s = v^{L(s)}; the T-basis product is also available.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const FixedAffineGroup& w, std::size_t interval_cap = 100000);

    const FixedAffineGroup& group() const { return w_; }
    HeckeElement standard(const AffineElement& x) const { return {{x, Laurent(Int(1))}}; }
    // t_s * a, in the normalized basis.
    HeckeElement left_multiply(int s, const HeckeElement& a) const;
    // Product in the T-basis: T_s^2 = (q^{L(s)} - 1) T_s + q^{L(s)}.
    HeckeElement multiply_standard(const HeckeElement& a, const HeckeElement& b) const;
    // Bar involution, in the normalized basis.
    HeckeElement bar(const HeckeElement& a) const;

    // C_y = sum_x p_{x,y} t_x with p_{y,y} = 1 and p_{x,y} in v^{-1} Z[v^{-1}].
    const HeckeElement& canonical(const AffineElement& y);
    // P_{x,y} = v^{L(y) - L(x)} p_{x,y}. Throws InputError unless x <= y.
    Laurent kl_polynomial(const AffineElement& x, const AffineElement& y);
    bool canonical_is_bar_invariant(const AffineElement& y);

private:
    const FixedAffineGroup& w_;
    std::size_t cap_;
    std::map<AffineElement, HeckeElement> memo_;
};

using BernsteinElement = std::map<CoinvariantElement, Cyclotomic>;

struct GeometricTerm {
    CoinvariantElement weight;
    Cyclotomic trace;                // tr(Frobenius | V_{lambda,1}(weight))
    bool has_kl = false;
    Laurent kl;                      // P_{w_weight, w_lambda}
    Int kl_at_one = 0;
};

struct GeometricBasisElement {
    CoinvariantElement highest;
    std::vector<GeometricTerm> terms;  // dominant Frobenius-fixed weights, highest first
    bool routes_agree = true;
    bool top_coefficient_one = false;
    BernsteinElement element() const;
};

// Dominant Frobenius-fixed weights of V_highest, ordered by height then lexicographically (descending).
std::vector<CoinvariantElement> fixed_dominant_weights(const FixedPointDatum& h, const CoinvariantElement& highest);

// Route 1 uses twining characters; if hecke is non-null the KL route is run too
// and compared term by term.
GeometricBasisElement geometric_basis(const FixedPointDatum& h, const CoinvariantElement& highest,
                                      HeckeAlgebra* hecke = nullptr);

// Sum of c_nu times the sum of s over the W_0-orbit of nu.
Cyclotomic evaluate_bernstein(const FixedAffineGroup& w, const BernsteinElement& elt,
                              const std::function<Cyclotomic(const CoinvariantElement&)>& s);

std::vector<CoinvariantElement> fixed_weyl_orbit(const FixedAffineGroup& w, const CoinvariantElement& lam);

}  // namespace rootfold
