#pragma once

#include "rootfold/echelonnage.hpp"
#include "rootfold/lattice.hpp"

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rootfold {

// t_lambda * w with lambda in the coinvariant lattice and w an index into the
// relative finite Weyl group. Acts on the apartment by v -> lambda + w v.
struct AffineElement {
    CoinvariantElement translation;
    int finite = 0;

    bool operator==(const AffineElement& o) const { return finite == o.finite && translation == o.translation; }
    bool operator!=(const AffineElement& o) const { return !(*this == o); }
    bool operator<(const AffineElement& o) const {
        return translation != o.translation ? translation < o.translation : finite < o.finite;
    }
};

struct AffineElementHash {
    std::size_t operator()(const AffineElement& x) const noexcept {
        return hash_combine(CoinvariantHash{}(x.translation), static_cast<std::size_t>(x.finite));
    }
};

using AffineSet = std::unordered_set<AffineElement, AffineElementHash>;

// Element of the relative finite Weyl group, stored by its matrix on the
// cocharacter lattice and its induced action on coinvariant coordinates.
struct FiniteWeylElement {
    IMat on_cocharacters;
    IMat free_block;          // free -> free
    IMat torsion_from_free;   // free -> torsion
    IMat torsion_block;       // torsion -> torsion
    std::vector<int> root_image;  // index of w(a_k) among the relative roots
    std::vector<int> word;        // in relative simple reflections
};

// The Iwahori-Weyl group over the maximal unramified extension:
// (cocharacters)_I semidirect the relative Weyl group, with its affine Coxeter
// structure coming from the inertia-folded roots.
class ExtendedAffineWeylGroup {
public:
    explicit ExtendedAffineWeylGroup(const LocalGroupDatum& lgd);

    const LocalGroupDatum& local_datum() const { return lgd_; }
    const CoinvariantLattice& lattice() const { return coinv_; }

    // Relative roots (functionals on free coordinates) and coroots.
    int relative_rank() const { return rank_; }
    int num_positive() const { return num_positive_; }
    int num_roots() const { return static_cast<int>(root_functionals_.size()); }
    const IVec& root_functional(int k) const { return root_functionals_[k]; }
    const IVec& root_character(int k) const { return root_characters_[k]; }  // as an invariant character
    const CoinvariantElement& coroot(int k) const { return coroots_[k]; }
    const IVec& root_coefficients(int k) const { return root_coefficients_[k]; }
    std::int64_t pair(int k, const CoinvariantElement& lam) const { return dot(root_functionals_[k], lam.free); }
    const std::vector<std::vector<int>>& components() const { return components_; }
    const std::vector<int>& highest_roots() const { return highest_; }
    // Inertia orbits of absolute simple roots, one per relative simple root.
    const std::vector<std::vector<int>>& simple_orbits() const { return simple_orbits_; }

    // Relative finite Weyl group.
    int finite_order() const { return static_cast<int>(finite_.size()); }
    const FiniteWeylElement& finite_element(int w) const { return finite_[w]; }
    int finite_multiply(int a, int b) const;
    int finite_inverse(int a) const { return finite_inverse_[a]; }
    int finite_index(const IMat& on_cocharacters) const;  // -1 if absent
    int simple_finite(int i) const { return simple_finite_[i]; }
    int reflection_finite(int root) const { return reflection_finite_[root]; }
    int longest_finite() const { return longest_finite_; }
    CoinvariantElement act(int w, const CoinvariantElement& lam) const;
    std::int64_t finite_length(int w) const;

    // Affine structure.
    int num_simple() const { return static_cast<int>(simple_.size()); }
    const AffineElement& simple_reflection(int s) const { return simple_[s]; }
    AffineElement identity() const { return {coinv_.zero(), 0}; }
    AffineElement translation(const CoinvariantElement& lam) const { return {lam, 0}; }
    AffineElement multiply(const AffineElement& x, const AffineElement& y) const;
    AffineElement times_simple(const AffineElement& x, int s) const;  // x * s
    AffineElement simple_times(int s, const AffineElement& x) const;  // s * x
    AffineElement inverse(const AffineElement& x) const;
    std::int64_t length(const AffineElement& x) const;
    // y = omega * s_{word[0]} ... s_{word[k-1]}, reduced.
    std::vector<int> reduced_word(const AffineElement& y, AffineElement* omega = nullptr) const;
    IVec omega_class(const CoinvariantElement& lam) const;
    IVec omega_class(const AffineElement& x) const { return omega_class(x.translation); }
    bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;
    AffineSet lower_interval(const AffineElement& y, std::size_t cap = 1000000) const;

    // Relative dominance and orbits on the coinvariant lattice.
    bool is_dominant(const CoinvariantElement& lam) const;
    CoinvariantElement dominant(const CoinvariantElement& lam) const;
    std::vector<CoinvariantElement> orbit(const CoinvariantElement& lam) const;
    // lam <= mu iff mu - lam is a nonnegative integral combination of simple relative coroots.
    bool relative_dominance_leq(const CoinvariantElement& lam, const CoinvariantElement& mu) const;
    // Relative coroot lattice membership and coordinates.
    std::optional<IVec> coroot_coordinates(const CoinvariantElement& lam) const;
    CoinvariantElement from_coroot_coordinates(const IVec& c) const;

private:
    LocalGroupDatum lgd_;
    CoinvariantLattice coinv_;
    CoinvariantLattice omega_quotient_;
    int rank_ = 0;
    int num_positive_ = 0;
    std::vector<std::vector<int>> simple_orbits_;
    std::vector<IVec> root_characters_;
    std::vector<IVec> root_functionals_;
    std::vector<CoinvariantElement> coroots_;
    std::vector<IVec> root_coefficients_;
    std::unordered_map<IVec, int, VecHash> root_lookup_;
    std::vector<std::vector<int>> components_;
    std::vector<int> highest_;
    std::vector<FiniteWeylElement> finite_;
    std::unordered_map<IVec, int, VecHash> finite_lookup_;
    std::vector<int> finite_inverse_;
    std::vector<int> simple_finite_;
    std::vector<int> reflection_finite_;
    std::vector<std::vector<int>> right_simple_table_;  // finite index * simple relative reflection
    std::vector<std::vector<int>> left_simple_table_;
    int longest_finite_ = 0;
    std::vector<AffineElement> simple_;
    QMat coroot_solver_;  // free coordinates -> simple coroot coefficients

    void build_roots();
    void build_finite_group();
    void build_affine();
};

// Image of a cocharacter in the coinvariant lattice.
CoinvariantElement image_in_coinvariants(const ExtendedAffineWeylGroup& g, const IVec& y);

// Admissible set as the union of lower intervals of t_{w mu} over the relative
// orbit of the image of mu, and the variant over the absolute orbit.
AffineSet admissible_set(const ExtendedAffineWeylGroup& g, const IVec& mu, std::size_t cap = 1000000);
AffineSet admissible_set_absolute(const ExtendedAffineWeylGroup& g, const IVec& mu, std::size_t cap = 1000000);

struct ExtremalReport {
    std::vector<CoinvariantElement> images;        // distinct images of Wt(mu)
    std::vector<CoinvariantElement> maximal;       // Bruhat-maximal translations among them
    std::vector<CoinvariantElement> expected;      // relative orbit of the image of mu
    bool matches = false;
    bool dominance_bridge = false;  // every image is relatively below the image of mu
};
ExtremalReport extremal_translations(const ExtendedAffineWeylGroup& g, const IVec& mu);

// Checks: for x <= t_nu and a simple affine s with l(sxs) = l(x), sxs is
// below some t_{nu'} with nu' in the relative orbit of nu.
bool conjugation_lemma_holds(const ExtendedAffineWeylGroup& g, const CoinvariantElement& nu,
                             std::size_t* checked_count = nullptr);

// The fixed points of the Frobenius on the Iwahori-Weyl group, as a
// quasi-Coxeter group with simple reflections the longest elements of the
// finite Frobenius orbits of simple affine reflections.
class FixedAffineGroup {
public:
    explicit FixedAffineGroup(const ExtendedAffineWeylGroup& g);

    const ExtendedAffineWeylGroup& ambient() const { return g_; }
    AffineElement apply_frobenius(const AffineElement& x) const;
    CoinvariantElement apply_frobenius(const CoinvariantElement& lam) const;
    bool is_fixed(const AffineElement& x) const { return apply_frobenius(x) == x; }

    int num_simple() const { return static_cast<int>(simple_.size()); }
    const AffineElement& simple(int s) const { return simple_[s]; }
    std::int64_t weight(int s) const { return weights_[s]; }
    const std::vector<int>& orbit(int s) const { return orbits_[s]; }
    bool is_affine_orbit(int s) const { return affine_orbit_[s]; }
    std::int64_t length(const AffineElement& x) const { return g_.length(x); }
    bool left_descent(int s, const AffineElement& x) const;
    bool right_descent(const AffineElement& x, int s) const;
    // x = s_{word[0]} ... s_{word[k-1]} * omega (left descents peeled).
    std::vector<int> reduced_word(const AffineElement& x, AffineElement* omega = nullptr) const;
    AffineSet lower_interval(const AffineElement& y, std::size_t cap = 1000000) const;
    bool bruhat_leq(const AffineElement& x, const AffineElement& y) const;
    const std::vector<int>& finite_fixed() const { return finite_fixed_; }  // W_0 as finite indices
    // Longest element of W_0 t_lam W_0 (lam Frobenius-fixed).
    AffineElement max_double_coset(const CoinvariantElement& lam) const;
    std::vector<std::vector<int>> coxeter_matrix() const;

private:
    const ExtendedAffineWeylGroup& g_;
    IMat frob_;
    std::vector<int> finite_perm_;
    std::vector<std::vector<int>> orbits_;
    std::vector<bool> affine_orbit_;
    std::vector<AffineElement> simple_;
    std::vector<std::int64_t> weights_;
    std::vector<int> finite_fixed_;
};

}  // namespace rootfold
