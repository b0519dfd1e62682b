#pragma once

#include "rootfold/cyclotomic.hpp"
#include "rootfold/echelonnage.hpp"
#include "rootfold/lattice.hpp"
#include "rootfold/rootdata.hpp"

#include <map>
#include <memory>
#include <vector>

namespace rootfold {

// Weight -> multiplicity. Ordered for deterministic output.
using Character = std::map<IVec, Int>;

// Freudenthal table for one highest weight: multiplicities of the dominant
// weights, with lookups for arbitrary weights through dominant representatives.
class MultiplicityTable {
public:
    MultiplicityTable(const RootDatum& d, const IVec& highest);

    const RootDatum& datum() const { return datum_; }
    const IVec& highest() const { return highest_; }
    const Character& dominant() const { return dominant_; }
    Int at(const IVec& weight) const;
    Character full() const;
    Int dimension() const;

private:
    RootDatum datum_;
    IVec highest_;
    Character dominant_;
};

Int weight_multiplicity(const RootDatum& d, const IVec& highest, const IVec& weight);
Character full_character(const RootDatum& d, const IVec& highest);
// Product formula; an independent check on Freudenthal.
Int weyl_dimension(const RootDatum& d, const IVec& highest);

// The datum obtained by folding along a group of based automorphisms: the
// invariant lattice, simple roots the modified orbit sums, simple coroots the
// restricted coroots.
struct FoldedDatum {
    RootDatum datum;
    IMat basis;  // rows span the invariant lattice, in ambient coordinates
    std::vector<std::vector<int>> orbits;
    std::optional<IVec> coordinates(const IVec& x) const;
};

FoldedDatum fold_datum(const RootDatum& d, const std::vector<DatumAutomorphism>& group);

// nu -> tr(sigma | V(nu)) for sigma-fixed nu, with sigma acting trivially on
// the highest weight line.
class TwiningCharacter {
public:
    TwiningCharacter(const RootDatum& d, const DatumAutomorphism& sigma, const IVec& highest);
    Int operator()(const IVec& weight) const;
    const FoldedDatum& folded() const { return folded_; }

private:
    DatumAutomorphism sigma_;
    FoldedDatum folded_;
    std::unique_ptr<MultiplicityTable> table_;
};

// Root datum of the identity component of the inertia-fixed dual group, on the
// free part of the coinvariant lattice, with its exact simple roots in the
// coinvariants (torsion included) and the induced Frobenius.
struct FixedPointDatum {
    LocalGroupDatum local;
    RootDatum dual;                        // dual datum of the group, lattice = cocharacters
    std::vector<DatumAutomorphism> inertia_on_dual;
    DatumAutomorphism frobenius_on_dual;
    CoinvariantLattice lattice;
    std::vector<std::vector<int>> simple_orbits;
    RootDatum datum;                       // on lattice.free_rank coordinates
    std::vector<CoinvariantElement> simple_roots;
    DatumAutomorphism frobenius;           // on datum
    bool matches_reduced_images = false;   // roots = reduced part of the coroot images

    CoinvariantElement project(const IVec& y) const { return lattice.project(y); }
    CoinvariantElement apply_frobenius(const CoinvariantElement& e) const {
        return lattice.apply(frobenius_on_dual.on_lattice, e);
    }
    bool frobenius_fixed(const CoinvariantElement& e) const { return apply_frobenius(e) == e; }
    // Coordinates of e in the exact simple roots, if e lies in their span.
    std::optional<IVec> root_lattice_coordinates(const CoinvariantElement& e) const;
    std::int64_t height(const CoinvariantElement& e) const;
    bool is_dominant(const CoinvariantElement& e) const { return datum.is_dominant(e.free); }
    CoinvariantElement reflect(int simple, const CoinvariantElement& e) const;
};

FixedPointDatum fixed_point_datum(const LocalGroupDatum& lgd);

using CoinvariantCharacter = std::map<CoinvariantElement, Int>;
using TwistedCharacter = std::map<CoinvariantElement, Cyclotomic>;

// Character of the irreducible highest-weight representation of the full
// fixed group; supported on highest + (image of the coroot lattice).
CoinvariantCharacter disconnected_character(const FixedPointDatum& h, const CoinvariantElement& highest);

// tr(Frobenius | V_{highest,1}(weight)) for Frobenius-fixed highest and weight.
class TwistedHighestWeightTrace {
public:
    TwistedHighestWeightTrace(const FixedPointDatum& h, const CoinvariantElement& highest);
    Cyclotomic operator()(const CoinvariantElement& weight) const;

private:
    const FixedPointDatum& h_;
    CoinvariantElement highest_;
    TwiningCharacter twining_;
    int order_;
};

// Inertia invariants of V_mu as a character of the fixed torus.
CoinvariantCharacter invariants_character(const FixedPointDatum& h, const IVec& mu);
// Frobenius-twisted character of V_mu^I at Frobenius-fixed weights.
TwistedCharacter twisted_invariants_character(const FixedPointDatum& h, const IVec& mu);

struct BranchingResult {
    CoinvariantElement top;
    CoinvariantCharacter invariants;
    std::map<CoinvariantElement, Int> multiplicities;    // a_{lambda,mu}
    std::map<CoinvariantElement, Int> dimensions;        // dim V_lambda per block
    std::map<CoinvariantElement, Cyclotomic> traces;     // tr(Frobenius | multiplicity space)
    TwistedCharacter twisted;
    bool top_multiplicity_one = false;
    bool top_trace_one = false;
    bool dimension_bookkeeping = false;
    bool weight_equality = false;
    bool twisted_orbit_symmetry = false;
    bool ok() const {
        return top_multiplicity_one && top_trace_one && dimension_bookkeeping && weight_equality &&
               twisted_orbit_symmetry;
    }
};

// Generators of the Frobenius-fixed Weyl group of the fixed-point datum, as
// words in its simple reflections (one parabolic longest word per orbit).
std::vector<std::vector<int>> frobenius_fixed_weyl_words(const FixedPointDatum& h);
// Orbit of e under that group, sorted.
std::vector<CoinvariantElement> frobenius_fixed_orbit(const FixedPointDatum& h, const CoinvariantElement& e);

// Throws InputError unless mu is dominant and fixed by inertia and Frobenius.
void require_rational_dominant(const FixedPointDatum& h, const IVec& mu);
BranchingResult branch(const FixedPointDatum& h, const IVec& mu);

// Image of Wt(mu) equals the weight support of the highest-weight character of its image.
bool weight_equality_check(const FixedPointDatum& h, const IVec& mu);

// Dominant weights of d with <mu, 2 rho^vee> <= bound, one per class modulo
// the centre: coordinates along the centre are reduced to a fundamental domain
// with trailing coordinates fixed.
std::vector<IVec> dominant_envelope(const RootDatum& d, std::int64_t bound);
// Dominant cocharacters fixed by inertia and Frobenius with <2 rho, mu> <= bound,
// one per class modulo the Galois-fixed centre.
std::vector<IVec> rational_dominant_envelope(const FixedPointDatum& h, std::int64_t bound);

}  // namespace rootfold
