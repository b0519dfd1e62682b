#pragma once

#include "rootfold/arith.hpp"

#include <cstddef>
#include <vector>

namespace rootfold {

// left * m * right = diag(diagonal) padded with zeros; diagonal is nonnegative
// and each entry divides the next (zeros last).
struct SmithForm {
    std::vector<Int> diagonal;
    BigMat left;
    BigMat left_inverse;
    BigMat right;
};

SmithForm smith_normal_form(const BigMat& m);
BigMat to_big(const IMat& m);

// Row-style Hermite normal form: positive pivots, entries above a pivot reduced
// into [0, pivot). Zero rows are dropped. If transform is non-null it receives
// U with H = U * rows restricted to the returned rows.
IMat hermite_normal_form(const IMat& rows, IMat* transform = nullptr);

// Basis (HNF rows) of {x : a x = 0}.
IMat integer_kernel(const IMat& a);

// True iff the row spans of a and b agree as subgroups of Z^n.
bool same_row_lattice(const IMat& a, const IMat& b);

// A finite group of unimodular matrices acting on Z^rank, stored as a full
// element list with the identity first.
struct LatticeAction {
    int rank = 0;
    std::vector<IMat> generators;
    std::vector<IMat> elements;

    static LatticeAction generate(int rank, const std::vector<IMat>& generators, std::size_t cap = 20000);
    std::size_t order() const { return elements.size(); }
    bool contains(const IMat& g) const;
};

struct CoinvariantElement {
    IVec free;
    IVec torsion;

    bool operator==(const CoinvariantElement& o) const { return free == o.free && torsion == o.torsion; }
    bool operator!=(const CoinvariantElement& o) const { return !(*this == o); }
    bool operator<(const CoinvariantElement& o) const {
        return free != o.free ? free < o.free : torsion < o.torsion;
    }
};

struct CoinvariantHash {
    std::size_t operator()(const CoinvariantElement& e) const noexcept;
};

// Z^n / <g y - y> for an action, presented as Z^free_rank + sum Z/d_i.
struct CoinvariantLattice {
    int ambient_rank = 0;
    int free_rank = 0;
    std::vector<std::int64_t> torsion_factors;
    IMat free_projection;     // free_rank x ambient, HNF
    IMat torsion_projection;  // one row per torsion factor, entries reduced mod d_i
    IMat free_section;        // ambient x free_rank, lifts of free basis vectors
    IMat torsion_section;     // ambient x ntors
    QMat averaged_section;    // ambient x free_rank: group average of free lifts

    CoinvariantElement project(const IVec& y) const;
    IVec lift(const CoinvariantElement& e) const;
    CoinvariantElement zero() const;
    CoinvariantElement add(const CoinvariantElement& a, const CoinvariantElement& b) const;
    CoinvariantElement sub(const CoinvariantElement& a, const CoinvariantElement& b) const;
    CoinvariantElement scale(std::int64_t c, const CoinvariantElement& a) const;
    CoinvariantElement reduce(CoinvariantElement e) const;
    bool torsion_free() const { return torsion_factors.empty(); }
    // The image of e under the averaging map to the invariant subspace.
    QVec averaged(const CoinvariantElement& e) const;
    // Induced map of an ambient endomorphism that preserves the relations.
    CoinvariantElement apply(const IMat& g, const CoinvariantElement& e) const;
};

CoinvariantLattice coinvariants(const LatticeAction& action);
// Same construction for an arbitrary relation submodule given by column generators.
CoinvariantLattice quotient_by(int rank, const IMat& relation_columns, const std::vector<IMat>& averaging_group);

// HNF basis (rows) of the invariant sublattice.
IMat invariants(const LatticeAction& action);

QVec orbit_average(const QVec& v, const std::vector<IMat>& group);
IVec flat(const CoinvariantElement& e);

}  // namespace rootfold
