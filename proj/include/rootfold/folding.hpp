#pragma once

#include "rootfold/arith.hpp"
#include "rootfold/rootdata.hpp"

#include <string>
#include <vector>

namespace rootfold {

// A based, reduced root system inside Q^m with a form that is positive
// definite on its span. Roots are listed positive first (by height).
struct RootSystem {
    QMat gram;
    std::vector<QVec> base;
    std::vector<QVec> roots;
    std::vector<IVec> coefficients;  // in the base
    int num_positive = 0;

    int dim() const { return static_cast<int>(gram.size()); }
    int rank() const { return static_cast<int>(base.size()); }
    Rat form(const QVec& a, const QVec& b) const;
    QVec coroot(const QVec& v) const;  // 2v/(v|v)
    QVec reflect(const QVec& root, const QVec& v) const;
    IMat cartan() const;  // entries <b_i, b_j^vee> = 2(b_i|b_j)/(b_j|b_j)
    std::string type() const;
    bool contains(const QVec& v) const;
    std::vector<QVec> positive() const { return {roots.begin(), roots.begin() + num_positive}; }
    QVec highest_root(const std::vector<int>& component) const;
};

// Generates all roots from a base by reflections; checks the Cartan matrix is
// integral and of finite type.
RootSystem make_root_system(const QMat& gram, const std::vector<QVec>& base);
RootSystem dual_system(const RootSystem& s);
std::size_t weyl_order(const RootSystem& s);

// Root system of a datum in simple-root coordinates (V = Q^r, base = unit
// vectors) and the matching permutation matrices for automorphisms.
RootSystem root_system_of(const RootDatum& d);
std::vector<QMat> permutation_matrices(const std::vector<DatumAutomorphism>& autos);
// Same root system in the coordinates of the datum's lattice with a given form.
RootSystem root_system_in_lattice(const RootDatum& d, const QMat& gram);
std::vector<QMat> lattice_matrices(const std::vector<DatumAutomorphism>& autos);

enum class FoldOp { Norm, ModifiedNorm, Restriction, ModifiedRestriction };
std::string fold_op_name(FoldOp op);

struct FoldedRootSystem {
    FoldOp op;
    RootSystem system;
    std::vector<std::vector<int>> orbits;  // orbits of base indices, ordered by smallest member
    std::vector<bool> orthogonal;          // per orbit
};

std::vector<std::vector<int>> base_orbits(const RootSystem& s, const std::vector<QMat>& group);
bool orbit_orthogonal(const RootSystem& s, const std::vector<QMat>& group, int simple_index);
FoldedRootSystem fold(const RootSystem& s, const std::vector<QMat>& group, FoldOp op);
QVec group_average(const QVec& v, const std::vector<QMat>& group);
// Order of the centralizer of the group in W, via fixed points on a regular orbit.
std::size_t fixed_weyl_order(const RootSystem& s, const std::vector<QMat>& group);

struct DualityReport {
    std::string ambient_type;
    std::size_t group_order = 0;
    std::string norm_type, modified_norm_type, restriction_type, modified_restriction_type;
    bool modified_norm_vs_dual_restriction = false;  // N'(Phi) = res(Phi^v)^v
    bool modified_restriction_vs_dual_norm = false;  // res'(Phi) = N(Phi^v)^v
    bool norm_vs_dual_modified_restriction = false;  // N(Phi) = res'(Phi^v)^v
    bool restriction_vs_dual_modified_norm = false;  // res(Phi) = N'(Phi^v)^v
    bool averaging_lemma = false;                    // (alpha^avg)^v = N'(alpha^v) on the base
    bool weyl_orders_match = false;                  // all four have |W^I| elements
    std::size_t fixed_weyl_order = 0;

    bool ok() const {
        return modified_norm_vs_dual_restriction && modified_restriction_vs_dual_norm &&
               norm_vs_dual_modified_restriction && restriction_vs_dual_modified_norm && averaging_lemma &&
               weyl_orders_match;
    }
};

DualityReport verify_duality(const RootSystem& s, const std::vector<QMat>& group);

// Every subgroup of the diagram automorphism group, as generator lists of
// permutations (the trivial group included, as an empty list).
std::vector<std::vector<std::vector<int>>> automorphism_subgroups(const IMat& cartan);

}  // namespace rootfold
