#pragma once

#include "rootfold/folding.hpp"
#include "rootfold/rootdata.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rootfold {

// Root datum of a quasi-split group with its Galois data: a finite inertia
// group and a Frobenius element normalizing it, all acting by based
// automorphisms. The datum's lattice is the character lattice; the coroot
// lattice carries the cocharacters.
struct LocalGroupDatum {
    std::string label;
    RootDatum datum;
    std::vector<DatumAutomorphism> inertia_generators;
    std::vector<DatumAutomorphism> inertia;  // full group, identity first
    DatumAutomorphism frobenius;
    std::vector<DatumAutomorphism> frobenius_powers;  // <frobenius>, identity first

    std::size_t frobenius_order() const { return frobenius_powers.size(); }
};

LocalGroupDatum make_local_datum(const std::string& label, const RootDatum& datum,
                                 const std::vector<DatumAutomorphism>& inertia_generators,
                                 const DatumAutomorphism& frobenius);
// Same datum with a different Frobenius (for towers and field changes).
LocalGroupDatum with_galois(const LocalGroupDatum& base, const std::vector<DatumAutomorphism>& inertia_generators,
                            const DatumAutomorphism& frobenius, const std::string& label);

// Integer count of positive roots of a finite-type Cartan matrix.
std::int64_t positive_root_count(const IMat& cartan);

struct AffineDiagram {
    IMat cartan;                          // simple nodes first, then one affine node per component
    std::vector<QVec> node_roots;         // simple roots, then negated highest roots
    std::vector<int> node_component;      // component index for each node
    int finite_nodes = 0;
};

AffineDiagram affine_diagram(const RootSystem& s);

struct ParameterFunction {
    std::vector<std::int64_t> finite;             // one per simple root of the relative system
    std::vector<std::int64_t> affine;             // one per component of the relative system
    std::vector<std::vector<int>> components;     // relative simple indices per component
    std::vector<std::string> node_names;          // "s1".."sr", then "s0" or "s0.c"
};

struct SpecialRootDiagnostics {
    bool by_structure = false;          // middle node of an A_2n component twisted by the Frobenius
    bool by_non_orthogonality = false;  // Frobenius orbit of the node is not orthogonal
    bool by_parameters = false;         // long in a C_n component with L(s_a) != L(s_0)
};

struct Echelonnage {
    RootSystem ambient;                 // absolute roots, simple-root coordinates
    std::vector<QMat> inertia_matrices;
    std::vector<QMat> frobenius_matrices;
    FoldedRootSystem breve;             // modified norm over inertia
    FoldedRootSystem breve_coroots;     // restriction of the coroots over inertia
    bool breve_duality = false;         // breve = (restricted coroots)^v
    FoldedRootSystem relative;          // modified restriction of breve over Frobenius
    FoldedRootSystem relative_tilde;    // restriction of breve over Frobenius
    bool relative_dual_is_norm = false;         // relative^v = N(breve^v)
    bool relative_tilde_dual_is_mod_norm = false;  // relative_tilde^v = N'(breve^v)
    bool halving_matches = false;       // tilde base = relative base with specials halved
    std::vector<QVec> union_roots;      // relative u relative_tilde, possibly non-reduced
    std::vector<QVec> non_divisible;    // a with a/2 not a root of the union
    std::vector<QVec> non_multipliable; // a with 2a not a root of the union
    bool non_divisible_is_tilde = false;
    bool non_multipliable_is_relative = false;
    std::string union_type;
    std::vector<bool> special;
    std::vector<SpecialRootDiagnostics> special_diagnostics;
    bool special_criteria_agree = false;
    ParameterFunction parameters;
    ParameterFunction folding_parameters;  // before overrides
};

Echelonnage compute_echelonnage(const LocalGroupDatum& lgd,
                                const std::map<std::string, std::int64_t>& parameter_overrides = {});

}  // namespace rootfold
