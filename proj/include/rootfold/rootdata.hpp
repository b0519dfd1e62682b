#pragma once

#include "rootfold/arith.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rootfold {

enum class Isogeny { SimplyConnected, Adjoint, GeneralLinear };

Isogeny parse_isogeny(const std::string& s);
std::string isogeny_name(Isogeny iso);

// A reduced root datum. Roots live in a lattice Z^rank; coroots are integer
// functionals on it (same coordinates, pairing = dot product). Positive roots
// come first, ordered by height then coefficients; the first semisimple_rank
// of them are the simple roots. Negative roots follow in the same order.
struct RootDatum {
    std::string label;
    int rank = 0;
    int semisimple_rank = 0;
    int num_positive = 0;
    std::vector<IVec> roots;
    std::vector<IVec> coroots;
    std::vector<IVec> coefficients;  // coordinates in the simple roots
    std::unordered_map<IVec, int, VecHash> root_index;
    QMat simple_coordinate_solver;  // semisimple_rank x rank

    const IVec& simple_root(int i) const { return roots[i]; }
    const IVec& simple_coroot(int i) const { return coroots[i]; }
    int num_roots() const { return static_cast<int>(roots.size()); }
    int find_root(const IVec& r) const;
    IMat cartan() const;  // cartan()[i][j] = <alpha_i, alpha_j^vee>
    IVec reflect(int k, const IVec& x) const;
    IVec coreflect(int k, const IVec& y) const;
    IMat reflection_matrix(int k) const;
    bool is_dominant(const IVec& x) const;
    IVec two_rho() const;
    IVec two_rho_check() const;
    bool is_semisimple() const { return semisimple_rank == rank; }
};

RootDatum make_datum(const std::string& label, int rank, const std::vector<IVec>& simple_roots,
                     const std::vector<IVec>& simple_coroots);
RootDatum build_datum(const std::string& cartan_type, Isogeny iso);
RootDatum dual_datum(const RootDatum& d);

std::vector<std::pair<char, int>> parse_cartan_type(const std::string& s);
IMat cartan_matrix_of_type(const std::string& s);

struct DiagramComponent {
    char letter = 'A';
    int rank = 0;
    std::vector<int> nodes;  // input indices in standard (Bourbaki) order
    std::string name() const { return std::string(1, letter) + std::to_string(rank); }
};

struct Classification {
    std::string type;  // e.g. "A1xB2"; "0" for the empty system
    std::vector<DiagramComponent> components;
};

// Classifies a finite-type Cartan matrix (entries <b_i, b_j^vee>). Rank-two
// double bonds are named B2 when the later input node is the short one and C2
// otherwise. Throws InputError for anything not of finite type.
Classification classify_cartan(const IMat& cartan);

// Connected components of the Dynkin graph, each in increasing index order.
std::vector<std::vector<int>> diagram_components(const IMat& cartan);

// Weyl group utilities (all act on the lattice carrying the roots).
struct DominantReduction {
    IVec dominant;
    std::vector<int> word;  // dominant = s_{word.back()} ... s_{word[0]} x
};
DominantReduction dominant_representative(const RootDatum& d, const IVec& x);
std::vector<IVec> weyl_orbit(const RootDatum& d, const IVec& x, std::size_t cap = 2000000);
std::size_t weyl_group_order(const RootDatum& d);
IMat longest_element_matrix(const RootDatum& d);
std::optional<QVec> simple_root_coordinates(const RootDatum& d, const IVec& x);
// nu <= mu in dominance order: mu - nu is a nonnegative integral combination of simple roots.
bool dominance_leq(const RootDatum& d, const IVec& nu, const IVec& mu);
std::vector<IVec> dominant_weights_below(const RootDatum& d, const IVec& mu);
std::vector<IVec> weight_set(const RootDatum& d, const IVec& mu);

// W-invariant form on the lattice tensored with Q; in each irreducible
// component the short roots get squared length 2. Degenerate on the centre.
QMat invariant_form(const RootDatum& d);

// An automorphism of the based datum: permutes simple roots and coroots.
struct DatumAutomorphism {
    std::vector<int> permutation;  // simple root i -> permutation[i]
    IMat on_lattice;               // on the lattice carrying the roots
    IMat on_dual;                  // inverse transpose, on the coroot lattice

    bool operator==(const DatumAutomorphism& o) const { return on_lattice == o.on_lattice; }
    bool is_identity() const;
};

DatumAutomorphism identity_automorphism(const RootDatum& d);
DatumAutomorphism automorphism_from_permutation(const RootDatum& d, const std::vector<int>& perm);
DatumAutomorphism automorphism_from_dual_matrix(const RootDatum& d, const IMat& on_dual);
DatumAutomorphism compose(const DatumAutomorphism& a, const DatumAutomorphism& b);  // a after b
DatumAutomorphism inverse(const DatumAutomorphism& a);
// Swap roles for use with dual_datum.
DatumAutomorphism dual_automorphism(const DatumAutomorphism& a);
std::vector<DatumAutomorphism> generate_group(const RootDatum& d, const std::vector<DatumAutomorphism>& gens,
                                              std::size_t cap = 5000);
std::vector<std::vector<int>> diagram_automorphisms(const IMat& cartan);

}  // namespace rootfold
