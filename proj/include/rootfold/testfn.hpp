#pragma once

#include "rootfold/characters.hpp"
#include "rootfold/hecke.hpp"

#include <optional>
#include <string>

namespace rootfold {

// Coefficients in the z-basis: dominant Frobenius-fixed weight -> coefficient
// of the orbit sum z_weight.
using ZExpansion = BernsteinElement;

struct CentralFunction {
    CoinvariantElement top;
    std::map<CoinvariantElement, Cyclotomic> multiplicity_traces;  // tr(Frobenius | multiplicity space)
    ZExpansion geometric;   // sum of traces times geometric basis elements
    ZExpansion character;   // read off the twisted character of the inertia invariants
    bool routes_agree = false;
    bool kl_routes_agree = true;  // only meaningful when a Hecke algebra was supplied
    bool top_coefficient_one = false;
    bool support_bounded = false;  // every weight lies below the top
    bool ok() const { return routes_agree && kl_routes_agree && top_coefficient_one && support_bounded; }
};

// Central element attached to V_mu, expanded in the z-basis.
CentralFunction central_function(const LocalGroupDatum& lgd, const IVec& mu, HeckeAlgebra* hecke = nullptr);

// Split case: the coefficient of z_lambda is the weight multiplicity m_mu(lambda).
// Throws InputError for non-split data.
bool matches_weight_multiplicities(const LocalGroupDatum& lgd, const IVec& mu, const ZExpansion& e);

// A base datum with Galois action (I_F, Frobenius) and a ramified extension
// E/F given by an inertia subgroup. residue_degree is the residue degree of E
// over the base; the level-j fields use the power r = j * residue_degree of
// the base Frobenius.
struct TowerConfig {
    std::string label;
    LocalGroupDatum base;
    std::vector<DatumAutomorphism> sub_inertia_generators;
    int residue_degree = 1;
};

// Throws InputError unless the sub-inertia is a subgroup normalized by the Frobenius.
void validate_tower(const TowerConfig& cfg);
// Unramified level: base inertia with the r-th Frobenius power.
LocalGroupDatum unramified_level(const TowerConfig& cfg, int j);
// Ramified level: sub-inertia with the r-th Frobenius power.
LocalGroupDatum ramified_level(const TowerConfig& cfg, int j);
// Ramification index of the top step, as an index of inertia images.
std::size_t ramification_index(const TowerConfig& cfg);

struct DescentCheck {
    std::size_t index = 1;
    CoinvariantCharacter restricted;   // invariants under the sub-inertia, pushed to the base coinvariants
    CoinvariantCharacter induced;      // invariants of the induced module
    TwistedCharacter restricted_twisted;
    TwistedCharacter induced_twisted;
    bool untwisted_ok = false;
    bool twisted_ok = false;
    bool ok() const { return untwisted_ok && twisted_ok; }
};

// Character-level comparison of V^{I_E} with the I_F-invariants of the module
// induced from the sub-inertia, both as characters of the base fixed torus
// with the level-j Frobenius.
DescentCheck ramified_descent_check(const TowerConfig& cfg, const IVec& mu, int j = 1);

struct TestFunction {
    int level = 1;
    std::int64_t frobenius_power = 1;
    CentralFunction ramified;          // over the ramified level
    ZExpansion expansion;              // over the unramified level, through the class sums
    ZExpansion direct;                 // pushed twisted character
    bool routes_agree = false;
    bool top_coefficient_one = false;
    bool degenerate = false;           // sub-inertia equals the base inertia
    std::optional<bool> matches_central_function;  // set for degenerate towers
    bool ok() const {
        return routes_agree && top_coefficient_one && ramified.ok() && matches_central_function.value_or(true);
    }
};

TestFunction test_function(const TowerConfig& cfg, const IVec& mu, int j, HeckeAlgebra* hecke = nullptr);

}  // namespace rootfold
