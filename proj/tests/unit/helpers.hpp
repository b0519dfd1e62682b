#pragma once

#include "rootfold/echelonnage.hpp"
#include "rootfold/presets.hpp"

#include <string>
#include <vector>

// Builds a local datum from 0-based permutations.
inline rootfold::LocalGroupDatum local(const std::string& type, rootfold::Isogeny iso,
                                       const std::vector<std::vector<int>>& inertia,
                                       const std::vector<int>& frobenius = {}) {
    using namespace rootfold;
    RootDatum d = build_datum(type, iso);
    std::vector<DatumAutomorphism> gens;
    for (const auto& p : inertia) gens.push_back(automorphism_from_permutation(d, p));
    DatumAutomorphism f = frobenius.empty() ? identity_automorphism(d) : automorphism_from_permutation(d, frobenius);
    return make_local_datum(type, d, gens, f);
}
