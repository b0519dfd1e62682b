#pragma once

#include "rootfold/echelonnage.hpp"
#include "rootfold/testfn.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rootfold {

struct TowerPreset {
    TowerConfig config;
    IVec mu;
    std::vector<int> levels;
};

// A group with Galois action plus run options, read from JSON. Permutations in
// the JSON are 1-based lists of simple-root images.
struct Preset {
    std::string name;
    std::string description;
    LocalGroupDatum datum;
    std::map<std::string, std::int64_t> parameters;  // overrides by node name
    std::int64_t mu_bound = 6;
    std::optional<TowerPreset> tower;
};

// (name, JSON text) pairs compiled into the library.
const std::vector<std::pair<std::string, std::string>>& embedded_presets();
std::vector<std::string> preset_names();

// Throws InputError on malformed input, including permutations that are not
// diagram automorphisms.
Preset parse_preset(const std::string& json_text, const std::string& fallback_name = "custom");
// An embedded preset by name, or else a JSON file path.
Preset load_preset(const std::string& name_or_path);

// 1-based permutation -> automorphism.
DatumAutomorphism automorphism_from_one_based(const RootDatum& d, const std::vector<int>& perm);

}  // namespace rootfold
