#include "rootfold/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rootfold {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be a list of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(what + " must be a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

IVec i64_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be a list of integers");
    IVec out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(what + " must be a list of integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<DatumAutomorphism> automorphism_list(const RootDatum& d, const json& j, const std::string& what) {
    std::vector<DatumAutomorphism> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw InputError(what + " must be a list of permutations");
    for (const auto& p : j) out.push_back(automorphism_from_one_based(d, int_list(p, what)));
    return out;
}

RootDatum parse_datum(const json& j) {
    if (j.contains("datum")) {
        const auto& dj = j.at("datum");
        const int rank = dj.at("rank").get<int>();
        std::vector<IVec> roots, coroots;
        for (const auto& r : dj.at("simple_roots")) roots.push_back(i64_list(r, "simple_roots"));
        for (const auto& r : dj.at("simple_coroots")) coroots.push_back(i64_list(r, "simple_coroots"));
        return make_datum(j.value("name", std::string("custom")), rank, roots, coroots);
    }
    if (!j.contains("type")) throw InputError("preset needs either 'type' or 'datum'");
    return build_datum(j.at("type").get<std::string>(), parse_isogeny(j.value("isogeny", std::string("adj"))));
}

}  // namespace

DatumAutomorphism automorphism_from_one_based(const RootDatum& d, const std::vector<int>& perm) {
    std::vector<int> zero_based;
    for (int x : perm) zero_based.push_back(x - 1);
    return automorphism_from_permutation(d, zero_based);
}

Preset parse_preset(const std::string& text, const std::string& fallback_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        Preset p;
        p.name = j.value("name", fallback_name);
        p.description = j.value("description", std::string());
        const RootDatum d = parse_datum(j);
        const auto inertia = automorphism_list(d, j.value("inertia", json()), "inertia");
        DatumAutomorphism frob = identity_automorphism(d);
        if (j.contains("frobenius") && !j.at("frobenius").is_null())
            frob = automorphism_from_one_based(d, int_list(j.at("frobenius"), "frobenius"));
        p.datum = make_local_datum(p.name, d, inertia, frob);
        if (j.contains("parameters"))
            for (const auto& [k, v] : j.at("parameters").items()) p.parameters[k] = v.get<std::int64_t>();
        p.mu_bound = j.value("mu_bound", std::int64_t{6});
        if (j.contains("tower")) {
            const auto& t = j.at("tower");
            TowerPreset tp;
            tp.config.label = p.name;
            tp.config.base = p.datum;
            tp.config.sub_inertia_generators = automorphism_list(d, t.value("sub_inertia", json()), "sub_inertia");
            tp.config.residue_degree = t.value("residue_degree", 1);
            tp.levels = t.contains("levels") ? int_list(t.at("levels"), "levels") : std::vector<int>{1};
            tp.mu = i64_list(t.at("mu"), "mu");
            validate_tower(tp.config);
            p.tower = std::move(tp);
        }
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad preset field: ") + e.what());
    }
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : embedded_presets()) out.push_back(name);
    return out;
}

Preset load_preset(const std::string& name_or_path) {
    for (const auto& [name, text] : embedded_presets())
        if (name == name_or_path) return parse_preset(text, name);
    std::ifstream in(name_or_path);
    if (!in) throw InputError("unknown preset or unreadable file: " + name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_preset(ss.str(), name_or_path);
}

}  // namespace rootfold
