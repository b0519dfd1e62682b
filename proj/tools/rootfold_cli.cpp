#include "rootfold/affine.hpp"
#include "rootfold/characters.hpp"
#include "rootfold/echelonnage.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/hecke.hpp"
#include "rootfold/presets.hpp"
#include "rootfold/testfn.hpp"
#include "rootfold/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <iostream>
#include <sstream>

using namespace rootfold;
using ojson = nlohmann::ordered_json;

namespace {

struct GroupOptions {
    std::string preset;
    std::string type;
    std::string isogeny = "adj";
    std::vector<std::string> inertia;
    std::string frobenius;
    std::vector<std::string> params;
};

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("not an integer list: '" + s + "'");
        }
    }
    return out;
}

std::vector<int> parse_perm(const std::string& s) {
    std::vector<int> out;
    for (auto v : parse_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

Preset resolve(const GroupOptions& o) {
    if (!o.preset.empty()) {
        Preset p = load_preset(o.preset);
        for (const auto& kv : o.params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw InputError("parameter override must be name=value: " + kv);
            p.parameters[kv.substr(0, eq)] = parse_list(kv.substr(eq + 1)).at(0);
        }
        return p;
    }
    if (o.type.empty()) throw InputError("give --preset or --type");
    Preset p;
    p.name = o.type;
    const RootDatum d = build_datum(o.type, parse_isogeny(o.isogeny));
    std::vector<DatumAutomorphism> inertia;
    for (const auto& s : o.inertia) inertia.push_back(automorphism_from_one_based(d, parse_perm(s)));
    DatumAutomorphism frob =
        o.frobenius.empty() ? identity_automorphism(d) : automorphism_from_one_based(d, parse_perm(o.frobenius));
    p.datum = make_local_datum(o.type, d, inertia, frob);
    for (const auto& kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("parameter override must be name=value: " + kv);
        auto v = parse_list(kv.substr(eq + 1));
        if (v.size() != 1) throw InputError("bad parameter value: " + kv);
        p.parameters[kv.substr(0, eq)] = v[0];
    }
    return p;
}

void add_group_options(CLI::App* sub, GroupOptions& o) {
    sub->add_option("--preset,--config", o.preset, "Preset name or JSON file");
    sub->add_option("--type", o.type, "Cartan type, e.g. A2 or A2xA2");
    sub->add_option("--isogeny", o.isogeny, "sc, adj or gl")->capture_default_str();
    sub->add_option("--inertia", o.inertia, "Inertia generator as a 1-based permutation, e.g. 2,1");
    sub->add_option("--frobenius", o.frobenius, "Frobenius as a 1-based permutation");
    sub->add_option("--param", o.params, "Parameter override, e.g. s0=1");
}

std::string show(const CoinvariantElement& e) {
    std::string s = to_string(e.free);
    if (!e.torsion.empty()) s += "+t" + to_string(e.torsion);
    return s;
}

ojson element_json(const CoinvariantElement& e) {
    ojson j;
    j["free"] = e.free;
    if (!e.torsion.empty()) j["torsion"] = e.torsion;
    return j;
}

ojson cyclotomic_json(const Cyclotomic& c, bool with_float) {
    ojson j = c.to_string();
    if (c.is_integer()) j = c.as_integer().str();
    if (!with_float) return j;
    ojson out;
    out["exact"] = j;
    auto z = c.approximate();
    out["approx"] = {z.real(), z.imag()};
    return out;
}

std::string qvec_string(const QVec& v) { return to_string(v); }

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string tsv() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << columns[i];
        out << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
            out << '\n';
        }
        return out.str();
    }
};

void emit(const std::string& format, const ojson& j, const Table& t) {
    if (format == "tsv")
        std::cout << t.tsv();
    else
        std::cout << j.dump(2) << '\n';
}

// A cocharacter given on the command line, as a dominant element of the
// coinvariants fixed by the Frobenius.
CoinvariantElement fixed_dominant(const FixedPointDatum& h, const std::string& s, const char* what) {
    IVec y = parse_list(s);
    if (static_cast<int>(y.size()) != h.dual.rank)
        throw InputError(std::string(what) + " needs " + std::to_string(h.dual.rank) + " coordinates");
    CoinvariantElement e = h.project(y);
    if (!h.is_dominant(e) || !h.frobenius_fixed(e))
        throw InputError(std::string(what) + " is not dominant and Frobenius-fixed in the coinvariants");
    return e;
}

int run_fold(const GroupOptions& go, const std::string& group_name, const std::string& format) {
    Preset p = resolve(go);
    const auto& lgd = p.datum;
    std::vector<DatumAutomorphism> group;
    if (group_name == "auto")
        group = lgd.inertia.size() > 1 ? lgd.inertia : lgd.frobenius_powers;
    else if (group_name == "inertia")
        group = lgd.inertia;
    else if (group_name == "frobenius")
        group = lgd.frobenius_powers;
    else if (group_name == "galois") {
        std::vector<DatumAutomorphism> all = lgd.inertia;
        all.insert(all.end(), lgd.frobenius_powers.begin(), lgd.frobenius_powers.end());
        group = generate_group(lgd.datum, all);
    } else
        throw InputError("--group must be auto, inertia, frobenius or galois");
    const RootSystem s = root_system_of(lgd.datum);
    const auto mats = permutation_matrices(group);
    DualityReport rep = verify_duality(s, mats);
    ojson j;
    j["preset"] = p.name;
    j["ambient"] = rep.ambient_type;
    j["group_order"] = rep.group_order;
    Table t{{"operation", "type", "base"}, {}};
    j["rows"] = ojson::array();
    for (FoldOp op : {FoldOp::Restriction, FoldOp::ModifiedRestriction, FoldOp::Norm, FoldOp::ModifiedNorm}) {
        FoldedRootSystem f = fold(s, mats, op);
        std::string base;
        for (const auto& b : f.system.base) base += (base.empty() ? "" : " ") + qvec_string(b);
        j["rows"].push_back({{"operation", fold_op_name(op)}, {"type", f.system.type()}, {"base", base}});
        t.rows.push_back({fold_op_name(op), f.system.type(), base});
    }
    j["duality_ok"] = rep.ok();
    emit(format, j, t);
    return rep.ok() ? 0 : 1;
}

int run_echelonnage(const GroupOptions& go, const std::string& format) {
    Preset p = resolve(go);
    Echelonnage e = compute_echelonnage(p.datum, p.parameters);
    ojson j;
    j["preset"] = p.name;
    j["breve"] = e.breve.system.type();
    j["relative"] = e.relative.system.type();
    j["relative_tilde"] = e.relative_tilde.system.type();
    j["union"] = e.union_type;
    j["checks"] = {{"breve_duality", e.breve_duality},
                   {"relative_dual_is_norm", e.relative_dual_is_norm},
                   {"tilde_dual_is_modified_norm", e.relative_tilde_dual_is_mod_norm},
                   {"halving_matches", e.halving_matches},
                   {"non_divisible_is_tilde", e.non_divisible_is_tilde},
                   {"non_multipliable_is_relative", e.non_multipliable_is_relative},
                   {"special_criteria_agree", e.special_criteria_agree}};
    Table t{{"node", "parameter", "folding_parameter", "special"}, {}};
    j["nodes"] = ojson::array();
    const std::size_t nf = e.parameters.finite.size();
    for (std::size_t i = 0; i < e.parameters.node_names.size(); ++i) {
        std::int64_t v = i < nf ? e.parameters.finite[i] : e.parameters.affine[i - nf];
        std::int64_t f = i < nf ? e.folding_parameters.finite[i] : e.folding_parameters.affine[i - nf];
        bool special = i < nf && i < e.special.size() && e.special[i];
        j["nodes"].push_back(
            {{"node", e.parameters.node_names[i]}, {"parameter", v}, {"folding_parameter", f}, {"special", special}});
        t.rows.push_back({e.parameters.node_names[i], std::to_string(v), std::to_string(f), special ? "1" : "0"});
    }
    bool ok = e.breve_duality && e.relative_dual_is_norm && e.relative_tilde_dual_is_mod_norm && e.halving_matches &&
              e.non_divisible_is_tilde && e.non_multipliable_is_relative && e.special_criteria_agree;
    emit(format, j, t);
    return ok ? 0 : 1;
}

int run_adm(const GroupOptions& go, const std::string& mu_s, std::size_t cap, const std::string& format) {
    Preset p = resolve(go);
    ExtendedAffineWeylGroup g(p.datum);
    IVec mu = parse_list(mu_s);
    if (static_cast<int>(mu.size()) != p.datum.datum.rank)
        throw InputError("--mu needs " + std::to_string(p.datum.datum.rank) + " coordinates");
    AffineSet adm = admissible_set(g, mu, cap);
    ExtremalReport rep = extremal_translations(g, mu);
    std::set<CoinvariantElement> extremal(rep.expected.begin(), rep.expected.end());
    std::vector<AffineElement> elems(adm.begin(), adm.end());
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        auto la = g.length(a), lb = g.length(b);
        return la != lb ? la > lb : a < b;
    });
    ojson j;
    j["preset"] = p.name;
    j["mu"] = mu;
    j["size"] = elems.size();
    j["extremal_match"] = rep.matches;
    j["dominance_bridge"] = rep.dominance_bridge;
    j["elements"] = ojson::array();
    Table t{{"translation", "finite", "length", "word", "extremal"}, {}};
    for (const auto& x : elems) {
        AffineElement omega;
        auto word = g.reduced_word(x, &omega);
        bool ext = x.finite == 0 && extremal.count(x.translation);
        std::string w;
        for (int s : word) w += (w.empty() ? "" : " ") + std::to_string(s);
        j["elements"].push_back({{"translation", element_json(x.translation)},
                                 {"finite", g.finite_element(x.finite).word},
                                 {"length", g.length(x)},
                                 {"word", word},
                                 {"extremal", ext}});
        std::string fw;
        for (int s : g.finite_element(x.finite).word) fw += (fw.empty() ? "" : " ") + std::to_string(s);
        t.rows.push_back({show(x.translation), fw, std::to_string(g.length(x)), w, ext ? "1" : "0"});
    }
    emit(format, j, t);
    return rep.matches && rep.dominance_bridge ? 0 : 1;
}

int run_kl(const GroupOptions& go, const std::string& lam_s, const std::string& nu_s, std::size_t cap,
           const std::string& format) {
    Preset p = resolve(go);
    FixedPointDatum h = fixed_point_datum(p.datum);
    ExtendedAffineWeylGroup g(p.datum);
    FixedAffineGroup f(g);
    HeckeAlgebra hecke(f, cap);
    CoinvariantElement lam = fixed_dominant(h, lam_s, "--lambda");
    CoinvariantElement nu = fixed_dominant(h, nu_s, "--nu");
    AffineElement x = f.max_double_coset(nu), y = f.max_double_coset(lam);
    Laurent poly = f.bruhat_leq(x, y) ? hecke.kl_polynomial(x, y) : Laurent();
    ojson j;
    j["preset"] = p.name;
    j["lambda"] = element_json(lam);
    j["nu"] = element_json(nu);
    j["bruhat_leq"] = f.bruhat_leq(x, y);
    j["polynomial"] = poly.to_string();
    j["at_1"] = poly.at_one().str();
    Table t{{"lambda", "nu", "polynomial", "at_1"}, {{show(lam), show(nu), poly.to_string(), poly.at_one().str()}}};
    emit(format, j, t);
    return 0;
}

int run_geom_basis(const GroupOptions& go, const std::string& lam_s, bool kl, bool with_float, std::size_t cap,
                   const std::string& format) {
    Preset p = resolve(go);
    FixedPointDatum h = fixed_point_datum(p.datum);
    CoinvariantElement lam = fixed_dominant(h, lam_s, "--lambda");
    std::unique_ptr<ExtendedAffineWeylGroup> g;
    std::unique_ptr<FixedAffineGroup> f;
    std::unique_ptr<HeckeAlgebra> hecke;
    if (kl) {
        g = std::make_unique<ExtendedAffineWeylGroup>(p.datum);
        f = std::make_unique<FixedAffineGroup>(*g);
        hecke = std::make_unique<HeckeAlgebra>(*f, cap);
    }
    GeometricBasisElement gb = geometric_basis(h, lam, hecke.get());
    ojson j;
    j["preset"] = p.name;
    j["lambda"] = element_json(lam);
    j["top_coefficient_one"] = gb.top_coefficient_one;
    if (kl) j["routes_agree"] = gb.routes_agree;
    j["terms"] = ojson::array();
    Table t{{"nu", "coeff", "kl_at_1"}, {}};
    for (const auto& term : gb.terms) {
        ojson tj;
        tj["nu"] = element_json(term.weight);
        tj["coeff_cyclotomic"] = cyclotomic_json(term.trace, with_float);
        if (term.has_kl) {
            tj["kl_at_1"] = term.kl_at_one.str();
            tj["kl"] = term.kl.to_string();
        }
        j["terms"].push_back(tj);
        t.rows.push_back({show(term.weight), term.trace.to_string(), term.has_kl ? term.kl_at_one.str() : ""});
    }
    emit(format, j, t);
    return gb.top_coefficient_one && gb.routes_agree ? 0 : 1;
}

int run_branch(const GroupOptions& go, const std::string& mu_s, bool with_float, const std::string& format) {
    Preset p = resolve(go);
    FixedPointDatum h = fixed_point_datum(p.datum);
    IVec mu = parse_list(mu_s);
    BranchingResult b = branch(h, mu);
    std::vector<CoinvariantElement> tops;
    for (const auto& [lam, a] : b.multiplicities) tops.push_back(lam);
    std::sort(tops.begin(), tops.end(), [&](const auto& x, const auto& y) {
        auto hx = h.height(x), hy = h.height(y);
        return hx != hy ? hx > hy : y < x;
    });
    ojson j;
    j["preset"] = p.name;
    j["mu"] = mu;
    j["checks"] = {{"top_multiplicity_one", b.top_multiplicity_one},
                   {"top_trace_one", b.top_trace_one},
                   {"dimension_bookkeeping", b.dimension_bookkeeping},
                   {"weight_equality", b.weight_equality},
                   {"twisted_orbit_symmetry", b.twisted_orbit_symmetry}};
    j["blocks"] = ojson::array();
    Table t{{"lambda", "multiplicity", "dimension", "trace"}, {}};
    for (const auto& lam : tops) {
        ojson bj;
        bj["lambda"] = element_json(lam);
        bj["multiplicity"] = b.multiplicities.at(lam).str();
        bj["dimension"] = b.dimensions.at(lam).str();
        auto it = b.traces.find(lam);
        if (it != b.traces.end()) bj["trace"] = cyclotomic_json(it->second, with_float);
        j["blocks"].push_back(bj);
        t.rows.push_back({show(lam), b.multiplicities.at(lam).str(), b.dimensions.at(lam).str(),
                          it != b.traces.end() ? it->second.to_string() : ""});
    }
    emit(format, j, t);
    return b.ok() ? 0 : 1;
}

int run_testfn(const GroupOptions& go, const std::string& mu_s, int j_level, bool with_float,
               const std::string& format) {
    Preset p = resolve(go);
    ojson j;
    j["preset"] = p.name;
    Table t{{"weight", "coeff"}, {}};
    bool ok = true;
    if (p.tower) {
        IVec mu = mu_s.empty() ? p.tower->mu : parse_list(mu_s);
        TestFunction tf = test_function(p.tower->config, mu, j_level);
        DescentCheck d = ramified_descent_check(p.tower->config, mu, j_level);
        j["mu"] = mu;
        j["level"] = j_level;
        j["frobenius_power"] = tf.frobenius_power;
        j["routes_agree"] = tf.routes_agree;
        j["top_coefficient_one"] = tf.top_coefficient_one;
        j["ramified_descent"] = d.ok();
        if (tf.matches_central_function) j["matches_central_function"] = *tf.matches_central_function;
        j["terms"] = ojson::array();
        for (const auto& [w, c] : tf.expansion) {
            j["terms"].push_back({{"nu", element_json(w)}, {"coeff", cyclotomic_json(c, with_float)}});
            t.rows.push_back({show(w), c.to_string()});
        }
        ok = tf.ok() && d.ok();
    } else {
        if (mu_s.empty()) throw InputError("--mu is required for a preset without a tower");
        IVec mu = parse_list(mu_s);
        CentralFunction c = central_function(p.datum, mu);
        j["mu"] = mu;
        j["routes_agree"] = c.routes_agree;
        j["top_coefficient_one"] = c.top_coefficient_one;
        j["support_bounded"] = c.support_bounded;
        j["terms"] = ojson::array();
        for (const auto& [w, v] : c.geometric) {
            j["terms"].push_back({{"nu", element_json(w)}, {"coeff", cyclotomic_json(v, with_float)}});
            t.rows.push_back({show(w), v.to_string()});
        }
        ok = c.ok();
    }
    emit(format, j, t);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois folding of root data, affine Weyl groups, KL polynomials and test functions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
    std::size_t cap = 1000000;
    app.add_option("--cap", cap, "Enumeration cap for Bruhat intervals")->capture_default_str();
    bool with_float = false;
    app.add_flag("--float", with_float, "Add complex approximations next to exact coefficients");

    GroupOptions go;
    std::string group = "auto", mu, lambda, nu;
    int level = 1;
    bool no_kl = false;

    auto* fold_cmd = app.add_subcommand("fold", "Four foldings of the root system and their duality");
    add_group_options(fold_cmd, go);
    fold_cmd->add_option("--group", group, "auto (inertia if nontrivial, else Frobenius), inertia, frobenius or galois")->capture_default_str();

    auto* ech = app.add_subcommand("echelonnage", "Echelonnage systems and Hecke parameters");
    add_group_options(ech, go);

    auto* adm = app.add_subcommand("adm", "Admissible set and its extremal translations");
    add_group_options(adm, go);
    adm->add_option("--mu", mu, "Cocharacter, comma separated")->required();

    auto* kl = app.add_subcommand("kl", "KL polynomial between two double-coset maximal elements");
    add_group_options(kl, go);
    kl->add_option("--lambda", lambda, "Upper weight (cocharacter lift)")->required();
    kl->add_option("--nu", nu, "Lower weight (cocharacter lift)")->required();

    auto* geom = app.add_subcommand("geom-basis", "Geometric basis element in the z-basis");
    add_group_options(geom, go);
    geom->add_option("--lambda", lambda, "Highest weight (cocharacter lift)")->required();
    geom->add_flag("--no-kl", no_kl, "Skip the KL route");

    auto* br = app.add_subcommand("branch", "Inertia invariants of V_mu as a representation of the fixed group");
    add_group_options(br, go);
    br->add_option("--mu", mu, "Dominant cocharacter fixed by the Galois action")->required();

    auto* tf = app.add_subcommand("testfn", "Test function expansion (tower presets) or central function");
    add_group_options(tf, go);
    tf->add_option("--mu", mu, "Cocharacter; defaults to the tower's");
    tf->add_option("--j", level, "Level of the unramified extension")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Run every check over presets");
    std::vector<std::string> presets;
    std::int64_t mu_bound = -1;
    unsigned threads = 0;
    ver->add_option("--preset,--config", presets, "Presets or JSON files (default: all embedded)");
    ver->add_option("--mu-bound", mu_bound, "Override the envelope bound");
    ver->add_option("--threads", threads, "Worker threads (0: all cores)");
    ver->add_flag("--no-kl", no_kl, "Skip the KL route");

    auto* list = app.add_subcommand("presets", "List embedded presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fold_cmd) return run_fold(go, group, format);
        if (*ech) return run_echelonnage(go, format);
        if (*adm) return run_adm(go, mu, cap, format);
        if (*kl) return run_kl(go, lambda, nu, cap, format);
        if (*geom) return run_geom_basis(go, lambda, !no_kl, with_float, cap, format);
        if (*br) return run_branch(go, mu, with_float, format);
        if (*tf) return run_testfn(go, mu, level, with_float, format);
        if (*list) {
            for (const auto& n : preset_names()) std::cout << n << '\n';
            return 0;
        }
        if (*ver) {
            std::vector<Preset> ps;
            if (presets.empty())
                for (const auto& n : preset_names()) ps.push_back(load_preset(n));
            else
                for (const auto& n : presets) ps.push_back(load_preset(n));
            VerifyOptions opt;
            if (mu_bound >= 0) opt.mu_bound = mu_bound;
            opt.run_kl = !no_kl;
            opt.threads = threads;
            opt.interval_cap = cap;
            VerifyReport r = verify_presets(ps, opt);
            std::cout << (format == "tsv" ? r.to_tsv() : r.to_json());
            return r.exit_code();
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    } catch (const TheoremViolation& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
