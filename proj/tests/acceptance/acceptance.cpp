// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "../support/sl3_oracle.hpp"
#include "rootfold/affine.hpp"
#include "rootfold/characters.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/hecke.hpp"
#include "rootfold/presets.hpp"
#include "rootfold/testfn.hpp"
#include "rootfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rootfold;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    std::size_t checked = 0;

    // Records a failure with context; keeps going so the line reports everything.
    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond) {
            if (ok) note << "first failure: " << what;
            ok = false;
        }
    }
};

std::vector<Preset> all_presets() {
    std::vector<Preset> out;
    for (const auto& n : preset_names()) out.push_back(load_preset(n));
    return out;
}

LocalGroupDatum from_perm(const std::string& type, Isogeny iso, const std::vector<std::vector<int>>& inertia,
                          const std::vector<int>& frobenius) {
    RootDatum d = build_datum(type, iso);
    std::vector<DatumAutomorphism> gens;
    for (const auto& p : inertia) gens.push_back(automorphism_from_permutation(d, p));
    DatumAutomorphism f = frobenius.empty() ? identity_automorphism(d) : automorphism_from_permutation(d, frobenius);
    return make_local_datum(type, d, gens, f);
}

bool is_split(const LocalGroupDatum& lgd) { return lgd.inertia.size() == 1 && lgd.frobenius.is_identity(); }

void duality_all_types(Outcome& out) {
    std::vector<std::string> types;
    for (int n = 1; n <= 6; ++n) types.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) types.push_back("B" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) types.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) types.push_back("D" + std::to_string(n));
    for (const char* t : {"E6", "F4", "G2"}) types.emplace_back(t);
    std::size_t groups = 0;
    for (const auto& t : types) {
        RootDatum d = build_datum(t, Isogeny::SimplyConnected);
        RootSystem s = root_system_of(d);
        for (const auto& gens : automorphism_subgroups(d.cartan())) {
            if (gens.empty()) continue;
            std::vector<DatumAutomorphism> autos;
            for (const auto& p : gens) autos.push_back(automorphism_from_permutation(d, p));
            DualityReport r = verify_duality(s, permutation_matrices(generate_group(d, autos)));
            ++groups;
            out.expect(r.ok(), t + " group of order " + std::to_string(r.group_order));
        }
    }
    out.note << (out.ok ? "" : "; ") << "types=" << types.size() << " nontrivial groups=" << groups;
}

void a2n_example(Outcome& out) {
    for (int n = 1; n <= 3; ++n) {
        RootDatum d = build_datum("A" + std::to_string(2 * n), Isogeny::SimplyConnected);
        std::vector<int> perm;
        for (int i = 2 * n - 1; i >= 0; --i) perm.push_back(i);
        auto group = permutation_matrices(generate_group(d, {automorphism_from_permutation(d, perm)}));
        RootSystem s = root_system_of(d);
        // B1 = C1 = A1.
        const std::string b = n == 1 ? "A1" : "B" + std::to_string(n);
        const std::string c = n == 1 ? "A1" : "C" + std::to_string(n);
        const std::string got = fold(s, group, FoldOp::Restriction).system.type() + "," +
                                fold(s, group, FoldOp::ModifiedRestriction).system.type() + "," +
                                fold(s, group, FoldOp::Norm).system.type() + "," +
                                fold(s, group, FoldOp::ModifiedNorm).system.type();
        out.expect(got == b + "," + c + "," + b + "," + c, "A" + std::to_string(2 * n) + " gave " + got);
        out.note << (n == 1 ? "" : " ") << "A" << 2 * n << "->(" << got << ")";
    }
}

// Some c > 0 with c * a = b as sets.
bool proportional(std::vector<QVec> a, std::vector<QVec> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::sort(b.begin(), b.end());
    const QVec& v = a.front();
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    for (const auto& w : b) {
        if (k == v.size() || w[k] / v[k] <= 0) continue;
        const Rat c = w[k] / v[k];
        std::vector<QVec> scaled;
        for (const auto& x : a) scaled.push_back(qscale(c, x));
        std::sort(scaled.begin(), scaled.end());
        if (scaled == b) return true;
    }
    return false;
}

void echelonnage_all(Outcome& out) {
    for (const auto& p : all_presets()) {
        Echelonnage e = compute_echelonnage(p.datum, p.parameters);
        out.expect(e.breve_duality, p.name + " breve characterizations");
        out.expect(e.relative_dual_is_norm, p.name + " relative characterizations");
        out.expect(e.relative_tilde_dual_is_mod_norm && e.halving_matches, p.name + " tilde system");
        out.expect(e.non_divisible_is_tilde && e.non_multipliable_is_relative, p.name + " union");
        out.expect(e.special_criteria_agree, p.name + " special criteria");

        // Restricted roots: equal to the breve system when inertia is trivial,
        // otherwise proportional to its non-multipliable part.
        std::set<QVec> restricted;
        for (const auto& r : e.ambient.roots) {
            QVec a = group_average(r, e.inertia_matrices);
            if (!qis_zero(a)) restricted.insert(a);
        }
        std::vector<QVec> breve = e.breve.system.roots;
        std::sort(breve.begin(), breve.end());
        if (e.inertia_matrices.size() <= 1) {
            out.expect(std::vector<QVec>(restricted.begin(), restricted.end()) == breve, p.name + " split breve");
        } else {
            bool reduced = std::none_of(restricted.begin(), restricted.end(),
                                        [&](const QVec& a) { return restricted.count(qscale(2, a)) > 0; });
            std::vector<QVec> target;
            for (const auto& a : restricted) {
                if (reduced)
                    target.push_back(qscale(Rat(2) / e.ambient.form(a, a), a));
                else if (!restricted.count(qscale(2, a)))
                    target.push_back(a);
            }
            out.expect(proportional(target, breve), p.name + " restricted breve");
        }
    }
    for (const char* name : {"su3-unramified", "su5-unramified"}) {
        Echelonnage e = compute_echelonnage(load_preset(name).datum);
        int specials = 0;
        std::int64_t special_value = 0;
        for (std::size_t i = 0; i < e.special.size(); ++i)
            if (e.special[i]) {
                ++specials;
                special_value = e.parameters.finite[i];
                out.expect(e.parameters.finite[i] == 3, std::string(name) + " special node parameter");
            } else {
                out.expect(e.parameters.finite[i] != 3, std::string(name) + " non-special parameter");
            }
        out.expect(specials == 1, std::string(name) + " has one special node");
        for (auto v : e.parameters.affine) out.expect(v == 1, std::string(name) + " affine parameter");
        out.note << (out.ok ? "" : ";") << " " << name << ":special=" << special_value << ",affine=" << e.parameters.affine.front();
    }
}

void extremal_all(Outcome& out) {
    std::size_t total = 0;
    for (const auto& p : all_presets()) {
        ExtendedAffineWeylGroup g(p.datum);
        for (const auto& mu : dominant_envelope(dual_datum(p.datum.datum), 6)) {
            ++total;
            const std::string where = p.name + " mu=" + to_string(mu);
            ExtremalReport r = extremal_translations(g, mu);
            out.expect(r.matches, where + " maximal elements");
            out.expect(r.dominance_bridge, where + " dominance");
            out.expect(admissible_set(g, mu) == admissible_set_absolute(g, mu), where + " admissible sets");
            out.expect(conjugation_lemma_holds(g, image_in_coinvariants(g, mu)), where + " conjugation");
        }
    }
    out.note << (out.ok ? "" : "; ") << "weights=" << total;
}

void kl_bridge(Outcome& out, std::int64_t bound) {
    for (const char* name : {"su3-unramified", "su4-unramified"}) {
        Preset p = load_preset(name);
        ExtendedAffineWeylGroup g(p.datum);
        FixedAffineGroup w(g);
        HeckeAlgebra hecke(w);
        FixedPointDatum h = fixed_point_datum(p.datum);
        std::size_t pairs = 0;
        auto env = rational_dominant_envelope(h, bound);
        for (const auto& mu : env) {
            const CoinvariantElement lam = h.project(mu);
            TwistedHighestWeightTrace trace(h, lam);
            const AffineElement top = w.max_double_coset(lam);
            for (const auto& nu : fixed_dominant_weights(h, lam)) {
                Cyclotomic t = trace(nu);
                Int kl = hecke.kl_polynomial(w.max_double_coset(nu), top).at_one();
                out.expect(t.is_integer() && t.as_integer() == kl,
                           std::string(name) + " lambda=" + to_string(mu) + " nu=" + to_string(nu.free));
                ++pairs;
            }
        }
        out.note << (out.ok ? "" : ";") << " " << name << "@" << bound << ":weights=" << env.size()
                 << ",pairs=" << pairs;
    }
}

void sl3_oracle_check(Outcome& out) {
    RootDatum g = build_datum("A2", Isogeny::SimplyConnected);
    RootDatum dual = dual_datum(g);
    DatumAutomorphism sigma = dual_automorphism(automorphism_from_permutation(g, {1, 0}));
    TwiningCharacter tw(dual, sigma, vadd(dual.simple_root(0), dual.simple_root(1)));
    for (const auto& [w, expected] : sl3_oracle::fixed_weight_traces()) {
        IVec weight = vadd(vscale(w.first, dual.simple_root(0)), vscale(w.second, dual.simple_root(1)));
        Int got = tw(weight);
        out.expect(got == expected, "weight " + to_string(weight));
        out.note << " (" << w.first << "," << w.second << "):" << got << "/" << expected;
    }
}

void branching_all(Outcome& out) {
    std::size_t total = 0;
    for (const auto& p : all_presets()) {
        FixedPointDatum h = fixed_point_datum(p.datum);
        for (const auto& mu : rational_dominant_envelope(h, 6)) {
            ++total;
            const std::string where = p.name + " mu=" + to_string(mu);
            BranchingResult b = branch(h, mu);
            out.expect(b.top_multiplicity_one, where + " top multiplicity");
            out.expect(b.top_trace_one, where + " top trace");
            out.expect(std::all_of(b.multiplicities.begin(), b.multiplicities.end(),
                                   [](const auto& kv) { return kv.second >= 0; }),
                       where + " nonnegative");
            out.expect(b.dimension_bookkeeping, where + " dimensions");
            out.expect(b.weight_equality && weight_equality_check(h, mu), where + " weight sets");
        }
    }
    out.note << (out.ok ? "" : "; ") << "weights=" << total;
}

void test_functions(Outcome& out) {
    std::size_t split = 0, expansions = 0;
    for (const auto& p : all_presets()) {
        FixedPointDatum h = fixed_point_datum(p.datum);
        for (const auto& mu : rational_dominant_envelope(h, 6)) {
            CentralFunction c = central_function(p.datum, mu);
            ++expansions;
            const std::string where = p.name + " mu=" + to_string(mu);
            out.expect(c.top_coefficient_one, where + " top coefficient");
            out.expect(c.routes_agree && c.support_bounded, where + " expansion");
            if (is_split(p.datum)) {
                ++split;
                out.expect(matches_weight_multiplicities(p.datum, mu, c.geometric), where + " multiplicities");
            }
        }
    }
    // The split general linear group, with its full centre.
    LocalGroupDatum gl3 = from_perm("A2", Isogeny::GeneralLinear, {}, {});
    for (const auto& mu : rational_dominant_envelope(fixed_point_datum(gl3), 6)) {
        ++split;
        out.expect(matches_weight_multiplicities(gl3, mu, central_function(gl3, mu).geometric),
                   "GL3 mu=" + to_string(mu));
    }

    std::size_t degenerate = 0;
    for (const char* name : {"su3-unramified", "su5-unramified", "d4-triality-unramified"}) {
        Preset p = load_preset(name);
        TowerConfig cfg{name, p.datum, p.datum.inertia_generators, 1};
        for (const auto& mu : rational_dominant_envelope(fixed_point_datum(p.datum), 4))
            for (int j : {1, 2}) {
                TestFunction tf = test_function(cfg, mu, j);
                ++degenerate;
                out.expect(tf.degenerate && tf.matches_central_function.value_or(false) && tf.ok(),
                           std::string(name) + " degenerate j=" + std::to_string(j));
            }
    }

    std::size_t tower_checks = 0;
    for (const auto& p : all_presets()) {
        if (!p.tower) continue;
        const TowerPreset& t = *p.tower;
        std::vector<IVec> mus = rational_dominant_envelope(fixed_point_datum(p.datum), 6);
        mus.push_back(t.mu);
        for (int j : t.levels)
            for (const auto& mu : mus) {
                const std::string where = p.name + " j=" + std::to_string(j) + " mu=" + to_string(mu);
                out.expect(ramified_descent_check(t.config, mu, j).ok(), where + " descent");
                TestFunction tf = test_function(t.config, mu, j);
                out.expect(tf.ok(), where + " test function");
                ++tower_checks;
            }
    }
    out.note << (out.ok ? "" : "; ") << "expansions=" << expansions << " split=" << split
             << " degenerate=" << degenerate << " tower=" << tower_checks;
}

void determinism(Outcome& out) {
    std::vector<Preset> presets = all_presets();
    VerifyOptions first;
    VerifyOptions second;
    second.threads = 2;
    VerifyReport a = verify_presets(presets, first);
    VerifyReport b = verify_presets(presets, second);
    const std::string ja = a.to_json(), jb = b.to_json();
    out.expect(ja == jb, "json reports differ");
    out.expect(a.to_tsv() == b.to_tsv(), "tsv reports differ");
    out.note << (out.ok ? "" : "; ") << "bytes=" << ja.size() << " checks=" << a.count(CheckStatus::Pass) +
                                                                               a.count(CheckStatus::Fail) +
                                                                               a.count(CheckStatus::Resource) +
                                                                               a.count(CheckStatus::Input)
             << " verify_exit=" << a.exit_code();
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "folding duality over all diagram automorphism groups", duality_all_types},
        {2, "flip on A2n folds to (B,C,B,C)", a2n_example},
        {3, "echelonnage characterizations and special parameters", echelonnage_all},
        {4, "extremal translations, dominance and admissible sets", extremal_all},
        {5, "KL values at 1 equal twisted weight traces",
         [](Outcome& o) {
             kl_bridge(o, 4);
             kl_bridge(o, 8);
         }},
        {6, "twining character against explicit sl3 matrices", sl3_oracle_check},
        {7, "branching to the fixed group", branching_all},
        {8, "test function expansions", test_functions},
        {9, "verify reports are byte-identical", determinism},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.note << " exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_ok = all_ok && out.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << c.id << ": " << (out.ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
                  << out.checked << " checks, " << timing << "] " << out.note.str() << std::endl;
    }
    return all_ok ? 0 : 1;
}
