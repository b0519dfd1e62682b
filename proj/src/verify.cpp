#include "rootfold/verify.hpp"

#include "rootfold/affine.hpp"
#include "rootfold/characters.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/hecke.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace rootfold {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Resource: return "resource";
        case CheckStatus::Input: return "input";
    }
    return "?";
}

namespace {

std::string flags(std::initializer_list<std::pair<const char*, bool>> items) {
    std::string s;
    for (const auto& [name, ok] : items) {
        if (!s.empty()) s += ' ';
        s += name;
        s += ok ? "=1" : "=0";
    }
    return s;
}

bool all_of(std::initializer_list<bool> xs) {
    return std::all_of(xs.begin(), xs.end(), [](bool b) { return b; });
}

std::string show(const CoinvariantElement& e) {
    std::string s = to_string(e.free);
    if (!e.torsion.empty()) s += "+t" + to_string(e.torsion);
    return s;
}

class Recorder {
public:
    explicit Recorder(PresetReport& r) : r_(r) {}
    // Runs body; its return is (passed, detail). Exceptions map to statuses.
    void run(const std::string& check, const std::string& instance,
             const std::function<std::pair<bool, std::string>()>& body) {
        CheckResult c{check, instance, CheckStatus::Pass, ""};
        try {
            auto [ok, detail] = body();
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            c.detail = detail;
        } catch (const ResourceError& e) {
            c.status = CheckStatus::Resource;
            c.detail = e.what();
        } catch (const TheoremViolation& e) {
            c.status = CheckStatus::Fail;
            c.detail = e.what();
        } catch (const InputError& e) {
            c.status = CheckStatus::Input;
            c.detail = e.what();
        }
        r_.checks.push_back(std::move(c));
    }

private:
    PresetReport& r_;
};

// Some c > 0 with c * a = b as sets.
bool proportional_sets(std::vector<QVec> a, std::vector<QVec> b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    std::sort(b.begin(), b.end());
    const QVec& v = a.front();
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k == v.size()) return false;
    for (const auto& w : b) {
        Rat c = w[k] / v[k];
        if (c <= 0 || qscale(c, v) != w) continue;
        std::vector<QVec> scaled;
        for (const auto& x : a) scaled.push_back(qscale(c, x));
        std::sort(scaled.begin(), scaled.end());
        if (scaled == b) return true;
    }
    return false;
}

// The classical case-by-case description of the breve system in terms of the
// restricted roots.
std::pair<bool, std::string> restricted_root_description(const Echelonnage& e) {
    std::set<QVec> restricted;
    for (const auto& r : e.ambient.roots) {
        QVec a = group_average(r, e.inertia_matrices);
        if (!qis_zero(a)) restricted.insert(a);
    }
    std::vector<QVec> breve = e.breve.system.roots;
    std::sort(breve.begin(), breve.end());
    if (e.inertia_matrices.size() <= 1) {
        std::vector<QVec> ambient(restricted.begin(), restricted.end());
        return {ambient == breve, "case=split"};
    }
    bool reduced = true;
    for (const auto& a : restricted)
        if (restricted.count(qscale(2, a))) reduced = false;
    std::vector<QVec> target;
    if (reduced) {
        for (const auto& a : restricted) target.push_back(qscale(Rat(2) / e.ambient.form(a, a), a));
        return {proportional_sets(target, breve), "case=reduced"};
    }
    for (const auto& a : restricted)
        if (!restricted.count(qscale(2, a))) target.push_back(a);
    return {proportional_sets(target, breve), "case=non-reduced"};
}

}  // namespace

PresetReport verify_preset(const Preset& p, const VerifyOptions& opt) {
    PresetReport report;
    report.preset = p.name;
    Recorder rec(report);
    const LocalGroupDatum& lgd = p.datum;
    const std::int64_t bound = opt.mu_bound.value_or(p.mu_bound);

    // Folding duality for the inertia group, the Frobenius group and the whole Galois image.
    {
        const RootSystem s = root_system_of(lgd.datum);
        std::vector<DatumAutomorphism> all = lgd.inertia;
        all.insert(all.end(), lgd.frobenius_powers.begin(), lgd.frobenius_powers.end());
        const auto galois = generate_group(lgd.datum, all);
        const std::vector<std::pair<std::string, std::vector<DatumAutomorphism>>> groups = {
            {"inertia", lgd.inertia}, {"frobenius", lgd.frobenius_powers}, {"galois", galois}};
        for (const auto& [name, group] : groups) {
            rec.run("duality", name, [&] {
                DualityReport d = verify_duality(s, permutation_matrices(group));
                std::string detail = "order=" + std::to_string(d.group_order) + " N=" + d.norm_type +
                                     " N'=" + d.modified_norm_type + " res=" + d.restriction_type +
                                     " res'=" + d.modified_restriction_type;
                return std::make_pair(d.ok(), detail);
            });
        }
    }

    rec.run("echelonnage", "", [&] {
        Echelonnage e = compute_echelonnage(lgd, p.parameters);
        auto [pr_ok, pr_case] = restricted_root_description(e);
        std::string params;
        for (std::size_t i = 0; i < e.parameters.node_names.size(); ++i) {
            const std::size_t nf = e.parameters.finite.size();
            params += (i ? "," : "") + e.parameters.node_names[i] + "=" +
                      std::to_string(i < nf ? e.parameters.finite[i] : e.parameters.affine[i - nf]);
        }
        std::string detail = "breve=" + e.breve.system.type() + " relative=" + e.relative.system.type() +
                             " tilde=" + e.relative_tilde.system.type() + " union=" + e.union_type + " L=" + params +
                             " " +
                             flags({{"breve_dual", e.breve_duality},
                                    {"relative_dual", e.relative_dual_is_norm},
                                    {"tilde_dual", e.relative_tilde_dual_is_mod_norm},
                                    {"halving", e.halving_matches},
                                    {"reduced_union", e.non_divisible_is_tilde},
                                    {"multipliable", e.non_multipliable_is_relative},
                                    {"special", e.special_criteria_agree},
                                    {"restricted_roots", pr_ok}}) +
                             " " + pr_case;
        bool ok = all_of({e.breve_duality, e.relative_dual_is_norm, e.relative_tilde_dual_is_mod_norm,
                          e.halving_matches, e.non_divisible_is_tilde, e.non_multipliable_is_relative,
                          e.special_criteria_agree, pr_ok});
        return std::make_pair(ok, detail);
    });

    std::unique_ptr<ExtendedAffineWeylGroup> g;
    rec.run("affine-group", "", [&] {
        g = std::make_unique<ExtendedAffineWeylGroup>(lgd);
        return std::make_pair(true, "finite=" + std::to_string(g->finite_order()) +
                                        " simple=" + std::to_string(g->num_simple()));
    });

    std::vector<IVec> envelope;
    if (g)
        rec.run("envelope", "", [&] {
            envelope = dominant_envelope(dual_datum(lgd.datum), bound);
            return std::make_pair(true, "bound=" + std::to_string(bound) + " size=" + std::to_string(envelope.size()));
        });
    if (g) {
        for (const auto& mu : envelope) {
            rec.run("extremal", "mu=" + to_string(mu), [&] {
                ExtremalReport r = extremal_translations(*g, mu);
                AffineSet adm = admissible_set(*g, mu, opt.interval_cap);
                AffineSet abs = admissible_set_absolute(*g, mu, opt.interval_cap);
                std::size_t conj_count = 0;
                bool conj = conjugation_lemma_holds(*g, image_in_coinvariants(*g, mu), &conj_count);
                bool same = adm == abs;
                std::string detail = "images=" + std::to_string(r.images.size()) +
                                     " maximal=" + std::to_string(r.maximal.size()) +
                                     " adm=" + std::to_string(adm.size()) + " " +
                                     flags({{"extremal", r.matches},
                                            {"dominance", r.dominance_bridge},
                                            {"adm_definitions", same},
                                            {"conjugation", conj}});
                return std::make_pair(r.matches && r.dominance_bridge && same && conj, detail);
            });
        }
    }

    std::optional<FixedPointDatum> fixed_point;
    std::vector<IVec> rational;
    rec.run("fixed-point-datum", "", [&] {
        fixed_point = fixed_point_datum(lgd);
        rational = rational_dominant_envelope(*fixed_point, bound);
        return std::make_pair(fixed_point->matches_reduced_images,
                              "type=" + classify_cartan(fixed_point->datum.cartan()).type +
                                  " envelope=" + std::to_string(rational.size()) + " " +
                                  flags({{"reduced_images", fixed_point->matches_reduced_images}}));
    });
    if (!fixed_point) return report;
    const FixedPointDatum& h = *fixed_point;
    for (const auto& mu : rational) {
        rec.run("branching", "mu=" + to_string(mu), [&] {
            BranchingResult b = branch(h, mu);
            std::string blocks;
            for (const auto& [lam, a] : b.multiplicities) {
                blocks += (blocks.empty() ? "" : ",") + show(lam) + ":" + a.str();
                auto it = b.traces.find(lam);
                if (it != b.traces.end()) blocks += "/" + it->second.to_string();
            }
            std::string detail = "blocks=" + blocks + " " +
                                 flags({{"top_multiplicity", b.top_multiplicity_one},
                                        {"top_trace", b.top_trace_one},
                                        {"dimensions", b.dimension_bookkeeping},
                                        {"weights", b.weight_equality},
                                        {"orbit_symmetry", b.twisted_orbit_symmetry}});
            return std::make_pair(b.ok(), detail);
        });
        rec.run("central-function", "mu=" + to_string(mu), [&] {
            CentralFunction c = central_function(lgd, mu);
            std::string terms;
            for (const auto& [w, v] : c.geometric) terms += (terms.empty() ? "" : ",") + show(w) + ":" + v.to_string();
            bool split = lgd.inertia.size() == 1 && lgd.frobenius.is_identity();
            bool multiplicities = !split || matches_weight_multiplicities(lgd, mu, c.geometric);
            std::string detail = "z=" + terms + " " +
                                 flags({{"routes", c.routes_agree},
                                        {"top", c.top_coefficient_one},
                                        {"support", c.support_bounded},
                                        {"multiplicities", multiplicities}});
            return std::make_pair(c.ok() && multiplicities, detail);
        });
    }

    if (g && opt.run_kl) {
        std::unique_ptr<FixedAffineGroup> fixed;
        rec.run("fixed-affine-group", "", [&] {
            fixed = std::make_unique<FixedAffineGroup>(*g);
            std::string weights;
            for (int s = 0; s < fixed->num_simple(); ++s) weights += (s ? "," : "") + std::to_string(fixed->weight(s));
            return std::make_pair(true, "weights=" + weights);
        });
        if (fixed) {
            HeckeAlgebra hecke(*fixed, opt.interval_cap);
            std::vector<IVec> kl_envelope;
            rec.run("kl-envelope", "", [&] {
                kl_envelope = rational_dominant_envelope(h, opt.kl_bound);
                return std::make_pair(true, "bound=" + std::to_string(opt.kl_bound) +
                                                " size=" + std::to_string(kl_envelope.size()));
            });
            for (const auto& mu : kl_envelope) {
                rec.run("geometric-basis", "lambda=" + to_string(mu), [&] {
                    const CoinvariantElement lam = h.project(mu);
                    GeometricBasisElement gb = geometric_basis(h, lam, &hecke);
                    bool bar = hecke.canonical_is_bar_invariant(fixed->max_double_coset(lam));
                    std::string terms;
                    for (const auto& t : gb.terms)
                        terms += (terms.empty() ? "" : ",") + show(t.weight) + ":" + t.trace.to_string() + "|" +
                                 t.kl_at_one.str();
                    std::string detail = "terms=" + terms + " " +
                                         flags({{"routes", gb.routes_agree},
                                                {"top", gb.top_coefficient_one},
                                                {"bar_invariant", bar}});
                    return std::make_pair(gb.routes_agree && gb.top_coefficient_one && bar, detail);
                });
            }
        }
    }

    if (p.tower) {
        const TowerPreset& t = *p.tower;
        for (int j : t.levels) {
            const std::string inst = "j=" + std::to_string(j) + " mu=" + to_string(t.mu);
            rec.run("ramified-descent", inst, [&] {
                DescentCheck d = ramified_descent_check(t.config, t.mu, j);
                return std::make_pair(d.ok(), "index=" + std::to_string(d.index) + " " +
                                                  flags({{"untwisted", d.untwisted_ok}, {"twisted", d.twisted_ok}}));
            });
            rec.run("test-function", inst, [&] {
                TestFunction tf = test_function(t.config, t.mu, j);
                std::string terms;
                for (const auto& [w, v] : tf.expansion)
                    terms += (terms.empty() ? "" : ",") + show(w) + ":" + v.to_string();
                return std::make_pair(tf.ok(), "z=" + terms + " " +
                                                   flags({{"routes", tf.routes_agree},
                                                          {"top", tf.top_coefficient_one},
                                                          {"upstairs", tf.ramified.ok()}}));
            });
        }
    }
    return report;
}

std::size_t VerifyReport::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& p : presets)
        for (const auto& c : p.checks)
            if (c.status == s) ++n;
    return n;
}

int VerifyReport::exit_code() const {
    if (count(CheckStatus::Fail) > 0) return 1;
    if (count(CheckStatus::Input) > 0) return 2;
    if (count(CheckStatus::Resource) > 0) return 3;
    return 0;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["presets"] = nlohmann::ordered_json::array();
    for (const auto& p : presets) {
        nlohmann::ordered_json pj;
        pj["preset"] = p.preset;
        pj["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : p.checks) {
            nlohmann::ordered_json cj;
            cj["check"] = c.check;
            cj["instance"] = c.instance;
            cj["status"] = status_name(c.status);
            cj["detail"] = c.detail;
            pj["checks"].push_back(std::move(cj));
        }
        j["presets"].push_back(std::move(pj));
    }
    j["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"resource", count(CheckStatus::Resource)},
                    {"input", count(CheckStatus::Input)}};
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

std::string VerifyReport::to_tsv() const {
    std::ostringstream out;
    out << "preset\tcheck\tinstance\tstatus\tdetail\n";
    for (const auto& p : presets)
        for (const auto& c : p.checks)
            out << p.preset << '\t' << c.check << '\t' << c.instance << '\t' << status_name(c.status) << '\t'
                << c.detail << '\n';
    return out.str();
}

VerifyReport verify_presets(const std::vector<Preset>& presets, const VerifyOptions& opt) {
    VerifyReport report;
    report.presets.resize(presets.size());
    unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(presets.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < presets.size(); i = next++) report.presets[i] = verify_preset(presets[i], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

}  // namespace rootfold
