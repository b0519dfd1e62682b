#include "rootfold/testfn.hpp"

#include <algorithm>
#include <set>

namespace rootfold {

namespace {

bool below(const FixedPointDatum& h, const CoinvariantElement& top, const CoinvariantElement& w) {
    auto c = h.root_lattice_coordinates(h.lattice.sub(top, w));
    return c && std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
}

void add_to(ZExpansion& e, const CoinvariantElement& w, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = e.find(w);
    if (it == e.end()) {
        e.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

// Natural map from coinvariants of the smaller inertia group to those of the larger.
CoinvariantElement push(const FixedPointDatum& from, const FixedPointDatum& to, const CoinvariantElement& e) {
    return to.project(from.lattice.lift(e));
}

CoinvariantElement dominant_in_orbit(const FixedPointDatum& h, const std::vector<CoinvariantElement>& orbit) {
    for (const auto& x : orbit)
        if (h.is_dominant(x)) return x;
    throw TheoremViolation("Frobenius-fixed Weyl orbit without a dominant element");
}

std::set<IMat> members(const std::vector<DatumAutomorphism>& group) {
    std::set<IMat> out;
    for (const auto& g : group) out.insert(g.on_lattice);
    return out;
}

// Twining characters of V_mu on the dual datum, one per automorphism.
class TwiningCache {
public:
    TwiningCache(const RootDatum& dual, const IVec& mu) : dual_(dual), mu_(mu), table_(dual, mu) {}
    const MultiplicityTable& table() const { return table_; }
    Int operator()(const DatumAutomorphism& g, const IVec& nu) {
        if (g.is_identity()) return table_.at(nu);
        auto it = cache_.find(g.on_lattice);
        if (it == cache_.end()) it = cache_.emplace(g.on_lattice, std::make_unique<TwiningCharacter>(dual_, g, mu_)).first;
        return (*it->second)(nu);
    }

private:
    const RootDatum& dual_;
    IVec mu_;
    MultiplicityTable table_;
    std::map<IMat, std::unique_ptr<TwiningCharacter>> cache_;
};

}  // namespace

CentralFunction central_function(const LocalGroupDatum& lgd, const IVec& mu, HeckeAlgebra* hecke) {
    const FixedPointDatum h = fixed_point_datum(lgd);
    require_rational_dominant(h, mu);
    CentralFunction out;
    out.top = h.project(mu);
    const BranchingResult br = branch(h, mu);
    for (const auto& [lam, tr] : br.traces) {
        if (tr.is_zero()) continue;
        out.multiplicity_traces[lam] = tr;
        const GeometricBasisElement gb = geometric_basis(h, lam, hecke);
        if (!gb.routes_agree) out.kl_routes_agree = false;
        for (const auto& t : gb.terms) add_to(out.geometric, t.weight, tr * t.trace);
    }
    for (const auto& [w, v] : br.twisted)
        if (h.is_dominant(w)) add_to(out.character, w, v);
    out.routes_agree = out.geometric == out.character;
    auto it = out.geometric.find(out.top);
    out.top_coefficient_one = it != out.geometric.end() && it->second == Cyclotomic(Int(1));
    out.support_bounded = std::all_of(out.geometric.begin(), out.geometric.end(),
                                      [&](const auto& kv) { return below(h, out.top, kv.first); });
    return out;
}

bool matches_weight_multiplicities(const LocalGroupDatum& lgd, const IVec& mu, const ZExpansion& e) {
    if (lgd.inertia.size() != 1 || !lgd.frobenius.is_identity())
        throw InputError("weight-multiplicity form applies to split data only");
    const FixedPointDatum h = fixed_point_datum(lgd);
    MultiplicityTable table(h.dual, mu);
    ZExpansion expected;
    for (const auto& [w, m] : table.dominant()) add_to(expected, h.project(w), Cyclotomic(m));
    return expected == e;
}

void validate_tower(const TowerConfig& cfg) {
    if (cfg.residue_degree < 1) throw InputError("residue degree must be positive");
    const auto base = members(cfg.base.inertia);
    for (const auto& g : cfg.sub_inertia_generators)
        if (!base.count(g.on_lattice)) throw InputError("sub-inertia generator is not in the base inertia group");
    const auto sub = generate_group(cfg.base.datum, cfg.sub_inertia_generators);
    const auto sub_set = members(sub);
    const DatumAutomorphism f = cfg.base.frobenius, finv = inverse(f);
    for (const auto& s : sub)
        if (!sub_set.count(compose(compose(f, s), finv).on_lattice))
            throw InputError("Frobenius does not normalize the sub-inertia group");
}

namespace {

DatumAutomorphism frobenius_power(const TowerConfig& cfg, int j) {
    if (j < 1) throw InputError("tower level must be at least 1");
    const std::size_t order = cfg.base.frobenius_order();
    const std::size_t r = static_cast<std::size_t>(j) * static_cast<std::size_t>(cfg.residue_degree);
    return cfg.base.frobenius_powers[r % order];
}

}  // namespace

LocalGroupDatum unramified_level(const TowerConfig& cfg, int j) {
    validate_tower(cfg);
    return with_galois(cfg.base, cfg.base.inertia_generators, frobenius_power(cfg, j), cfg.label + "/unramified");
}

LocalGroupDatum ramified_level(const TowerConfig& cfg, int j) {
    validate_tower(cfg);
    return with_galois(cfg.base, cfg.sub_inertia_generators, frobenius_power(cfg, j), cfg.label + "/ramified");
}

std::size_t ramification_index(const TowerConfig& cfg) {
    const auto sub = generate_group(cfg.base.datum, cfg.sub_inertia_generators);
    return cfg.base.inertia.size() / sub.size();
}

DescentCheck ramified_descent_check(const TowerConfig& cfg, const IVec& mu, int j) {
    const FixedPointDatum hf = fixed_point_datum(unramified_level(cfg, j));
    const FixedPointDatum he = fixed_point_datum(ramified_level(cfg, j));
    require_rational_dominant(he, mu);
    DescentCheck out;
    out.index = ramification_index(cfg);

    for (const auto& [w, m] : invariants_character(he, mu)) out.restricted[push(he, hf, w)] += m;
    for (auto it = out.restricted.begin(); it != out.restricted.end();)
        it = it->second == 0 ? out.restricted.erase(it) : std::next(it);
    const int order = static_cast<int>(hf.local.frobenius_order());
    for (const auto& [w, v] : twisted_invariants_character(he, mu)) {
        auto p = push(he, hf, w);
        auto it = out.restricted_twisted.find(p);
        if (it == out.restricted_twisted.end())
            out.restricted_twisted.emplace(p, v);
        else
            it->second += v;
    }

    // Coset representatives of I_F / I_E, on the dual side.
    const auto& big = hf.inertia_on_dual;
    const auto& small = he.inertia_on_dual;
    const auto small_set = members(small);
    std::vector<DatumAutomorphism> reps;
    std::set<IMat> covered;
    for (const auto& g : big) {
        if (covered.count(g.on_lattice)) continue;
        reps.push_back(g);
        for (const auto& s : small) covered.insert(compose(g, s).on_lattice);
    }
    if (reps.size() != out.index) throw TheoremViolation("coset count disagrees with the inertia index");

    TwiningCache twining(he.dual, mu);
    const auto weights = twining.table().full();
    const DatumAutomorphism frob = he.frobenius_on_dual, frob_inv = inverse(frob);
    std::map<CoinvariantElement, Int> untwisted, twisted;
    for (const auto& sigma : big) {
        for (const auto& h : reps) {
            const DatumAutomorphism h_inv = inverse(h);
            // Plain element sigma.
            const DatumAutomorphism a = compose(compose(h_inv, sigma), h);
            if (small_set.count(a.on_lattice))
                for (const auto& [nu, m] : weights)
                    if (matvec(a.on_lattice, nu) == nu) untwisted[hf.project(nu)] += twining(a, nu);
            // Twisted element frob * sigma.
            const DatumAutomorphism b = compose(compose(h_inv, compose(frob, sigma)), h);
            if (small_set.count(compose(frob_inv, b).on_lattice))
                for (const auto& [nu, m] : weights)
                    if (matvec(b.on_lattice, nu) == nu) twisted[hf.project(nu)] += twining(b, nu);
        }
    }
    const Int n = static_cast<long long>(big.size());
    for (const auto& [w, s] : untwisted) {
        if (s % n != 0) throw TheoremViolation("induced invariants have non-integral multiplicity");
        if (s != 0) out.induced[w] = s / n;
    }
    for (const auto& [w, s] : twisted) {
        auto v = Cyclotomic(s, order).divided_by(n);
        if (!v.is_zero()) out.induced_twisted[w] = v;
    }
    for (auto it = out.restricted_twisted.begin(); it != out.restricted_twisted.end();)
        it = it->second.is_zero() ? out.restricted_twisted.erase(it) : std::next(it);
    out.untwisted_ok = out.restricted == out.induced;
    out.twisted_ok = out.restricted_twisted == out.induced_twisted;
    return out;
}

TestFunction test_function(const TowerConfig& cfg, const IVec& mu, int j, HeckeAlgebra* hecke) {
    const LocalGroupDatum lower = unramified_level(cfg, j);
    const LocalGroupDatum upper = ramified_level(cfg, j);
    const FixedPointDatum hf = fixed_point_datum(lower);
    const FixedPointDatum he = fixed_point_datum(upper);
    TestFunction out;
    out.level = j;
    out.frobenius_power = static_cast<std::int64_t>(j) * cfg.residue_degree;
    out.ramified = central_function(upper, mu, hecke);

    // Each z-term upstairs is an orbit sum; push the orbit down and regroup it
    // into orbit sums downstairs. Representatives are the dominant elements.
    for (const auto& [nu, c] : out.ramified.geometric) {
        std::map<CoinvariantElement, Int> counts;
        for (const auto& x : frobenius_fixed_orbit(he, nu)) counts[push(he, hf, x)] += 1;
        std::set<CoinvariantElement> done;
        for (const auto& [y, k] : counts) {
            if (done.count(y)) continue;
            const auto cls = frobenius_fixed_orbit(hf, y);
            for (const auto& z : cls) {
                done.insert(z);
                auto it = counts.find(z);
                if (it == counts.end() || it->second != k)
                    throw TheoremViolation("pushed orbit is not a union of orbits with constant multiplicity");
            }
            add_to(out.expansion, dominant_in_orbit(hf, cls), c * Cyclotomic(k));
        }
    }

    TwistedCharacter pushed;
    for (const auto& [w, v] : twisted_invariants_character(he, mu)) {
        auto p = push(he, hf, w);
        auto it = pushed.find(p);
        if (it == pushed.end())
            pushed.emplace(p, v);
        else
            it->second += v;
    }
    for (const auto& [w, v] : pushed)
        if (hf.is_dominant(w)) add_to(out.direct, w, v);
    out.routes_agree = out.expansion == out.direct;

    const CoinvariantElement top = hf.project(mu);
    auto it = out.expansion.find(top);
    out.top_coefficient_one = it != out.expansion.end() && it->second == Cyclotomic(Int(1));

    out.degenerate = members(lower.inertia) == members(upper.inertia);
    if (out.degenerate) out.matches_central_function = central_function(lower, mu, hecke).geometric == out.expansion;
    return out;
}

}  // namespace rootfold
