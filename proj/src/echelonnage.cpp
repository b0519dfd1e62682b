#include "rootfold/echelonnage.hpp"

#include <algorithm>
#include <set>

namespace rootfold {

LocalGroupDatum make_local_datum(const std::string& label, const RootDatum& datum,
                                 const std::vector<DatumAutomorphism>& inertia_generators,
                                 const DatumAutomorphism& frobenius) {
    LocalGroupDatum lgd;
    lgd.label = label;
    lgd.datum = datum;
    lgd.inertia_generators = inertia_generators;
    lgd.inertia = generate_group(datum, inertia_generators);
    lgd.frobenius = frobenius;
    lgd.frobenius_powers = generate_group(datum, {frobenius});
    // The Frobenius must normalize inertia.
    std::set<IMat> members;
    for (const auto& s : lgd.inertia) members.insert(s.on_lattice);
    DatumAutomorphism finv = inverse(frobenius);
    for (const auto& s : lgd.inertia) {
        IMat conj = compose(compose(frobenius, s), finv).on_lattice;
        if (!members.count(conj)) throw InputError("Frobenius does not normalize the inertia group");
    }
    return lgd;
}

LocalGroupDatum with_galois(const LocalGroupDatum& base, const std::vector<DatumAutomorphism>& inertia_generators,
                            const DatumAutomorphism& frobenius, const std::string& label) {
    return make_local_datum(label, base.datum, inertia_generators, frobenius);
}

std::int64_t positive_root_count(const IMat& cartan) {
    const int r = static_cast<int>(cartan.size());
    if (r == 0) return 0;
    std::vector<IVec> roots, coroots;
    for (int j = 0; j < r; ++j) {
        IVec a(r), c(r, 0);
        for (int i = 0; i < r; ++i) a[i] = cartan[j][i];
        c[j] = 1;
        roots.push_back(a);
        coroots.push_back(c);
    }
    return make_datum("sub", r, roots, coroots).num_positive;
}

AffineDiagram affine_diagram(const RootSystem& s) {
    AffineDiagram d;
    d.finite_nodes = s.rank();
    auto comps = diagram_components(s.cartan());
    d.node_component.assign(s.rank(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int i : comps[c]) d.node_component[i] = static_cast<int>(c);
    d.node_roots = s.base;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        d.node_roots.push_back(qscale(Rat(-1), s.highest_root(comps[c])));
        d.node_component.push_back(static_cast<int>(c));
    }
    const std::size_t n = d.node_roots.size();
    d.cartan.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = Rat(2) * s.form(d.node_roots[i], d.node_roots[j]) / s.form(d.node_roots[j], d.node_roots[j]);
            d.cartan[i][j] = checked::to_i64(v);
        }
    return d;
}

namespace {

bool same_roots(const RootSystem& a, const RootSystem& b) {
    if (a.base != b.base) return false;
    auto ra = a.roots, rb = b.roots;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

std::vector<QMat> cyclic_group(const QMat& g) {
    const std::size_t n = g.size();
    QMat id(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<QMat> out{id};
    QMat cur = g;
    while (cur != id) {
        out.push_back(cur);
        cur = qmatmul(g, cur);
        if (out.size() > 1000) throw InputError("Frobenius has infinite order");
    }
    return out;
}

IMat submatrix(const IMat& m, const std::vector<int>& idx) {
    IMat r(idx.size(), IVec(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) r[a][b] = m[idx[a]][idx[b]];
    return r;
}

}  // namespace

Echelonnage compute_echelonnage(const LocalGroupDatum& lgd,
                                const std::map<std::string, std::int64_t>& overrides) {
    Echelonnage e;
    e.ambient = root_system_of(lgd.datum);
    e.inertia_matrices = permutation_matrices(lgd.inertia);
    e.frobenius_matrices = cyclic_group(permutation_matrices({lgd.frobenius})[0]);

    e.breve = fold(e.ambient, e.inertia_matrices, FoldOp::ModifiedNorm);
    e.breve_coroots = fold(dual_system(e.ambient), e.inertia_matrices, FoldOp::Restriction);
    e.breve_duality = same_roots(e.breve.system, dual_system(e.breve_coroots.system));

    const RootSystem& breve = e.breve.system;
    e.relative = fold(breve, e.frobenius_matrices, FoldOp::ModifiedRestriction);
    e.relative_tilde = fold(breve, e.frobenius_matrices, FoldOp::Restriction);
    RootSystem breve_dual = dual_system(breve);
    e.relative_dual_is_norm =
        same_roots(dual_system(e.relative.system), fold(breve_dual, e.frobenius_matrices, FoldOp::Norm).system);
    e.relative_tilde_dual_is_mod_norm = same_roots(dual_system(e.relative_tilde.system),
                                                   fold(breve_dual, e.frobenius_matrices, FoldOp::ModifiedNorm).system);

    const int r0 = e.relative.system.rank();
    e.special.assign(r0, false);
    e.special_diagnostics.assign(r0, {});
    for (int k = 0; k < r0; ++k) e.special[k] = !e.relative.orthogonal[k];

    e.halving_matches = true;
    for (int k = 0; k < r0; ++k) {
        QVec expect = e.special[k] ? qscale(Rat(1, 2), e.relative.system.base[k]) : e.relative.system.base[k];
        if (expect != e.relative_tilde.system.base[k]) e.halving_matches = false;
    }

    // Union of the two systems and its reduced parts.
    std::set<QVec> uni(e.relative.system.roots.begin(), e.relative.system.roots.end());
    uni.insert(e.relative_tilde.system.roots.begin(), e.relative_tilde.system.roots.end());
    e.union_roots.assign(uni.begin(), uni.end());
    for (const auto& a : e.union_roots) {
        if (!uni.count(qscale(Rat(1, 2), a))) e.non_divisible.push_back(a);
        if (!uni.count(qscale(Rat(2), a))) e.non_multipliable.push_back(a);
    }
    {
        std::vector<QVec> t = e.relative_tilde.system.roots, r = e.relative.system.roots;
        std::sort(t.begin(), t.end());
        std::sort(r.begin(), r.end());
        e.non_divisible_is_tilde = (e.non_divisible == t);
        e.non_multipliable_is_relative = (e.non_multipliable == r);
    }

    // Structural criterion: middle node of an A_2n component of the breve
    // system on which the stabilizing Frobenius power acts nontrivially.
    IMat breve_cartan = breve.cartan();
    auto breve_comps = diagram_components(breve_cartan);
    std::vector<int> comp_of(breve.rank());
    for (std::size_t c = 0; c < breve_comps.size(); ++c)
        for (int i : breve_comps[c]) comp_of[i] = static_cast<int>(c);
    std::vector<int> tau_perm(breve.rank());
    for (int i = 0; i < breve.rank(); ++i) {
        QVec img = qmatvec(e.frobenius_matrices.size() > 1 ? e.frobenius_matrices[1] : e.frobenius_matrices[0],
                           breve.base[i]);
        auto it = std::find(breve.base.begin(), breve.base.end(), img);
        if (it == breve.base.end()) throw InputError("Frobenius does not preserve the inertia-folded base");
        tau_perm[i] = static_cast<int>(it - breve.base.begin());
    }
    for (int k = 0; k < r0; ++k) {
        int node = e.relative.orbits[k][0];
        int c = comp_of[node];
        auto cls = classify_cartan(submatrix(breve_cartan, breve_comps[c])).components.at(0);
        bool structural = false;
        if (cls.letter == 'A' && cls.rank % 2 == 0) {
            // Smallest power of the Frobenius stabilizing the component.
            std::vector<int> p(breve.rank());
            for (int i = 0; i < breve.rank(); ++i) p[i] = i;
            for (int power = 1; power <= static_cast<int>(e.frobenius_matrices.size()); ++power) {
                for (int i = 0; i < breve.rank(); ++i) p[i] = tau_perm[p[i]];
                if (comp_of[p[breve_comps[c][0]]] != c) continue;
                bool nontrivial = false;
                for (int i : breve_comps[c]) nontrivial = nontrivial || p[i] != i;
                int n = cls.rank / 2;
                std::vector<int> ordered;
                for (int local : cls.nodes) ordered.push_back(breve_comps[c][local]);
                bool middle = ordered[n - 1] == node || ordered[n] == node;
                structural = nontrivial && middle;
                break;
            }
        }
        e.special_diagnostics[k].by_structure = structural;
        e.special_diagnostics[k].by_non_orthogonality = e.special[k];
    }

    // Parameters from the folding length of each Frobenius orbit of affine nodes.
    AffineDiagram breve_aff = affine_diagram(breve);
    const int nb = static_cast<int>(breve_aff.node_roots.size());
    const QMat& tau = e.frobenius_matrices.size() > 1 ? e.frobenius_matrices[1] : e.frobenius_matrices[0];
    std::vector<int> node_perm(nb);
    for (int i = 0; i < nb; ++i) {
        QVec img = qmatvec(tau, breve_aff.node_roots[i]);
        auto it = std::find(breve_aff.node_roots.begin(), breve_aff.node_roots.end(), img);
        if (it == breve_aff.node_roots.end()) throw InputError("Frobenius does not preserve the base alcove");
        node_perm[i] = static_cast<int>(it - breve_aff.node_roots.begin());
    }
    auto orbit_of_node = [&](int i) {
        std::set<int> o{i};
        int j = node_perm[i];
        while (j != i) {
            o.insert(j);
            j = node_perm[j];
        }
        return std::vector<int>(o.begin(), o.end());
    };
    auto orbit_length = [&](const std::vector<int>& orbit) {
        IMat sub = submatrix(breve_aff.cartan, orbit);
        try {
            return positive_root_count(sub);
        } catch (const InputError&) {
            throw InputError("a Frobenius orbit of affine reflections generates an infinite group; "
                             "the group is not quasi-split");
        }
    };

    ParameterFunction& pf = e.folding_parameters;
    pf.finite.resize(r0);
    for (int k = 0; k < r0; ++k) pf.finite[k] = orbit_length(e.relative.orbits[k]);
    pf.components = diagram_components(e.relative.system.cartan());
    for (const auto& comp : pf.components) {
        int breve_comp = comp_of[e.relative.orbits[comp[0]][0]];
        int affine_node = breve_aff.finite_nodes + breve_comp;
        pf.affine.push_back(orbit_length(orbit_of_node(affine_node)));
    }
    for (int k = 0; k < r0; ++k) pf.node_names.push_back("s" + std::to_string(k + 1));
    for (std::size_t c = 0; c < pf.components.size(); ++c)
        pf.node_names.push_back(pf.components.size() == 1 ? "s0" : "s0." + std::to_string(c + 1));

    // Parameter criterion: long simple root of a C_n-type component with L(s_a) != L(s_0).
    auto rel_cls = classify_cartan(e.relative.system.cartan());
    for (const auto& comp : rel_cls.components) {
        int long_node = -1;
        if (comp.letter == 'C') long_node = comp.nodes.back();
        if (comp.letter == 'B' && comp.rank == 2) long_node = comp.nodes.front();
        if (comp.letter == 'A' && comp.rank == 1) long_node = comp.nodes.front();
        if (long_node < 0) continue;
        std::size_t ci = 0;
        for (; ci < pf.components.size(); ++ci)
            if (std::find(pf.components[ci].begin(), pf.components[ci].end(), long_node) != pf.components[ci].end())
                break;
        e.special_diagnostics[long_node].by_parameters = pf.finite[long_node] != pf.affine[ci];
    }
    e.special_criteria_agree = true;
    for (int k = 0; k < r0; ++k) {
        const auto& d = e.special_diagnostics[k];
        if (d.by_structure != d.by_non_orthogonality || d.by_parameters != d.by_non_orthogonality)
            e.special_criteria_agree = false;
    }

    std::string ut;
    std::vector<std::string> parts;
    for (const auto& comp : rel_cls.components) {
        bool has_special = false;
        for (int k : comp.nodes) has_special = has_special || e.special[k];
        parts.push_back(has_special ? "BC" + std::to_string(comp.rank) : comp.name());
    }
    for (std::size_t i = 0; i < parts.size(); ++i) ut += (i ? "x" : "") + parts[i];
    e.union_type = parts.empty() ? "0" : ut;

    // Overrides, validated against conjugacy of simple affine reflections.
    e.parameters = pf;
    for (const auto& [name, value] : overrides) {
        auto it = std::find(pf.node_names.begin(), pf.node_names.end(), name);
        if (it == pf.node_names.end()) throw InputError("unknown parameter node '" + name + "'");
        if (value < 1) throw InputError("parameter values must be positive");
        std::size_t idx = it - pf.node_names.begin();
        if (idx < static_cast<std::size_t>(r0))
            e.parameters.finite[idx] = value;
        else
            e.parameters.affine[idx - r0] = value;
    }
    AffineDiagram rel_aff = affine_diagram(e.relative.system);
    auto value_at = [&](int node) {
        if (node < r0) return e.parameters.finite[node];
        return e.parameters.affine[node - r0];
    };
    for (std::size_t i = 0; i < rel_aff.node_roots.size(); ++i)
        for (std::size_t j = i + 1; j < rel_aff.node_roots.size(); ++j)
            if (rel_aff.cartan[i][j] * rel_aff.cartan[j][i] == 1 && value_at(i) != value_at(j))
                throw InputError("parameters differ on conjugate simple reflections " + pf.node_names[i] + " and " +
                                 pf.node_names[j]);
    return e;
}

}  // namespace rootfold
