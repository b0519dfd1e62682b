#include "rootfold/folding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace rootfold {

Rat RootSystem::form(const QVec& a, const QVec& b) const { return qdot(a, qmatvec(gram, b)); }

QVec RootSystem::coroot(const QVec& v) const { return qscale(Rat(2) / form(v, v), v); }

QVec RootSystem::reflect(const QVec& root, const QVec& v) const {
    Rat c = Rat(2) * form(root, v) / form(root, root);
    if (c == 0) return v;
    return qsub(v, qscale(c, root));
}

IMat RootSystem::cartan() const {
    const int r = rank();
    IMat c(r, IVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat v = Rat(2) * form(base[i], base[j]) / form(base[j], base[j]);
            if (boost::multiprecision::denominator(v) != 1) throw InputError("Cartan matrix is not integral");
            c[i][j] = checked::to_i64(v);
        }
    return c;
}

std::string RootSystem::type() const { return classify_cartan(cartan()).type; }

bool RootSystem::contains(const QVec& v) const { return std::find(roots.begin(), roots.end(), v) != roots.end(); }

QVec RootSystem::highest_root(const std::vector<int>& component) const {
    std::set<int> in(component.begin(), component.end());
    int best = -1;
    std::int64_t best_h = -1;
    for (int k = 0; k < num_positive; ++k) {
        std::int64_t h = 0;
        bool inside = true;
        for (int i = 0; i < rank(); ++i) {
            if (coefficients[k][i] != 0 && !in.count(i)) inside = false;
            h += coefficients[k][i];
        }
        if (inside && h > best_h) {
            best_h = h;
            best = k;
        }
    }
    return roots[best];
}

RootSystem make_root_system(const QMat& gram, const std::vector<QVec>& base) {
    RootSystem s;
    s.gram = gram;
    s.base = base;
    for (const auto& b : base)
        if (s.form(b, b) <= 0) throw InputError("base vector has nonpositive length");
    const int r = s.rank();
    classify_cartan(s.cartan());

    std::vector<QVec> all = base;
    std::vector<IVec> coeff;
    std::unordered_map<QVec, int, QVecHash> seen;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        coeff.push_back(e);
        seen.emplace(base[i], i);
    }
    for (std::size_t k = 0; k < all.size(); ++k)
        for (int j = 0; j < r; ++j) {
            Rat c = Rat(2) * s.form(base[j], all[k]) / s.form(base[j], base[j]);
            if (c == 0) continue;
            QVec v = qsub(all[k], qscale(c, base[j]));
            if (seen.count(v)) continue;
            IVec cf = coeff[k];
            cf[j] = checked::sub(cf[j], checked::to_i64(c));
            seen.emplace(v, static_cast<int>(all.size()));
            all.push_back(std::move(v));
            coeff.push_back(std::move(cf));
            if (all.size() > 20000) throw ResourceError("root system too large");
        }
    std::vector<int> pos;
    for (std::size_t k = 0; k < all.size(); ++k) {
        bool nonneg = std::all_of(coeff[k].begin(), coeff[k].end(), [](auto v) { return v >= 0; });
        if (nonneg) pos.push_back(static_cast<int>(k));
    }
    auto height = [&](int k) { return std::accumulate(coeff[k].begin(), coeff[k].end(), std::int64_t{0}); };
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return coeff[a] > coeff[b];
    });
    if (pos.size() * 2 != all.size()) throw InputError("not a root system: positive roots are not half");
    s.num_positive = static_cast<int>(pos.size());
    for (int k : pos) {
        s.roots.push_back(all[k]);
        s.coefficients.push_back(coeff[k]);
    }
    for (int k : pos) {
        s.roots.push_back(qscale(Rat(-1), all[k]));
        s.coefficients.push_back(vneg(coeff[k]));
    }
    return s;
}

RootSystem dual_system(const RootSystem& s) {
    std::vector<QVec> b;
    for (const auto& v : s.base) b.push_back(s.coroot(v));
    return make_root_system(s.gram, b);
}

namespace {

// Orbit of 2*rho in base coordinates, where simple reflections act integrally.
// Calls visit(v) on each element.
template <class Visit>
std::size_t regular_orbit(const RootSystem& s, Visit&& visit) {
    const int r = s.rank();
    IMat c = s.cartan();
    IVec rho(r, 0);
    for (int k = 0; k < s.num_positive; ++k) rho = vadd(rho, s.coefficients[k]);
    std::unordered_set<IVec, VecHash> seen{rho};
    std::vector<IVec> orbit{rho};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        visit(orbit[k]);
        for (int j = 0; j < r; ++j) {
            std::int64_t p = 0;
            for (int i = 0; i < r; ++i) p += orbit[k][i] * c[i][j];
            if (p == 0) continue;
            IVec v = orbit[k];
            v[j] -= p;
            if (seen.insert(v).second) orbit.push_back(std::move(v));
            if (orbit.size() > 10000000) throw ResourceError("Weyl group too large");
        }
    }
    return orbit.size();
}

}  // namespace

std::size_t weyl_order(const RootSystem& s) {
    return regular_orbit(s, [](const IVec&) {});
}

std::size_t fixed_weyl_order(const RootSystem& s, const std::vector<QMat>& group) {
    // The group permutes the base; read off the permutations.
    std::vector<std::vector<int>> perms;
    for (const auto& g : group) {
        std::vector<int> p(s.rank());
        for (int i = 0; i < s.rank(); ++i) {
            QVec img = qmatvec(g, s.base[i]);
            auto it = std::find(s.base.begin(), s.base.end(), img);
            if (it == s.base.end()) throw InputError("group does not preserve the base");
            p[i] = static_cast<int>(it - s.base.begin());
        }
        perms.push_back(p);
    }
    std::size_t fixed = 0;
    regular_orbit(s, [&](const IVec& v) {
        for (const auto& p : perms)
            for (std::size_t i = 0; i < p.size(); ++i)
                if (v[p[i]] != v[i]) return;
        ++fixed;
    });
    return fixed;
}

RootSystem root_system_of(const RootDatum& d) {
    QMat g = invariant_form(d);
    const int r = d.semisimple_rank;
    QMat gram(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram[i][j] = qdot(to_rat(d.roots[i]), qmatvec(g, to_rat(d.roots[j])));
    std::vector<QVec> base;
    for (int i = 0; i < r; ++i) {
        QVec e(r, Rat(0));
        e[i] = 1;
        base.push_back(e);
    }
    return make_root_system(gram, base);
}

std::vector<QMat> permutation_matrices(const std::vector<DatumAutomorphism>& autos) {
    std::vector<QMat> out;
    for (const auto& a : autos) {
        const std::size_t r = a.permutation.size();
        QMat m(r, QVec(r, Rat(0)));
        for (std::size_t i = 0; i < r; ++i) m[a.permutation[i]][i] = 1;
        out.push_back(m);
    }
    return out;
}

RootSystem root_system_in_lattice(const RootDatum& d, const QMat& gram) {
    std::vector<QVec> base;
    for (int i = 0; i < d.semisimple_rank; ++i) base.push_back(to_rat(d.roots[i]));
    return make_root_system(gram, base);
}

std::vector<QMat> lattice_matrices(const std::vector<DatumAutomorphism>& autos) {
    std::vector<QMat> out;
    for (const auto& a : autos) out.push_back(to_rat(a.on_lattice));
    return out;
}

std::string fold_op_name(FoldOp op) {
    switch (op) {
        case FoldOp::Norm: return "N";
        case FoldOp::ModifiedNorm: return "N'";
        case FoldOp::Restriction: return "res";
        case FoldOp::ModifiedRestriction: return "res'";
    }
    return "?";
}

std::vector<std::vector<int>> base_orbits(const RootSystem& s, const std::vector<QMat>& group) {
    const int r = s.rank();
    std::vector<int> label(r, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < r; ++i) {
        if (label[i] >= 0) continue;
        std::set<int> orbit;
        for (const auto& g : group) {
            QVec img = qmatvec(g, s.base[i]);
            auto it = std::find(s.base.begin(), s.base.end(), img);
            if (it == s.base.end()) throw InputError("group does not preserve the base");
            orbit.insert(static_cast<int>(it - s.base.begin()));
        }
        orbit.insert(i);
        for (int j : orbit) label[j] = static_cast<int>(out.size());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

bool orbit_orthogonal(const RootSystem& s, const std::vector<QMat>& group, int simple_index) {
    for (const auto& orbit : base_orbits(s, group)) {
        if (std::find(orbit.begin(), orbit.end(), simple_index) == orbit.end()) continue;
        for (std::size_t a = 0; a < orbit.size(); ++a)
            for (std::size_t b = a + 1; b < orbit.size(); ++b)
                if (s.form(s.base[orbit[a]], s.base[orbit[b]]) != 0) return false;
        return true;
    }
    throw InputError("simple index out of range");
}

QVec group_average(const QVec& v, const std::vector<QMat>& group) {
    QVec sum(v.size(), Rat(0));
    for (const auto& g : group) sum = qadd(sum, qmatvec(g, v));
    return qscale(Rat(1, static_cast<long long>(group.size())), sum);
}

FoldedRootSystem fold(const RootSystem& s, const std::vector<QMat>& group, FoldOp op) {
    FoldedRootSystem f;
    f.op = op;
    f.orbits = base_orbits(s, group);
    std::vector<QVec> base;
    for (const auto& orbit : f.orbits) {
        bool orth = true;
        for (std::size_t a = 0; a < orbit.size(); ++a)
            for (std::size_t b = a + 1; b < orbit.size(); ++b)
                if (s.form(s.base[orbit[a]], s.base[orbit[b]]) != 0) orth = false;
        f.orthogonal.push_back(orth);
        QVec sum(s.dim(), Rat(0));
        for (int i : orbit) sum = qadd(sum, s.base[i]);
        Rat factor = 1;
        if (op == FoldOp::Restriction || op == FoldOp::ModifiedRestriction)
            factor /= static_cast<long long>(orbit.size());
        if (!orth && (op == FoldOp::ModifiedNorm || op == FoldOp::ModifiedRestriction)) factor *= 2;
        base.push_back(qscale(factor, sum));
    }
    f.system = make_root_system(s.gram, base);
    return f;
}

namespace {

bool same_system(const RootSystem& a, const RootSystem& b) {
    if (a.base != b.base) return false;
    std::vector<QVec> ra = a.roots, rb = b.roots;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

}  // namespace

DualityReport verify_duality(const RootSystem& s, const std::vector<QMat>& group) {
    DualityReport rep;
    rep.ambient_type = s.type();
    rep.group_order = group.size();
    RootSystem dual = dual_system(s);

    auto n = fold(s, group, FoldOp::Norm);
    auto np = fold(s, group, FoldOp::ModifiedNorm);
    auto res = fold(s, group, FoldOp::Restriction);
    auto resp = fold(s, group, FoldOp::ModifiedRestriction);
    auto dn = fold(dual, group, FoldOp::Norm);
    auto dnp = fold(dual, group, FoldOp::ModifiedNorm);
    auto dres = fold(dual, group, FoldOp::Restriction);
    auto dresp = fold(dual, group, FoldOp::ModifiedRestriction);

    rep.norm_type = n.system.type();
    rep.modified_norm_type = np.system.type();
    rep.restriction_type = res.system.type();
    rep.modified_restriction_type = resp.system.type();

    rep.modified_norm_vs_dual_restriction = same_system(np.system, dual_system(dres.system));
    rep.modified_restriction_vs_dual_norm = same_system(resp.system, dual_system(dn.system));
    rep.norm_vs_dual_modified_restriction = same_system(n.system, dual_system(dresp.system));
    rep.restriction_vs_dual_modified_norm = same_system(res.system, dual_system(dnp.system));

    // (alpha^avg)^v = N'(alpha^v) for each simple alpha.
    bool lemma = true;
    for (std::size_t k = 0; k < res.orbits.size(); ++k) {
        QVec lhs = s.coroot(res.system.base[k]);
        if (lhs != dnp.system.base[k]) lemma = false;
    }
    rep.averaging_lemma = lemma;

    rep.fixed_weyl_order = fixed_weyl_order(s, group);
    rep.weyl_orders_match = weyl_order(n.system) == rep.fixed_weyl_order &&
                            weyl_order(np.system) == rep.fixed_weyl_order &&
                            weyl_order(res.system) == rep.fixed_weyl_order &&
                            weyl_order(resp.system) == rep.fixed_weyl_order;
    return rep;
}

std::vector<std::vector<std::vector<int>>> automorphism_subgroups(const IMat& cartan) {
    auto autos = diagram_automorphisms(cartan);
    const std::size_t n = cartan.size();
    auto compose_perm = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    auto closure = [&](const std::vector<std::vector<int>>& gens) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        std::set<std::vector<int>> seen{id};
        std::vector<std::vector<int>> q{id};
        for (std::size_t k = 0; k < q.size(); ++k)
            for (const auto& g : gens) {
                auto h = compose_perm(g, q[k]);
                if (seen.insert(h).second) q.push_back(h);
            }
        return seen;
    };
    std::set<std::set<std::vector<int>>> found;
    std::vector<std::vector<std::vector<int>>> out;
    auto consider = [&](const std::vector<std::vector<int>>& gens) {
        auto h = closure(gens);
        if (found.insert(h).second) out.push_back(gens);
    };
    consider({});
    for (std::size_t a = 0; a < autos.size(); ++a) {
        consider({autos[a]});
        for (std::size_t b = a + 1; b < autos.size(); ++b) consider({autos[a], autos[b]});
    }
    return out;
}

}  // namespace rootfold
