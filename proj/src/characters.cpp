#include "rootfold/characters.hpp"

#include "rootfold/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace rootfold {

namespace {

Int int_form(const std::vector<IVec>& pos_coroots, const IVec& x, const IVec& y) {
    Int s = 0;
    for (const auto& c : pos_coroots) s += Int(dot(x, c)) * Int(dot(y, c));
    return s;
}

std::int64_t depth_key(const RootDatum& d, const IVec& top, const IVec& w) {
    return dot(vsub(top, w), d.two_rho_check());
}

}  // namespace

MultiplicityTable::MultiplicityTable(const RootDatum& d, const IVec& highest) : datum_(d), highest_(highest) {
    if (!d.is_dominant(highest)) throw InputError("highest weight " + to_string(highest) + " is not dominant");
    std::vector<IVec> pos_coroots(d.coroots.begin(), d.coroots.begin() + d.num_positive);
    std::vector<IVec> pos_roots(d.roots.begin(), d.roots.begin() + d.num_positive);
    const IVec two_rho = d.two_rho();

    auto dom = dominant_weights_below(d, highest);
    std::sort(dom.begin(), dom.end(), [&](const IVec& a, const IVec& b) {
        auto da = depth_key(d, highest, a), db = depth_key(d, highest, b);
        return da != db ? da < db : a > b;
    });
    std::unordered_map<IVec, IVec, VecHash> rep_cache;
    auto lookup = [&](const IVec& x) -> Int {
        auto it = rep_cache.find(x);
        if (it == rep_cache.end()) it = rep_cache.emplace(x, dominant_representative(d, x).dominant).first;
        auto jt = dominant_.find(it->second);
        return jt == dominant_.end() ? Int(0) : jt->second;
    };

    const Int top_norm = int_form(pos_coroots, highest, highest);
    for (const auto& nu : dom) {
        if (nu == highest) {
            dominant_[nu] = 1;
            continue;
        }
        Int num = 0;
        for (const auto& a : pos_roots) {
            IVec w = vadd(nu, a);
            while (true) {
                Int m = lookup(w);
                if (m == 0) break;
                num += m * int_form(pos_coroots, w, a);
                w = vadd(w, a);
            }
        }
        num *= 2;
        Int den = top_norm - int_form(pos_coroots, nu, nu) + int_form(pos_coroots, two_rho, vsub(highest, nu));
        if (den <= 0 || num % den != 0) throw TheoremViolation("Freudenthal recursion produced a non-integer");
        dominant_[nu] = num / den;
    }
}

Int MultiplicityTable::at(const IVec& weight) const {
    auto it = dominant_.find(dominant_representative(datum_, weight).dominant);
    return it == dominant_.end() ? Int(0) : it->second;
}

Character MultiplicityTable::full() const {
    Character out;
    for (const auto& [nu, m] : dominant_) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(datum_, nu)) out[w] = m;
    }
    return out;
}

Int MultiplicityTable::dimension() const {
    Int total = 0;
    for (const auto& [nu, m] : dominant_) total += m * Int(weyl_orbit(datum_, nu).size());
    return total;
}

Int weight_multiplicity(const RootDatum& d, const IVec& highest, const IVec& weight) {
    return MultiplicityTable(d, highest).at(weight);
}

Character full_character(const RootDatum& d, const IVec& highest) { return MultiplicityTable(d, highest).full(); }

Int weyl_dimension(const RootDatum& d, const IVec& highest) {
    if (!d.is_dominant(highest)) throw InputError("highest weight is not dominant");
    const IVec two_rho = d.two_rho();
    Rat prod = 1;
    for (int k = 0; k < d.num_positive; ++k) {
        std::int64_t a = checked::add(checked::mul(2, dot(highest, d.coroots[k])), dot(two_rho, d.coroots[k]));
        prod *= Rat(a, dot(two_rho, d.coroots[k]));
    }
    if (denominator(prod) != 1) throw TheoremViolation("Weyl dimension formula gave a non-integer");
    return numerator(prod);
}

std::optional<IVec> FoldedDatum::coordinates(const IVec& x) const {
    if (basis.empty()) return is_zero(x) ? std::optional<IVec>(IVec{}) : std::nullopt;
    auto sol = qsolve(qtranspose(to_rat(basis)), to_rat(x));
    if (!sol) return std::nullopt;
    return to_integral(*sol);
}

FoldedDatum fold_datum(const RootDatum& d, const std::vector<DatumAutomorphism>& group) {
    FoldedDatum f;
    std::vector<IMat> mats;
    for (const auto& g : group) mats.push_back(g.on_lattice);
    LatticeAction action = LatticeAction::generate(d.rank, mats);
    f.basis = invariants(action);
    const int k = static_cast<int>(f.basis.size());

    std::vector<bool> seen(d.semisimple_rank, false);
    const IMat cartan = d.cartan();
    std::vector<IVec> roots, coroots;
    for (int i = 0; i < d.semisimple_rank; ++i) {
        if (seen[i]) continue;
        std::set<int> orb;
        for (const auto& g : group) orb.insert(g.permutation[i]);
        for (int j : orb) seen[j] = true;
        f.orbits.emplace_back(orb.begin(), orb.end());
        IVec sum(d.rank, 0);
        bool orthogonal = true;
        for (int a : orb) {
            sum = vadd(sum, d.roots[a]);
            for (int b : orb)
                if (a != b && cartan[a][b] != 0) orthogonal = false;
        }
        if (!orthogonal) sum = vscale(2, sum);
        auto c = f.coordinates(sum);
        if (!c) throw TheoremViolation("folded root outside the invariant lattice");
        roots.push_back(*c);
        IVec functional(k);
        for (int j = 0; j < k; ++j) functional[j] = dot(f.basis[j], d.coroots[i]);
        coroots.push_back(functional);
    }
    f.datum = make_datum(d.label + "/fold", k, roots, coroots);
    return f;
}

TwiningCharacter::TwiningCharacter(const RootDatum& d, const DatumAutomorphism& sigma, const IVec& highest)
    : sigma_(sigma), folded_(fold_datum(d, generate_group(d, {sigma}))) {
    if (matvec(sigma.on_lattice, highest) != highest)
        throw InputError("highest weight is not fixed by the automorphism");
    auto c = folded_.coordinates(highest);
    if (!c) throw TheoremViolation("fixed weight outside the invariant lattice");
    table_ = std::make_unique<MultiplicityTable>(folded_.datum, *c);
}

Int TwiningCharacter::operator()(const IVec& weight) const {
    if (matvec(sigma_.on_lattice, weight) != weight) throw InputError("weight is not fixed by the automorphism");
    auto c = folded_.coordinates(weight);
    if (!c) throw TheoremViolation("fixed weight outside the invariant lattice");
    return table_->at(*c);
}

std::optional<IVec> FixedPointDatum::root_lattice_coordinates(const CoinvariantElement& e) const {
    auto q = simple_root_coordinates(datum, e.free);
    if (!q) return std::nullopt;
    auto c = to_integral(*q);
    if (!c) return std::nullopt;
    CoinvariantElement back = lattice.zero();
    for (std::size_t i = 0; i < c->size(); ++i) back = lattice.add(back, lattice.scale((*c)[i], simple_roots[i]));
    if (back != e) return std::nullopt;
    return c;
}

std::int64_t FixedPointDatum::height(const CoinvariantElement& e) const { return dot(e.free, datum.two_rho_check()); }

CoinvariantElement FixedPointDatum::reflect(int i, const CoinvariantElement& e) const {
    return lattice.sub(e, lattice.scale(dot(e.free, datum.coroots[i]), simple_roots[i]));
}

FixedPointDatum fixed_point_datum(const LocalGroupDatum& lgd) {
    FixedPointDatum h;
    h.local = lgd;
    h.dual = dual_datum(lgd.datum);
    for (const auto& a : lgd.inertia) h.inertia_on_dual.push_back(dual_automorphism(a));
    h.frobenius_on_dual = dual_automorphism(lgd.frobenius);

    std::vector<IMat> gens;
    for (const auto& a : lgd.inertia_generators) gens.push_back(a.on_dual);
    h.lattice = coinvariants(LatticeAction::generate(h.dual.rank, gens));
    const int nf = h.lattice.free_rank;

    std::vector<bool> seen(h.dual.semisimple_rank, false);
    const IMat cartan = h.dual.cartan();
    std::vector<IVec> roots, coroots;
    for (int i = 0; i < h.dual.semisimple_rank; ++i) {
        if (seen[i]) continue;
        std::set<int> orb;
        for (const auto& a : h.inertia_on_dual) orb.insert(a.permutation[i]);
        for (int j : orb) seen[j] = true;
        h.simple_orbits.emplace_back(orb.begin(), orb.end());
        h.simple_roots.push_back(h.lattice.project(h.dual.roots[i]));
        roots.push_back(h.simple_roots.back().free);
        // Modified norm of the coroot orbit, as a functional on free coordinates.
        IVec sum(h.dual.rank, 0);
        bool orthogonal = true;
        for (int a : orb) {
            sum = vadd(sum, h.dual.coroots[a]);
            for (int b : orb)
                if (a != b && cartan[a][b] != 0) orthogonal = false;
        }
        if (!orthogonal) sum = vscale(2, sum);
        IVec functional(nf);
        for (int j = 0; j < nf; ++j) {
            std::int64_t s = 0;
            for (int r = 0; r < h.dual.rank; ++r) s = checked::add(s, checked::mul(sum[r], h.lattice.free_section[r][j]));
            functional[j] = s;
        }
        coroots.push_back(functional);
    }
    h.datum = make_datum("fixed", nf, roots, coroots);

    std::set<IVec> images;
    for (const auto& r : h.dual.roots) {
        IVec v = h.lattice.project(r).free;
        if (!is_zero(v)) images.insert(v);
    }
    std::set<IVec> reduced;
    for (const auto& v : images) {
        bool divisible = false;
        for (const auto& u : images)
            if (vscale(2, u) == v) divisible = true;
        if (!divisible) reduced.insert(v);
    }
    std::set<IVec> roots_set(h.datum.roots.begin(), h.datum.roots.end());
    h.matches_reduced_images = roots_set == reduced;

    IMat frob_free(nf, IVec(nf));
    for (int j = 0; j < nf; ++j) {
        IVec col(h.dual.rank);
        for (int r = 0; r < h.dual.rank; ++r) col[r] = h.lattice.free_section[r][j];
        auto img = h.lattice.project(matvec(h.frobenius_on_dual.on_lattice, col));
        for (int i = 0; i < nf; ++i) frob_free[i][j] = img.free[i];
    }
    h.frobenius = automorphism_from_dual_matrix(h.datum, transpose(unimodular_inverse(frob_free)));
    return h;
}

CoinvariantCharacter disconnected_character(const FixedPointDatum& h, const CoinvariantElement& highest) {
    if (!h.is_dominant(highest)) throw InputError("highest weight is not dominant for the fixed group");
    MultiplicityTable table(h.datum, highest.free);
    CoinvariantCharacter out;
    for (const auto& [w, m] : table.full()) {
        auto q = simple_root_coordinates(h.datum, vsub(highest.free, w));
        auto c = q ? to_integral(*q) : std::nullopt;
        if (!c) throw TheoremViolation("weight outside highest + root lattice");
        CoinvariantElement e = highest;
        for (std::size_t i = 0; i < c->size(); ++i) e = h.lattice.sub(e, h.lattice.scale((*c)[i], h.simple_roots[i]));
        out[e] = m;
    }
    return out;
}

TwistedHighestWeightTrace::TwistedHighestWeightTrace(const FixedPointDatum& h, const CoinvariantElement& highest)
    : h_(h), highest_(highest), twining_(h.datum, h.frobenius, highest.free),
      order_(static_cast<int>(h.local.frobenius_order())) {
    if (!h.frobenius_fixed(highest)) throw InputError("highest weight is not Frobenius-fixed");
}

Cyclotomic TwistedHighestWeightTrace::operator()(const CoinvariantElement& weight) const {
    if (!h_.frobenius_fixed(weight)) throw InputError("weight is not Frobenius-fixed");
    if (!h_.root_lattice_coordinates(h_.lattice.sub(highest_, weight))) return Cyclotomic(Int(0), order_);
    return Cyclotomic(twining_(weight.free), order_);
}

void require_rational_dominant(const FixedPointDatum& h, const IVec& mu) {
    if (static_cast<int>(mu.size()) != h.dual.rank) throw InputError("mu has the wrong length");
    if (!h.dual.is_dominant(mu)) throw InputError("mu " + to_string(mu) + " is not dominant");
    for (const auto& a : h.inertia_on_dual)
        if (matvec(a.on_lattice, mu) != mu) throw InputError("mu is not fixed by inertia");
    if (matvec(h.frobenius_on_dual.on_lattice, mu) != mu) throw InputError("mu is not fixed by Frobenius");
}

CoinvariantCharacter invariants_character(const FixedPointDatum& h, const IVec& mu) {
    require_rational_dominant(h, mu);
    MultiplicityTable table(h.dual, mu);
    std::vector<std::unique_ptr<TwiningCharacter>> twining(h.inertia_on_dual.size());
    auto trace = [&](std::size_t s, const IVec& nu) -> Int {
        if (h.inertia_on_dual[s].is_identity()) return table.at(nu);
        if (!twining[s]) twining[s] = std::make_unique<TwiningCharacter>(h.dual, h.inertia_on_dual[s], mu);
        return (*twining[s])(nu);
    };
    CoinvariantCharacter out;
    std::set<IVec> done;
    for (const auto& [nu, m] : table.full()) {
        if (done.count(nu)) continue;
        Int sum = 0, stab = 0;
        for (std::size_t s = 0; s < h.inertia_on_dual.size(); ++s) {
            IVec img = matvec(h.inertia_on_dual[s].on_lattice, nu);
            done.insert(img);
            if (img == nu) {
                sum += trace(s, nu);
                ++stab;
            }
        }
        if (sum % stab != 0) throw TheoremViolation("inertia invariants have non-integral dimension");
        Int dim = sum / stab;
        if (dim != 0) out[h.project(nu)] += dim;
    }
    return out;
}

TwistedCharacter twisted_invariants_character(const FixedPointDatum& h, const IVec& mu) {
    require_rational_dominant(h, mu);
    const int order = static_cast<int>(h.local.frobenius_order());
    MultiplicityTable table(h.dual, mu);
    const auto weights = table.full();
    std::map<CoinvariantElement, Int> sums;
    for (const auto& sigma : h.inertia_on_dual) {
        DatumAutomorphism g = compose(h.frobenius_on_dual, sigma);
        std::unique_ptr<TwiningCharacter> tw;
        if (!g.is_identity()) tw = std::make_unique<TwiningCharacter>(h.dual, g, mu);
        for (const auto& [nu, m] : weights) {
            if (matvec(g.on_lattice, nu) != nu) continue;
            auto bar = h.project(nu);
            sums[bar] += tw ? (*tw)(nu) : m;
        }
    }
    TwistedCharacter out;
    const Int n = static_cast<long long>(h.inertia_on_dual.size());
    for (const auto& [bar, s] : sums) {
        if (!h.frobenius_fixed(bar)) throw TheoremViolation("twisted weight is not Frobenius-fixed");
        auto v = Cyclotomic(s, order).divided_by(n);
        if (!v.is_zero()) out[bar] = v;
    }
    return out;
}

namespace {

// Longest element of the parabolic subgroup on a set of simple indices, as a
// word of simple reflections of d.
std::vector<int> parabolic_longest_word(const RootDatum& d, const std::vector<int>& nodes) {
    std::vector<int> word;
    IMat w = identity_matrix(d.rank);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i : nodes) {
            int k = d.find_root(matvec(w, d.roots[i]));
            if (k < 0) throw TheoremViolation("Weyl element does not permute roots");
            if (k < d.num_positive) {
                w = matmul(w, d.reflection_matrix(i));
                word.push_back(i);
                grew = true;
                break;
            }
        }
    }
    return word;
}

}  // namespace

std::vector<std::vector<int>> frobenius_fixed_weyl_words(const FixedPointDatum& h) {
    std::vector<std::vector<int>> words;
    std::vector<bool> seen(h.datum.semisimple_rank, false);
    for (int i = 0; i < h.datum.semisimple_rank; ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        for (int j = i; !seen[j]; j = h.frobenius.permutation[j]) {
            seen[j] = true;
            orb.push_back(j);
        }
        words.push_back(parabolic_longest_word(h.datum, orb));
    }
    return words;
}

std::vector<CoinvariantElement> frobenius_fixed_orbit(const FixedPointDatum& h, const CoinvariantElement& e) {
    const auto words = frobenius_fixed_weyl_words(h);
    std::set<CoinvariantElement> seen{e};
    std::vector<CoinvariantElement> todo{e};
    while (!todo.empty()) {
        CoinvariantElement cur = todo.back();
        todo.pop_back();
        for (const auto& word : words) {
            CoinvariantElement x = cur;
            for (auto s = word.rbegin(); s != word.rend(); ++s) x = h.reflect(*s, x);
            if (seen.insert(x).second) todo.push_back(x);
        }
    }
    return {seen.begin(), seen.end()};
}

BranchingResult branch(const FixedPointDatum& h, const IVec& mu) {
    BranchingResult r;
    r.top = h.project(mu);
    r.invariants = invariants_character(h, mu);

    // Peel off highest-weight characters from the top.
    CoinvariantCharacter rem = r.invariants;
    auto by_height = [&](const CoinvariantElement& a, const CoinvariantElement& b) {
        auto ha = h.height(a), hb = h.height(b);
        return ha != hb ? ha > hb : b < a;
    };
    while (true) {
        std::vector<CoinvariantElement> support;
        for (const auto& [w, m] : rem) {
            if (m < 0) throw TheoremViolation("negative remainder in branching");
            if (m > 0) support.push_back(w);
        }
        if (support.empty()) break;
        auto top = *std::min_element(support.begin(), support.end(), by_height);
        if (!h.is_dominant(top)) throw TheoremViolation("top weight of a remainder is not dominant");
        Int a = rem[top];
        r.multiplicities[top] = a;
        auto ch = disconnected_character(h, top);
        Int dim = 0;
        for (const auto& [w, m] : ch) {
            rem[w] -= a * m;
            dim += m;
        }
        r.dimensions[top] = dim;
        for (auto it = rem.begin(); it != rem.end();) it = it->second == 0 ? rem.erase(it) : std::next(it);
    }

    Int total = 0, blocks = 0;
    for (const auto& [w, m] : r.invariants) total += m;
    for (const auto& [w, a] : r.multiplicities) blocks += a * r.dimensions[w];
    r.dimension_bookkeeping = total == blocks;
    auto it = r.multiplicities.find(r.top);
    r.top_multiplicity_one = it != r.multiplicities.end() && it->second == 1;
    r.weight_equality = weight_equality_check(h, mu);

    // Frobenius traces on multiplicity spaces, peeled from the twisted character.
    const int order = static_cast<int>(h.local.frobenius_order());
    r.twisted = twisted_invariants_character(h, mu);
    TwistedCharacter trem = r.twisted;
    std::vector<CoinvariantElement> fixed_tops;
    for (const auto& [w, a] : r.multiplicities)
        if (h.frobenius_fixed(w)) fixed_tops.push_back(w);
    std::sort(fixed_tops.begin(), fixed_tops.end(), by_height);
    for (const auto& lam : fixed_tops) {
        Cyclotomic c = trem.count(lam) ? trem[lam] : Cyclotomic(Int(0), order);
        r.traces[lam] = c;
        if (c.is_zero()) continue;
        TwistedHighestWeightTrace tr(h, lam);
        for (const auto& [w, m] : disconnected_character(h, lam)) {
            if (!h.frobenius_fixed(w)) continue;
            Cyclotomic v = tr(w);
            if (v.is_zero()) continue;
            Cyclotomic cur = trem.count(w) ? trem[w] : Cyclotomic(Int(0), order);
            trem[w] = cur - c * v;
        }
    }
    for (const auto& [w, v] : trem)
        if (!v.is_zero()) throw TheoremViolation("twisted character is not a combination of highest-weight traces");
    auto jt = r.traces.find(r.top);
    r.top_trace_one = jt != r.traces.end() && jt->second == Cyclotomic(Int(1));

    // Twisted values are constant under the Frobenius-fixed part of the Weyl group.
    const auto words = frobenius_fixed_weyl_words(h);
    r.twisted_orbit_symmetry = true;
    for (const auto& [w, v] : r.twisted)
        for (const auto& word : words) {
            CoinvariantElement x = w;
            for (auto s = word.rbegin(); s != word.rend(); ++s) x = h.reflect(*s, x);
            auto kt = r.twisted.find(x);
            if (kt == r.twisted.end() || kt->second != v) r.twisted_orbit_symmetry = false;
        }
    return r;
}

bool weight_equality_check(const FixedPointDatum& h, const IVec& mu) {
    std::set<CoinvariantElement> images;
    for (const auto& w : weight_set(h.dual, mu)) images.insert(h.project(w));
    std::set<CoinvariantElement> support;
    for (const auto& [w, m] : disconnected_character(h, h.project(mu)))
        if (m != 0) support.insert(w);
    return images == support;
}

namespace {

// Reduces mu modulo the row lattice so that its trailing coordinates lie in a
// fixed fundamental domain.
IVec reduce_trailing(IVec mu, const IMat& rows) {
    if (rows.empty()) return mu;
    IMat rev;
    for (auto row : rows) {
        std::reverse(row.begin(), row.end());
        rev.push_back(row);
    }
    IMat hnf = hermite_normal_form(rev);
    std::reverse(mu.begin(), mu.end());
    for (const auto& row : hnf) {
        int p = 0;
        while (row[p] == 0) ++p;
        std::int64_t q = mu[p] / row[p];
        if (mu[p] % row[p] != 0 && mu[p] < 0) --q;
        mu = vsub(mu, vscale(q, row));
    }
    std::reverse(mu.begin(), mu.end());
    return mu;
}

// Some integer solution of m x = b, or nullopt.
std::optional<IVec> solve_integer(const IMat& m, const IVec& b, int unknowns) {
    if (m.empty()) return IVec(unknowns, 0);
    SmithForm s = smith_normal_form(to_big(m));
    const std::size_t rows = m.size();
    std::vector<Int> lb(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) lb[i] += s.left[i][j] * b[j];
    std::vector<Int> y(unknowns, Int(0));
    for (std::size_t i = 0; i < rows; ++i) {
        Int d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
        if (d == 0) {
            if (lb[i] != 0) return std::nullopt;
        } else {
            if (lb[i] % d != 0) return std::nullopt;
            y[i] = lb[i] / d;
        }
    }
    IVec x(unknowns, 0);
    for (int r = 0; r < unknowns; ++r) {
        Int v = 0;
        for (int k = 0; k < unknowns; ++k) v += s.right[r][k] * y[k];
        x[r] = checked::to_i64(v);
    }
    return x;
}

IMat central_cocharacters(const RootDatum& d) {
    IMat a(d.coroots.begin(), d.coroots.begin() + d.semisimple_rank);
    if (a.empty()) return identity_matrix(d.rank);
    return integer_kernel(a);
}

}  // namespace

std::vector<IVec> dominant_envelope(const RootDatum& d, std::int64_t bound) {
    const int r = d.semisimple_rank, n = d.rank;
    // Weight of each coordinate <mu, alpha_i^vee> in <mu, 2 rho^vee>.
    IVec cost(r, 0);
    if (r > 0) {
        QMat a(n, QVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) a[j][i] = d.coroots[i][j];
        auto sol = qsolve(a, to_rat(d.two_rho_check()));
        auto c = sol ? to_integral(*sol) : std::nullopt;
        if (!c) throw TheoremViolation("2 rho^vee has non-integral coroot coordinates");
        cost = *c;
    }
    const IMat simple_coroots(d.coroots.begin(), d.coroots.begin() + r);
    const IMat centre = central_cocharacters(d);

    std::set<IVec> out;
    IVec m(r, 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t budget) {
        if (i == r) {
            auto mu = solve_integer(simple_coroots, m, n);
            if (mu) out.insert(reduce_trailing(*mu, centre));
            return;
        }
        for (std::int64_t v = 0; cost[i] * v <= budget; ++v) {
            m[i] = v;
            rec(i + 1, budget - cost[i] * v);
        }
        m[i] = 0;
    };
    rec(0, bound);
    std::vector<IVec> result(out.begin(), out.end());
    std::sort(result.begin(), result.end(), [&](const IVec& x, const IVec& y) {
        auto hx = dot(x, d.two_rho_check()), hy = dot(y, d.two_rho_check());
        return hx != hy ? hx < hy : x < y;
    });
    return result;
}

std::vector<IVec> rational_dominant_envelope(const FixedPointDatum& h, std::int64_t bound) {
    const RootDatum& d = h.dual;
    const int n = d.rank;
    const IMat centre = central_cocharacters(d);
    const int m = static_cast<int>(centre.size());
    std::vector<IMat> gens;
    for (const auto& a : h.inertia_on_dual) gens.push_back(a.on_lattice);
    gens.push_back(h.frobenius_on_dual.on_lattice);

    // (g - 1) applied to central combinations, stacked over all g.
    IMat system;
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) {
            IVec row(m, 0);
            for (int c = 0; c < m; ++c) {
                IVec z = vsub(matvec(g, centre[c]), centre[c]);
                row[c] = z[i];
            }
            system.push_back(row);
        }
    IMat fixed_centre;
    if (m > 0) {
        IMat ker = integer_kernel(system);
        for (const auto& k : ker) {
            IVec z(n, 0);
            for (int c = 0; c < m; ++c) z = vadd(z, vscale(k[c], centre[c]));
            fixed_centre.push_back(z);
        }
    }

    std::vector<IVec> out;
    for (const auto& mu : dominant_envelope(d, bound)) {
        IVec rhs;
        for (const auto& g : gens) {
            IVec diff = vsub(mu, matvec(g, mu));
            rhs.insert(rhs.end(), diff.begin(), diff.end());
        }
        auto c = solve_integer(system, rhs, m);
        if (!c) continue;
        IVec fixed = mu;
        for (int k = 0; k < m; ++k) fixed = vadd(fixed, vscale((*c)[k], centre[k]));
        fixed = reduce_trailing(fixed, fixed_centre);
        bool ok = true;
        for (const auto& g : gens) ok = ok && matvec(g, fixed) == fixed;
        if (!ok) throw TheoremViolation("failed to find a Galois-fixed representative");
        out.push_back(fixed);
    }
    return out;
}

}  // namespace rootfold
