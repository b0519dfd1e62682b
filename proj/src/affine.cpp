#include "rootfold/affine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace rootfold {

namespace {

IVec flatten(const IMat& m) {
    IVec v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

// y -> y - <alpha, y> alpha^vee on the cocharacter lattice.
IMat coreflection(const IVec& root, const IVec& coroot) {
    const int n = static_cast<int>(root.size());
    IMat m = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = checked::sub(m[i][j], checked::mul(coroot[i], root[j]));
    return m;
}

std::int64_t height(const IVec& c) {
    std::int64_t h = 0;
    for (auto x : c) h = checked::add(h, x);
    return h;
}

}  // namespace

ExtendedAffineWeylGroup::ExtendedAffineWeylGroup(const LocalGroupDatum& lgd) : lgd_(lgd) {
    const RootDatum& d = lgd_.datum;
    std::vector<IMat> inertia_on_y;
    for (const auto& a : lgd_.inertia_generators) inertia_on_y.push_back(a.on_dual);
    coinv_ = coinvariants(LatticeAction::generate(d.rank, inertia_on_y));

    IMat rel = zero_matrix(d.rank, 0);
    for (const auto& g : inertia_on_y)
        for (int j = 0; j < d.rank; ++j)
            for (int i = 0; i < d.rank; ++i) rel[i].push_back(checked::sub(g[i][j], i == j ? 1 : 0));
    for (int k = 0; k < d.semisimple_rank; ++k)
        for (int i = 0; i < d.rank; ++i) rel[i].push_back(d.coroots[k][i]);
    omega_quotient_ = quotient_by(d.rank, rel, {});

    build_roots();
    build_finite_group();
    build_affine();
}

void ExtendedAffineWeylGroup::build_roots() {
    const RootDatum& d = lgd_.datum;
    // Inertia orbits on the simple roots.
    std::vector<int> seen(d.semisimple_rank, 0);
    for (int i = 0; i < d.semisimple_rank; ++i) {
        if (seen[i]) continue;
        std::set<int> orb;
        for (const auto& a : lgd_.inertia) orb.insert(a.permutation[i]);
        for (int j : orb) seen[j] = 1;
        simple_orbits_.emplace_back(orb.begin(), orb.end());
    }
    rank_ = static_cast<int>(simple_orbits_.size());

    std::unordered_map<IVec, int, VecHash> coroot_index;
    for (int k = 0; k < d.num_roots(); ++k) coroot_index[d.coroots[k]] = k;

    // Longest element of each parabolic W_O, on cocharacters.
    std::vector<IMat> generators;
    for (const auto& orb : simple_orbits_) {
        IMat w = identity_matrix(d.rank);
        for (bool grew = true; grew;) {
            grew = false;
            for (int i : orb) {
                IVec image = matvec(w, d.coroots[i]);
                auto it = coroot_index.find(image);
                if (it == coroot_index.end()) throw TheoremViolation("Weyl element does not permute coroots");
                if (it->second < d.num_positive) {
                    w = matmul(w, coreflection(d.roots[i], d.coroots[i]));
                    grew = true;
                    break;
                }
            }
        }
        generators.push_back(w);
    }

    // Simple relative roots (modified norms) and coroots (restrictions).
    std::vector<IVec> simple_chars;
    std::vector<IVec> simple_colifts;
    for (const auto& orb : simple_orbits_) {
        const int i = orb[0];
        std::set<int> full;
        for (const auto& a : lgd_.inertia) full.insert(d.find_root(matvec(a.on_lattice, d.roots[i])));
        IVec sum(d.rank, 0);
        bool orthogonal = true;
        for (int k : full) {
            sum = vadd(sum, d.roots[k]);
            for (int l : full)
                if (k != l && dot(d.roots[k], d.coroots[l]) != 0) orthogonal = false;
        }
        simple_chars.push_back(orthogonal ? sum : vscale(2, sum));
        simple_colifts.push_back(d.coroots[i]);
    }

    auto functional = [&](const IVec& ch) {
        IVec f(coinv_.free_rank);
        for (int j = 0; j < coinv_.free_rank; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < d.rank; ++i) s = checked::add(s, checked::mul(ch[i], coinv_.free_section[i][j]));
            f[j] = s;
        }
        return f;
    };

    // The W-breve orbit of the simple roots, tracking coroot lifts.
    std::vector<IVec> chars = simple_chars, colifts = simple_colifts;
    std::unordered_map<IVec, int, VecHash> index;
    for (int i = 0; i < rank_; ++i) index[chars[i]] = i;
    for (std::size_t head = 0; head < chars.size(); ++head) {
        for (const auto& g : generators) {
            IVec ch = matvec(transpose(g), chars[head]);  // generators are involutions
            if (index.count(ch)) continue;
            index[ch] = static_cast<int>(chars.size());
            chars.push_back(ch);
            colifts.push_back(matvec(g, colifts[head]));
            if (chars.size() > 100000) throw ResourceError("relative root system too large");
        }
    }

    QMat basis(d.rank, QVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int r = 0; r < d.rank; ++r) basis[r][i] = simple_chars[i][r];
    struct Rec {
        IVec ch, colift, coeff;
    };
    std::vector<Rec> pos, neg;
    for (std::size_t k = 0; k < chars.size(); ++k) {
        auto sol = qsolve(basis, to_rat(chars[k]));
        if (!sol) throw TheoremViolation("relative root outside the span of the simple roots");
        auto c = to_integral(*sol);
        if (!c) throw TheoremViolation("relative root with non-integral coefficients");
        bool nonneg = std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
        bool nonpos = std::all_of(c->begin(), c->end(), [](auto x) { return x <= 0; });
        if (!nonneg && !nonpos) throw TheoremViolation("relative root of mixed sign");
        (nonneg ? pos : neg).push_back({chars[k], colifts[k], *c});
    }
    auto order = [](const Rec& a, const Rec& b) {
        std::int64_t ha = std::abs(height(a.coeff)), hb = std::abs(height(b.coeff));
        if (ha != hb) return ha < hb;
        IVec ca = a.coeff, cb = b.coeff;
        for (auto& x : ca) x = std::abs(x);
        for (auto& x : cb) x = std::abs(x);
        return ca > cb;
    };
    std::sort(pos.begin(), pos.end(), order);
    std::sort(neg.begin(), neg.end(), order);
    num_positive_ = static_cast<int>(pos.size());
    for (auto* part : {&pos, &neg})
        for (const auto& r : *part) {
            root_lookup_[r.ch] = static_cast<int>(root_characters_.size());
            root_characters_.push_back(r.ch);
            root_functionals_.push_back(functional(r.ch));
            coroots_.push_back(coinv_.project(r.colift));
            root_coefficients_.push_back(r.coeff);
        }
    for (int k = 0; k < rank_; ++k)
        if (root_characters_[k] != simple_chars[k]) throw TheoremViolation("simple relative roots out of order");

    IMat cartan(rank_, IVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) cartan[i][j] = pair(i, coroots_[j]);
    classify_cartan(cartan);  // throws if not of finite type
    components_ = diagram_components(cartan);
    for (const auto& comp : components_) {
        int best = -1;
        for (int k = 0; k < num_positive_; ++k) {
            bool inside = true;
            for (int i = 0; i < rank_; ++i)
                if (root_coefficients_[k][i] != 0 && std::find(comp.begin(), comp.end(), i) == comp.end())
                    inside = false;
            if (inside && (best < 0 || height(root_coefficients_[k]) > height(root_coefficients_[best]))) best = k;
        }
        highest_.push_back(best);
    }

    coroot_solver_ = QMat(coinv_.free_rank, QVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < coinv_.free_rank; ++j) coroot_solver_[j][i] = coroots_[i].free[j];

    // Stash generators as the first finite elements; the group is closed later.
    finite_.clear();
    FiniteWeylElement id;
    id.on_cocharacters = identity_matrix(d.rank);
    finite_.push_back(id);
    finite_lookup_[flatten(id.on_cocharacters)] = 0;
    for (int i = 0; i < rank_; ++i) {
        FiniteWeylElement e;
        e.on_cocharacters = generators[i];
        e.word = {i};
        auto key = flatten(generators[i]);
        if (finite_lookup_.count(key)) throw TheoremViolation("coincident simple reflections");
        finite_lookup_[key] = static_cast<int>(finite_.size());
        finite_.push_back(e);
    }
}

void ExtendedAffineWeylGroup::build_finite_group() {
    const RootDatum& d = lgd_.datum;
    simple_finite_.resize(rank_);
    for (int i = 0; i < rank_; ++i) simple_finite_[i] = i + 1;
    // BFS by right multiplication with the generators.
    for (std::size_t head = 0; head < finite_.size(); ++head) {
        for (int i = 0; i < rank_; ++i) {
            IMat m = matmul(finite_[head].on_cocharacters, finite_[simple_finite_[i]].on_cocharacters);
            auto key = flatten(m);
            if (finite_lookup_.count(key)) continue;
            FiniteWeylElement e;
            e.on_cocharacters = m;
            e.word = finite_[head].word;
            e.word.push_back(i);
            finite_lookup_[key] = static_cast<int>(finite_.size());
            finite_.push_back(std::move(e));
            if (finite_.size() > 200000) throw ResourceError("relative Weyl group too large");
        }
    }

    const int nf = coinv_.free_rank;
    const int nt = static_cast<int>(coinv_.torsion_factors.size());
    std::unordered_map<CoinvariantElement, int, CoinvariantHash> coroot_lookup;
    for (int k = 0; k < num_roots(); ++k) coroot_lookup[coroots_[k]] = k;

    for (auto& e : finite_) {
        e.free_block = zero_matrix(nf, nf);
        e.torsion_from_free = zero_matrix(nt, nf);
        e.torsion_block = zero_matrix(nt, nt);
        for (int j = 0; j < nf; ++j) {
            IVec col(d.rank);
            for (int i = 0; i < d.rank; ++i) col[i] = coinv_.free_section[i][j];
            auto img = coinv_.project(matvec(e.on_cocharacters, col));
            for (int i = 0; i < nf; ++i) e.free_block[i][j] = img.free[i];
            for (int i = 0; i < nt; ++i) e.torsion_from_free[i][j] = img.torsion[i];
        }
        for (int j = 0; j < nt; ++j) {
            IVec col(d.rank);
            for (int i = 0; i < d.rank; ++i) col[i] = coinv_.torsion_section[i][j];
            auto img = coinv_.project(matvec(e.on_cocharacters, col));
            if (!is_zero(img.free)) throw TheoremViolation("Weyl element moves torsion into the free part");
            for (int i = 0; i < nt; ++i) e.torsion_block[i][j] = img.torsion[i];
        }
    }
    for (auto& e : finite_) {
        e.root_image.resize(num_roots());
        for (int k = 0; k < num_roots(); ++k) {
            CoinvariantElement lam = coroots_[k];
            CoinvariantElement img;
            img.free = matvec(e.free_block, lam.free);
            img.torsion = vadd(matvec(e.torsion_from_free, lam.free), matvec(e.torsion_block, lam.torsion));
            img = coinv_.reduce(img);
            auto it = coroot_lookup.find(img);
            if (it == coroot_lookup.end()) throw TheoremViolation("relative Weyl group does not permute coroots");
            e.root_image[k] = it->second;
        }
    }

    finite_inverse_.resize(finite_.size());
    for (std::size_t w = 0; w < finite_.size(); ++w) {
        int inv = finite_index(unimodular_inverse(finite_[w].on_cocharacters));
        if (inv < 0) throw TheoremViolation("relative Weyl group not closed under inverses");
        finite_inverse_[w] = inv;
    }
    right_simple_table_.assign(finite_.size(), std::vector<int>(rank_));
    left_simple_table_.assign(finite_.size(), std::vector<int>(rank_));
    for (std::size_t w = 0; w < finite_.size(); ++w)
        for (int i = 0; i < rank_; ++i) {
            right_simple_table_[w][i] = finite_multiply(static_cast<int>(w), simple_finite_[i]);
            left_simple_table_[w][i] = finite_multiply(simple_finite_[i], static_cast<int>(w));
        }

    longest_finite_ = 0;
    for (int w = 0; w < finite_order(); ++w)
        if (finite_length(w) > finite_length(longest_finite_)) longest_finite_ = w;
    if (finite_length(longest_finite_) != num_positive_)
        throw TheoremViolation("longest relative Weyl element has the wrong length");

    reflection_finite_.assign(num_roots(), -1);
    for (int w = 0; w < finite_order(); ++w)
        for (int i = 0; i < rank_; ++i) {
            int k = finite_[w].root_image[i];
            if (reflection_finite_[k] >= 0) continue;
            reflection_finite_[k] = finite_multiply(finite_multiply(w, simple_finite_[i]), finite_inverse_[w]);
        }

    // The generators must act on coinvariants by the reflection formula.
    for (int i = 0; i < rank_; ++i) {
        std::vector<CoinvariantElement> probes;
        for (int j = 0; j < nf; ++j) {
            CoinvariantElement e = coinv_.zero();
            e.free[j] = 1;
            probes.push_back(e);
        }
        for (int j = 0; j < nt; ++j) {
            CoinvariantElement e = coinv_.zero();
            e.torsion[j] = 1;
            probes.push_back(e);
        }
        for (const auto& p : probes) {
            auto expect = coinv_.sub(p, coinv_.scale(pair(i, p), coroots_[i]));
            if (act(simple_finite_[i], p) != expect)
                throw TheoremViolation("relative simple reflection disagrees with the reflection formula");
        }
    }
}

void ExtendedAffineWeylGroup::build_affine() {
    simple_.clear();
    for (int i = 0; i < rank_; ++i) simple_.push_back({coinv_.zero(), simple_finite_[i]});
    for (int h : highest_) simple_.push_back({coroots_[h], reflection_finite_[h]});
    for (int s = 0; s < num_simple(); ++s)
        if (length(simple_[s]) != 1) throw TheoremViolation("simple affine reflection of length != 1");
}

int ExtendedAffineWeylGroup::finite_index(const IMat& m) const {
    auto it = finite_lookup_.find(flatten(m));
    return it == finite_lookup_.end() ? -1 : it->second;
}

int ExtendedAffineWeylGroup::finite_multiply(int a, int b) const {
    if (b == 0) return a;
    if (a == 0) return b;
    int r = finite_index(matmul(finite_[a].on_cocharacters, finite_[b].on_cocharacters));
    if (r < 0) throw TheoremViolation("relative Weyl group not closed");
    return r;
}

CoinvariantElement ExtendedAffineWeylGroup::act(int w, const CoinvariantElement& lam) const {
    if (w == 0) return lam;
    const auto& e = finite_[w];
    CoinvariantElement r;
    r.free = matvec(e.free_block, lam.free);
    r.torsion = vadd(matvec(e.torsion_from_free, lam.free), matvec(e.torsion_block, lam.torsion));
    return coinv_.reduce(r);
}

std::int64_t ExtendedAffineWeylGroup::finite_length(int w) const {
    std::int64_t n = 0;
    for (int k = 0; k < num_positive_; ++k)
        if (finite_[w].root_image[k] >= num_positive_) ++n;
    return n;
}

AffineElement ExtendedAffineWeylGroup::multiply(const AffineElement& x, const AffineElement& y) const {
    return {coinv_.add(x.translation, act(x.finite, y.translation)), finite_multiply(x.finite, y.finite)};
}

AffineElement ExtendedAffineWeylGroup::times_simple(const AffineElement& x, int s) const {
    if (s < rank_) return {x.translation, right_simple_table_[x.finite][s]};
    return multiply(x, simple_[s]);
}

AffineElement ExtendedAffineWeylGroup::simple_times(int s, const AffineElement& x) const {
    const int root = s < rank_ ? s : highest_[s - rank_];
    CoinvariantElement lam = coinv_.sub(x.translation, coinv_.scale(pair(root, x.translation), coroots_[root]));
    if (s < rank_) return {lam, left_simple_table_[x.finite][s]};
    return {coinv_.add(coroots_[root], lam), finite_multiply(simple_[s].finite, x.finite)};
}

AffineElement ExtendedAffineWeylGroup::inverse(const AffineElement& x) const {
    int winv = finite_inverse_[x.finite];
    return {coinv_.scale(-1, act(winv, x.translation)), winv};
}

std::int64_t ExtendedAffineWeylGroup::length(const AffineElement& x) const {
    const auto& winv = finite_[finite_inverse_[x.finite]];
    std::int64_t total = 0;
    for (int k = 0; k < num_positive_; ++k) {
        std::int64_t p = pair(k, x.translation);
        if (winv.root_image[k] >= num_positive_) p = checked::sub(p, 1);
        total = checked::add(total, p < 0 ? -p : p);
    }
    return total;
}

std::vector<int> ExtendedAffineWeylGroup::reduced_word(const AffineElement& y, AffineElement* omega) const {
    std::vector<int> peeled;
    AffineElement cur = y;
    std::int64_t len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int s = 0; s < num_simple(); ++s) {
            AffineElement next = times_simple(cur, s);
            std::int64_t l = length(next);
            if (l < len) {
                cur = next;
                len = l;
                peeled.push_back(s);
                found = true;
                break;
            }
        }
        if (!found) throw TheoremViolation("positive-length element without a descent");
    }
    if (omega) *omega = cur;
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

IVec ExtendedAffineWeylGroup::omega_class(const CoinvariantElement& lam) const {
    auto e = omega_quotient_.project(coinv_.lift(lam));
    IVec v = e.free;
    v.insert(v.end(), e.torsion.begin(), e.torsion.end());
    return v;
}

bool ExtendedAffineWeylGroup::bruhat_leq(const AffineElement& x0, const AffineElement& y0) const {
    if (omega_class(x0) != omega_class(y0)) return false;
    AffineElement x = x0, y = y0;
    std::int64_t lx = length(x), ly = length(y);
    while (true) {
        if (lx > ly) return false;
        if (ly == 0) return x == y;
        int desc = -1;
        AffineElement ys;
        for (int s = 0; s < num_simple(); ++s) {
            ys = times_simple(y, s);
            if (length(ys) < ly) {
                desc = s;
                break;
            }
        }
        if (desc < 0) throw TheoremViolation("positive-length element without a descent");
        AffineElement xs = times_simple(x, desc);
        std::int64_t lxs = length(xs);
        if (lxs < lx) {
            x = xs;
            lx = lxs;
        }
        y = ys;
        --ly;
    }
}

AffineSet ExtendedAffineWeylGroup::lower_interval(const AffineElement& y, std::size_t cap) const {
    AffineElement omega;
    auto word = reduced_word(y, &omega);
    std::vector<AffineElement> cur{identity()};
    AffineSet seen{identity()};
    for (int s : word) {
        const std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            AffineElement z = times_simple(cur[i], s);
            if (seen.insert(z).second) {
                cur.push_back(z);
                if (cur.size() > cap) throw ResourceError("Bruhat interval exceeds the enumeration cap");
            }
        }
    }
    AffineSet out;
    out.reserve(cur.size());
    for (const auto& z : cur) out.insert(multiply(omega, z));
    return out;
}

bool ExtendedAffineWeylGroup::is_dominant(const CoinvariantElement& lam) const {
    for (int i = 0; i < rank_; ++i)
        if (pair(i, lam) < 0) return false;
    return true;
}

CoinvariantElement ExtendedAffineWeylGroup::dominant(const CoinvariantElement& lam0) const {
    CoinvariantElement lam = lam0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank_; ++i) {
            std::int64_t p = pair(i, lam);
            if (p < 0) {
                lam = coinv_.sub(lam, coinv_.scale(p, coroots_[i]));
                changed = true;
            }
        }
    }
    return lam;
}

std::vector<CoinvariantElement> ExtendedAffineWeylGroup::orbit(const CoinvariantElement& lam) const {
    std::vector<CoinvariantElement> out{lam};
    std::unordered_set<CoinvariantElement, CoinvariantHash> seen{lam};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int i = 0; i < rank_; ++i) {
            auto img = act(simple_finite_[i], out[head]);
            if (seen.insert(img).second) out.push_back(img);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IVec> ExtendedAffineWeylGroup::coroot_coordinates(const CoinvariantElement& lam) const {
    if (rank_ == 0) return is_zero(lam.free) && is_zero(lam.torsion) ? std::optional<IVec>(IVec{}) : std::nullopt;
    auto sol = qsolve(coroot_solver_, to_rat(lam.free));
    if (!sol) return std::nullopt;
    auto c = to_integral(*sol);
    if (!c) return std::nullopt;
    if (from_coroot_coordinates(*c) != lam) return std::nullopt;
    return c;
}

CoinvariantElement ExtendedAffineWeylGroup::from_coroot_coordinates(const IVec& c) const {
    CoinvariantElement r = coinv_.zero();
    for (int i = 0; i < rank_; ++i) r = coinv_.add(r, coinv_.scale(c[i], coroots_[i]));
    return r;
}

bool ExtendedAffineWeylGroup::relative_dominance_leq(const CoinvariantElement& lam,
                                                      const CoinvariantElement& mu) const {
    auto c = coroot_coordinates(coinv_.sub(mu, lam));
    return c && std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
}

CoinvariantElement image_in_coinvariants(const ExtendedAffineWeylGroup& g, const IVec& y) {
    return g.lattice().project(y);
}

namespace {

void add_intervals(const ExtendedAffineWeylGroup& g, const std::vector<CoinvariantElement>& translations,
                   std::size_t cap, AffineSet& out) {
    for (const auto& lam : translations) {
        if (out.count(g.translation(lam))) continue;
        for (const auto& z : g.lower_interval(g.translation(lam), cap)) {
            out.insert(z);
            if (out.size() > cap) throw ResourceError("admissible set exceeds the enumeration cap");
        }
    }
}

}  // namespace

AffineSet admissible_set(const ExtendedAffineWeylGroup& g, const IVec& mu, std::size_t cap) {
    AffineSet out;
    add_intervals(g, g.orbit(image_in_coinvariants(g, mu)), cap, out);
    return out;
}

AffineSet admissible_set_absolute(const ExtendedAffineWeylGroup& g, const IVec& mu, std::size_t cap) {
    RootDatum dual = dual_datum(g.local_datum().datum);
    std::set<CoinvariantElement> images;
    for (const auto& y : weyl_orbit(dual, mu)) images.insert(image_in_coinvariants(g, y));
    AffineSet out;
    add_intervals(g, {images.begin(), images.end()}, cap, out);
    return out;
}

ExtremalReport extremal_translations(const ExtendedAffineWeylGroup& g, const IVec& mu) {
    RootDatum dual = dual_datum(g.local_datum().datum);
    IVec dom = dominant_representative(dual, mu).dominant;
    ExtremalReport rep;
    std::set<CoinvariantElement> images;
    for (const auto& y : weight_set(dual, dom)) images.insert(image_in_coinvariants(g, y));
    rep.images.assign(images.begin(), images.end());

    const auto mu_bar = image_in_coinvariants(g, dom);
    rep.expected = g.orbit(mu_bar);
    for (const auto& a : rep.images) {
        bool maximal = true;
        for (const auto& b : rep.images) {
            if (a == b) continue;
            if (g.bruhat_leq(g.translation(a), g.translation(b))) {
                maximal = false;
                break;
            }
        }
        if (maximal) rep.maximal.push_back(a);
    }
    std::sort(rep.maximal.begin(), rep.maximal.end());
    rep.matches = rep.maximal == rep.expected;
    rep.dominance_bridge = true;
    for (const auto& a : rep.images)
        if (!g.relative_dominance_leq(g.dominant(a), mu_bar)) rep.dominance_bridge = false;
    return rep;
}

bool conjugation_lemma_holds(const ExtendedAffineWeylGroup& g, const CoinvariantElement& nu,
                             std::size_t* checked_count) {
    AffineSet below_orbit;
    add_intervals(g, g.orbit(nu), 1000000, below_orbit);
    std::size_t count = 0;
    for (const auto& x : g.lower_interval(g.translation(nu))) {
        const std::int64_t lx = g.length(x);
        for (int s = 0; s < g.num_simple(); ++s) {
            AffineElement sxs = g.times_simple(g.simple_times(s, x), s);
            if (g.length(sxs) != lx) continue;
            ++count;
            if (!below_orbit.count(sxs)) {
                if (checked_count) *checked_count = count;
                return false;
            }
        }
    }
    if (checked_count) *checked_count = count;
    return true;
}

FixedAffineGroup::FixedAffineGroup(const ExtendedAffineWeylGroup& g) : g_(g) {
    frob_ = g.local_datum().frobenius.on_dual;
    const IMat frob_inv = unimodular_inverse(frob_);
    finite_perm_.resize(g.finite_order());
    for (int w = 0; w < g.finite_order(); ++w) {
        int img = g.finite_index(matmul(matmul(frob_, g.finite_element(w).on_cocharacters), frob_inv));
        if (img < 0) throw InputError("Frobenius does not normalize the relative Weyl group");
        finite_perm_[w] = img;
        if (img == w) finite_fixed_.push_back(w);
    }

    const int ns = g.num_simple();
    std::vector<int> perm(ns);
    for (int s = 0; s < ns; ++s) {
        AffineElement img = apply_frobenius(g.simple_reflection(s));
        int found = -1;
        for (int t = 0; t < ns; ++t)
            if (g.simple_reflection(t) == img) found = t;
        if (found < 0) throw InputError("Frobenius does not preserve the base alcove");
        perm[s] = found;
    }

    std::vector<std::vector<int>> finite_orbits, affine_orbits;
    std::vector<bool> seen(ns, false);
    for (int s = 0; s < ns; ++s) {
        if (seen[s]) continue;
        std::vector<int> orb;
        for (int t = s; !seen[t]; t = perm[t]) {
            seen[t] = true;
            orb.push_back(t);
        }
        std::sort(orb.begin(), orb.end());
        (s < g.relative_rank() ? finite_orbits : affine_orbits).push_back(orb);
    }
    // Affine orbits follow the order of their components' smallest simple index.
    auto key = [&](const std::vector<int>& orb) {
        int best = g.relative_rank();
        for (int s : orb) best = std::min(best, g.components()[s - g.relative_rank()].front());
        return best;
    };
    std::sort(affine_orbits.begin(), affine_orbits.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    for (auto& o : finite_orbits) {
        orbits_.push_back(o);
        affine_orbit_.push_back(false);
    }
    for (auto& o : affine_orbits) {
        orbits_.push_back(o);
        affine_orbit_.push_back(true);
    }

    for (const auto& orb : orbits_) {
        // W_pi is finite; its longest element is the unique element of maximal length.
        std::vector<AffineElement> elems{g.identity()};
        AffineSet seen_elems{g.identity()};
        for (std::size_t head = 0; head < elems.size(); ++head)
            for (int s : orb) {
                AffineElement z = g.times_simple(elems[head], s);
                if (seen_elems.insert(z).second) {
                    elems.push_back(z);
                    if (elems.size() > 100000) throw ResourceError("Frobenius orbit generates an infinite group");
                }
            }
        std::int64_t best = -1;
        int count = 0;
        AffineElement longest;
        for (const auto& z : elems) {
            std::int64_t l = g.length(z);
            if (l > best) {
                best = l;
                longest = z;
                count = 1;
            } else if (l == best) {
                ++count;
            }
        }
        if (count != 1) throw TheoremViolation("parabolic subgroup without a unique longest element");
        if (!is_fixed(longest)) throw TheoremViolation("longest element of a Frobenius orbit is not fixed");
        simple_.push_back(longest);
        weights_.push_back(best);
    }
}

CoinvariantElement FixedAffineGroup::apply_frobenius(const CoinvariantElement& lam) const {
    return g_.lattice().apply(frob_, lam);
}

AffineElement FixedAffineGroup::apply_frobenius(const AffineElement& x) const {
    return {apply_frobenius(x.translation), finite_perm_[x.finite]};
}

bool FixedAffineGroup::left_descent(int s, const AffineElement& x) const {
    return g_.length(g_.multiply(simple_[s], x)) < g_.length(x);
}

bool FixedAffineGroup::right_descent(const AffineElement& x, int s) const {
    return g_.length(g_.multiply(x, simple_[s])) < g_.length(x);
}

std::vector<int> FixedAffineGroup::reduced_word(const AffineElement& x, AffineElement* omega) const {
    std::vector<int> word;
    AffineElement cur = x;
    std::int64_t len = g_.length(cur);
    while (len > 0) {
        bool found = false;
        for (int s = 0; s < num_simple(); ++s) {
            AffineElement next = g_.multiply(simple_[s], cur);
            std::int64_t l = g_.length(next);
            if (l < len) {
                if (len - l != weights_[s]) throw TheoremViolation("weighted length is not additive");
                cur = next;
                len = l;
                word.push_back(s);
                found = true;
                break;
            }
        }
        if (!found) throw TheoremViolation("fixed element of positive length without a descent");
    }
    if (omega) *omega = cur;
    return word;
}

AffineSet FixedAffineGroup::lower_interval(const AffineElement& y, std::size_t cap) const {
    AffineElement omega;
    auto word = reduced_word(y, &omega);
    std::vector<AffineElement> cur{g_.identity()};
    AffineSet seen{g_.identity()};
    for (int s : word) {
        const std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            AffineElement z = g_.multiply(cur[i], simple_[s]);
            if (seen.insert(z).second) {
                cur.push_back(z);
                if (cur.size() > cap) throw ResourceError("Bruhat interval exceeds the enumeration cap");
            }
        }
    }
    AffineSet out;
    out.reserve(cur.size());
    for (const auto& z : cur) out.insert(g_.multiply(z, omega));
    return out;
}

bool FixedAffineGroup::bruhat_leq(const AffineElement& x0, const AffineElement& y0) const {
    AffineElement x = x0, y = y0;
    std::int64_t lx = g_.length(x), ly = g_.length(y);
    while (true) {
        if (lx > ly) return false;
        if (ly == 0) return x == y;
        int desc = -1;
        AffineElement sy;
        std::int64_t lsy = 0;
        for (int s = 0; s < num_simple(); ++s) {
            sy = g_.multiply(simple_[s], y);
            lsy = g_.length(sy);
            if (lsy < ly) {
                desc = s;
                break;
            }
        }
        if (desc < 0) throw TheoremViolation("fixed element of positive length without a descent");
        AffineElement sx = g_.multiply(simple_[desc], x);
        std::int64_t lsx = g_.length(sx);
        if (lsx < lx) {
            x = sx;
            lx = lsx;
        }
        y = sy;
        ly = lsy;
    }
}

AffineElement FixedAffineGroup::max_double_coset(const CoinvariantElement& lam) const {
    AffineElement t = g_.translation(lam);
    std::int64_t best = -1;
    AffineElement arg;
    std::set<AffineElement> attaining;
    for (int u : finite_fixed_)
        for (int v : finite_fixed_) {
            AffineElement z = g_.multiply(g_.multiply({g_.lattice().zero(), u}, t), {g_.lattice().zero(), v});
            std::int64_t l = g_.length(z);
            if (l > best) {
                best = l;
                arg = z;
                attaining = {z};
            } else if (l == best) {
                attaining.insert(z);
            }
        }
    if (attaining.size() != 1) throw TheoremViolation("double coset without a unique longest element");
    return arg;
}

std::vector<std::vector<int>> FixedAffineGroup::coxeter_matrix() const {
    const int n = num_simple();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            AffineElement prod = g_.multiply(simple_[a], simple_[b]);
            AffineElement cur = prod;
            int order = 0;
            for (int k = 1; k <= 12; ++k) {
                if (cur == g_.identity()) {
                    order = k;
                    break;
                }
                cur = g_.multiply(cur, prod);
            }
            m[a][b] = order;  // 0 stands for infinity
        }
    return m;
}

}  // namespace rootfold
