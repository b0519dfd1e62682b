#include "rootfold/hecke.hpp"

#include <algorithm>
#include <set>

namespace rootfold {

Laurent Laurent::monomial(std::int64_t e, const Int& c) {
    Laurent l;
    l.add_term(e, c);
    return l;
}

void Laurent::add_term(std::int64_t e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Int Laurent::coefficient(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(checked::add(e1, e2), c1 * c2);
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::shifted(std::int64_t k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[checked::add(e, k)] = c;
    return r;
}

Int Laurent::at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool Laurent::in_negative_part() const { return terms_.empty() || terms_.rbegin()->first < 0; }

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = c.str();
        if (!s.empty()) {
            if (c < 0) {
                s += " - ";
                coeff = coeff.substr(1);
            } else {
                s += " + ";
            }
        }
        if (e == 0)
            s += coeff;
        else {
            if (coeff == "-1")
                s += "-";
            else if (coeff != "1")
                s += coeff + "*";
            s += e == 1 ? "v" : "v^" + std::to_string(e);
        }
    }
    return s;
}

namespace {

void accumulate(HeckeElement& acc, const AffineElement& x, const Laurent& p) {
    if (p.is_zero()) return;
    auto it = acc.find(x);
    if (it == acc.end()) {
        acc.emplace(x, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) acc.erase(it);
}

Laurent scale_gap(std::int64_t weight) {
    return Laurent::monomial(weight) - Laurent::monomial(-weight);  // v_s - v_s^{-1}
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(const FixedAffineGroup& w, std::size_t cap) : w_(w), cap_(cap) {}

HeckeElement HeckeAlgebra::left_multiply(int s, const HeckeElement& a) const {
    const auto& g = w_.ambient();
    const Laurent gap = scale_gap(w_.weight(s));
    HeckeElement out;
    for (const auto& [x, p] : a) {
        AffineElement sx = g.multiply(w_.simple(s), x);
        accumulate(out, sx, p);
        if (g.length(sx) < g.length(x)) accumulate(out, x, gap * p);
    }
    return out;
}

HeckeElement HeckeAlgebra::multiply_standard(const HeckeElement& a, const HeckeElement& b) const {
    const auto& g = w_.ambient();
    HeckeElement out;
    for (const auto& [x, p] : a) {
        AffineElement omega;
        auto word = w_.reduced_word(x, &omega);
        HeckeElement cur;
        for (const auto& [y, r] : b) accumulate(cur, g.multiply(omega, y), r);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const int s = *it;
            const std::int64_t q_exp = 2 * w_.weight(s);
            HeckeElement next;
            for (const auto& [y, r] : cur) {
                AffineElement sy = g.multiply(w_.simple(s), y);
                if (g.length(sy) > g.length(y)) {
                    accumulate(next, sy, r);
                } else {
                    accumulate(next, y, (Laurent::monomial(q_exp) - Laurent(Int(1))) * r);
                    accumulate(next, sy, Laurent::monomial(q_exp) * r);
                }
            }
            cur = std::move(next);
        }
        for (const auto& [y, r] : cur) accumulate(out, y, p * r);
    }
    return out;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& a) const {
    HeckeElement out;
    for (const auto& [x, p] : a) {
        AffineElement omega;
        auto word = w_.reduced_word(x, &omega);
        HeckeElement e = standard(omega);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            HeckeElement next = left_multiply(*it, e);
            const Laurent gap = scale_gap(w_.weight(*it));
            for (const auto& [y, r] : e) accumulate(next, y, -(gap * r));
            e = std::move(next);
        }
        const Laurent pb = p.bar();
        for (const auto& [y, r] : e) accumulate(out, y, pb * r);
    }
    return out;
}

const HeckeElement& HeckeAlgebra::canonical(const AffineElement& y) {
    auto found = memo_.find(y);
    if (found != memo_.end()) return found->second;
    const auto& g = w_.ambient();
    const std::int64_t ly = g.length(y);
    if (ly == 0) return memo_[y] = standard(y);

    int s = -1;
    for (int t = 0; t < w_.num_simple(); ++t)
        if (w_.left_descent(t, y)) {
            s = t;
            break;
        }
    if (s < 0) throw TheoremViolation("element of positive length without a left descent");
    const AffineElement below = g.multiply(w_.simple(s), y);
    const HeckeElement prev = canonical(below);

    // c_s C_below with c_s = t_s + v_s^{-1}.
    HeckeElement x = left_multiply(s, prev);
    const Laurent inv = Laurent::monomial(-w_.weight(s));
    for (const auto& [z, p] : prev) accumulate(x, z, inv * p);

    auto order = [&](const AffineElement& a, const AffineElement& b) {
        auto la = g.length(a), lb = g.length(b);
        return la != lb ? la > lb : a < b;
    };
    std::set<AffineElement, decltype(order)> work(order);
    for (const auto& [z, p] : x)
        if (z != y) work.insert(z);
    while (!work.empty()) {
        AffineElement z = *work.begin();
        work.erase(work.begin());
        auto it = x.find(z);
        if (it == x.end() || it->second.in_negative_part()) continue;
        if (!w_.left_descent(s, z))
            throw TheoremViolation("non-negative coefficient away from the descent set in the KL recursion");
        Laurent mu;
        for (const auto& [e, c] : it->second.terms()) {
            if (e < 0) continue;
            if (e == 0)
                mu += Laurent(c);
            else
                mu += Laurent::monomial(e, c) + Laurent::monomial(-e, c);
        }
        const HeckeElement cz = canonical(z);
        for (const auto& [u, r] : cz) {
            accumulate(x, u, -(mu * r));
            if (u != y && u != z) work.insert(u);
        }
        if (x.size() > cap_) throw ResourceError("KL computation exceeds the interval cap");
    }
    auto yt = x.find(y);
    if (yt == x.end() || yt->second != Laurent(Int(1))) throw TheoremViolation("canonical basis element not monic");
    for (const auto& [z, p] : x)
        if (z != y && !p.in_negative_part()) throw TheoremViolation("canonical basis coefficient not in v^-1 Z[v^-1]");
    return memo_[y] = std::move(x);
}

Laurent HeckeAlgebra::kl_polynomial(const AffineElement& x, const AffineElement& y) {
    if (!w_.bruhat_leq(x, y)) throw InputError("KL polynomial requested for a pair that is not Bruhat-ordered");
    const auto& c = canonical(y);
    auto it = c.find(x);
    if (it == c.end()) return Laurent();
    const auto& g = w_.ambient();
    return it->second.shifted(g.length(y) - g.length(x));
}

bool HeckeAlgebra::canonical_is_bar_invariant(const AffineElement& y) {
    const HeckeElement c = canonical(y);
    return bar(c) == c;
}

BernsteinElement GeometricBasisElement::element() const {
    BernsteinElement e;
    for (const auto& t : terms)
        if (!t.trace.is_zero()) e[t.weight] = t.trace;
    return e;
}

std::vector<CoinvariantElement> fixed_dominant_weights(const FixedPointDatum& h, const CoinvariantElement& highest) {
    std::vector<CoinvariantElement> out;
    for (const auto& [w, m] : disconnected_character(h, highest))
        if (m != 0 && h.is_dominant(w) && h.frobenius_fixed(w)) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        auto ha = h.height(a), hb = h.height(b);
        return ha != hb ? ha > hb : b < a;
    });
    return out;
}

GeometricBasisElement geometric_basis(const FixedPointDatum& h, const CoinvariantElement& highest,
                                      HeckeAlgebra* hecke) {
    if (!h.is_dominant(highest) || !h.frobenius_fixed(highest))
        throw InputError("geometric basis needs a dominant Frobenius-fixed weight");
    GeometricBasisElement out;
    out.highest = highest;
    TwistedHighestWeightTrace trace(h, highest);
    AffineElement top;
    if (hecke) {
        const auto& lat = hecke->group().ambient().lattice();
        if (lat.free_projection != h.lattice.free_projection || lat.torsion_projection != h.lattice.torsion_projection)
            throw InputError("Hecke algebra and fixed-point datum use different coinvariant coordinates");
        top = hecke->group().max_double_coset(highest);
    }
    for (const auto& nu : fixed_dominant_weights(h, highest)) {
        GeometricTerm t;
        t.weight = nu;
        t.trace = trace(nu);
        if (hecke) {
            t.has_kl = true;
            AffineElement low = hecke->group().max_double_coset(nu);
            if (hecke->group().bruhat_leq(low, top)) t.kl = hecke->kl_polynomial(low, top);
            t.kl_at_one = t.kl.at_one();
            if (t.trace != Cyclotomic(t.kl_at_one)) out.routes_agree = false;
        }
        out.terms.push_back(std::move(t));
    }
    out.top_coefficient_one =
        !out.terms.empty() && out.terms.front().weight == highest && out.terms.front().trace == Cyclotomic(Int(1));
    return out;
}

std::vector<CoinvariantElement> fixed_weyl_orbit(const FixedAffineGroup& w, const CoinvariantElement& lam) {
    std::set<CoinvariantElement> orbit;
    for (int u : w.finite_fixed()) orbit.insert(w.ambient().act(u, lam));
    return {orbit.begin(), orbit.end()};
}

Cyclotomic evaluate_bernstein(const FixedAffineGroup& w, const BernsteinElement& elt,
                              const std::function<Cyclotomic(const CoinvariantElement&)>& s) {
    Cyclotomic total;
    for (const auto& [nu, c] : elt) {
        Cyclotomic orbit_sum;
        for (const auto& x : fixed_weyl_orbit(w, nu)) orbit_sum += s(x);
        total += c * orbit_sum;
    }
    return total;
}

}  // namespace rootfold
