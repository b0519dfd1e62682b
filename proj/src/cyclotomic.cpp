#include "rootfold/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace rootfold {

namespace {

using Poly = std::vector<Int>;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of monic division.
Poly divide_exact(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {Int(0)};
    Poly q(num.size() - dn, Int(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        Int c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw TheoremViolation("cyclotomic polynomial division left a remainder");
    trim(q);
    return q;
}

const Poly& cached_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto jt = cache.find(d);
        Poly div;
        if (jt != cache.end()) {
            div = jt->second;
        } else {
            // Small recursion through the same cache without re-locking.
            div = Poly(d + 1, Int(0));
            div[0] = -1;
            div[d] = 1;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) div = divide_exact(div, cache.at(e));
            cache[d] = div;
        }
        p = divide_exact(p, div);
    }
    return cache[n] = p;
}

int phi(int n) { return static_cast<int>(cached_polynomial(n).size()) - 1; }

// Reduce a polynomial in zeta_n modulo the cyclotomic polynomial.
std::vector<Int> reduce(Poly p, int n) {
    const Poly& m = cached_polynomial(n);
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        Int c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * m[j];
    }
    p.resize(deg, Int(0));
    return p;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int n) {
    if (n < 1) throw InputError("cyclotomic order must be positive");
    return cached_polynomial(n);
}

Cyclotomic::Cyclotomic(const Int& c, int order) : order_(order) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    coeffs_.assign(phi(order), Int(0));
    coeffs_[0] = c;
}

Cyclotomic Cyclotomic::root_of_unity(int order, int k) {
    Cyclotomic z(Int(0), order);
    int e = ((k % order) + order) % order;
    Poly p(e + 1, Int(0));
    p[e] = 1;
    z.coeffs_ = reduce(p, order);
    return z;
}

Cyclotomic Cyclotomic::promote(int order) const {
    if (order == order_) return *this;
    if (order % order_) throw InputError("cannot promote to a non-multiple order");
    const int step = order / order_;
    Poly p(static_cast<std::size_t>(step) * coeffs_.size() + 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    Cyclotomic r(Int(0), order);
    r.coeffs_ = reduce(p, order);
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const int n = std::lcm(order_, o.order_);
    Cyclotomic a = promote(n), b = o.promote(n);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const int n = std::lcm(order_, o.order_);
    Cyclotomic a = promote(n), b = o.promote(n);
    Poly p(a.coeffs_.size() + b.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    a.coeffs_ = reduce(p, n);
    return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    const int n = std::lcm(order_, o.order_);
    return promote(n).coeffs_ == o.promote(n).coeffs_;
}

Cyclotomic Cyclotomic::divided_by(const Int& d) const {
    if (d == 0) throw TheoremViolation("division of a cyclotomic integer by zero");
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) {
        if (c % d != 0) throw TheoremViolation("inexact division of a cyclotomic integer");
        c /= d;
    }
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Int Cyclotomic::as_integer() const {
    if (!is_integer()) throw TheoremViolation("cyclotomic value is not a rational integer");
    return coeffs_[0];
}

std::string Cyclotomic::to_string() const {
    if (is_integer()) return as_integer().str();
    // Power basis in z = exp(2 pi i / order).
    const std::string z = "z" + std::to_string(order_);
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        std::string mag = (c < 0 ? Int(-c) : c).str();
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        if (i == 0) {
            s += mag;
            continue;
        }
        if (mag != "1") s += mag + "*";
        s += i == 1 ? z : z + "^" + std::to_string(i);
    }
    return s;
}

std::complex<double> Cyclotomic::approximate() const {
    std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / order_), acc = 0, pw = 1;
    for (const auto& c : coeffs_) {
        acc += c.convert_to<double>() * pw;
        pw *= z;
    }
    return acc;
}

}  // namespace rootfold
