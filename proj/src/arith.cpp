#include "rootfold/arith.hpp"

#include <functional>
#include <sstream>

namespace rootfold {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("64-bit overflow in lattice arithmetic");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ResourceError("64-bit overflow in lattice arithmetic");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("64-bit overflow in lattice arithmetic");
    return r;
}

std::int64_t to_i64(const Int& x) {
    if (x > Int(INT64_MAX) || x < Int(INT64_MIN)) throw ResourceError("value exceeds 64-bit range");
    return static_cast<std::int64_t>(x);
}

std::int64_t to_i64(const Rat& x) {
    if (boost::multiprecision::denominator(x) != 1) throw InputError("expected an integer, got " + to_string(x));
    return to_i64(Int(boost::multiprecision::numerator(x)));
}

}  // namespace checked

IVec vadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
    return r;
}

IVec vsub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(a[i], b[i]);
    return r;
}

IVec vscale(std::int64_t c, const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::mul(c, a[i]);
    return r;
}

IVec vneg(const IVec& a) { return vscale(-1, a); }

std::int64_t dot(const IVec& a, const IVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
    return s;
}

bool is_zero(const IVec& a) {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

IMat identity_matrix(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat zero_matrix(int rows, int cols) { return IMat(rows, IVec(cols, 0)); }

IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat t(m[0].size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IMat matmul(const IMat& a, const IMat& b) {
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IMat r(a.size(), IVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] = checked::add(r[i][j], checked::mul(a[i][k], b[k][j]));
        }
    return r;
}

IVec matvec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IMat unimodular_inverse(const IMat& m) {
    auto inv = qinverse(to_rat(m));
    if (!inv) throw InputError("matrix is singular");
    IMat r(m.size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Rat& x = (*inv)[i][j];
            if (boost::multiprecision::denominator(x) != 1) throw InputError("matrix is not unimodular");
            r[i][j] = checked::to_i64(x);
        }
    return r;
}

QVec to_rat(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

QMat to_rat(const IMat& m) {
    QMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_rat(row));
    return r;
}

QVec qadd(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qscale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat qdot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec qmatvec(const QMat& m, const QVec& v) {
    QVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = qdot(m[i], v);
    return r;
}

QMat qmatmul(const QMat& a, const QMat& b) {
    std::size_t cols = b.empty() ? 0 : b[0].size();
    QMat r(a.size(), QVec(cols, Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QMat qtranspose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

bool qis_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::optional<QMat> qinverse(const QMat& m) {
    std::size_t n = m.size();
    QMat a = m;
    QMat inv(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::optional<QVec> qsolve(const QMat& a, const QVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    QMat m(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat piv = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    QVec x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

int qrank(QMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<IVec> to_integral(const QVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (boost::multiprecision::denominator(v[i]) != 1) return std::nullopt;
        r[i] = checked::to_i64(v[i]);
    }
    return r;
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

std::string to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s + ")";
}

std::size_t VecHash::operator()(const IVec& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = hash_combine(h, std::hash<std::int64_t>{}(x));
    return h;
}

std::size_t QVecHash::operator()(const QVec& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) h = hash_combine(h, std::hash<Rat>{}(x));
    return h;
}

}  // namespace rootfold
