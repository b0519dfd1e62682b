#include "rootfold/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace rootfold {

namespace {

using BigRow = std::vector<Int>;

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Int mod_nonneg(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

BigMat big_identity(std::size_t n) {
    BigMat m(n, BigRow(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat to_small(const BigMat& m) {
    IMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) r[i][j] = checked::to_i64(m[i][j]);
    }
    return r;
}

}  // namespace

BigMat to_big(const IMat& m) {
    BigMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) r[i][j] = m[i][j];
    }
    return r;
}

SmithForm smith_normal_form(const BigMat& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows ? input[0].size() : 0;
    BigMat a = input;
    BigMat left = big_identity(rows), left_inv = big_identity(rows), right = big_identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(left[i], left[j]);
        for (auto& row : left_inv) std::swap(row[i], row[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : right) std::swap(row[i], row[j]);
    };
    // row_i += f * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
        for (std::size_t c = 0; c < rows; ++c) left[i][c] += f * left[j][c];
        for (std::size_t r = 0; r < rows; ++r) left_inv[r][j] -= f * left_inv[r][i];
    };
    auto add_col = [&](std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
        for (std::size_t r = 0; r < cols; ++r) right[r][i] += f * right[r][j];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : left[i]) x = -x;
        for (auto& row : left_inv) row[i] = -row[i];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                add_row(i, t, -floor_div(a[i][t], a[t][t]));
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                add_col(j, t, -floor_div(a[t][j], a[t][t]));
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (t < rows && t < cols && a[t][t] < 0) negate_row(t);
    }

    SmithForm s;
    s.diagonal.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) s.diagonal[t] = a[t][t];
    s.left = std::move(left);
    s.left_inverse = std::move(left_inv);
    s.right = std::move(right);
    return s;
}

IMat hermite_normal_form(const IMat& input, IMat* transform) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows ? input[0].size() : 0;
    BigMat a = to_big(input);
    BigMat u = big_identity(rows);
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid down the column until a single nonzero entry remains at row r.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == rows) break;
            std::swap(a[r], a[best]);
            std::swap(u[r], u[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = floor_div(a[i][c], a[r][c]);
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            for (auto& x : a[r]) x = -x;
            for (auto& x : u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a[i][c], a[r][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
            for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    u.resize(r);
    if (transform) *transform = to_small(u);
    return to_small(a);
}

IMat integer_kernel(const IMat& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    SmithForm s = smith_normal_form(to_big(a));
    std::size_t rank = 0;
    for (const auto& d : s.diagonal)
        if (d != 0) ++rank;
    IMat basis;
    for (std::size_t j = rank; j < cols; ++j) {
        IVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = checked::to_i64(s.right[i][j]);
        basis.push_back(v);
    }
    return hermite_normal_form(basis);
}

bool same_row_lattice(const IMat& a, const IMat& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

LatticeAction LatticeAction::generate(int rank, const std::vector<IMat>& generators, std::size_t cap) {
    LatticeAction act;
    act.rank = rank;
    act.generators = generators;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != rank) throw InputError("generator has wrong dimension");
        for (const auto& row : g)
            if (static_cast<int>(row.size()) != rank) throw InputError("generator has wrong dimension");
        unimodular_inverse(g);  // throws if not in GL_n(Z)
    }
    std::set<IMat> seen;
    IMat id = identity_matrix(rank);
    act.elements.push_back(id);
    seen.insert(id);
    for (std::size_t k = 0; k < act.elements.size(); ++k) {
        for (const auto& g : generators) {
            IMat h = matmul(g, act.elements[k]);
            if (seen.insert(h).second) {
                act.elements.push_back(h);
                if (act.elements.size() > cap) throw ResourceError("lattice action is not finite within the cap");
            }
        }
    }
    return act;
}

bool LatticeAction::contains(const IMat& g) const {
    return std::find(elements.begin(), elements.end(), g) != elements.end();
}

std::size_t CoinvariantHash::operator()(const CoinvariantElement& e) const noexcept {
    return hash_combine(VecHash{}(e.free), VecHash{}(e.torsion));
}

CoinvariantElement CoinvariantLattice::project(const IVec& y) const {
    CoinvariantElement e;
    e.free = matvec(free_projection, y);
    e.torsion.resize(torsion_factors.size());
    for (std::size_t i = 0; i < torsion_factors.size(); ++i) {
        std::int64_t v = dot(torsion_projection[i], y) % torsion_factors[i];
        if (v < 0) v += torsion_factors[i];
        e.torsion[i] = v;
    }
    return e;
}

IVec CoinvariantLattice::lift(const CoinvariantElement& e) const {
    IVec y(ambient_rank, 0);
    for (int j = 0; j < free_rank; ++j)
        for (int i = 0; i < ambient_rank; ++i) y[i] = checked::add(y[i], checked::mul(free_section[i][j], e.free[j]));
    for (std::size_t j = 0; j < torsion_factors.size(); ++j)
        for (int i = 0; i < ambient_rank; ++i)
            y[i] = checked::add(y[i], checked::mul(torsion_section[i][j], e.torsion[j]));
    return y;
}

CoinvariantElement CoinvariantLattice::zero() const {
    return {IVec(free_rank, 0), IVec(torsion_factors.size(), 0)};
}

CoinvariantElement CoinvariantLattice::reduce(CoinvariantElement e) const {
    for (std::size_t i = 0; i < torsion_factors.size(); ++i) {
        e.torsion[i] %= torsion_factors[i];
        if (e.torsion[i] < 0) e.torsion[i] += torsion_factors[i];
    }
    return e;
}

CoinvariantElement CoinvariantLattice::add(const CoinvariantElement& a, const CoinvariantElement& b) const {
    return reduce({vadd(a.free, b.free), vadd(a.torsion, b.torsion)});
}

CoinvariantElement CoinvariantLattice::sub(const CoinvariantElement& a, const CoinvariantElement& b) const {
    return reduce({vsub(a.free, b.free), vsub(a.torsion, b.torsion)});
}

CoinvariantElement CoinvariantLattice::scale(std::int64_t c, const CoinvariantElement& a) const {
    return reduce({vscale(c, a.free), vscale(c, a.torsion)});
}

QVec CoinvariantLattice::averaged(const CoinvariantElement& e) const {
    QVec r(ambient_rank, Rat(0));
    for (int j = 0; j < free_rank; ++j)
        for (int i = 0; i < ambient_rank; ++i) r[i] += averaged_section[i][j] * e.free[j];
    return r;
}

CoinvariantElement CoinvariantLattice::apply(const IMat& g, const CoinvariantElement& e) const {
    return project(matvec(g, lift(e)));
}

CoinvariantLattice quotient_by(int rank, const IMat& relation_columns, const std::vector<IMat>& averaging_group) {
    // relation_columns is rank x m (columns generate the relations).
    CoinvariantLattice q;
    q.ambient_rank = rank;
    IMat rel = relation_columns;
    if (rel.empty()) rel = zero_matrix(rank, 0);
    BigMat m = to_big(rel);
    for (auto& row : m)
        if (row.empty()) row.push_back(Int(0));  // keep a well-formed rank x >=1 matrix
    SmithForm s = smith_normal_form(m);

    std::vector<std::size_t> torsion_idx, free_idx;
    for (int i = 0; i < rank; ++i) {
        Int d = i < static_cast<int>(s.diagonal.size()) ? s.diagonal[i] : Int(0);
        if (d == 0)
            free_idx.push_back(i);
        else if (d > 1)
            torsion_idx.push_back(i);
    }
    q.free_rank = static_cast<int>(free_idx.size());

    IMat raw_free;
    for (auto i : free_idx) {
        IVec row(rank);
        for (int j = 0; j < rank; ++j) row[j] = checked::to_i64(s.left[i][j]);
        raw_free.push_back(row);
    }
    IMat u;
    if (!raw_free.empty()) {
        q.free_projection = hermite_normal_form(raw_free, &u);
        if (q.free_projection.size() != raw_free.size()) throw InputError("degenerate coinvariant projection");
    }
    IMat u_inv = raw_free.empty() ? IMat{} : unimodular_inverse(u);

    q.free_section = zero_matrix(rank, q.free_rank);
    for (int j = 0; j < q.free_rank; ++j)
        for (int k = 0; k < q.free_rank; ++k) {
            if (u_inv[k][j] == 0) continue;
            for (int i = 0; i < rank; ++i) {
                std::int64_t li = checked::to_i64(s.left_inverse[i][free_idx[k]]);
                q.free_section[i][j] = checked::add(q.free_section[i][j], checked::mul(li, u_inv[k][j]));
            }
        }

    q.torsion_section = zero_matrix(rank, static_cast<int>(torsion_idx.size()));
    for (std::size_t t = 0; t < torsion_idx.size(); ++t) {
        std::size_t i = torsion_idx[t];
        Int d = s.diagonal[i];
        q.torsion_factors.push_back(checked::to_i64(d));
        IVec row(rank);
        for (int j = 0; j < rank; ++j) row[j] = checked::to_i64(mod_nonneg(s.left[i][j], d));
        q.torsion_projection.push_back(row);
        for (int r = 0; r < rank; ++r) q.torsion_section[r][t] = checked::to_i64(s.left_inverse[r][i]);
    }

    q.averaged_section = QMat(rank, QVec(q.free_rank, Rat(0)));
    for (int j = 0; j < q.free_rank; ++j) {
        IVec lift(rank);
        for (int i = 0; i < rank; ++i) lift[i] = q.free_section[i][j];
        QVec avg = orbit_average(to_rat(lift), averaging_group);
        for (int i = 0; i < rank; ++i) q.averaged_section[i][j] = avg[i];
    }
    return q;
}

CoinvariantLattice coinvariants(const LatticeAction& action) {
    const int n = action.rank;
    IMat rel = zero_matrix(n, 0);
    for (const auto& g : action.generators)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) rel[i].push_back(checked::sub(g[i][j], i == j ? 1 : 0));
    return quotient_by(n, rel, action.elements);
}

IMat invariants(const LatticeAction& action) {
    const int n = action.rank;
    IMat stacked;
    for (const auto& g : action.generators)
        for (int i = 0; i < n; ++i) {
            IVec row = g[i];
            row[i] = checked::sub(row[i], 1);
            stacked.push_back(row);
        }
    if (stacked.empty()) return identity_matrix(n);
    return integer_kernel(stacked);
}

QVec orbit_average(const QVec& v, const std::vector<IMat>& group) {
    if (group.empty()) return v;
    QVec sum(v.size(), Rat(0));
    for (const auto& g : group) sum = qadd(sum, qmatvec(to_rat(g), v));
    return qscale(Rat(1, static_cast<long long>(group.size())), sum);
}

IVec flat(const CoinvariantElement& e) { return e.free; }

}  // namespace rootfold
