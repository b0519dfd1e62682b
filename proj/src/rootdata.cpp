#include "rootfold/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace rootfold {

Isogeny parse_isogeny(const std::string& s) {
    if (s == "sc" || s == "simply_connected") return Isogeny::SimplyConnected;
    if (s == "adj" || s == "adjoint") return Isogeny::Adjoint;
    if (s == "gl" || s == "general_linear") return Isogeny::GeneralLinear;
    throw InputError("unknown isogeny '" + s + "' (expected sc, adj or gl)");
}

std::string isogeny_name(Isogeny iso) {
    switch (iso) {
        case Isogeny::SimplyConnected: return "sc";
        case Isogeny::Adjoint: return "adj";
        case Isogeny::GeneralLinear: return "gl";
    }
    return "?";
}

int RootDatum::find_root(const IVec& r) const {
    auto it = root_index.find(r);
    return it == root_index.end() ? -1 : it->second;
}

IMat RootDatum::cartan() const {
    IMat c(semisimple_rank, IVec(semisimple_rank));
    for (int i = 0; i < semisimple_rank; ++i)
        for (int j = 0; j < semisimple_rank; ++j) c[i][j] = dot(roots[i], coroots[j]);
    return c;
}

IVec RootDatum::reflect(int k, const IVec& x) const {
    std::int64_t p = dot(x, coroots[k]);
    if (p == 0) return x;
    return vsub(x, vscale(p, roots[k]));
}

IVec RootDatum::coreflect(int k, const IVec& y) const {
    std::int64_t p = dot(roots[k], y);
    if (p == 0) return y;
    return vsub(y, vscale(p, coroots[k]));
}

IMat RootDatum::reflection_matrix(int k) const {
    IMat m = identity_matrix(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = checked::sub(m[i][j], checked::mul(roots[k][i], coroots[k][j]));
    return m;
}

bool RootDatum::is_dominant(const IVec& x) const {
    for (int i = 0; i < semisimple_rank; ++i)
        if (dot(x, coroots[i]) < 0) return false;
    return true;
}

IVec RootDatum::two_rho() const {
    IVec s(rank, 0);
    for (int k = 0; k < num_positive; ++k) s = vadd(s, roots[k]);
    return s;
}

IVec RootDatum::two_rho_check() const {
    IVec s(rank, 0);
    for (int k = 0; k < num_positive; ++k) s = vadd(s, coroots[k]);
    return s;
}

RootDatum make_datum(const std::string& label, int rank, const std::vector<IVec>& simple_roots,
                     const std::vector<IVec>& simple_coroots) {
    const int r = static_cast<int>(simple_roots.size());
    if (static_cast<int>(simple_coroots.size()) != r) throw InputError("simple roots and coroots differ in number");
    for (int i = 0; i < r; ++i)
        if (static_cast<int>(simple_roots[i].size()) != rank || static_cast<int>(simple_coroots[i].size()) != rank)
            throw InputError("root vector has wrong dimension");
    if (r > 0) {
        if (qrank(to_rat(simple_roots)) != r) throw InputError("simple roots are linearly dependent");
        if (qrank(to_rat(simple_coroots)) != r) throw InputError("simple coroots are linearly dependent");
    }
    IMat c(r, IVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c[i][j] = dot(simple_roots[i], simple_coroots[j]);
    classify_cartan(c);  // validates finite type

    struct Rec {
        IVec root, coroot, coeff;
    };
    std::vector<Rec> all;
    std::unordered_map<IVec, int, VecHash> seen;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        seen.emplace(simple_roots[i], static_cast<int>(all.size()));
        all.push_back({simple_roots[i], simple_coroots[i], e});
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
        for (int j = 0; j < r; ++j) {
            Rec cur = all[k];
            std::int64_t p = dot(cur.root, simple_coroots[j]);
            std::int64_t q = dot(simple_roots[j], cur.coroot);
            Rec next{vsub(cur.root, vscale(p, simple_roots[j])), vsub(cur.coroot, vscale(q, simple_coroots[j])),
                     cur.coeff};
            next.coeff[j] = checked::sub(next.coeff[j], p);
            auto it = seen.find(next.root);
            if (it != seen.end()) {
                if (all[it->second].coroot != next.coroot) throw InputError("root/coroot bijection is inconsistent");
                continue;
            }
            seen.emplace(next.root, static_cast<int>(all.size()));
            all.push_back(std::move(next));
            if (all.size() > 20000) throw ResourceError("root system too large");
        }
    }
    std::vector<Rec> pos, neg;
    for (auto& rec : all) {
        bool nonneg = std::all_of(rec.coeff.begin(), rec.coeff.end(), [](std::int64_t v) { return v >= 0; });
        bool nonpos = std::all_of(rec.coeff.begin(), rec.coeff.end(), [](std::int64_t v) { return v <= 0; });
        if (nonneg)
            pos.push_back(rec);
        else if (nonpos)
            neg.push_back(rec);
        else
            throw InputError("root with mixed-sign coefficients; not a based root system");
    }
    auto height = [](const IVec& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
    std::sort(pos.begin(), pos.end(), [&](const Rec& a, const Rec& b) {
        auto ha = height(a.coeff), hb = height(b.coeff);
        if (ha != hb) return ha < hb;
        return a.coeff > b.coeff;  // simple roots in index order at height one
    });
    if (pos.size() != neg.size()) throw InputError("positive and negative roots do not match");

    RootDatum d;
    d.label = label;
    d.rank = rank;
    d.semisimple_rank = r;
    d.num_positive = static_cast<int>(pos.size());
    for (auto& p : pos) {
        d.roots.push_back(p.root);
        d.coroots.push_back(p.coroot);
        d.coefficients.push_back(p.coeff);
    }
    for (auto& p : pos) {
        d.roots.push_back(vneg(p.root));
        d.coroots.push_back(vneg(p.coroot));
        d.coefficients.push_back(vneg(p.coeff));
    }
    for (int k = 0; k < d.num_roots(); ++k) {
        if (!d.root_index.emplace(d.roots[k], k).second) throw InputError("duplicate root");
    }
    for (int k = 0; k < d.num_roots(); ++k)
        if (d.find_root(vscale(2, d.roots[k])) >= 0) throw InputError("root system is not reduced");

    // Left inverse of the simple-root matrix for coordinate extraction.
    if (r > 0) {
        QMat a(rank, QVec(r));  // columns = simple roots
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < r; ++j) a[i][j] = simple_roots[j][i];
        QMat at = qtranspose(a);
        auto inv = qinverse(qmatmul(at, a));
        if (!inv) throw InputError("simple roots are linearly dependent");
        d.simple_coordinate_solver = qmatmul(*inv, at);
    }
    return d;
}

std::vector<std::pair<char, int>> parse_cartan_type(const std::string& s) {
    std::vector<std::pair<char, int>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        if (c == 'X' || c == '*' || c == ' ' || c == '+') {
            ++i;
            continue;
        }
        if (c < 'A' || c > 'G') throw InputError("bad Cartan type '" + s + "'");
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw InputError("bad Cartan type '" + s + "'");
        int n = std::stoi(s.substr(i, j - i));
        bool ok = (c == 'A' && n >= 1) || (c == 'B' && n >= 2) || (c == 'C' && n >= 2) || (c == 'D' && n >= 3) ||
                  (c == 'E' && n >= 6 && n <= 8) || (c == 'F' && n == 4) || (c == 'G' && n == 2);
        if (!ok) throw InputError("unsupported Cartan type '" + s + "'");
        if (c == 'D' && n == 3) {
            c = 'A';  // D3 = A3
        }
        out.emplace_back(c, n);
        i = j;
    }
    if (out.empty()) throw InputError("empty Cartan type");
    return out;
}

namespace {

// Gram matrix of the simple roots for one irreducible type, Bourbaki numbering.
IMat simple_gram(char c, int n) {
    IMat b(n, IVec(n, 0));
    auto link = [&](int i, int j, std::int64_t v) { b[i][j] = b[j][i] = v; };
    switch (c) {
        case 'A':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            b[n - 1][n - 1] = 1;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'C':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            b[n - 1][n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case 'D':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case 'E':
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'F':
            b[0][0] = b[1][1] = 4;
            b[2][2] = b[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case 'G':
            b[0][0] = 2;
            b[1][1] = 6;
            link(0, 1, -3);
            break;
        default: throw InputError("unknown type letter");
    }
    return b;
}

}  // namespace

IMat cartan_matrix_of_type(const std::string& s) {
    auto parts = parse_cartan_type(s);
    int total = 0;
    for (auto& p : parts) total += p.second;
    IMat c(total, IVec(total, 0));
    int off = 0;
    for (auto& [letter, n] : parts) {
        IMat b = simple_gram(letter, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[off + i][off + j] = 2 * b[i][j] / b[j][j];
        off += n;
    }
    return c;
}

RootDatum build_datum(const std::string& type, Isogeny iso) {
    auto parts = parse_cartan_type(type);
    IMat c = cartan_matrix_of_type(type);
    const int r = static_cast<int>(c.size());
    std::vector<IVec> roots, coroots;
    std::string label;
    for (auto& [letter, n] : parts) {
        if (!label.empty()) label += "x";
        label += std::string(1, letter) + std::to_string(n);
    }
    label += "(" + isogeny_name(iso) + ")";
    if (iso == Isogeny::SimplyConnected) {
        for (int j = 0; j < r; ++j) {
            IVec a(r), ac(r, 0);
            for (int i = 0; i < r; ++i) a[i] = c[j][i];
            ac[j] = 1;
            roots.push_back(a);
            coroots.push_back(ac);
        }
        return make_datum(label, r, roots, coroots);
    }
    if (iso == Isogeny::Adjoint) {
        for (int j = 0; j < r; ++j) {
            IVec a(r, 0), ac(r);
            a[j] = 1;
            for (int i = 0; i < r; ++i) ac[i] = c[i][j];
            roots.push_back(a);
            coroots.push_back(ac);
        }
        return make_datum(label, r, roots, coroots);
    }
    // General linear: each A_n factor becomes Z^{n+1} with roots e_i - e_{i+1}.
    int dim = 0;
    for (auto& [letter, n] : parts) {
        if (letter != 'A') throw InputError("the gl lattice is only available for type A factors");
        dim += n + 1;
    }
    int off = 0;
    for (auto& [letter, n] : parts) {
        for (int i = 0; i < n; ++i) {
            IVec a(dim, 0);
            a[off + i] = 1;
            a[off + i + 1] = -1;
            roots.push_back(a);
            coroots.push_back(a);
        }
        off += n + 1;
    }
    return make_datum(label, dim, roots, coroots);
}

RootDatum dual_datum(const RootDatum& d) {
    std::vector<IVec> sr, sc;
    for (int i = 0; i < d.semisimple_rank; ++i) {
        sr.push_back(d.coroots[i]);
        sc.push_back(d.roots[i]);
    }
    std::string label = d.label;
    if (label.size() > 5 && label.compare(label.size() - 5, 5, "^dual") == 0)
        label = label.substr(0, label.size() - 5);
    else
        label += "^dual";
    return make_datum(label, d.rank, sr, sc);
}

std::vector<std::vector<int>> diagram_components(const IMat& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && (cartan[nodes[k]][j] != 0 || cartan[j][nodes[k]] != 0)) {
                    comp[j] = comp[s];
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(nodes);
    }
    return out;
}

namespace {

DiagramComponent classify_component(const IMat& c, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    DiagramComponent comp;
    comp.rank = n;
    if (n == 1) {
        comp.letter = 'A';
        comp.nodes = nodes;
        return comp;
    }
    std::map<int, std::vector<int>> adj;
    int edges = 0, doubles = 0, triples = 0;
    std::pair<int, int> double_edge{-1, -1};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int i = nodes[a], j = nodes[b];
            if (c[i][j] == 0) continue;
            std::int64_t m = c[i][j] * c[j][i];
            if (m < 1 || m > 3) throw InputError("Cartan matrix is not of finite type");
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
            if (m == 2) {
                ++doubles;
                double_edge = {i, j};
            }
            if (m == 3) ++triples;
        }
    if (edges != n - 1) throw InputError("Dynkin diagram is not a tree; not of finite type");
    auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
    // Traverse a path component from one of its ends.
    auto walk = [&](int start, int) {
        std::vector<int> path{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        return path;
    };
    // short(i, j): in a multiple edge i-j, is j the shorter root?
    auto j_shorter = [&](int i, int j) { return std::abs(c[i][j]) > std::abs(c[j][i]); };

    if (triples) {
        if (n != 2) throw InputError("Cartan matrix is not of finite type");
        comp.letter = 'G';
        int a = nodes[0], b = nodes[1];
        comp.nodes = j_shorter(a, b) ? std::vector<int>{b, a} : std::vector<int>{a, b};
        return comp;
    }
    int max_deg = 0;
    for (int v : nodes) max_deg = std::max(max_deg, deg(v));
    if (doubles > 1) throw InputError("Cartan matrix is not of finite type");
    if (doubles == 1) {
        if (max_deg > 2) throw InputError("Cartan matrix is not of finite type");
        auto [i, j] = double_edge;
        bool i_end = deg(i) == 1, j_end = deg(j) == 1;
        if (n == 2) {
            // Later node short -> B2, later node long -> C2.
            int first = std::min(i, j), second = std::max(i, j);
            comp.letter = j_shorter(first, second) ? 'B' : 'C';
            comp.nodes = {first, second};
            return comp;
        }
        if (!i_end && !j_end) {
            if (n != 4) throw InputError("Cartan matrix is not of finite type");
            comp.letter = 'F';
            // Order from the long end.
            int long_mid = j_shorter(i, j) ? i : j;
            int short_mid = long_mid == i ? j : i;
            int long_end = -1, short_end = -1;
            for (int w : adj[long_mid])
                if (w != short_mid) long_end = w;
            for (int w : adj[short_mid])
                if (w != long_mid) short_end = w;
            comp.nodes = {long_end, long_mid, short_mid, short_end};
            return comp;
        }
        int end = i_end ? i : j;
        int other = end == i ? j : i;
        bool end_short = j_shorter(other, end);
        comp.letter = end_short ? 'B' : 'C';
        // Path from the far end to `end`.
        int far = -1;
        for (int v : nodes)
            if (deg(v) == 1 && v != end) far = v;
        auto path = walk(far, -1);
        comp.nodes = path;
        if (comp.nodes.back() != end) throw InputError("unexpected diagram shape");
        return comp;
    }
    if (max_deg <= 2) {
        comp.letter = 'A';
        int start = -1;
        for (int v : nodes)
            if (deg(v) == 1) {
                start = v;
                break;  // smallest index end
            }
        comp.nodes = walk(start, -1);
        return comp;
    }
    // Simply laced with one branch point.
    int center = -1, branches = 0;
    for (int v : nodes)
        if (deg(v) >= 3) {
            center = v;
            ++branches;
        }
    if (branches != 1 || deg(center) != 3) throw InputError("Cartan matrix is not of finite type");
    std::vector<std::vector<int>> legs;
    for (int w : adj[center]) {
        std::vector<int> leg{w};
        int prev = center, cur = w;
        while (deg(cur) == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            leg.push_back(next);
            prev = cur;
            cur = next;
        }
        legs.push_back(leg);
    }
    std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    std::size_t l0 = legs[0].size(), l1 = legs[1].size(), l2 = legs[2].size();
    if (l0 == 1 && l1 == 1) {
        comp.letter = 'D';
        std::vector<int> order(legs[2].rbegin(), legs[2].rend());
        order.push_back(center);
        order.push_back(legs[0][0]);
        order.push_back(legs[1][0]);
        comp.nodes = order;
        return comp;
    }
    if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
        comp.letter = 'E';
        std::vector<int> order{legs[1][1], legs[0][0], legs[1][0], center};
        for (int v : legs[2]) order.push_back(v);
        comp.nodes = order;
        return comp;
    }
    throw InputError("Cartan matrix is not of finite type");
}

}  // namespace

Classification classify_cartan(const IMat& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c[i].size()) != n) throw InputError("Cartan matrix is not square");
        if (c[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c[i][j] > 0) throw InputError("Cartan matrix has a positive off-diagonal entry");
            if ((c[i][j] == 0) != (c[j][i] == 0)) throw InputError("Cartan matrix zero pattern is not symmetric");
        }
    }
    Classification out;
    for (auto& nodes : diagram_components(c)) out.components.push_back(classify_component(c, nodes));
    std::stable_sort(out.components.begin(), out.components.end(), [](const auto& a, const auto& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.letter < b.letter;
    });
    if (out.components.empty()) {
        out.type = "0";
        return out;
    }
    for (std::size_t k = 0; k < out.components.size(); ++k) {
        if (k) out.type += "x";
        out.type += out.components[k].name();
    }
    return out;
}

DominantReduction dominant_representative(const RootDatum& d, const IVec& x) {
    DominantReduction r{x, {}};
    for (;;) {
        int bad = -1;
        for (int i = 0; i < d.semisimple_rank; ++i)
            if (dot(r.dominant, d.coroots[i]) < 0) {
                bad = i;
                break;
            }
        if (bad < 0) return r;
        r.dominant = d.reflect(bad, r.dominant);
        r.word.push_back(bad);
        if (r.word.size() > 100000) throw ResourceError("dominant reduction did not terminate");
    }
}

std::vector<IVec> weyl_orbit(const RootDatum& d, const IVec& x, std::size_t cap) {
    std::unordered_set<IVec, VecHash> seen{x};
    std::vector<IVec> out{x};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < d.semisimple_rank; ++i) {
            IVec y = d.reflect(i, out[k]);
            if (seen.insert(y).second) {
                out.push_back(y);
                if (out.size() > cap) throw ResourceError("Weyl orbit exceeds cap");
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t weyl_group_order(const RootDatum& d) {
    // W acts simply transitively on the orbit of a regular element.
    return weyl_orbit(d, d.two_rho()).size();
}

IMat longest_element_matrix(const RootDatum& d) {
    auto red = dominant_representative(d, vneg(d.two_rho()));
    IMat m = identity_matrix(d.rank);
    for (int i : red.word) m = matmul(d.reflection_matrix(i), m);
    return m;
}

std::optional<QVec> simple_root_coordinates(const RootDatum& d, const IVec& x) {
    if (d.semisimple_rank == 0) {
        if (is_zero(x)) return QVec{};
        return std::nullopt;
    }
    QVec c = qmatvec(d.simple_coordinate_solver, to_rat(x));
    QVec back(d.rank, Rat(0));
    for (int i = 0; i < d.semisimple_rank; ++i)
        for (int k = 0; k < d.rank; ++k) back[k] += c[i] * d.roots[i][k];
    if (back != to_rat(x)) return std::nullopt;
    return c;
}

bool dominance_leq(const RootDatum& d, const IVec& nu, const IVec& mu) {
    auto c = simple_root_coordinates(d, vsub(mu, nu));
    if (!c) return false;
    for (const auto& v : *c)
        if (v < 0 || boost::multiprecision::denominator(v) != 1) return false;
    return true;
}

std::vector<IVec> dominant_weights_below(const RootDatum& d, const IVec& mu) {
    if (!d.is_dominant(mu)) throw InputError("weight " + to_string(mu) + " is not dominant");
    // Every dominant weight strictly below a dominant weight lambda is below
    // lambda - alpha for some positive root alpha with lambda - alpha dominant.
    std::set<IVec> seen{mu};
    std::vector<IVec> queue{mu};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int a = 0; a < d.num_positive; ++a) {
            IVec y = vsub(queue[k], d.roots[a]);
            if (!d.is_dominant(y)) continue;
            if (seen.insert(y).second) {
                queue.push_back(y);
                if (queue.size() > 1000000) throw ResourceError("too many dominant weights");
            }
        }
    return {seen.begin(), seen.end()};
}

std::vector<IVec> weight_set(const RootDatum& d, const IVec& mu) {
    std::set<IVec> out;
    for (const auto& lam : dominant_weights_below(d, mu))
        for (auto& w : weyl_orbit(d, lam)) out.insert(w);
    return {out.begin(), out.end()};
}

QMat invariant_form(const RootDatum& d) {
    QMat g(d.rank, QVec(d.rank, Rat(0)));
    auto comps = diagram_components(d.cartan());
    for (const auto& nodes : comps) {
        std::set<int> in(nodes.begin(), nodes.end());
        QMat gc(d.rank, QVec(d.rank, Rat(0)));
        std::vector<int> members;
        for (int k = 0; k < d.num_positive; ++k) {
            int support = -1;
            for (int i = 0; i < d.semisimple_rank; ++i)
                if (d.coefficients[k][i] != 0) {
                    support = i;
                    break;
                }
            if (!in.count(support)) continue;
            members.push_back(k);
            for (int i = 0; i < d.rank; ++i)
                for (int j = 0; j < d.rank; ++j) gc[i][j] += Rat(d.coroots[k][i] * d.coroots[k][j]);
        }
        Rat shortest = -1;
        for (int k : members) {
            QVec a = to_rat(d.roots[k]);
            Rat len = qdot(a, qmatvec(gc, a));
            if (shortest < 0 || len < shortest) shortest = len;
        }
        Rat scale = Rat(2) / shortest;
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) g[i][j] += scale * gc[i][j];
    }
    return g;
}

bool DatumAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < permutation.size(); ++i)
        if (permutation[i] != static_cast<int>(i)) return false;
    return on_lattice == identity_matrix(static_cast<int>(on_lattice.size()));
}

DatumAutomorphism identity_automorphism(const RootDatum& d) {
    DatumAutomorphism a;
    a.permutation.resize(d.semisimple_rank);
    std::iota(a.permutation.begin(), a.permutation.end(), 0);
    a.on_lattice = identity_matrix(d.rank);
    a.on_dual = identity_matrix(d.rank);
    return a;
}

namespace {

void validate_automorphism(const RootDatum& d, const DatumAutomorphism& a) {
    for (int i = 0; i < d.semisimple_rank; ++i) {
        int j = a.permutation[i];
        if (matvec(a.on_lattice, d.roots[i]) != d.roots[j])
            throw InputError("automorphism does not map simple roots to simple roots");
        if (matvec(a.on_dual, d.coroots[i]) != d.coroots[j])
            throw InputError("automorphism does not map simple coroots to simple coroots");
    }
    if (matmul(transpose(a.on_dual), a.on_lattice) != identity_matrix(d.rank))
        throw InputError("automorphism does not preserve the pairing");
}

}  // namespace

DatumAutomorphism automorphism_from_permutation(const RootDatum& d, const std::vector<int>& perm) {
    const int r = d.semisimple_rank;
    if (static_cast<int>(perm.size()) != r) throw InputError("permutation has wrong length");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < r; ++i)
        if (sorted[i] != i) throw InputError("not a permutation of the simple roots");
    IMat c = d.cartan();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (c[perm[i]][perm[j]] != c[i][j]) throw InputError("permutation is not a diagram automorphism");

    DatumAutomorphism a;
    a.permutation = perm;
    bool trivial = true;
    for (int i = 0; i < r; ++i) trivial = trivial && perm[i] == i;
    if (trivial) return identity_automorphism(d);

    if (d.is_semisimple()) {
        QMat src(d.rank, QVec(r)), dst(d.rank, QVec(r));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < r; ++j) {
                src[i][j] = d.roots[j][i];
                dst[i][j] = d.roots[perm[j]][i];
            }
        auto inv = qinverse(src);
        QMat g = qmatmul(dst, *inv);
        a.on_lattice.assign(d.rank, IVec(d.rank));
        for (int i = 0; i < d.rank; ++i) {
            auto row = to_integral(g[i]);
            if (!row) throw InputError("diagram automorphism does not preserve the lattice");
            a.on_lattice[i] = *row;
        }
    } else {
        // Only the opposition involution has a canonical lift: -w0.
        IMat w0 = longest_element_matrix(d);
        IMat minus_w0 = w0;
        for (auto& row : minus_w0)
            for (auto& x : row) x = -x;
        for (int i = 0; i < r; ++i)
            if (matvec(minus_w0, d.roots[i]) != d.roots[perm[i]])
                throw InputError(
                    "lattice is not semisimple; give this automorphism as an explicit matrix on the coroot lattice");
        a.on_lattice = minus_w0;
    }
    a.on_dual = transpose(unimodular_inverse(a.on_lattice));
    validate_automorphism(d, a);
    return a;
}

DatumAutomorphism automorphism_from_dual_matrix(const RootDatum& d, const IMat& on_dual) {
    if (static_cast<int>(on_dual.size()) != d.rank) throw InputError("automorphism matrix has wrong size");
    DatumAutomorphism a;
    a.on_dual = on_dual;
    a.on_lattice = transpose(unimodular_inverse(on_dual));
    a.permutation.resize(d.semisimple_rank);
    for (int i = 0; i < d.semisimple_rank; ++i) {
        IVec img = matvec(a.on_lattice, d.roots[i]);
        int k = d.find_root(img);
        if (k < 0 || k >= d.semisimple_rank) throw InputError("matrix does not preserve the simple roots");
        a.permutation[i] = k;
    }
    validate_automorphism(d, a);
    return a;
}

DatumAutomorphism compose(const DatumAutomorphism& a, const DatumAutomorphism& b) {
    DatumAutomorphism c;
    c.permutation.resize(a.permutation.size());
    for (std::size_t i = 0; i < a.permutation.size(); ++i) c.permutation[i] = a.permutation[b.permutation[i]];
    c.on_lattice = matmul(a.on_lattice, b.on_lattice);
    c.on_dual = matmul(a.on_dual, b.on_dual);
    return c;
}

DatumAutomorphism inverse(const DatumAutomorphism& a) {
    DatumAutomorphism c;
    c.permutation.resize(a.permutation.size());
    for (std::size_t i = 0; i < a.permutation.size(); ++i) c.permutation[a.permutation[i]] = static_cast<int>(i);
    c.on_lattice = unimodular_inverse(a.on_lattice);
    c.on_dual = unimodular_inverse(a.on_dual);
    return c;
}

DatumAutomorphism dual_automorphism(const DatumAutomorphism& a) {
    return {a.permutation, a.on_dual, a.on_lattice};
}

std::vector<DatumAutomorphism> generate_group(const RootDatum& d, const std::vector<DatumAutomorphism>& gens,
                                              std::size_t cap) {
    std::vector<DatumAutomorphism> out{identity_automorphism(d)};
    std::set<IMat> seen{out[0].on_lattice};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& g : gens) {
            DatumAutomorphism h = compose(g, out[k]);
            if (seen.insert(h.on_lattice).second) {
                out.push_back(h);
                if (out.size() > cap) throw ResourceError("automorphism group exceeds cap");
            }
        }
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const IMat& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<std::vector<int>> out;
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(p);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = cartan[v][v] == cartan[i][i];
            for (int j = 0; j < i && ok; ++j) ok = cartan[v][p[j]] == cartan[i][j] && cartan[p[j]][v] == cartan[j][i];
            if (!ok) continue;
            used[v] = true;
            p[i] = v;
            rec(i + 1);
            used[v] = false;
        }
        p[i] = -1;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rootfold
