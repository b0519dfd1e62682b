#pragma once

// Explicit-matrix model of sl3 with the pinned outer automorphism
// X -> -J X^T J^{-1}, J = antidiag(1, -1, 1). Used as an oracle for twining
// characters of the adjoint representation.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sl3_oracle {

using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

inline Mat3 unit(int i, int j) {
    Mat3 m{};
    m[i][j] = 1;
    return m;
}

inline Mat3 outer(const Mat3& x) {
    // J e_k = s_k e_{2-k}; J^{-1} = J since s_k = +-1 and J^2 = 1.
    const std::array<std::int64_t, 3> s{1, -1, 1};
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            // (J X^T J^{-1})_{ij} = s_i X_{2-j, 2-i} s_j
            out[i][j] = -s[i] * x[2 - j][2 - i] * s[j];
    return out;
}

// Basis of sl3: E_ij (i != j) with weight e_i - e_j, then H1 = E_11 - E_22 and
// H2 = E_22 - E_33 with weight 0. Weights are given as (a, b) with
// weight = a (e1 - e2) + b (e2 - e3).
struct Basis {
    std::vector<Mat3> vectors;
    std::vector<std::pair<int, int>> weights;
};

inline Basis basis() {
    Basis b;
    auto root = [](int i, int j) {
        // e_i - e_j in simple-root coordinates.
        int a = 0, c = 0;
        auto add = [&](int k, int sign) {
            if (k == 0) a += sign;
            if (k == 1) {
                a -= sign;
                c += sign;
            }
            if (k == 2) c -= sign;
        };
        add(i, 1);
        add(j, -1);
        return std::make_pair(a, c);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) {
                b.vectors.push_back(unit(i, j));
                b.weights.push_back(root(i, j));
            }
    Mat3 h1{}, h2{};
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    b.vectors.push_back(h1);
    b.vectors.push_back(h2);
    b.weights.push_back({0, 0});
    b.weights.push_back({0, 0});
    return b;
}

// Coordinates of a traceless matrix in the basis above.
inline std::vector<std::int64_t> coordinates(const Mat3& m) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) c.push_back(m[i][j]);
    // diag(d0, d1, d2) with d0 + d1 + d2 = 0 equals d0 H1 + (d0 + d1) H2.
    c.push_back(m[0][0]);
    c.push_back(m[0][0] + m[1][1]);
    return c;
}

// Weight (in simple-root coordinates) -> trace of the automorphism on the
// weight space, for every fixed weight, normalized to act by 1 on the highest
// root vector E_13.
inline std::map<std::pair<int, int>, std::int64_t> fixed_weight_traces() {
    const Basis b = basis();
    const int n = static_cast<int>(b.vectors.size());
    std::map<std::pair<int, int>, std::int64_t> traces;
    std::map<std::pair<int, int>, bool> moved;
    std::int64_t top_scale = 0;
    for (int k = 0; k < n; ++k) {
        auto image = coordinates(outer(b.vectors[k]));
        // Diagonal entry of the matrix of the automorphism.
        traces[b.weights[k]] += image[k];
        for (int l = 0; l < n; ++l)
            if (image[l] != 0 && b.weights[l] != b.weights[k]) moved[b.weights[k]] = true;
        if (b.weights[k] == std::make_pair(1, 1)) top_scale = image[k];
    }
    std::map<std::pair<int, int>, std::int64_t> out;
    for (const auto& [w, t] : traces)
        if (!moved[w]) out[w] = t * top_scale;  // top_scale is +-1
    return out;
}

}  // namespace sl3_oracle
