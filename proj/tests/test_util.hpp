#pragma once

#include <random>

#include "tutte/biseries.hpp"
#include "tutte/multigraph.hpp"

namespace tutte_test {

using tutte::BiSeries;
using tutte::Multigraph;
using tutte::Rat;
using tutte::Trunc;

inline BiSeries random_series(std::mt19937_64& rng, Trunc t, int terms,
                              bool zero_const = false) {
    BiSeries s(t);
    std::uniform_int_distribution<int> di(0, t.nx), dj(0, t.ny);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int k = 0; k < terms; ++k) {
        int i = di(rng), j = dj(rng);
        if (zero_const && i == 0 && j == 0) continue;
        s.set_coeff(i, j, tutte::frac(num(rng), den(rng)));
    }
    if (zero_const) s.set_coeff(0, 0, 0);
    return s;
}

// Hamilton cycle plus random chords/parallels; always 2-connected, >= 3 edges.
inline Multigraph random_two_connected(std::mt19937_64& rng, int max_n = 12) {
    std::uniform_int_distribution<int> dn(2, max_n);
    int n = dn(rng);
    std::vector<std::pair<int, int>> edges;
    if (n == 2) {
        std::uniform_int_distribution<int> dk(3, 6);
        int k = dk(rng);
        for (int i = 0; i < k; ++i) edges.push_back({1, 2});
    } else {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; ++i)
            edges.push_back({perm[i], perm[(i + 1) % n]});
        std::uniform_int_distribution<int> extra(0, 8), dv(1, n);
        int k = extra(rng);
        for (int i = 0; i < k; ++i) {
            int u = dv(rng), v = dv(rng);
            if (u != v) edges.push_back({u, v});
        }
    }
    return Multigraph::make(n, edges);
}

inline Multigraph theta_graph() {
    // poles 1,2; three length-2 paths through 3,4,5
    return Multigraph::make(
        5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}});
}

inline Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Multigraph::make(n, edges);
}

} // namespace tutte_test
