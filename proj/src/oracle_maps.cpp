#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tutte/oracle.hpp"

namespace tutte {
namespace oracle {

namespace {

// fixed-point-free involutions on {0..2m-1}: the edge pairings
std::vector<std::vector<int>> involutions(int half_edges) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(half_edges, -1);
    std::function<void(int)> rec = [&](int first) {
        while (first < half_edges && cur[first] >= 0) ++first;
        if (first == half_edges) {
            out.push_back(cur);
            return;
        }
        for (int other = first + 1; other < half_edges; ++other) {
            if (cur[other] >= 0) continue;
            cur[first] = other;
            cur[other] = first;
            rec(first + 1);
            cur[first] = -1;
            cur[other] = -1;
        }
    };
    rec(0);
    return out;
}

int cycle_count(const std::vector<int>& perm) {
    int n = (int)perm.size(), cycles = 0;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int v = s; !seen[v]; v = perm[v]) seen[v] = 1;
    }
    return cycles;
}

bool transitive(const std::vector<int>& sigma, const std::vector<int>& alpha) {
    int n = (int)sigma.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int w : {sigma[h], alpha[h]})
            if (!seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
    }
    return found == n;
}

} // namespace

MapCounts enum_rooted_maps(int m_max, EnumMode mode) {
    if (m_max > 4) throw SizeLimit("rotation-system enumeration capped at m = 4");
    MapCounts mc;
    mc.m_max = m_max;
    for (int m = 1; m <= m_max; ++m) {
        int H = 2 * m;
        auto alphas = involutions(H);
        int nthreads = 1;
#ifdef _OPENMP
        if (mode == EnumMode::Parallel) nthreads = omp_get_max_threads();
#endif
        std::vector<std::map<std::pair<int, int>, long long>> rooted_loc(nthreads),
            pointed_loc(nthreads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) \
    if (mode == EnumMode::Parallel)
#endif
        for (int ai = 0; ai < (int)alphas.size(); ++ai) {
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            const auto& alpha = alphas[ai];
            std::vector<int> sigma(H);
            std::iota(sigma.begin(), sigma.end(), 0);
            // iterate all maps sigma: h -> sigma[h] as arbitrary permutations
            do {
                if (!transitive(sigma, alpha)) continue;
                int V = cycle_count(sigma);
                std::vector<int> sa(H);
                for (int h = 0; h < H; ++h) sa[h] = sigma[alpha[h]];
                int F = cycle_count(sa);
                // total face degree is always 2m; genus 0 means V - m + F = 2
                if (V - m + F != 2) continue;
                rooted_loc[tid][{V - 1, m}] += H; // any half-edge roots
                pointed_loc[tid][{V - 1, m}] += V;
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
        for (int tThread = 0; tThread < nthreads; ++tThread) {
            for (const auto& [k, c] : rooted_loc[tThread]) mc.rooted[k] += c;
            for (const auto& [k, c] : pointed_loc[tThread]) mc.pointed[k] += c;
        }
    }
    return mc;
}

namespace {

BiSeries series_from_counts(const std::map<std::pair<int, int>, long long>& raw,
                            Trunc t) {
    BiSeries s(t);
    for (const auto& [k, c] : raw) {
        auto [n, m] = k;
        if (n > t.nx || 2 * m > t.ny) continue;
        s.set_coeff(n, 2 * m, Rat(Int((long)c)) / Rat(factorial(2 * m)));
    }
    return s;
}

} // namespace

BiSeries rooted_map_series(const MapCounts& mc, Trunc t) {
    return series_from_counts(mc.rooted, t);
}

BiSeries pointed_map_series(const MapCounts& mc, Trunc t) {
    return series_from_counts(mc.pointed, t);
}

CensusReport dissymmetry_census(const std::vector<Multigraph>& gs) {
    CensusReport rep;
    for (const auto& g : gs) {
        ++rep.graphs;
        BvTree bt = block_tree(g);
        ++rep.trees_checked;
        if (bt.node_count() - bt.edge_count() != 1) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = "Bv-tree census off on a graph with n=" +
                                    std::to_string(g.n);
            continue;
        }
        ConnClass cc = connectivity_class(g);
        if ((cc == ConnClass::TwoConnected || cc == ConnClass::ThreeConnected) &&
            g.edge_count() >= 3) {
            RmtTree rt = rmt_tree(g);
            ++rep.trees_checked;
            if ((long long)rt.bricks.size() - (long long)rt.links.size() != 1) {
                ++rep.failures;
                if (rep.first_failure.empty())
                    rep.first_failure = "RMT-tree census off on a graph with n=" +
                                        std::to_string(g.n);
            }
        }
    }
    return rep;
}

} // namespace oracle
} // namespace tutte
