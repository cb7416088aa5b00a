#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tutte/oracle.hpp"

namespace tutte {
namespace oracle {

namespace {

// edge slots for n labelled vertices, lexicographic
std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) ps.push_back({u, v});
    return ps;
}

Multigraph graph_of_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                         unsigned long mask) {
    Multigraph g;
    g.n = n;
    int label = 1;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
            g.edges.push_back({pairs[i].first, pairs[i].second, label++});
    return g;
}

struct LocalTables {
    std::map<std::pair<int, int>, long long> all, conn, two, three;
    void merge_into(FamilyTables& out) const {
        for (const auto& [k, c] : all) out.all.add(k.first, k.second, Int((long)c));
        for (const auto& [k, c] : conn) out.connected.add(k.first, k.second, Int((long)c));
        for (const auto& [k, c] : two) out.two_connected.add(k.first, k.second, Int((long)c));
        for (const auto& [k, c] : three)
            out.three_connected.add(k.first, k.second, Int((long)c));
    }
};

bool series_parallel_member(const Multigraph& g) {
    if (g.edge_count() == 0) return true;
    // every block with >= 3 edges must decompose without T-bricks
    std::vector<char> seen(g.n + 1, 0);
    auto adj = g.adjacency();
    for (int s = 1; s <= g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (auto [w, ei] : adj[comp[qi]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::map<int, int> vm;
        for (int v : comp) vm.emplace(v, (int)vm.size() + 1);
        Multigraph cg;
        cg.n = (int)vm.size();
        for (const auto& e : g.edges)
            if (vm.count(e.u)) cg.edges.push_back({vm[e.u], vm[e.v], e.label});
        if (cg.edge_count() == 0) continue;
        BvTree bt = block_tree(cg);
        std::map<int, const Multigraph::Edge*> by_label;
        for (const auto& e : cg.edges) by_label[e.label] = &e;
        for (const auto& blk : bt.blocks) {
            if (blk.size() < 3) continue;
            std::map<int, int> bm;
            Multigraph bg;
            for (int lab : blk) {
                for (int v : {by_label[lab]->u, by_label[lab]->v})
                    if (!bm.count(v)) bm.emplace(v, (int)bm.size() + 1);
            }
            bg.n = (int)bm.size();
            for (int lab : blk)
                bg.edges.push_back({bm[by_label[lab]->u], bm[by_label[lab]->v], lab});
            for (const auto& brick : rmt_tree(bg).bricks)
                if (brick.type == BrickType::T) return false;
        }
    }
    return true;
}

FamilyTables count_tables(int n_max, EnumMode mode, bool series_parallel) {
    if (n_max > 7) throw SizeLimit("exhaustive enumeration capped at n = 7");
    FamilyTables out;
    out.all.level = ConnLevel::All;
    out.connected.level = ConnLevel::Connected;
    out.two_connected.level = ConnLevel::TwoConnected;
    out.three_connected.level = ConnLevel::ThreeConnected;

    for (int n = 1; n <= n_max; ++n) {
        auto pairs = vertex_pairs(n);
        long long total = 1LL << pairs.size();
        int nthreads = 1;
#ifdef _OPENMP
        if (mode == EnumMode::Parallel) nthreads = omp_get_max_threads();
#endif
        std::vector<LocalTables> locals(nthreads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) num_threads(nthreads) \
    if (mode == EnumMode::Parallel)
#endif
        for (long long mask = 0; mask < total; ++mask) {
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            Multigraph g = graph_of_mask(n, pairs, (unsigned long)mask);
            if (series_parallel) {
                if (!series_parallel_member(g)) continue;
            } else if (!is_planar(g)) {
                continue;
            }
            int m = g.edge_count();
            ConnClass cc = connectivity_class(g);
            LocalTables& lt = locals[tid];
            lt.all[{n, m}]++;
            if (cc == ConnClass::Disconnected) continue;
            lt.conn[{n, m}]++;
            if (cc == ConnClass::Connected) continue;
            lt.two[{n, m}]++;
            if (cc == ConnClass::TwoConnected) continue;
            lt.three[{n, m}]++;
        }
        for (const auto& lt : locals) lt.merge_into(out);
    }
    return out;
}

} // namespace

FamilyTables planar_count_tables(int n_max, EnumMode mode) {
    return count_tables(n_max, mode, false);
}

FamilyTables series_parallel_count_tables(int n_max, EnumMode mode) {
    return count_tables(n_max, mode, true);
}

std::vector<Multigraph> connected_planar_graphs(int n) {
    if (n > 7) throw SizeLimit("exhaustive enumeration capped at n = 7");
    std::vector<Multigraph> out;
    auto pairs = vertex_pairs(n);
    for (long long mask = 0; mask < (1LL << pairs.size()); ++mask) {
        Multigraph g = graph_of_mask(n, pairs, (unsigned long)mask);
        if (!is_planar(g)) continue;
        if (connectivity_class(g) == ConnClass::Disconnected) continue;
        out.push_back(std::move(g));
    }
    return out;
}

CrosscheckReport crosscheck(const FamilyTables& a, const FamilyTables& b) {
    CrosscheckReport rep;
    const std::pair<const CountTable*, const CountTable*> levels[] = {
        {&a.all, &b.all},
        {&a.connected, &b.connected},
        {&a.two_connected, &b.two_connected},
        {&a.three_connected, &b.three_connected}};
    for (auto [ta, tb] : levels) {
        TableDiff d = diff_tables(*ta, *tb);
        rep.compared += d.compared;
        if (!d.ok) {
            rep.ok = false;
            rep.first_mismatch =
                std::string(level_name(ta->level)) + " " + d.first_mismatch;
            return rep;
        }
    }
    return rep;
}

} // namespace oracle
} // namespace tutte
