#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tutte/oracle.hpp"

namespace tutte {
namespace oracle {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// simple graph as adjacency sets over 1..n
struct Simple {
    int n = 0;
    std::vector<std::set<int>> adj;
    explicit Simple(int n_) : n(n_), adj(n_ + 1) {}
    void add(int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    int degree(int v) const { return (int)adj[v].size(); }
    int edge_count() const {
        int m = 0;
        for (int v = 1; v <= n; ++v) m += degree(v);
        return m / 2;
    }
};

std::vector<std::vector<int>> components(const Simple& g, const std::vector<char>& removed) {
    std::vector<char> seen = removed;
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= g.n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

// Demoucron-Malgrange-Pertuiset on a 2-connected simple graph.
bool demoucron(const Simple& g) {
    int m = g.edge_count();
    if (g.n <= 3) return true;
    if (m > 3 * g.n - 6) return false;

    // initial cycle via DFS: the first back edge (disc[w] < disc[u]) closes a
    // cycle along tree parents
    std::vector<int> parent(g.n + 1, 0), disc(g.n + 1, 0);
    int timer = 0, cu = 0, cv = 0;
    std::function<void(int, int)> dfs = [&](int u, int par) {
        disc[u] = ++timer;
        parent[u] = par;
        for (int w : g.adj[u]) {
            if (cu) return;
            if (!disc[w])
                dfs(w, u);
            else if (w != par && disc[w] < disc[u]) {
                cu = u;
                cv = w;
                return;
            }
        }
    };
    dfs(1, 0);
    if (!cu) return true; // acyclic (cannot happen for 2-connected, m>=n)
    std::vector<int> cycle;
    for (int v = cu; v != cv; v = parent[v]) cycle.push_back(v);
    cycle.push_back(cv);

    std::set<std::pair<int, int>> embedded_edges;
    std::vector<char> in_h(g.n + 1, 0);
    auto embed_edge = [&](int a, int b) {
        embedded_edges.insert({std::min(a, b), std::max(a, b)});
        in_h[a] = in_h[b] = 1;
    };
    for (size_t i = 0; i < cycle.size(); ++i)
        embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    std::vector<std::vector<int>> faces{cycle, cycle};

    while ((int)embedded_edges.size() < m) {
        // fragments: single chords, and components of G - V(H)
        struct Fragment {
            std::vector<int> interior;  // empty for a chord
            std::set<int> attach;
            std::pair<int, int> chord{0, 0};
        };
        std::vector<Fragment> fragments;
        for (int u = 1; u <= g.n; ++u)
            if (in_h[u])
                for (int w : g.adj[u])
                    if (in_h[w] && u < w && !embedded_edges.count({u, w})) {
                        Fragment f;
                        f.attach = {u, w};
                        f.chord = {u, w};
                        fragments.push_back(std::move(f));
                    }
        std::vector<char> removed(in_h.begin(), in_h.end());
        for (const auto& comp : components(g, removed)) {
            Fragment f;
            f.interior = comp;
            for (int u : comp)
                for (int w : g.adj[u])
                    if (in_h[w]) f.attach.insert(w);
            fragments.push_back(std::move(f));
        }
        if (fragments.empty()) return false; // inconsistent; defensive

        // admissible faces per fragment
        std::vector<std::vector<int>> admissible(fragments.size());
        for (size_t fi = 0; fi < fragments.size(); ++fi)
            for (size_t k = 0; k < faces.size(); ++k) {
                std::set<int> fv(faces[k].begin(), faces[k].end());
                bool ok = true;
                for (int a : fragments[fi].attach)
                    if (!fv.count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) admissible[fi].push_back((int)k);
            }
        size_t pick = fragments.size();
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            if (admissible[fi].empty()) return false;
            if (admissible[fi].size() == 1 && pick == fragments.size()) pick = fi;
        }
        if (pick == fragments.size()) pick = 0;
        const Fragment& f = fragments[pick];
        int face_idx = admissible[pick][0];

        // alpha-path between two attachment vertices through the fragment
        std::vector<int> path;
        if (f.interior.empty()) {
            path = {f.chord.first, f.chord.second};
        } else {
            auto it = f.attach.begin();
            int a = *it;
            std::set<int> inside(f.interior.begin(), f.interior.end());
            std::vector<int> prev(g.n + 1, -1);
            std::vector<int> q;
            for (int w : g.adj[a])
                if (inside.count(w) && prev[w] < 0) {
                    prev[w] = a;
                    q.push_back(w);
                }
            int hit = 0;
            for (size_t qi = 0; qi < q.size() && !hit; ++qi) {
                int u = q[qi];
                for (int w : g.adj[u]) {
                    if (in_h[w] && w != a) {
                        hit = w;
                        prev[w] = u;
                        break;
                    }
                    if (inside.count(w) && prev[w] < 0) {
                        prev[w] = u;
                        q.push_back(w);
                    }
                }
            }
            if (!hit) return false; // single attachment; impossible if 2-connected
            for (int v = hit; v != -1 && v != a; v = prev[v]) path.push_back(v);
            path.push_back(a);
            std::reverse(path.begin(), path.end());
        }

        // split the face along the path
        const std::vector<int>& face = faces[face_idx];
        int a = path.front(), b = path.back();
        int pa = -1, pb = -1;
        for (int k = 0; k < (int)face.size(); ++k) {
            if (face[k] == a) pa = k;
            if (face[k] == b) pb = k;
        }
        std::vector<int> arc1, arc2;
        for (int k = pa;; k = (k + 1) % face.size()) {
            arc1.push_back(face[k]);
            if (k == pb) break;
        }
        for (int k = pb;; k = (k + 1) % face.size()) {
            arc2.push_back(face[k]);
            if (k == pa) break;
        }
        std::vector<int> f1 = arc1, f2 = arc2;
        for (int k = (int)path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
        for (int k = 1; k + 1 < (int)path.size(); ++k) f2.push_back(path[k]);
        faces[face_idx] = f1;
        faces.push_back(f2);
        for (size_t k = 0; k + 1 < path.size(); ++k)
            embed_edge(path[k], path[k + 1]);
    }
    return true;
}

Simple collapse_parallel(const Multigraph& g) {
    Simple s(g.n);
    for (const auto& e : g.edges) s.add(e.u, e.v);
    return s;
}

} // namespace

bool is_planar(const Multigraph& g, int size_limit) {
    if (g.n > size_limit) throw SizeLimit("planarity cap exceeded");
    if (g.n <= 4) return true;
    Simple s = collapse_parallel(g);

    // test per block; a graph is planar iff all its blocks are
    std::vector<char> removed(s.n + 1, 0);
    for (const auto& comp : components(s, removed)) {
        if (comp.size() <= 4) continue;
        std::vector<std::pair<int, int>> comp_edges;
        for (int u : comp)
            for (int w : s.adj[u])
                if (u < w) comp_edges.push_back({u, w});
        Multigraph cg;
        std::map<int, int> vm;
        for (int u : comp) vm.emplace(u, (int)vm.size() + 1);
        cg.n = (int)vm.size();
        int label = 1;
        for (auto [u, w] : comp_edges) cg.edges.push_back({vm[u], vm[w], label++});
        if (cg.edge_count() == 0) continue;
        BvTree bt = block_tree(cg);
        std::map<int, const Multigraph::Edge*> by_label;
        for (const auto& e : cg.edges) by_label[e.label] = &e;
        for (const auto& blk : bt.blocks) {
            if (blk.size() < 9) continue; // no Kuratowski subdivision below 9 edges
            std::set<int> vs;
            for (int lab : blk) {
                vs.insert(by_label[lab]->u);
                vs.insert(by_label[lab]->v);
            }
            std::map<int, int> bm;
            for (int v : vs) bm.emplace(v, (int)bm.size() + 1);
            Simple bs((int)bm.size());
            for (int lab : blk) bs.add(bm[by_label[lab]->u], bm[by_label[lab]->v]);
            if (!demoucron(bs)) return false;
        }
    }
    return true;
}

namespace {

// try to connect each required pair of branch vertices by internally
// disjoint paths whose interiors use the spare vertices at most once
bool link_pairs(const Simple& g, const std::vector<std::pair<int, int>>& pairs,
                size_t idx, std::set<int>& used_spares, const std::set<int>& branch) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    if (g.adj[a].count(b))
        if (link_pairs(g, pairs, idx + 1, used_spares, branch)) return true;
    // one interior vertex
    for (int w : g.adj[a]) {
        if (branch.count(w) || used_spares.count(w)) continue;
        if (!g.adj[w].count(b)) continue;
        used_spares.insert(w);
        if (link_pairs(g, pairs, idx + 1, used_spares, branch)) return true;
        used_spares.erase(w);
    }
    // two interior vertices
    for (int w1 : g.adj[a]) {
        if (branch.count(w1) || used_spares.count(w1)) continue;
        for (int w2 : g.adj[w1]) {
            if (w2 == a || branch.count(w2) || used_spares.count(w2)) continue;
            if (!g.adj[w2].count(b)) continue;
            used_spares.insert(w1);
            used_spares.insert(w2);
            if (link_pairs(g, pairs, idx + 1, used_spares, branch)) return true;
            used_spares.erase(w1);
            used_spares.erase(w2);
        }
    }
    return false;
}

bool has_subdivision(const Simple& g, int k_parts, bool bipartite) {
    // choose branch vertices
    std::vector<int> verts;
    for (int v = 1; v <= g.n; ++v) verts.push_back(v);
    int need = bipartite ? 6 : k_parts;
    std::vector<int> choice(need);
    std::vector<int> idx(need);
    std::function<bool(int, int)> choose = [&](int pos, int from) {
        if (pos == need) {
            std::set<int> branch(choice.begin(), choice.end());
            std::vector<std::pair<int, int>> pairs;
            if (bipartite) {
                // split the 6 chosen into two triples, all 10 ways
                for (unsigned mask = 0; mask < 64; ++mask) {
                    if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
                    pairs.clear();
                    for (int i = 0; i < 6; ++i)
                        for (int j = 0; j < 6; ++j)
                            if ((mask >> i & 1) && !(mask >> j & 1))
                                pairs.push_back({choice[i], choice[j]});
                    std::set<int> used;
                    if (link_pairs(g, pairs, 0, used, branch)) return true;
                }
                return false;
            }
            for (int i = 0; i < need; ++i)
                for (int j = i + 1; j < need; ++j)
                    pairs.push_back({choice[i], choice[j]});
            std::set<int> used;
            return link_pairs(g, pairs, 0, used, branch);
        }
        for (int i = from; i < (int)verts.size(); ++i) {
            choice[pos] = verts[i];
            if (choose(pos + 1, i + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

} // namespace

bool kuratowski_free(const Multigraph& g, int size_limit) {
    if (g.n > size_limit) throw SizeLimit("kuratowski meta-oracle cap exceeded");
    Simple s = collapse_parallel(g);
    if (s.edge_count() < 9) return true;
    if (has_subdivision(s, 5, false)) return false;
    if (s.n >= 6 && has_subdivision(s, 6, true)) return false;
    return true;
}

} // namespace oracle
} // namespace tutte
