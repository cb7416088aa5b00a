#include "tutte/graphdecomp.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tutte {

namespace {

// Union-find over a small vertex range.
struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n + 1) {
        for (int i = 0; i <= n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> vertex_list(const std::vector<Multigraph::Edge>& edges) {
    std::set<int> vs;
    for (const auto& e : edges) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return {vs.begin(), vs.end()};
}

// Dense copy of an edge list, preserving edge order and labels.
Multigraph densify(const std::vector<Multigraph::Edge>& edges,
                   std::map<int, int>* vertex_map_out = nullptr) {
    std::map<int, int> vm;
    for (int v : vertex_list(edges)) vm.emplace(v, (int)vm.size() + 1);
    Multigraph g;
    g.n = (int)vm.size();
    for (const auto& e : edges) g.edges.push_back({vm[e.u], vm[e.v], e.label});
    if (vertex_map_out) *vertex_map_out = vm;
    return g;
}

using Adjacency = std::vector<std::vector<std::pair<int, int>>>;

bool connected_avoiding(const Adjacency& adj, int n, const std::vector<char>& removed) {
    int start = 0;
    int alive = 0;
    for (int v = 1; v <= n; ++v)
        if (!removed[v]) {
            ++alive;
            if (!start) start = v;
        }
    if (alive == 0) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, ei] : adj[u])
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
    }
    return found == alive;
}

bool is_connected(const Multigraph& g) {
    if (g.n == 0) return false;
    std::vector<char> removed(g.n + 1, 0);
    return connected_avoiding(g.adjacency(), g.n, removed);
}

bool has_parallel_edges(const Multigraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges)
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            return true;
    return false;
}

bool vertex_deletion_two_connected(const Multigraph& g) {
    if (g.n < 2 || !is_connected(g)) return false;
    Adjacency adj = g.adjacency();
    std::vector<char> removed(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        removed[v] = 1;
        bool ok = connected_avoiding(adj, g.n, removed);
        removed[v] = 0;
        if (!ok) return false;
    }
    return true;
}

bool edge_list_two_connected(const std::vector<Multigraph::Edge>& edges) {
    if (edges.empty()) return false;
    return vertex_deletion_two_connected(densify(edges));
}

// Edge classes around the pair {u,v}: each u-v edge is its own class, all
// other edges are grouped by the component of the graph minus {u,v} they
// touch. Classes share no vertex besides u and v.
struct PairClasses {
    std::vector<std::vector<int>> members; // edge indices per class
    std::vector<char> has_u, has_v;
};

PairClasses pair_classes(const std::vector<Multigraph::Edge>& edges, int u, int v) {
    int maxv = 0;
    for (const auto& e : edges) maxv = std::max({maxv, e.u, e.v});
    DSU dsu(maxv);
    for (const auto& e : edges) {
        if (e.u == u || e.u == v || e.v == u || e.v == v) continue;
        dsu.unite(e.u, e.v);
    }
    std::map<int, int> class_of_root;
    PairClasses pc;
    auto new_class = [&]() {
        pc.members.emplace_back();
        pc.has_u.push_back(0);
        pc.has_v.push_back(0);
        return (int)pc.members.size() - 1;
    };
    for (int i = 0; i < (int)edges.size(); ++i) {
        const auto& e = edges[i];
        bool tu = e.u == u || e.v == u, tv = e.u == v || e.v == v;
        int ci;
        if (tu && tv) {
            ci = new_class(); // direct u-v edge
        } else {
            int other = (e.u == u || e.u == v) ? e.v : e.u;
            int root = dsu.find(other);
            auto it = class_of_root.find(root);
            ci = it == class_of_root.end()
                     ? class_of_root.emplace(root, new_class()).first->second
                     : it->second;
        }
        pc.members[ci].push_back(i);
        pc.has_u[ci] |= tu;
        pc.has_v[ci] |= tv;
    }
    return pc;
}

} // namespace

const char* conn_class_name(ConnClass c) {
    switch (c) {
    case ConnClass::Disconnected: return "disconnected";
    case ConnClass::Connected: return "connected";
    case ConnClass::TwoConnected: return "two_connected";
    case ConnClass::ThreeConnected: return "three_connected";
    }
    return "?";
}

ConnClass connectivity_class(const Multigraph& g) {
    if (g.n == 0) throw EmptyGraph("connectivity_class on empty graph");
    if (!is_connected(g)) return ConnClass::Disconnected;
    if (!vertex_deletion_two_connected(g)) return ConnClass::Connected;
    if (g.n < 4 || has_parallel_edges(g)) return ConnClass::TwoConnected;
    Adjacency adj = g.adjacency();
    std::vector<char> removed(g.n + 1, 0);
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b) {
            removed[a] = removed[b] = 1;
            bool ok = connected_avoiding(adj, g.n, removed);
            removed[a] = removed[b] = 0;
            if (!ok) return ConnClass::TwoConnected;
        }
    return ConnClass::ThreeConnected;
}

BvTree block_tree(const Multigraph& g) {
    if (g.n == 0) throw EmptyGraph("block_tree on empty graph");
    if (!is_connected(g)) throw NotConnected("block_tree needs a connected graph");

    BvTree t;
    t.n_vertices = g.n;
    auto adj = g.adjacency();
    std::vector<int> disc(g.n + 1, 0), low(g.n + 1, 0);
    std::vector<int> edge_stack;
    int timer = 0;

    // iterative DFS to keep deep graphs safe
    struct Frame {
        int u, parent_edge;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    auto emit_block = [&](int until_edge) {
        std::vector<int> labels;
        while (true) {
            int ei = edge_stack.back();
            edge_stack.pop_back();
            labels.push_back(g.edges[ei].label);
            if (ei == until_edge) break;
        }
        std::sort(labels.begin(), labels.end());
        t.blocks.push_back(std::move(labels));
    };

    for (int root = 1; root <= g.n; ++root) {
        if (disc[root]) continue;
        stack.push_back({root, -1});
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.u].size()) {
                auto [w, ei] = adj[f.u][f.next++];
                if (ei == f.parent_edge) continue;
                if (!disc[w]) {
                    edge_stack.push_back(ei);
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, ei});
                } else if (disc[w] < disc[f.u]) {
                    edge_stack.push_back(ei);
                    low[f.u] = std::min(low[f.u], disc[w]);
                }
            } else {
                int child = f.u, pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().u;
                    low[u] = std::min(low[u], low[child]);
                    if (low[child] >= disc[u]) emit_block(pe);
                }
            }
        }
    }

    // incidences from block vertex sets
    std::map<int, const Multigraph::Edge*> by_label;
    for (const auto& e : g.edges) by_label[e.label] = &e;
    for (int b = 0; b < (int)t.blocks.size(); ++b) {
        std::set<int> vs;
        for (int lab : t.blocks[b]) {
            vs.insert(by_label[lab]->u);
            vs.insert(by_label[lab]->v);
        }
        for (int v : vs) t.incidences.push_back({b, v});
    }
    return t;
}

bool connected_modulo(const Multigraph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
        throw UnknownVertex("connected_modulo needs two distinct vertices of g");
    PairClasses pc = pair_classes(g.edges, u, v);
    int k = (int)pc.members.size();
    if (k < 2) return true;
    if (k > 25) throw SizeLimit("too many edge classes");
    // A violating partition assigns whole classes to two sides, both sides
    // containing u and v.
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        bool au = false, av = false, bu = false, bv = false;
        for (int c = 0; c < k; ++c) {
            if (mask >> c & 1) {
                au |= pc.has_u[c];
                av |= pc.has_v[c];
            } else {
                bu |= pc.has_u[c];
                bv |= pc.has_v[c];
            }
        }
        if (au && av && bu && bv) return false;
    }
    return true;
}

bool connected_modulo_bruteforce(const Multigraph& g, int u, int v) {
    int m = g.edge_count();
    if (m > 20) throw SizeLimit("brute-force connected_modulo capped at 20 edges");
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
        std::set<int> va, vb, inter;
        for (int i = 0; i < m; ++i) {
            auto& e = g.edges[i];
            auto& side = (mask >> i & 1) ? va : vb;
            side.insert(e.u);
            side.insert(e.v);
        }
        for (int x : va)
            if (vb.count(x)) inter.insert(x);
        if (inter == std::set<int>{u, v}) return false;
    }
    return true;
}

// ---- RMT decomposition ----

std::vector<int> Brick::vertex_set() const { return vertex_list(edges); }

bool Brick::has_vertex(int v) const {
    for (const auto& e : edges)
        if (e.u == v || e.v == v) return true;
    return false;
}

bool Brick::is_virtual(int label) const {
    return std::find(virtual_labels.begin(), virtual_labels.end(), label) !=
           virtual_labels.end();
}

namespace {

BrickType classify_brick(const std::vector<Multigraph::Edge>& edges) {
    auto vs = vertex_list(edges);
    if (vs.size() == 2) {
        if (edges.size() < 3)
            throw InvalidTree("multi-edge brick needs >= 3 parallel edges");
        return BrickType::M;
    }
    Multigraph dense = densify(edges);
    // ring: simple cycle, every vertex of degree 2
    if (dense.edge_count() == dense.n && dense.n >= 3 && !has_parallel_edges(dense)) {
        std::vector<int> deg(dense.n + 1, 0);
        for (const auto& e : dense.edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        bool ring = is_connected(dense);
        for (int v = 1; v <= dense.n && ring; ++v) ring = deg[v] == 2;
        if (ring) return BrickType::R;
    }
    if (connectivity_class(dense) != ConnClass::ThreeConnected)
        throw InvalidTree("brick is neither ring, multi-edge nor 3-connected");
    return BrickType::T;
}

struct Candidate {
    int brick;
    int u, v;
    std::vector<int> e1; // edge indices within the brick
    int min_e2_label;
};

// Split candidates of a 2-connected brick: E1 is a single edge class with at
// least 2 edges (every class of a 2-connected graph touches both u and v, so
// any union of two or more classes fails "connected modulo"), and E2 is the
// rest, which is automatically 2-connected when it consists of >= 2 classes.
std::vector<Candidate> brick_candidates(const Brick& b, int brick_idx) {
    std::vector<Candidate> out;
    auto vs = vertex_list(b.edges);
    for (size_t a = 0; a < vs.size(); ++a) {
        for (size_t c = a + 1; c < vs.size(); ++c) {
            int u = vs[a], v = vs[c];
            PairClasses pc = pair_classes(b.edges, u, v);
            int k = (int)pc.members.size();
            if (k < 2) continue;
            for (int ci = 0; ci < k; ++ci)
                if (!pc.has_u[ci] || !pc.has_v[ci])
                    throw Error("internal: partial edge class in 2-connected brick");
            for (int ci = 0; ci < k; ++ci) {
                if (pc.members[ci].size() < 2) continue;
                if (k == 2) {
                    int other = 1 - ci;
                    std::vector<Multigraph::Edge> e2;
                    for (int i : pc.members[other]) e2.push_back(b.edges[i]);
                    if (e2.size() < 2 || !edge_list_two_connected(e2)) continue;
                }
                Candidate cand;
                cand.brick = brick_idx;
                cand.u = u;
                cand.v = v;
                cand.e1 = pc.members[ci];
                cand.min_e2_label = INT32_MAX;
                std::set<int> in_e1(cand.e1.begin(), cand.e1.end());
                for (int i = 0; i < (int)b.edges.size(); ++i)
                    if (!in_e1.count(i))
                        cand.min_e2_label = std::min(cand.min_e2_label, b.edges[i].label);
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

} // namespace

RmtTree rmt_tree(const Multigraph& g, SplitOrder order) {
    g.validate();
    ConnClass cc = connectivity_class(g);
    if (cc != ConnClass::TwoConnected && cc != ConnClass::ThreeConnected)
        throw NotTwoConnected("rmt_tree needs a 2-connected graph");
    if (g.edge_count() < 3)
        throw TooFewEdges("rmt_tree needs at least 3 edges");

    RmtTree t;
    Brick whole;
    whole.edges = g.edges;
    t.bricks.push_back(std::move(whole));

    std::mt19937_64 rng(order.seed);
    int next_virtual = -1;

    while (true) {
        std::vector<Candidate> all;
        for (int bi = 0; bi < (int)t.bricks.size(); ++bi) {
            auto cs = brick_candidates(t.bricks[bi], bi);
            all.insert(all.end(), cs.begin(), cs.end());
            if (order.mode == SplitOrder::Mode::Canonical && !all.empty()) break;
        }
        if (all.empty()) break;

        Candidate* chosen;
        if (order.mode == SplitOrder::Mode::Canonical) {
            chosen = &*std::min_element(all.begin(), all.end(),
                                        [](const Candidate& a, const Candidate& b) {
                                            return std::tie(a.u, a.v, a.min_e2_label) <
                                                   std::tie(b.u, b.v, b.min_e2_label);
                                        });
        } else {
            chosen = &all[rng() % all.size()];
        }

        int bi = chosen->brick;
        Brick old = std::move(t.bricks[bi]);
        int vid = next_virtual--;
        std::set<int> in_e1(chosen->e1.begin(), chosen->e1.end());
        Brick b1, b2;
        for (int i = 0; i < (int)old.edges.size(); ++i) {
            Brick& dst = in_e1.count(i) ? b1 : b2;
            dst.edges.push_back(old.edges[i]);
            if (old.is_virtual(old.edges[i].label))
                dst.virtual_labels.push_back(old.edges[i].label);
        }
        Multigraph::Edge ve{chosen->u, chosen->v, vid};
        b1.edges.push_back(ve);
        b1.virtual_labels.push_back(vid);
        b2.edges.push_back(ve);
        b2.virtual_labels.push_back(vid);

        int ni = (int)t.bricks.size();
        for (auto& link : t.links) {
            if (link.brick_a == bi && b2.is_virtual(link.label) &&
                !b1.is_virtual(link.label))
                link.brick_a = ni;
            if (link.brick_b == bi && b2.is_virtual(link.label) &&
                !b1.is_virtual(link.label))
                link.brick_b = ni;
        }
        t.bricks[bi] = std::move(b1);
        t.bricks.push_back(std::move(b2));
        t.links.push_back({bi, ni, vid});
    }

    for (auto& b : t.bricks) b.type = classify_brick(b.edges);

    // tripwires for facts the decomposition relies on
    if ((int)t.links.size() != (int)t.bricks.size() - 1)
        throw Error("internal: RMT link graph is not a tree");
    for (const auto& link : t.links) {
        BrickType a = t.bricks[link.brick_a].type, b = t.bricks[link.brick_b].type;
        if ((a == BrickType::R && b == BrickType::R) ||
            (a == BrickType::M && b == BrickType::M))
            throw Error("internal: forbidden R-R or M-M adjacency");
    }
    return t;
}

RestrictedRmtTree restricted_rmt_tree(const Multigraph& g, int v, SplitOrder order) {
    if (!g.has_vertex(v)) throw UnknownVertex("pointed vertex not in graph");
    RmtTree full = rmt_tree(g, order);
    RestrictedRmtTree r;
    r.pointed_vertex = v;
    std::vector<int> remap(full.bricks.size(), -1);
    for (int bi = 0; bi < (int)full.bricks.size(); ++bi)
        if (full.bricks[bi].has_vertex(v)) {
            remap[bi] = (int)r.tree.bricks.size();
            r.tree.bricks.push_back(full.bricks[bi]);
        }
    for (const auto& link : full.links)
        if (remap[link.brick_a] >= 0 && remap[link.brick_b] >= 0)
            r.tree.links.push_back(
                {remap[link.brick_a], remap[link.brick_b], link.label});
    // the restriction of a tree that stays connected is a tree
    if ((int)r.tree.links.size() != (int)r.tree.bricks.size() - 1)
        throw Error("internal: restricted RMT-tree is not a tree");
    return r;
}

Multigraph recompose(const RmtTree& t) {
    if (t.bricks.empty()) throw InvalidTree("empty brick list");

    // virtual labels appear in exactly two bricks, at the same vertex pair
    std::map<int, std::vector<std::pair<int, std::pair<int, int>>>> vmatch;
    std::set<int> real_labels;
    for (int bi = 0; bi < (int)t.bricks.size(); ++bi) {
        const Brick& b = t.bricks[bi];
        std::set<int> labels;
        for (const auto& e : b.edges) {
            if (!labels.insert(e.label).second)
                throw InvalidTree("duplicate label inside a brick");
            if (b.is_virtual(e.label))
                vmatch[e.label].push_back(
                    {bi, {std::min(e.u, e.v), std::max(e.u, e.v)}});
            else if (!real_labels.insert(e.label).second)
                throw InvalidTree("real edge label in two bricks");
        }
        for (int lab : b.virtual_labels)
            if (!labels.count(lab))
                throw InvalidTree("declared virtual label missing from brick");
        if (classify_brick(b.edges) != b.type)
            throw InvalidTree("brick type does not match its graph");
    }
    for (const auto& [lab, occ] : vmatch) {
        if (occ.size() != 2)
            throw InvalidTree("dangling virtual edge " + std::to_string(lab));
        if (occ[0].first == occ[1].first)
            throw InvalidTree("virtual edge matched within one brick");
        if (occ[0].second != occ[1].second)
            throw InvalidTree("matched virtual edges join different vertex pairs");
    }
    if (vmatch.size() != t.links.size())
        throw InvalidTree("link list does not match virtual labels");
    for (const auto& link : t.links) {
        auto it = vmatch.find(link.label);
        if (it == vmatch.end()) throw InvalidTree("link with unknown virtual label");
        std::set<int> got{it->second[0].first, it->second[1].first};
        if (got != std::set<int>{link.brick_a, link.brick_b})
            throw InvalidTree("link endpoints disagree with brick contents");
        BrickType a = t.bricks[link.brick_a].type, b = t.bricks[link.brick_b].type;
        if ((a == BrickType::R && b == BrickType::R) ||
            (a == BrickType::M && b == BrickType::M))
            throw InvalidTree("forbidden R-R or M-M adjacency");
    }

    // tree shape on bricks
    if (t.links.size() != t.bricks.size() - 1)
        throw InvalidTree("link graph is not a tree (edge count)");
    DSU dsu((int)t.bricks.size());
    for (const auto& link : t.links) {
        if (dsu.find(link.brick_a + 1) == dsu.find(link.brick_b + 1))
            throw InvalidTree("link graph has a cycle");
        dsu.unite(link.brick_a + 1, link.brick_b + 1);
    }

    Multigraph g;
    for (const auto& b : t.bricks)
        for (const auto& e : b.edges) {
            if (b.is_virtual(e.label)) continue;
            g.edges.push_back(e);
            g.n = std::max({g.n, e.u, e.v});
        }
    std::vector<char> present(g.n + 1, 0);
    for (const auto& e : g.edges) present[e.u] = present[e.v] = 1;
    for (int v = 1; v <= g.n; ++v)
        if (!present[v]) throw InvalidTree("vertex labels not dense after gluing");
    g.validate();
    ConnClass cc = connectivity_class(g);
    if (cc != ConnClass::TwoConnected && cc != ConnClass::ThreeConnected)
        throw InvalidTree("recomposed graph is not 2-connected");
    return g;
}

std::string rmt_signature(const RmtTree& t) {
    auto brick_sig = [&](const Brick& b) {
        std::ostringstream os;
        os << (b.type == BrickType::R ? 'R' : b.type == BrickType::M ? 'M' : 'T');
        os << " v[";
        for (int v : b.vertex_set()) os << v << ' ';
        os << "] r[";
        std::vector<int> real;
        std::vector<std::pair<int, int>> virt;
        for (const auto& e : b.edges)
            if (b.is_virtual(e.label))
                virt.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
            else
                real.push_back(e.label);
        std::sort(real.begin(), real.end());
        std::sort(virt.begin(), virt.end());
        for (int lab : real) os << lab << ' ';
        os << "] virt[";
        for (auto [a, b2] : virt) os << a << '-' << b2 << ' ';
        os << ']';
        return os.str();
    };
    std::vector<std::string> bricks;
    for (const auto& b : t.bricks) bricks.push_back(brick_sig(b));
    std::vector<std::string> links;
    for (const auto& link : t.links) {
        const Brick* pa = &t.bricks[link.brick_a];
        const Brick* pb = &t.bricks[link.brick_b];
        std::pair<int, int> vp{0, 0};
        for (const auto& e : pa->edges)
            if (e.label == link.label) vp = {std::min(e.u, e.v), std::max(e.u, e.v)};
        std::string sa = brick_sig(*pa), sb = brick_sig(*pb);
        if (sb < sa) std::swap(sa, sb);
        links.push_back(std::to_string(vp.first) + "-" + std::to_string(vp.second) +
                        " {" + sa + "} {" + sb + "}");
    }
    std::sort(bricks.begin(), bricks.end());
    std::sort(links.begin(), links.end());
    std::ostringstream os;
    for (const auto& s : bricks) os << "B " << s << '\n';
    for (const auto& s : links) os << "L " << s << '\n';
    return os.str();
}

nlohmann::json bv_tree_to_json(const BvTree& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : t.blocks) blocks.push_back(b);
    nlohmann::json inc = nlohmann::json::array();
    for (auto [b, v] : t.incidences) inc.push_back({b, v});
    return {{"n_vertices", t.n_vertices},
            {"blocks", blocks},
            {"incidences", inc},
            {"nodes", t.node_count()},
            {"edges", t.edge_count()}};
}

nlohmann::json rmt_tree_to_json(const RmtTree& t) {
    nlohmann::json bricks = nlohmann::json::array();
    for (const auto& b : t.bricks) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : b.edges)
            edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
        bricks.push_back(
            {{"type", b.type == BrickType::R   ? "R"
                      : b.type == BrickType::M ? "M"
                                               : "T"},
             {"edges", edges},
             {"virtual_labels", b.virtual_labels}});
    }
    nlohmann::json links = nlohmann::json::array();
    for (const auto& link : t.links)
        links.push_back({{"brick_a", link.brick_a},
                         {"brick_b", link.brick_b},
                         {"label", link.label}});
    return {{"bricks", bricks}, {"links", links}};
}

} // namespace tutte
