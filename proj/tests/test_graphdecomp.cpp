#include <doctest.h>

#include <map>
#include <set>

#include "test_util.hpp"
#include "tutte/graphdecomp.hpp"

using namespace tutte;
using tutte_test::complete_graph;
using tutte_test::theta_graph;

namespace {

int count_type(const RmtTree& t, BrickType ty) {
    int c = 0;
    for (const auto& b : t.bricks) c += b.type == ty;
    return c;
}

bool label_equal(const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n) return false;
    auto key = [](const Multigraph& g) {
        std::multiset<std::pair<int, int>> k;
        for (const auto& e : g.edges) k.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
        return k;
    };
    return key(a) == key(b);
}

} // namespace

TEST_CASE("connectivity classes") {
    CHECK(connectivity_class(complete_graph(4)) == ConnClass::ThreeConnected);
    CHECK(connectivity_class(Multigraph::make(2, {{1, 2}})) == ConnClass::TwoConnected);
    CHECK(connectivity_class(Multigraph::make(3, {{1, 2}, {2, 3}})) ==
          ConnClass::Connected);
    CHECK(connectivity_class(Multigraph::make(1, {})) == ConnClass::Connected);
    CHECK(connectivity_class(Multigraph::make(3, {{1, 2}})) == ConnClass::Disconnected);
    CHECK(connectivity_class(Multigraph::make(2, {{1, 2}, {1, 2}})) ==
          ConnClass::TwoConnected);
    // a double edge is never 3-connected, K5 is
    CHECK(connectivity_class(complete_graph(5)) == ConnClass::ThreeConnected);
    CHECK(connectivity_class(theta_graph()) == ConnClass::TwoConnected);
    CHECK_THROWS_AS(connectivity_class(Multigraph::make(0, {})), EmptyGraph);
}

TEST_CASE("block trees") {
    // two triangles sharing vertex 1
    Multigraph g = Multigraph::make(
        5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
    BvTree t = block_tree(g);
    CHECK(t.blocks.size() == 2);
    CHECK(t.node_count() == 7);
    CHECK(t.edge_count() == 6);
    // the Bv incidence structure of a connected graph is a tree
    CHECK(t.edge_count() == t.node_count() - 1);

    BvTree tri = block_tree(Multigraph::make(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK(tri.blocks.size() == 1);
    CHECK(tri.node_count() == 4);

    BvTree path = block_tree(Multigraph::make(3, {{1, 2}, {2, 3}}));
    CHECK(path.blocks.size() == 2);
    CHECK(path.node_count() == 5);
    CHECK(path.edge_count() == 4);

    CHECK(block_tree(Multigraph::make(1, {})).blocks.empty());
    CHECK_THROWS_AS(block_tree(Multigraph::make(3, {{1, 2}})), NotConnected);
}

TEST_CASE("block invariants on random connected graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = tutte_test::random_two_connected(rng, 8);
        // thin it out so cutvertices appear, keeping connectivity
        while (g.edges.size() > 4 &&
               connectivity_class(g) != ConnClass::Connected) {
            Multigraph h = g;
            h.edges.erase(h.edges.begin() + (long)(rng() % h.edges.size()));
            if (connectivity_class(h) == ConnClass::Disconnected) break;
            g = h;
        }
        BvTree t = block_tree(g);
        size_t covered = 0;
        for (const auto& b : t.blocks) covered += b.size();
        CHECK(covered == g.edges.size()); // every edge in exactly one block
        // blocks pairwise intersect in at most one vertex
        std::map<int, const Multigraph::Edge*> by_label;
        for (const auto& e : g.edges) by_label[e.label] = &e;
        std::vector<std::set<int>> vsets;
        for (const auto& b : t.blocks) {
            std::set<int> vs;
            for (int lab : b) {
                vs.insert(by_label[lab]->u);
                vs.insert(by_label[lab]->v);
            }
            vsets.push_back(std::move(vs));
        }
        for (size_t i = 0; i < vsets.size(); ++i)
            for (size_t j = i + 1; j < vsets.size(); ++j) {
                int common = 0;
                for (int v : vsets[i]) common += vsets[j].count(v);
                CHECK(common <= 1);
            }
        CHECK(t.edge_count() == t.node_count() - 1);
    }
}

TEST_CASE("connected modulo a vertex pair") {
    Multigraph theta = theta_graph();
    // poles of the theta: three branches, splittable
    CHECK_FALSE(connected_modulo(theta, 1, 2));
    // adjacent vertices are never connected modulo their pair
    CHECK_FALSE(connected_modulo(theta, 1, 3));
    // two branch midpoints: one class, connected modulo
    CHECK(connected_modulo(theta, 3, 4));
    // brute force agrees on random small multigraphs
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = tutte_test::random_two_connected(rng, 6);
        if (g.edge_count() > 12) continue;
        for (int u = 1; u <= g.n; ++u)
            for (int v = u + 1; v <= g.n; ++v)
                CHECK(connected_modulo(g, u, v) ==
                      connected_modulo_bruteforce(g, u, v));
    }
}

TEST_CASE("rmt trees of the named examples") {
    RmtTree tri = rmt_tree(Multigraph::make(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK(tri.bricks.size() == 1);
    CHECK(tri.bricks[0].type == BrickType::R);
    CHECK(tri.bricks[0].virtual_labels.empty());

    RmtTree th = rmt_tree(theta_graph());
    CHECK(th.bricks.size() == 4);
    CHECK(count_type(th, BrickType::M) == 1);
    CHECK(count_type(th, BrickType::R) == 3);
    CHECK(th.links.size() == 3);
    for (const auto& b : th.bricks)
        if (b.type == BrickType::M) CHECK(b.virtual_labels.size() == 3);

    RmtTree k4 = rmt_tree(complete_graph(4));
    CHECK(k4.bricks.size() == 1);
    CHECK(k4.bricks[0].type == BrickType::T);

    CHECK_THROWS_AS(rmt_tree(Multigraph::make(3, {{1, 2}, {2, 3}})),
                    NotTwoConnected);
    CHECK_THROWS_AS(rmt_tree(Multigraph::make(2, {{1, 2}, {1, 2}})), TooFewEdges);
}

TEST_CASE("restricted rmt trees") {
    Multigraph th = theta_graph();
    RestrictedRmtTree at_mid = restricted_rmt_tree(th, 3);
    CHECK(at_mid.tree.bricks.size() == 1);
    CHECK(at_mid.tree.bricks[0].type == BrickType::R);

    RestrictedRmtTree at_pole = restricted_rmt_tree(th, 1);
    CHECK(at_pole.tree.bricks.size() == 4);
    CHECK(at_pole.tree.links.size() == 3);

    RestrictedRmtTree k4 = restricted_rmt_tree(complete_graph(4), 2);
    CHECK(k4.tree.bricks.size() == 1);

    CHECK_THROWS_AS(restricted_rmt_tree(th, 9), UnknownVertex);
}

TEST_CASE("recompose inverts the decomposition") {
    for (Multigraph g : {Multigraph::make(3, {{1, 2}, {2, 3}, {3, 1}}),
                         theta_graph(), complete_graph(4), complete_graph(5)}) {
        CHECK(label_equal(recompose(rmt_tree(g)), g));
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Multigraph g = tutte_test::random_two_connected(rng, 9);
        CHECK(label_equal(recompose(rmt_tree(g)), g));
    }
}

TEST_CASE("invalid trees are rejected") {
    // two R-triangles glued along a virtual edge: forbidden adjacency
    Brick r1{BrickType::R,
             {{1, 2, 1}, {2, 3, 2}, {1, 3, -1}},
             {-1}};
    Brick r2{BrickType::R,
             {{1, 3, -1}, {1, 4, 3}, {4, 3, 4}},
             {-1}};
    RmtTree rr{{r1, r2}, {{0, 1, -1}}};
    CHECK_THROWS_AS(recompose(rr), InvalidTree);

    // dangling virtual edge
    Brick dangling{BrickType::R, {{1, 2, 1}, {2, 3, 2}, {1, 3, -7}}, {-7}};
    RmtTree dt{{dangling}, {}};
    CHECK_THROWS_AS(recompose(dt), InvalidTree);

    // mismatched endpoints across a link
    Brick m1{BrickType::R, {{1, 2, 1}, {2, 3, 2}, {1, 3, -1}}, {-1}};
    Brick m2{BrickType::T,
             {{1, 2, -1}, {1, 3, 3}, {1, 4, 4}, {2, 3, 5}, {2, 4, 6}, {3, 4, 7}},
             {-1}};
    RmtTree mm{{m1, m2}, {{0, 1, -1}}};
    CHECK_THROWS_AS(recompose(mm), InvalidTree);
}

TEST_CASE("split order does not matter") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = tutte_test::random_two_connected(rng, 9);
        std::string canon = rmt_signature(rmt_tree(g));
        for (uint64_t seed = 1; seed <= 3; ++seed)
            CHECK(rmt_signature(rmt_tree(g, SplitOrder::random(seed))) == canon);
    }
}
