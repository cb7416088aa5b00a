#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tutte/multigraph.hpp"

namespace tutte {

enum class ConnClass { Disconnected, Connected, TwoConnected, ThreeConnected };

const char* conn_class_name(ConnClass c);

// Strongest applicable label per the edge-partition definitions:
// 2-connected needs >= 2 vertices and no 1-separator; 3-connected needs
// >= 4 vertices, no parallel edges and no 2-separator.
ConnClass connectivity_class(const Multigraph& g);

// ---- Block decomposition (Bv-tree) ----

struct BvTree {
    int n_vertices = 0;
    std::vector<std::vector<int>> blocks;            // edge labels per block
    std::vector<std::pair<int, int>> incidences;      // (block index, vertex)
    long long node_count() const { return n_vertices + (long long)blocks.size(); }
    long long edge_count() const { return (long long)incidences.size(); }
};

BvTree block_tree(const Multigraph& g); // NotConnected if g is not connected

// ---- RMT-tree (Tutte's split decomposition) ----

enum class BrickType { R, M, T };

struct Brick {
    BrickType type;
    // Vertices keep their labels from the original graph; virtual edges carry
    // fresh negative labels shared with the matched brick.
    std::vector<Multigraph::Edge> edges;
    std::vector<int> virtual_labels;

    std::vector<int> vertex_set() const;
    bool has_vertex(int v) const;
    bool is_virtual(int label) const;
};

struct RmtTree {
    struct Link {
        int brick_a = 0, brick_b = 0;
        int label = 0; // shared virtual edge label
    };
    std::vector<Brick> bricks;
    std::vector<Link> links;
};

struct SplitOrder {
    enum class Mode { Canonical, Random };
    Mode mode = Mode::Canonical;
    uint64_t seed = 0;
    static SplitOrder canonical() { return {}; }
    static SplitOrder random(uint64_t seed) { return {Mode::Random, seed}; }
};

// Requires g 2-connected with >= 3 edges. The result is independent of the
// split order; SplitOrder::random exists to test exactly that claim.
RmtTree rmt_tree(const Multigraph& g, SplitOrder order = SplitOrder::canonical());

struct RestrictedRmtTree {
    int pointed_vertex = 0;
    RmtTree tree; // bricks containing the pointed vertex, links between them
};

RestrictedRmtTree restricted_rmt_tree(const Multigraph& g, int v,
                                      SplitOrder order = SplitOrder::canonical());

// Glue bricks along matched virtual edges, then erase them. Validates the
// full RmtTree contract first (matching, tree shape, brick types, no R-R or
// M-M adjacency) and throws InvalidTree on any violation.
Multigraph recompose(const RmtTree& t);

// Order-insensitive fingerprint used by the split-order-independence tests.
std::string rmt_signature(const RmtTree& t);

// "Connected modulo [u,v]": no partition of the edge set into two nonempty
// parts whose induced graphs intersect exactly in {u, v}.
bool connected_modulo(const Multigraph& g, int u, int v);
// Literal definition, exponential in the edge count; test oracle only.
bool connected_modulo_bruteforce(const Multigraph& g, int u, int v);

nlohmann::json bv_tree_to_json(const BvTree& t);
nlohmann::json rmt_tree_to_json(const RmtTree& t);

} // namespace tutte
