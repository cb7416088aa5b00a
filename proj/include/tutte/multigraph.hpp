#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "tutte/errors.hpp"

namespace tutte {

// Labelled loopless multigraph. Vertices are 1..n; parallel edges are
// allowed, loops are not. Edge labels are distinct integers (decompositions
// introduce fresh negative labels for virtual edges).
struct Multigraph {
    struct Edge {
        int u = 0, v = 0;
        int label = 0;
    };

    int n = 0;
    std::vector<Edge> edges;

    // Edges labelled by position, 1-based.
    static Multigraph make(int n, const std::vector<std::pair<int, int>>& es);

    int edge_count() const { return (int)edges.size(); }
    bool has_vertex(int v) const { return v >= 1 && v <= n; }
    void validate() const;

    // neighbours as (other endpoint, edge index) per vertex, 1-based outer index
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);
Multigraph read_graph_file(const std::filesystem::path& p);

} // namespace tutte
