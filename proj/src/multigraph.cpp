#include "tutte/multigraph.hpp"

#include <fstream>
#include <set>

namespace tutte {

Multigraph Multigraph::make(int n, const std::vector<std::pair<int, int>>& es) {
    Multigraph g;
    g.n = n;
    int label = 1;
    for (auto [u, v] : es) g.edges.push_back({u, v, label++});
    g.validate();
    return g;
}

void Multigraph::validate() const {
    if (n < 0) throw InvalidGraph("negative vertex count");
    std::set<int> labels;
    for (const auto& e : edges) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw InvalidGraph("edge endpoint out of range");
        if (e.u == e.v) throw InvalidGraph("loops are not allowed");
        if (!labels.insert(e.label).second)
            throw InvalidGraph("duplicate edge label " + std::to_string(e.label));
    }
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
    for (int i = 0; i < (int)edges.size(); ++i) {
        adj[edges[i].u].push_back({edges[i].v, i});
        adj[edges[i].v].push_back({edges[i].u, i});
    }
    return adj;
}

nlohmann::json graph_to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v});
    return {{"n", g.n}, {"edges", edges}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges"))
        es.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Multigraph::make(j.at("n").get<int>(), es);
}

Multigraph read_graph_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("cannot open graph file: " + p.string());
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

} // namespace tutte
