#pragma once

#include <filesystem>

#include "tutte/biseries.hpp"
#include "tutte/counttable.hpp"
#include "tutte/series_system.hpp"

namespace tutte {

// Terminal data of a 3-connected-stable family: the 3-connected counting
// series G3(x,w), its vertex-pointed and edge-rooted forms, and whether the
// family allows multiple edges.
struct FamilyTerminals {
    BiSeries g3;         // G3(x,w)
    BiSeries g3_pointed; // G3'(x,w) = d/dx G3
    BiSeries g3_rooted;  // ->G3(x,w) = (2/x^2) d/dw G3
    bool simple = true;  // no-multi-edges variant of the system

    static FamilyTerminals zero(Trunc t, bool simple); // series-parallel style
    void validate() const;
};

struct NetworkBundle {
    BiSeries D, S, P, H; // networks in (x,y)
};

// Networks: D = y + S + P + H with S = (D-S) x D, P a set of non-parallel
// components (variant per the simple flag) and H = ->G3(x, D).
NetworkBundle network_system(const FamilyTerminals& t, Trunc trunc);

// Unrooted 2-connected series via the dissymmetry combination over RMT-trees.
BiSeries two_connected_series(const FamilyTerminals& t, const NetworkBundle& nets,
                              Trunc trunc);
// Vertex-pointed 2-connected series via the restricted-RMT combination.
BiSeries pointed_two_connected_series(const FamilyTerminals& t,
                                      const NetworkBundle& nets, Trunc trunc);

struct ConnectedBundle {
    BiSeries G1;        // connected series in (z,y)
    BiSeries C_pointed; // C'(z,y), the vertex-pointed connected series
};

// Connected level: C' = exp(G2'(z C', y)) solved by fixed point, then
// G1 = C_v + C_B - C_vB.
ConnectedBundle connected_series(const BiSeries& G2, const BiSeries& G2_pointed,
                                 Trunc trunc);

BiSeries all_graphs_series(const BiSeries& G1);

// Everything at once, for the CLI and the verification suites.
struct GrammarOutput {
    FamilyTerminals terminals;
    NetworkBundle nets;
    BiSeries G2, G2_pointed;
    ConnectedBundle conn;
    BiSeries G;
};

GrammarOutput run_grammar(const FamilyTerminals& t, Trunc trunc);

// Built-in test families at the G2 level (forest = link-graph blocks only).
struct ForestPreset {
    BiSeries G2, G2_pointed;
};
ForestPreset forest_preset(Trunc trunc);

// Terminal directory layout: g3.json, g3_pointed.json, g3_rooted.json,
// meta.json {"simple": bool}.
FamilyTerminals read_terminals_dir(const std::filesystem::path& dir);
void write_terminals_dir(const std::filesystem::path& dir, const FamilyTerminals& t);

} // namespace tutte
