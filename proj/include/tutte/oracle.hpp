#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tutte/counttable.hpp"
#include "tutte/graphdecomp.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {
namespace oracle {

// Sphere embeddability. Parallel edges are collapsed first (planarity does
// not see them); Demoucron-style incremental face embedding per block with
// the m <= 3n-6 prefilter.
bool is_planar(const Multigraph& g, int size_limit = 16);

// Exhaustive search for a K5 or K3,3 subdivision; independent meta-oracle
// for tiny n (subdivision vertices are scarce there, so the search is cheap).
bool kuratowski_free(const Multigraph& g, int size_limit = 8);

struct FamilyTables {
    CountTable all, connected, two_connected, three_connected;
};

enum class EnumMode { Serial, Parallel };

// Exhaustive labelled simple-graph enumeration, planar family. Levels are
// cumulative; n_max <= 7.
FamilyTables planar_count_tables(int n_max, EnumMode mode = EnumMode::Parallel);

// Same harness filtered to graphs whose blocks decompose without T-bricks.
FamilyTables series_parallel_count_tables(int n_max, EnumMode mode = EnumMode::Parallel);

// Rotation-system map enumeration on 2m labelled half-edges. Raw counts of
// (vertex rotation, edge involution, mark) triples for connected genus-0
// systems, keyed by (n = vertices-1, m edges). Series coefficients follow by
// dividing by (2m)!.
struct MapCounts {
    int m_max = 0;
    std::map<std::pair<int, int>, long long> rooted;  // marked half-edge
    std::map<std::pair<int, int>, long long> pointed; // marked vertex
};

MapCounts enum_rooted_maps(int m_max, EnumMode mode = EnumMode::Parallel);

// (2m)!-normalized series in (x, s) from the raw counts.
BiSeries rooted_map_series(const MapCounts& mc, Trunc t);
BiSeries pointed_map_series(const MapCounts& mc, Trunc t);

// Tree-census identity 1 = #nodes - #edges on Bv-trees (and RMT-trees of the
// 2-connected members with >= 3 edges).
struct CensusReport {
    long graphs = 0;
    long trees_checked = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

CensusReport dissymmetry_census(const std::vector<Multigraph>& gs);

// All connected planar simple graphs with n vertices, as label graphs.
std::vector<Multigraph> connected_planar_graphs(int n);

struct CrosscheckReport {
    bool ok = true;
    long compared = 0;
    std::string first_mismatch; // "level (n,m): a vs b"
};

CrosscheckReport crosscheck(const FamilyTables& grammar_side,
                            const FamilyTables& oracle_side);

} // namespace oracle
} // namespace tutte
