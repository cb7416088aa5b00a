#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "tutte/biseries.hpp"

namespace tutte {

enum class ConnLevel { All, Connected, TwoConnected, ThreeConnected };

const char* level_name(ConnLevel c);

// Exact labelled counts per (n vertices, m edges). Levels are cumulative:
// the TwoConnected table also contains the 3-connected graphs.
struct CountTable {
    ConnLevel level = ConnLevel::All;
    std::map<std::pair<int, int>, Int> rows; // zero rows omitted

    void add(int n, int m, const Int& c);
    Int get(int n, int m) const;
    Int row_total(int n) const;

    std::string to_csv(const std::string& header_comment = {}) const;
    nlohmann::json to_json() const;
};

enum class Labelling { EdgeLabelled, VertexLabelled };

// count(n,m) = n! m! [x^n y^m] s  (edge-labelled) or n! [x^n y^m] s
// (vertex-labelled; valid for simple families where edges need no labels).
// NonIntegerCount if any scaled coefficient is not a nonnegative integer.
CountTable extract_counts(const BiSeries& s, Labelling convention,
                          ConnLevel level);

struct TableDiff {
    bool ok = true;
    long compared = 0;
    std::string first_mismatch;
};

TableDiff diff_tables(const CountTable& a, const CountTable& b);

} // namespace tutte
