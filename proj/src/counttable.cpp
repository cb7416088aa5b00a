#include "tutte/counttable.hpp"

#include <set>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

const char* level_name(ConnLevel c) {
    switch (c) {
    case ConnLevel::All: return "all";
    case ConnLevel::Connected: return "connected";
    case ConnLevel::TwoConnected: return "two_connected";
    case ConnLevel::ThreeConnected: return "three_connected";
    }
    return "?";
}

void CountTable::add(int n, int m, const Int& c) {
    if (c == 0) return;
    auto& slot = rows[{n, m}];
    slot += c;
    if (slot == 0) rows.erase({n, m});
}

Int CountTable::get(int n, int m) const {
    auto it = rows.find({n, m});
    return it == rows.end() ? Int(0) : it->second;
}

Int CountTable::row_total(int n) const {
    Int t = 0;
    for (const auto& [k, c] : rows)
        if (k.first == n) t += c;
    return t;
}

std::string CountTable::to_csv(const std::string& header_comment) const {
    std::ostringstream os;
    if (!header_comment.empty()) {
        std::istringstream lines(header_comment);
        std::string line;
        while (std::getline(lines, line)) os << "# " << line << "\n";
    }
    os << "n,m,count\n";
    int cur_n = -1;
    for (const auto& [k, c] : rows) {
        if (cur_n >= 0 && k.first != cur_n)
            os << cur_n << ",total," << row_total(cur_n).get_str() << "\n";
        cur_n = k.first;
        os << k.first << "," << k.second << "," << c.get_str() << "\n";
    }
    if (cur_n >= 0) os << cur_n << ",total," << row_total(cur_n).get_str() << "\n";
    return os.str();
}

nlohmann::json CountTable::to_json() const {
    nlohmann::json rows_j = nlohmann::json::array();
    for (const auto& [k, c] : rows)
        rows_j.push_back({k.first, k.second, c.get_str()});
    return {{"level", level_name(level)}, {"rows", rows_j}};
}

CountTable extract_counts(const BiSeries& s, Labelling convention, ConnLevel level) {
    CountTable t;
    t.level = level;
    for (const auto& [k, c] : s.terms()) {
        Rat scaled = c * Rat(factorial(k.first));
        if (convention == Labelling::EdgeLabelled)
            scaled *= Rat(factorial(k.second));
        if (scaled.get_den() != 1 || scaled < 0)
            throw NonIntegerCount("count at (" + std::to_string(k.first) + "," +
                                  std::to_string(k.second) + ") is " +
                                  rat_to_string(scaled));
        t.add(k.first, k.second, scaled.get_num());
    }
    return t;
}

TableDiff diff_tables(const CountTable& a, const CountTable& b) {
    TableDiff d;
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, c] : a.rows) keys.insert(k);
    for (const auto& [k, c] : b.rows) keys.insert(k);
    for (const auto& k : keys) {
        ++d.compared;
        Int ca = a.get(k.first, k.second), cb = b.get(k.first, k.second);
        if (ca != cb) {
            d.ok = false;
            d.first_mismatch = "(" + std::to_string(k.first) + "," +
                               std::to_string(k.second) + "): " + ca.get_str() +
                               " vs " + cb.get_str();
            return d;
        }
    }
    return d;
}

} // namespace tutte
