#include "tutte/series_io.hpp"

#include <fstream>

#include "tutte/errors.hpp"

namespace tutte {

nlohmann::json series_to_json(const BiSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({k.first, k.second, rat_to_string(c)});
    return {{"trunc", {s.trunc().nx, s.trunc().ny}}, {"terms", terms}};
}

BiSeries series_from_json(const nlohmann::json& j) {
    Trunc t{j.at("trunc").at(0).get<int>(), j.at("trunc").at(1).get<int>()};
    BiSeries s(t);
    for (const auto& term : j.at("terms")) {
        int i = term.at(0).get<int>(), jj = term.at(1).get<int>();
        Rat c = rat_from_string(term.at(2).get<std::string>());
        if (i > t.nx || jj > t.ny)
            throw InvalidGraph("series term beyond declared truncation");
        s.set_coeff(i, jj, c);
    }
    return s;
}

void atomic_write(const std::filesystem::path& p, const std::string& content) {
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, p);
}

void write_series_file(const std::filesystem::path& p, const BiSeries& s) {
    atomic_write(p, series_to_json(s).dump(2) + "\n");
}

BiSeries read_series_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("cannot open series file: " + p.string());
    nlohmann::json j;
    in >> j;
    return series_from_json(j);
}

} // namespace tutte
