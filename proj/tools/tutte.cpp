// Command-line front end: compute counting series for a graph family,
// extract exact counts, decompose concrete graphs, and run the verification
// suites that compare the equation system against brute-force enumeration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutte/grammar.hpp"
#include "tutte/graphdecomp.hpp"
#include "tutte/oracle.hpp"
#include "tutte/planarmaps.hpp"
#include "tutte/series_io.hpp"

using namespace tutte;

namespace {

struct Config {
    std::string family = "planar";
    int nmax = 6;
    int mmax = -1; // derived from nmax when unset
    bool simple = true;
    std::string out;
    std::string level = "all";

    int effective_mmax() const { return mmax >= 0 ? mmax : std::max(1, 3 * nmax - 6); }

    std::string echo() const {
        std::ostringstream os;
        os << "family=" << family << " nmax=" << nmax
           << " mmax=" << effective_mmax() << " variant="
           << (simple ? "simple" : "multi");
        return os.str();
    }
    nlohmann::json to_json() const {
        return {{"family", family},
                {"nmax", nmax},
                {"mmax", effective_mmax()},
                {"variant", simple ? "simple" : "multi"}};
    }
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

std::string env_str(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

// precedence: flags > TUTTE_* environment > defaults
void apply_env_defaults(Config& cfg, const CLI::App* sub) {
    if (!sub->count("--nmax")) cfg.nmax = env_int("TUTTE_NMAX", cfg.nmax);
    if (!sub->count("--mmax")) cfg.mmax = env_int("TUTTE_MMAX", cfg.mmax);
    if (!sub->count("--family")) cfg.family = env_str("TUTTE_FAMILY", cfg.family);
    if (!sub->count("--simple") && !sub->count("--multi")) {
        std::string v = env_str("TUTTE_VARIANT", cfg.simple ? "simple" : "multi");
        cfg.simple = v != "multi";
    }
}

FamilyTerminals family_terminals(const Config& cfg, Trunc t) {
    if (cfg.family == "planar") {
        FamilyTerminals ft = planar_terminals(t);
        ft.simple = cfg.simple;
        return ft;
    }
    if (cfg.family == "series-parallel")
        return FamilyTerminals::zero(t, cfg.simple);
    if (cfg.family.rfind("custom:", 0) == 0) {
        FamilyTerminals ft = read_terminals_dir(cfg.family.substr(7));
        ft.g3 = ft.g3.truncated(t);
        ft.g3_pointed = ft.g3_pointed.truncated(t);
        ft.g3_rooted = ft.g3_rooted.truncated(t);
        return ft;
    }
    throw Error("unknown family: " + cfg.family);
}

GrammarOutput family_grammar(const Config& cfg, Trunc t) {
    if (cfg.family == "forest") {
        ForestPreset fp = forest_preset(t);
        GrammarOutput out;
        out.terminals = FamilyTerminals::zero(t, true);
        out.nets = NetworkBundle{BiSeries::zero(t), BiSeries::zero(t),
                                 BiSeries::zero(t), BiSeries::zero(t)};
        out.G2 = fp.G2;
        out.G2_pointed = fp.G2_pointed;
        out.conn = connected_series(out.G2, out.G2_pointed, t);
        out.G = all_graphs_series(out.conn.G1);
        return out;
    }
    return run_grammar(family_terminals(cfg, t), t);
}

int cmd_count(const Config& cfg) {
    Trunc t{cfg.nmax, cfg.effective_mmax()};
    GrammarOutput out = family_grammar(cfg, t);
    const BiSeries* s = nullptr;
    ConnLevel level = ConnLevel::All;
    if (cfg.level == "all") {
        s = &out.G;
        level = ConnLevel::All;
    } else if (cfg.level == "connected") {
        s = &out.conn.G1;
        level = ConnLevel::Connected;
    } else if (cfg.level == "two-connected") {
        s = &out.G2;
        level = ConnLevel::TwoConnected;
    } else if (cfg.level == "three-connected") {
        s = &out.terminals.g3;
        level = ConnLevel::ThreeConnected;
    } else {
        throw ConflictingFlags("unknown level: " + cfg.level);
    }
    Labelling conv = cfg.simple ? Labelling::VertexLabelled : Labelling::EdgeLabelled;
    CountTable table = extract_counts(*s, conv, level);
    std::string csv = table.to_csv("config: " + cfg.echo() + " level=" + cfg.level +
                                   "\nlabelling: " +
                                   (conv == Labelling::VertexLabelled
                                        ? "vertex-labelled"
                                        : "edge-and-vertex-labelled"));
    if (cfg.out.empty())
        std::cout << csv;
    else
        atomic_write(cfg.out, csv);
    return 0;
}

int cmd_series(const Config& cfg, const std::string& stage, const std::string& outdir) {
    Trunc t{cfg.nmax, cfg.effective_mmax()};
    std::filesystem::create_directories(outdir);
    auto dump = [&](const std::string& name, const BiSeries& s) {
        write_series_file(std::filesystem::path(outdir) / (name + ".json"), s);
    };
    if (stage == "terminals") {
        write_terminals_dir(outdir, family_terminals(cfg, t));
    } else {
        GrammarOutput out = family_grammar(cfg, t);
        if (stage == "networks") {
            dump("D", out.nets.D);
            dump("S", out.nets.S);
            dump("P", out.nets.P);
            dump("H", out.nets.H);
        } else if (stage == "g2") {
            dump("G2", out.G2);
            dump("G2_pointed", out.G2_pointed);
        } else if (stage == "g1") {
            dump("G1", out.conn.G1);
            dump("C_pointed", out.conn.C_pointed);
        } else if (stage == "g") {
            dump("G", out.G);
        } else {
            throw ConflictingFlags("unknown stage: " + stage);
        }
    }
    nlohmann::json meta = cfg.to_json();
    meta["stage"] = stage;
    meta["trunc"] = {t.nx, t.ny};
    atomic_write(std::filesystem::path(outdir) / "config.json", meta.dump(2) + "\n");
    return 0;
}

int cmd_decompose(const std::string& graph_file, std::optional<int> point,
                  const std::string& out) {
    Multigraph g = read_graph_file(graph_file);
    nlohmann::json result;
    result["config"] = {{"graph", graph_file},
                        {"point", point ? nlohmann::json(*point) : nlohmann::json()}};
    result["graph"] = graph_to_json(g);
    ConnClass cc = connectivity_class(g);
    result["connectivity"] = conn_class_name(cc);
    if (cc != ConnClass::Disconnected) result["bv_tree"] = bv_tree_to_json(block_tree(g));
    if ((cc == ConnClass::TwoConnected || cc == ConnClass::ThreeConnected) &&
        g.edge_count() >= 3) {
        result["rmt_tree"] = rmt_tree_to_json(rmt_tree(g));
        if (point) {
            RestrictedRmtTree r = restricted_rmt_tree(g, *point);
            result["restricted_rmt_tree"] = rmt_tree_to_json(r.tree);
            result["restricted_rmt_tree"]["pointed_vertex"] = *point;
        }
    }
    std::string text = result.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        atomic_write(out, text);
    return 0;
}

int verify_grammar_vs_oracle(const Config& cfg, std::ostream& log,
                             nlohmann::json& report) {
    int nmax = std::min(cfg.nmax, 6);
    Trunc t{nmax, nmax >= 3 ? 3 * nmax - 6 : 1};
    Config planar = cfg;
    planar.family = cfg.family == "series-parallel" ? cfg.family : "planar";
    planar.nmax = nmax;
    planar.mmax = t.ny;
    GrammarOutput out = family_grammar(planar, t);

    oracle::FamilyTables lhs;
    lhs.all = extract_counts(out.G, Labelling::VertexLabelled, ConnLevel::All);
    lhs.all.rows.erase({0, 0}); // the empty graph; enumeration starts at n = 1
    lhs.connected =
        extract_counts(out.conn.G1, Labelling::VertexLabelled, ConnLevel::Connected);
    lhs.two_connected =
        extract_counts(out.G2, Labelling::VertexLabelled, ConnLevel::TwoConnected);
    lhs.three_connected = extract_counts(out.terminals.g3, Labelling::VertexLabelled,
                                         ConnLevel::ThreeConnected);
    oracle::FamilyTables rhs = planar.family == "series-parallel"
                                   ? oracle::series_parallel_count_tables(nmax)
                                   : oracle::planar_count_tables(nmax);
    oracle::CrosscheckReport rep = oracle::crosscheck(lhs, rhs);
    log << (rep.ok ? "PASS" : "FAIL") << " grammar-vs-oracle family="
        << planar.family << " n<=" << nmax << " compared=" << rep.compared;
    if (!rep.ok) log << " first mismatch: " << rep.first_mismatch;
    log << "\n";
    report["grammar_vs_oracle"] = {{"family", planar.family},
                                   {"nmax", nmax},
                                   {"pass", rep.ok},
                                   {"compared", rep.compared},
                                   {"first_mismatch", rep.first_mismatch}};
    return rep.ok ? 0 : 1;
}

int verify_double_routes(const Config& cfg, std::ostream& log,
                         nlohmann::json& report) {
    Trunc t{std::max(4, std::min(cfg.nmax + 2, 8)), 12};
    DiagnosticsReport rep = planar_diagnostics(t);
    for (const auto& c : rep.checks) {
        log << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass) log << " -- " << c.detail;
        log << "\n";
    }
    report["double_routes"] = rep.to_json();
    report["double_routes"]["trunc"] = {t.nx, t.ny};
    return rep.all_pass() ? 0 : 1;
}

int verify_dissymmetry(const Config& cfg, std::ostream& log,
                       nlohmann::json& report) {
    int nmax = std::min(cfg.nmax, 5);
    std::vector<Multigraph> gs;
    for (int n = 1; n <= nmax; ++n)
        for (auto& g : oracle::connected_planar_graphs(n)) gs.push_back(std::move(g));
    oracle::CensusReport rep = oracle::dissymmetry_census(gs);
    log << (rep.ok() ? "PASS" : "FAIL") << " dissymmetry census on " << rep.graphs
        << " graphs, " << rep.trees_checked << " trees";
    if (!rep.ok()) log << " first failure: " << rep.first_failure;
    log << "\n";
    report["dissymmetry"] = {{"pass", rep.ok()},
                             {"graphs", rep.graphs},
                             {"trees", rep.trees_checked},
                             {"first_failure", rep.first_failure}};
    return rep.ok() ? 0 : 1;
}

int cmd_verify(const Config& cfg, const std::string& suite,
               const std::string& report_path) {
    if (suite != "grammar-vs-oracle" && suite != "double-routes" &&
        suite != "dissymmetry" && suite != "all")
        throw ConflictingFlags("unknown suite: " + suite);
    int rc = 0;
    nlohmann::json report;
    report["config"] = cfg.to_json();
    if (suite == "grammar-vs-oracle" || suite == "all")
        rc |= verify_grammar_vs_oracle(cfg, std::cout, report);
    if (suite == "double-routes" || suite == "all")
        rc |= verify_double_routes(cfg, std::cout, report);
    if (suite == "dissymmetry" || suite == "all")
        rc |= verify_dissymmetry(cfg, std::cout, report);
    report["pass"] = rc == 0;
    if (!report_path.empty()) atomic_write(report_path, report.dump(2) + "\n");
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tutte-decomposition counting pipeline"};
    app.require_subcommand(1);

    Config cfg;
    bool flag_simple = false, flag_multi = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family,
                        "planar | series-parallel | forest | custom:<dir>");
        sub->add_option("--nmax", cfg.nmax, "max vertex count / x-order");
        sub->add_option("--mmax", cfg.mmax, "max edge count / y-order");
        sub->add_flag("--simple", flag_simple, "forbid multiple edges");
        sub->add_flag("--multi", flag_multi, "allow multiple edges");
    };

    CLI::App* count = app.add_subcommand("count", "exact counts as CSV");
    add_common(count);
    count->add_option("--level", cfg.level,
                      "all | connected | two-connected | three-connected");
    count->add_option("--out", cfg.out, "output CSV path (stdout if omitted)");

    std::string stage = "terminals", outdir = "series_out";
    CLI::App* series = app.add_subcommand("series", "dump series JSON files");
    add_common(series);
    series->add_option("--stage", stage, "terminals | networks | g2 | g1 | g");
    series->add_option("--out", outdir, "output directory");

    std::string graph_file, dec_out;
    int point_v = 0;
    CLI::App* dec = app.add_subcommand("decompose", "decomposition trees of a graph");
    dec->add_option("--graph", graph_file, "graph JSON file")->required();
    CLI::Option* point_opt = dec->add_option("--point", point_v, "pointed vertex");
    dec->add_option("--out", dec_out, "output JSON path (stdout if omitted)");

    std::string suite = "all", report_path;
    CLI::App* verify = app.add_subcommand("verify", "oracle comparison suites");
    add_common(verify);
    verify->add_option("--suite", suite,
                       "grammar-vs-oracle | double-routes | dissymmetry | all");
    verify->add_option("--report", report_path, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (flag_simple && flag_multi)
            throw ConflictingFlags("--simple and --multi are mutually exclusive");
        for (CLI::App* sub : {count, series, verify})
            if (sub->parsed()) apply_env_defaults(cfg, sub);
        if (flag_simple) cfg.simple = true;
        if (flag_multi) cfg.simple = false;

        if (count->parsed()) return cmd_count(cfg);
        if (series->parsed()) return cmd_series(cfg, stage, outdir);
        if (dec->parsed())
            return cmd_decompose(graph_file,
                                 *point_opt ? std::optional<int>(point_v)
                                            : std::nullopt,
                                 dec_out);
        if (verify->parsed()) return cmd_verify(cfg, suite, report_path);
    } catch (const ConflictingFlags& e) {
        std::cerr << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "Error"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
    return 2;
}
