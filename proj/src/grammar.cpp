#include "tutte/grammar.hpp"

#include <fstream>

#include "tutte/series_io.hpp"

namespace tutte {

FamilyTerminals FamilyTerminals::zero(Trunc t, bool simple) {
    return {BiSeries::zero(t), BiSeries::zero(t), BiSeries::zero(t), simple};
}

void FamilyTerminals::validate() const {
    if (!equal_to_order(g3_pointed, deriv_x(g3)))
        throw Error("terminals: G3' != d/dx G3 (" +
                    first_difference(g3_pointed, deriv_x(g3)) + ")");
    if (!equal_to_order(g3_rooted, rooted_deriv(g3)))
        throw Error("terminals: ->G3 != (2/x^2) d/dw G3 (" +
                    first_difference(g3_rooted, rooted_deriv(g3)) + ")");
    for (const auto& [k, c] : g3.terms())
        if (k.first < 4)
            throw Error("terminals: G3 has a term with fewer than 4 vertices");
}

NetworkBundle network_system(const FamilyTerminals& t, Trunc trunc) {
    using namespace expr;
    ExprPtr D = unknown("D"), S = unknown("S"), P = unknown("P"), H = unknown("H");
    ExprPtr y = mono(0, 1);

    SeriesSystem sys;
    sys.equations.push_back({"D", add({y, S, P, H})});
    sys.equations.push_back({"S", mul({sub(D, S), mono(1, 0), D})});
    if (t.simple) {
        // P = y Set_{>=1}(D - P - y) + Set_{>=2}(D - P - y)
        ExprPtr core = sub(sub(D, P), y);
        sys.equations.push_back(
            {"P", add(mul(y, exp_ge(1, core)), exp_ge(2, core))});
    } else {
        sys.equations.push_back({"P", exp_ge(2, sub(D, P))});
    }
    sys.equations.push_back({"H", subst(cst(t.g3_rooted), nullptr, D)});

    Solution sol = solve_fixed_point(sys, trunc);
    return {sol["D"], sol["S"], sol["P"], sol["H"]};
}

BiSeries two_connected_series(const FamilyTerminals& t, const NetworkBundle& nets,
                              Trunc trunc) {
    const BiSeries &D = nets.D, &S = nets.S, &P = nets.P, &H = nets.H;
    BiSeries x = BiSeries::var_x(trunc), y = BiSeries::var_y(trunc);
    BiSeries x2 = BiSeries::monomial(2, 0, 1, trunc);

    BiSeries B_R = frac(1, 2) * loga_ge(x * (D - S), 3);
    BiSeries B_M(trunc);
    if (t.simple) {
        BiSeries core = D - P - y;
        B_M = frac(1, 2) * (x2 * (y * exp_ge(core, 2) + exp_ge(core, 3)));
    } else {
        B_M = frac(1, 2) * (x2 * exp_ge(D - P, 3));
    }
    BiSeries B_T = subst_y(t.g3, D).truncated(trunc);
    BiSeries B_RM = frac(1, 2) * (x2 * S * P);
    BiSeries B_RT = frac(1, 2) * (x2 * S * H);
    BiSeries B_MT = frac(1, 2) * (x2 * P * H);
    BiSeries B_TT = frac(1, 4) * (x2 * H * H);

    BiSeries eps = t.simple
                       ? BiSeries::monomial(2, 1, frac(1, 2), trunc)
                       : BiSeries::monomial(2, 1, frac(1, 2), trunc) +
                             BiSeries::monomial(2, 2, frac(1, 4), trunc);
    return eps + B_R + B_M + B_T - B_RM - B_RT - B_MT - B_TT;
}

BiSeries pointed_two_connected_series(const FamilyTerminals& t,
                                      const NetworkBundle& nets, Trunc trunc) {
    const BiSeries &D = nets.D, &S = nets.S, &P = nets.P, &H = nets.H;
    BiSeries x = BiSeries::var_x(trunc), y = BiSeries::var_y(trunc);
    BiSeries x2 = BiSeries::monomial(2, 0, 1, trunc);

    BiSeries V_R = frac(1, 2) * (x2 * (D - S) * (D - S) * D);
    BiSeries V_M(trunc);
    if (t.simple) {
        BiSeries core = D - P - y;
        V_M = x * y * exp_ge(core, 2) + x * exp_ge(core, 3);
    } else {
        V_M = x * exp_ge(D - P, 3);
    }
    BiSeries V_T = subst_y(t.g3_pointed, D).truncated(trunc);
    BiSeries V_RM = x * S * P;
    BiSeries V_RT = x * S * H;
    BiSeries V_MT = x * P * H;
    BiSeries V_TT = frac(1, 2) * (x * H * H);

    BiSeries eps = t.simple
                       ? BiSeries::monomial(1, 1, 1, trunc)
                       : BiSeries::monomial(1, 1, 1, trunc) +
                             BiSeries::monomial(1, 2, frac(1, 2), trunc);
    return eps + V_R + V_M + V_T - V_RM - V_RT - V_MT - V_TT;
}

ConnectedBundle connected_series(const BiSeries& G2, const BiSeries& G2_pointed,
                                 Trunc trunc) {
    using namespace expr;
    // C'(z,y) = exp(G2'(z C'(z,y), y))
    SeriesSystem sys;
    sys.equations.push_back(
        {"Cp", expr::exp(subst(cst(G2_pointed), mul(mono(1, 0), unknown("Cp")),
                               nullptr))});
    BiSeries Cp = solve_fixed_point(sys, trunc)["Cp"];

    BiSeries z = BiSeries::var_x(trunc);
    BiSeries zCp = z * Cp;
    BiSeries C_v = zCp;
    BiSeries C_B = subst_x(G2, zCp).truncated(trunc);
    BiSeries C_vB = zCp * subst_x(G2_pointed, zCp).truncated(trunc);
    return {C_v + C_B - C_vB, Cp};
}

BiSeries all_graphs_series(const BiSeries& G1) { return exp_series(G1); }

GrammarOutput run_grammar(const FamilyTerminals& t, Trunc trunc) {
    t.validate();
    GrammarOutput out;
    out.terminals = t;
    out.nets = network_system(t, trunc);
    out.G2 = two_connected_series(t, out.nets, trunc);
    out.G2_pointed = pointed_two_connected_series(t, out.nets, trunc);
    out.conn = connected_series(out.G2, out.G2_pointed, trunc);
    out.G = all_graphs_series(out.conn.G1);
    return out;
}

ForestPreset forest_preset(Trunc trunc) {
    return {BiSeries::monomial(2, 1, frac(1, 2), trunc),
            BiSeries::monomial(1, 1, 1, trunc)};
}

FamilyTerminals read_terminals_dir(const std::filesystem::path& dir) {
    FamilyTerminals t;
    t.g3 = read_series_file(dir / "g3.json");
    t.g3_pointed = read_series_file(dir / "g3_pointed.json");
    t.g3_rooted = read_series_file(dir / "g3_rooted.json");
    std::ifstream in(dir / "meta.json");
    if (!in) throw Error("cannot open " + (dir / "meta.json").string());
    nlohmann::json meta;
    in >> meta;
    t.simple = meta.at("simple").get<bool>();
    t.validate();
    return t;
}

void write_terminals_dir(const std::filesystem::path& dir, const FamilyTerminals& t) {
    std::filesystem::create_directories(dir);
    write_series_file(dir / "g3.json", t.g3);
    write_series_file(dir / "g3_pointed.json", t.g3_pointed);
    write_series_file(dir / "g3_rooted.json", t.g3_rooted);
    atomic_write(dir / "meta.json",
                 nlohmann::json{{"simple", t.simple}}.dump(2) + "\n");
}

} // namespace tutte
