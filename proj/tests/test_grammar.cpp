#include <doctest.h>

#include "test_util.hpp"
#include "tutte/grammar.hpp"
#include "tutte/oracle.hpp"
#include "tutte/planarmaps.hpp"

using namespace tutte;

namespace {

// terminals are expensive enough to share across cases
const FamilyTerminals& planar_t() {
    static FamilyTerminals t = planar_terminals(Trunc{5, 10});
    return t;
}

} // namespace

TEST_CASE("network system, planar terminals") {
    Trunc t{5, 10};
    FamilyTerminals multi = planar_t();
    multi.simple = false;
    NetworkBundle nets = network_system(multi, t);
    CHECK(nets.D.coeff(0, 1) == 1); // the bare edge
    CHECK(equal_to_order(nets.D, BiSeries::var_y(t) + nets.S + nets.P + nets.H));
    // polyhedral networks start at the rooted tetrahedron core
    CHECK(nets.H.coeff(2, 5) == frac(1, 2));
    for (const auto& [k, c] : nets.H.terms())
        CHECK(k.first + k.second >= 7);
}

TEST_CASE("network system, series-parallel and degenerate truncation") {
    Trunc t{5, 8};
    FamilyTerminals sp = FamilyTerminals::zero(t, true);
    NetworkBundle nets = network_system(sp, t);
    CHECK(nets.H.is_zero());
    CHECK(nets.S.coeff(1, 2) == 1); // path of length 2
    CHECK(equal_to_order(nets.D, BiSeries::var_y(t) + nets.S + nets.P));

    NetworkBundle zero = network_system(FamilyTerminals::zero(Trunc{0, 0}, true),
                                        Trunc{0, 0});
    CHECK(zero.D.is_zero());
}

TEST_CASE("two-connected level, simple planar counts") {
    Trunc t{5, 10};
    NetworkBundle nets = network_system(planar_t(), t);
    BiSeries G2 = two_connected_series(planar_t(), nets, t);
    // link-graph
    CHECK(G2.coeff(2, 1) * factorial(2) * factorial(1) == 1);
    // triangle: one vertex-labelled structure
    CHECK(G2.coeff(3, 3) * factorial(3) == 1);
    // K4
    CHECK(G2.coeff(4, 6) * factorial(4) == 1);
    // full rows against the exhaustive enumeration
    CountTable counts = extract_counts(G2, Labelling::VertexLabelled,
                                       ConnLevel::TwoConnected);
    CHECK(counts.row_total(4) == 10);
    CHECK(counts.row_total(5) == 237);
}

TEST_CASE("two-connected level, multi-edge epsilon") {
    Trunc t{4, 6};
    FamilyTerminals multi = FamilyTerminals::zero(t, false);
    NetworkBundle nets = network_system(multi, t);
    BiSeries G2 = two_connected_series(multi, nets, t);
    CHECK(G2.coeff(2, 2) == frac(1, 4)); // the double link
    BiSeries G2p = pointed_two_connected_series(multi, nets, t);
    CHECK(G2p.coeff(1, 1) == 1);
    CHECK(G2p.coeff(1, 2) == frac(1, 2));
    // rooted 2-connected = 1 + D for the multi-edge variant
    CHECK(equal_to_order(rooted_deriv(G2),
                         BiSeries::one(t) + nets.D));
}

TEST_CASE("the two routes to G2' agree") {
    Trunc t{5, 10};
    for (bool simple : {true, false}) {
        FamilyTerminals ft = planar_t();
        ft.simple = simple;
        NetworkBundle nets = network_system(ft, t);
        BiSeries G2 = two_connected_series(ft, nets, t);
        BiSeries G2p = pointed_two_connected_series(ft, nets, t);
        CHECK(equal_to_order(G2p, deriv_x(G2)));
        CHECK(G2p.coeff(1, 1) == 1); // the pointed link
    }
}

TEST_CASE("connected and all-graph levels, planar") {
    Trunc t{5, 10};
    GrammarOutput out = run_grammar(planar_t(), t);
    CHECK(out.conn.G1.coeff(1, 0) == 1); // the single vertex
    CountTable conn = extract_counts(out.conn.G1, Labelling::VertexLabelled,
                                     ConnLevel::Connected);
    long long expect_conn[] = {0, 1, 1, 4, 38, 727};
    long long expect_all[] = {0, 1, 2, 8, 64, 1023};
    CountTable all = extract_counts(out.G, Labelling::VertexLabelled, ConnLevel::All);
    for (int n = 1; n <= 5; ++n) {
        CHECK(conn.row_total(n) == Int((long)expect_conn[n]));
        CHECK(all.row_total(n) == Int((long)expect_all[n]));
    }
    CHECK(equal_to_order(log_series(out.G), out.conn.G1));
}

TEST_CASE("forest preset gives Cayley counts") {
    Trunc t{7, 7};
    ForestPreset fp = forest_preset(t);
    ConnectedBundle cb = connected_series(fp.G2, fp.G2_pointed, t);
    for (int n = 1; n <= 7; ++n) {
        Int expect = 1; // n^(n-2)
        for (int k = 2; k < n; ++k) expect *= n;
        CHECK(cb.G1.coeff(n, n - 1) * factorial(n) == expect);
    }
    // connected members of the forest family are trees: m = n - 1 throughout
    for (const auto& [k, c] : cb.G1.terms()) CHECK(k.second == k.first - 1);
}

TEST_CASE("zero terminals at tiny truncation leave only the epsilon part") {
    Trunc t{1, 2};
    FamilyTerminals sp = FamilyTerminals::zero(t, true);
    NetworkBundle nets = network_system(sp, t);
    BiSeries G2p = pointed_two_connected_series(sp, nets, t);
    CHECK(G2p == BiSeries::monomial(1, 1, 1, t));
}

TEST_CASE("monotone truncation: larger bounds refine, never change") {
    FamilyTerminals small = planar_terminals(Trunc{4, 6});
    FamilyTerminals big = planar_terminals(Trunc{5, 8});
    CHECK(equal_to_order(small.g3, big.g3));
    GrammarOutput a = run_grammar(small, Trunc{4, 6});
    GrammarOutput b = run_grammar(big, Trunc{5, 8});
    CHECK(equal_to_order(a.G2, b.G2));
    CHECK(equal_to_order(a.conn.G1, b.conn.G1));
    CHECK(equal_to_order(a.G, b.G));
}

TEST_CASE("all-graphs level degenerate cases") {
    Trunc t{3, 3};
    CHECK(all_graphs_series(BiSeries::zero(t)) == BiSeries::one(t));
    CHECK_THROWS_AS(all_graphs_series(BiSeries::one(t)), ConstantTermViolation);
}

TEST_CASE("series-parallel grammar agrees with the filtered enumeration") {
    Trunc t{5, 8};
    GrammarOutput out = run_grammar(FamilyTerminals::zero(t, true), t);
    oracle::FamilyTables lhs;
    lhs.all = extract_counts(out.G, Labelling::VertexLabelled, ConnLevel::All);
    lhs.all.rows.erase({0, 0});
    lhs.connected =
        extract_counts(out.conn.G1, Labelling::VertexLabelled, ConnLevel::Connected);
    lhs.two_connected =
        extract_counts(out.G2, Labelling::VertexLabelled, ConnLevel::TwoConnected);
    lhs.three_connected = CountTable{};
    lhs.three_connected.level = ConnLevel::ThreeConnected;
    oracle::FamilyTables rhs = oracle::series_parallel_count_tables(5);
    oracle::CrosscheckReport rep = oracle::crosscheck(lhs, rhs);
    INFO(rep.first_mismatch);
    CHECK(rep.ok);
}

TEST_CASE("count extraction conventions") {
    Trunc t{3, 3};
    BiSeries s = BiSeries::monomial(2, 1, frac(1, 2), t);
    CountTable edge = extract_counts(s, Labelling::EdgeLabelled, ConnLevel::All);
    CHECK(edge.get(2, 1) == 1);
    CHECK(extract_counts(BiSeries::zero(t), Labelling::EdgeLabelled, ConnLevel::All)
              .rows.empty());
    BiSeries bad = BiSeries::monomial(1, 1, frac(1, 3), t);
    CHECK_THROWS_AS(extract_counts(bad, Labelling::VertexLabelled, ConnLevel::All),
                    NonIntegerCount);
    BiSeries neg = BiSeries::monomial(1, 1, -1, t);
    CHECK_THROWS_AS(extract_counts(neg, Labelling::EdgeLabelled, ConnLevel::All),
                    NonIntegerCount);
}

TEST_CASE("terminal validation catches inconsistencies") {
    Trunc t{5, 7};
    FamilyTerminals ft = FamilyTerminals::zero(t, true);
    ft.g3 = BiSeries::monomial(4, 6, frac(1, 24), t);
    CHECK_THROWS_AS(ft.validate(), Error); // pointed/rooted not derivatives
    ft.g3_pointed = deriv_x(ft.g3);
    ft.g3_rooted = rooted_deriv(ft.g3);
    CHECK_NOTHROW(ft.validate());
    ft.g3 = ft.g3 + BiSeries::monomial(2, 1, 1, t);
    ft.g3_pointed = deriv_x(ft.g3);
    ft.g3_rooted = rooted_deriv(ft.g3);
    CHECK_THROWS_AS(ft.validate(), Error); // below the tetrahedron threshold
}
