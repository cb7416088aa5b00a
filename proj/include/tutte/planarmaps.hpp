#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tutte/biseries.hpp"
#include "tutte/grammar.hpp"

namespace tutte {

// Map-counting pipeline: mobiles and Motzkin paths give vertex-pointed maps,
// the beta/eta/gamma algebraic systems walk the connectivity ladder down to
// 3-connected maps, and Euler's relation unroots. Output: the planar family
// terminals (G3, G3', ->G3).
//
// Conventions: map series are exponential in labelled half-edges (variable s,
// always even) and ordinary in vertices-minus-one (variable x); 3-connected
// map series switch to the graph convention (x vertices, w edges, both
// labelled). The root half-edge carries a label like any other half-edge;
// the rotation-system oracle pins this down via [s^2]->M = x + 1.

struct MotzkinBundle {
    BiSeries E, B, B_plus1, B_hat; // vars (t, u): 0-steps, -1-steps
};

MotzkinBundle motzkin_series(Trunc trunc);

// beta system in (x, s): beta1 = x s^2 + b1^2 + 2 b1 b2,
// beta2 = y s^2 + b2^2 + 2 b1 b2 with y an exact weight (1 for maps).
std::pair<BiSeries, BiSeries> solve_beta(Trunc trunc, const Rat& y_weight = 1);

struct MobileBundle {
    BiSeries L_circ, L_tri, u;                  // half-mobile series, y = 1
    BiSeries T_bullet, T_circ, T_bb, T_bc, T;   // pointed-mobile series, y = 1
    BiSeries M_pointed;                         // = T; vertex-pointed maps
};

// Computes the mobile series twice (closed beta forms vs direct Motzkin
// substitution) and insists the routes agree.
MobileBundle mobile_series(Trunc trunc);

BiSeries rooted_maps(Trunc trunc); // ->M(x,s), two routes asserted equal

struct EtaBundle {
    BiSeries eta1, eta2; // (x, t)
    BiSeries L_rooted;   // ->L = eta1 + eta2 - 3 eta1 eta2
};

EtaBundle eta_series_and_rooted_2conn(Trunc trunc);

struct Pointed2ConnBundle {
    BiSeries Mp_f, Mp_Bf, Mp_B; // (x, s)
    BiSeries L_pointed;         // L'(x, t)
};

Pointed2ConnBundle pointed_2conn_maps(Trunc trunc);

struct MapNetworkBundle {
    BiSeries eta1, eta2;   // (x, y) via t^2 -> y
    BiSeries D, S, P, H;   // embedded networks
};

MapNetworkBundle map_network_series(Trunc trunc);

struct GammaBundle {
    BiSeries gamma1, gamma2; // (x, w)
    BiSeries K_rooted;       // ->K(x, w)
};

GammaBundle gamma_series_and_rooted_3conn(Trunc trunc);

BiSeries pointed_3conn_maps(Trunc trunc); // K'(x, w)

// Closed gamma-form of K'. With `swapped` set, evaluates K'(1/x, xw) term by
// term through the gamma1 <-> gamma2 swap; every 1/x resolves exactly.
BiSeries pointed_3conn_closed_form(const BiSeries& gamma1, const BiSeries& gamma2,
                                   bool swapped);

// G3 = K/2, G3' = K'/2, ->G3 = ->K/2 with K from Euler's relation; the
// (x,w) -> (1/x, xw) substitution is realized by swapping gamma1 and gamma2.
FamilyTerminals planar_terminals(Trunc trunc);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first differing coefficient on failure
};

struct DiagnosticsReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Every double-route identity of the pipeline, evaluated at x-order
// trunc.nx and s-order trunc.ny (w- and y-space checks at half the s-order).
DiagnosticsReport planar_diagnostics(Trunc trunc);

} // namespace tutte
