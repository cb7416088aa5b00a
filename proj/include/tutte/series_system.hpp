#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tutte/biseries.hpp"

namespace tutte {

// Expression trees over series: the right-hand sides of the equation systems
// solved by fixed-point iteration. Constants may be whole known series (for
// instance a terminal series handed into the network system).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op {
        Const,     // fixed series (truncated to the solve bounds on eval)
        Mono,      // c * x^i y^j materialized at the solve bounds
        Unknown,   // reference by name
        Add,
        Mul,
        Scale,     // rational multiple
        Exp,
        Log,
        ExpGe,     // exp_{>=k}
        LogaGe,    // loga_{>=k}
        Recip,
        Subst,     // args = {a, px, py}; null slot keeps that variable
        DivMono,
    };

    explicit Expr(Op o) : op(o) {}

    Op op;
    BiSeries value;              // Const
    std::string name;            // Unknown
    Rat scale_factor = 0;        // Scale / Mono coefficient
    int i = 0, j = 0;            // Mono exponents, ExpGe/LogaGe order (in i), DivMono
    std::vector<ExprPtr> args;
};

namespace expr {

ExprPtr cst(BiSeries s);
ExprPtr mono(int i, int j, Rat c = 1);
ExprPtr unknown(std::string name);
ExprPtr add(std::vector<ExprPtr> xs);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(std::vector<ExprPtr> xs);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr scale(Rat c, ExprPtr a);
ExprPtr exp(ExprPtr a);
ExprPtr log(ExprPtr a);
ExprPtr exp_ge(int k, ExprPtr a);
ExprPtr loga_ge(int k, ExprPtr a);
ExprPtr recip(ExprPtr a);
ExprPtr subst(ExprPtr a, ExprPtr px, ExprPtr py); // nullptr = identity slot
ExprPtr divmono(ExprPtr a, int i, int j);

} // namespace expr

// A system of equations, one per unknown. Every unknown appears exactly once
// on a left-hand side and right-hand sides may reference only declared
// unknowns (plus constants).
struct SeriesSystem {
    std::vector<std::pair<std::string, ExprPtr>> equations;
    void validate() const;
};

using Solution = std::map<std::string, BiSeries>;

BiSeries eval(const ExprPtr& e, const Solution& env, Trunc t);

// Iterate from the all-zero start until nothing changes. Each equation must
// strictly increase the valuation of the error; if the sweep count exceeds
// nx+ny+2 without stabilizing, the system is declared NonContractive.
Solution solve_fixed_point(const SeriesSystem& sys, Trunc t);

} // namespace tutte
