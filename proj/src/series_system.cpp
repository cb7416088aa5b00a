#include "tutte/series_system.hpp"

#include <set>

#include "tutte/errors.hpp"

namespace tutte {

namespace expr {

namespace {
ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }
}

ExprPtr cst(BiSeries s) {
    Expr e{Expr::Op::Const};
    e.value = std::move(s);
    return node(std::move(e));
}

ExprPtr mono(int i, int j, Rat c) {
    Expr e{Expr::Op::Mono};
    e.i = i;
    e.j = j;
    e.scale_factor = std::move(c);
    return node(std::move(e));
}

ExprPtr unknown(std::string name) {
    Expr e{Expr::Op::Unknown};
    e.name = std::move(name);
    return node(std::move(e));
}

ExprPtr add(std::vector<ExprPtr> xs) {
    Expr e{Expr::Op::Add};
    e.args = std::move(xs);
    return node(std::move(e));
}

ExprPtr add(ExprPtr a, ExprPtr b) { return add(std::vector<ExprPtr>{a, b}); }

ExprPtr sub(ExprPtr a, ExprPtr b) { return add(a, scale(-1, b)); }

ExprPtr mul(std::vector<ExprPtr> xs) {
    Expr e{Expr::Op::Mul};
    e.args = std::move(xs);
    return node(std::move(e));
}

ExprPtr mul(ExprPtr a, ExprPtr b) { return mul(std::vector<ExprPtr>{a, b}); }

ExprPtr scale(Rat c, ExprPtr a) {
    Expr e{Expr::Op::Scale};
    e.scale_factor = std::move(c);
    e.args = {a};
    return node(std::move(e));
}

#define UNARY(fn, OP)                                                          \
    ExprPtr fn(ExprPtr a) {                                                    \
        Expr e{Expr::Op::OP};                                                  \
        e.args = {a};                                                          \
        return node(std::move(e));                                             \
    }
UNARY(exp, Exp)
UNARY(log, Log)
UNARY(recip, Recip)
#undef UNARY

ExprPtr exp_ge(int k, ExprPtr a) {
    Expr e{Expr::Op::ExpGe};
    e.i = k;
    e.args = {a};
    return node(std::move(e));
}

ExprPtr loga_ge(int k, ExprPtr a) {
    Expr e{Expr::Op::LogaGe};
    e.i = k;
    e.args = {a};
    return node(std::move(e));
}

ExprPtr subst(ExprPtr a, ExprPtr px, ExprPtr py) {
    Expr e{Expr::Op::Subst};
    e.args = {a, px, py};
    return node(std::move(e));
}

ExprPtr divmono(ExprPtr a, int i, int j) {
    Expr e{Expr::Op::DivMono};
    e.i = i;
    e.j = j;
    e.args = {a};
    return node(std::move(e));
}

} // namespace expr

BiSeries eval(const ExprPtr& e, const Solution& env, Trunc t) {
    switch (e->op) {
    case Expr::Op::Const:
        return e->value.truncated(t);
    case Expr::Op::Mono:
        return BiSeries::monomial(e->i, e->j, e->scale_factor, t);
    case Expr::Op::Unknown: {
        auto it = env.find(e->name);
        if (it == env.end()) throw Error("unknown series: " + e->name);
        return it->second.truncated(t);
    }
    case Expr::Op::Add: {
        BiSeries r = BiSeries::zero(t);
        for (const auto& a : e->args) r = r + eval(a, env, t);
        return r;
    }
    case Expr::Op::Mul: {
        BiSeries r = BiSeries::one(t);
        for (const auto& a : e->args) r = r * eval(a, env, t);
        return r;
    }
    case Expr::Op::Scale:
        return e->scale_factor * eval(e->args[0], env, t);
    case Expr::Op::Exp:
        return exp_series(eval(e->args[0], env, t));
    case Expr::Op::Log:
        return log_series(eval(e->args[0], env, t));
    case Expr::Op::ExpGe:
        return exp_ge(eval(e->args[0], env, t), e->i);
    case Expr::Op::LogaGe:
        return loga_ge(eval(e->args[0], env, t), e->i);
    case Expr::Op::Recip:
        return reciprocal(eval(e->args[0], env, t));
    case Expr::Op::Subst: {
        BiSeries a = eval(e->args[0], env, t);
        BiSeries px = e->args[1] ? eval(e->args[1], env, t) : BiSeries::var_x(Trunc{1, 0});
        BiSeries py = e->args[2] ? eval(e->args[2], env, t) : BiSeries::var_y(Trunc{0, 1});
        return substitute(a, px, py);
    }
    case Expr::Op::DivMono:
        return divide_by_monomial(eval(e->args[0], env, t), e->i, e->j);
    }
    throw Error("unreachable expression op");
}

namespace {

void collect_unknowns(const ExprPtr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->op == Expr::Op::Unknown) out.insert(e->name);
    for (const auto& a : e->args) collect_unknowns(a, out);
}

} // namespace

void SeriesSystem::validate() const {
    std::set<std::string> lhs;
    for (const auto& [name, rhs] : equations)
        if (!lhs.insert(name).second)
            throw Error("unknown declared twice: " + name);
    std::set<std::string> used;
    for (const auto& [name, rhs] : equations) collect_unknowns(rhs, used);
    for (const auto& u : used)
        if (!lhs.count(u)) throw Error("equation references undeclared unknown: " + u);
}

Solution solve_fixed_point(const SeriesSystem& sys, Trunc t) {
    sys.validate();
    Solution vals;
    for (const auto& [name, rhs] : sys.equations) vals[name] = BiSeries::zero(t);

    int max_rounds = t.nx + t.ny + 2;
    for (int round = 0; round <= max_rounds; ++round) {
        bool changed = false;
        for (const auto& [name, rhs] : sys.equations) {
            BiSeries next = eval(rhs, vals, t).truncated(t);
            if (!(next == vals[name])) {
                vals[name] = std::move(next);
                changed = true;
            }
        }
        if (!changed) return vals;
    }
    throw NonContractive("fixed point did not stabilize within " +
                         std::to_string(max_rounds) + " sweeps");
}

} // namespace tutte
