#include <doctest.h>

#include "test_util.hpp"
#include "tutte/errors.hpp"
#include "tutte/series_system.hpp"

using namespace tutte;

TEST_CASE("rooted labelled trees: T = x exp(T)") {
    using namespace expr;
    SeriesSystem sys;
    sys.equations.push_back({"T", mul(mono(1, 0), expr::exp(unknown("T")))});
    BiSeries T = solve_fixed_point(sys, Trunc{8, 0})["T"];
    // n^(n-1) rooted trees on n labelled vertices
    for (int n = 1; n <= 8; ++n) {
        Int expect = 1;
        for (int k = 1; k < n; ++k) expect *= n;
        CHECK(T.coeff(n, 0) == Rat(expect) / Rat(factorial(n)));
    }
}

TEST_CASE("beta system to order s^4") {
    using namespace expr;
    SeriesSystem sys;
    ExprPtr b1 = unknown("b1"), b2 = unknown("b2");
    ExprPtr cross = scale(2, mul(b1, b2));
    sys.equations.push_back({"b1", add({mono(1, 2), mul(b1, b1), cross})});
    sys.equations.push_back({"b2", add({mono(0, 2), mul(b2, b2), cross})});
    Solution sol = solve_fixed_point(sys, Trunc{4, 4});
    const BiSeries& B1 = sol.at("b1");
    const BiSeries& B2 = sol.at("b2");
    CHECK(B1.coeff(1, 2) == 1);
    CHECK(B1.coeff(2, 4) == 1);
    CHECK(B1.coeff(1, 4) == 2);
    CHECK(B2.coeff(0, 2) == 1);
    CHECK(B2.coeff(0, 4) == 1);
    CHECK(B2.coeff(1, 4) == 2);
    // re-substituting the solution reproduces it exactly
    BiSeries lhs = sol.at("b1");
    BiSeries rhs = eval(sys.equations[0].second, sol, Trunc{4, 4});
    CHECK(lhs == rhs);
}

TEST_CASE("empty system and validation") {
    SeriesSystem sys;
    CHECK(solve_fixed_point(sys, Trunc{4, 4}).empty());

    SeriesSystem dup;
    dup.equations.push_back({"A", expr::mono(1, 0)});
    dup.equations.push_back({"A", expr::mono(0, 1)});
    CHECK_THROWS_AS(solve_fixed_point(dup, Trunc{2, 2}), Error);

    SeriesSystem undeclared;
    undeclared.equations.push_back({"A", expr::unknown("B")});
    CHECK_THROWS_AS(solve_fixed_point(undeclared, Trunc{2, 2}), Error);
}

TEST_CASE("non-contractive system is detected") {
    using namespace expr;
    SeriesSystem sys;
    sys.equations.push_back({"T", add(unknown("T"), mono(1, 0))});
    CHECK_THROWS_AS(solve_fixed_point(sys, Trunc{4, 4}), NonContractive);
}

TEST_CASE("constant-term violations propagate") {
    using namespace expr;
    SeriesSystem sys;
    sys.equations.push_back({"A", expr::exp(add(mono(0, 0), unknown("A")))});
    CHECK_THROWS_AS(solve_fixed_point(sys, Trunc{3, 3}), ConstantTermViolation);
}

TEST_CASE("expression substitution with identity slots") {
    using namespace expr;
    // H(x,y) = A(x, y + y^2) for A = x w
    BiSeries A = BiSeries::monomial(1, 1, 1, Trunc{4, 4});
    ExprPtr plug = add(mono(0, 1), mono(0, 2));
    BiSeries H = eval(subst(cst(A), nullptr, plug), {}, Trunc{4, 4});
    CHECK(H.coeff(1, 1) == 1);
    CHECK(H.coeff(1, 2) == 1);
}
