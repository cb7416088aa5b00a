#pragma once

#include <map>
#include <utility>

#include "tutte/rational.hpp"

namespace tutte {

// Inclusive truncation bounds: coefficients with i > nx or j > ny are dropped.
struct Trunc {
    int nx = 0;
    int ny = 0;
    friend bool operator==(const Trunc&, const Trunc&) = default;
    Trunc meet(Trunc o) const { return {nx < o.nx ? nx : o.nx, ny < o.ny ? ny : o.ny}; }
    bool contains(Trunc o) const { return o.nx <= nx && o.ny <= ny; }
};

// Truncated bivariate power series with exact rational coefficients.
// Sparse canonical form: no stored zero coefficient, nothing beyond the
// truncation bounds. Immutable in practice; all operations return fresh
// values, so sharing across threads is safe.
class BiSeries {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rat>;

    BiSeries() = default;
    explicit BiSeries(Trunc t) : trunc_(t) {}

    static BiSeries zero(Trunc t) { return BiSeries(t); }
    static BiSeries constant(const Rat& c, Trunc t);
    static BiSeries monomial(int i, int j, const Rat& c, Trunc t);
    static BiSeries one(Trunc t) { return constant(1, t); }
    static BiSeries var_x(Trunc t) { return monomial(1, 0, 1, t); }
    static BiSeries var_y(Trunc t) { return monomial(0, 1, 1, t); }

    Trunc trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rat& c);

    // Smallest per-variable exponents over stored terms; `huge` when zero.
    static constexpr int kInfValuation = 1 << 28;
    int x_valuation() const;
    int y_valuation() const;
    int total_valuation() const;

    // Shrink bounds (growing them would claim unknown coefficients).
    BiSeries truncated(Trunc t) const;

    bool is_identity_x() const; // exactly the monomial x
    bool is_identity_y() const; // exactly the monomial y

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    Terms terms_;
    Trunc trunc_;
};

// Coefficientwise equality on the common truncation rectangle.
bool equal_to_order(const BiSeries& a, const BiSeries& b);
// First differing key on the common rectangle, as "x^i y^j: a vs b"; empty if equal.
std::string first_difference(const BiSeries& a, const BiSeries& b);

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const Rat& c, const BiSeries& a);

// exp(a): requires zero constant term.
BiSeries exp_series(const BiSeries& a);
// log(a): requires constant term 1.
BiSeries log_series(const BiSeries& a);
// exp_{>=k}(a) = exp(a) - sum_{i<k} a^i/i!   (EGF of Set_{>=k})
BiSeries exp_ge(const BiSeries& a, int k);
// loga_{>=k}(a) = log(1/(1-a)) - sum_{1<=i<k} a^i/i   (EGF of Cyc_{>=k})
BiSeries loga_ge(const BiSeries& a, int k);
// 1/a: requires nonzero constant term.
BiSeries reciprocal(const BiSeries& a);
BiSeries pow_int(const BiSeries& a, int k);

// Partial derivatives. d/dx shrinks the x bound by one; the rooted form
// (2/x^2) d/dy additionally divides by x^2 and fails if some term is not
// divisible.
BiSeries deriv_x(const BiSeries& a);
BiSeries deriv_y(const BiSeries& a);
BiSeries rooted_deriv(const BiSeries& a);

// Exact shift by x^-i0 y^-j0; DivisibilityError names the first offender.
BiSeries divide_by_monomial(const BiSeries& a, int i0, int j0);
// Multiply by c x^i y^j, widening the bounds by the shift (a plain product
// would meet them instead and lose completeness).
BiSeries mul_monomial(const BiSeries& a, int i, int j, const Rat& c);

// a(px, py). Each plug must have zero constant term or be the literal
// identity monomial in its slot. ValuationError if the truncation of `a`
// cannot support all requested result coefficients.
BiSeries substitute(const BiSeries& a, const BiSeries& px, const BiSeries& py);
// Common special cases: substitute only one slot, keep the other variable.
BiSeries subst_x(const BiSeries& a, const BiSeries& px);
BiSeries subst_y(const BiSeries& a, const BiSeries& py);

} // namespace tutte
