#include "tutte/biseries.hpp"

#include <algorithm>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

std::string key_str(int i, int j) {
    std::ostringstream os;
    os << "x^" << i << " y^" << j;
    return os.str();
}

} // namespace

BiSeries BiSeries::constant(const Rat& c, Trunc t) {
    return monomial(0, 0, c, t);
}

BiSeries BiSeries::monomial(int i, int j, const Rat& c, Trunc t) {
    BiSeries s(t);
    s.set_coeff(i, j, c);
    return s;
}

Rat BiSeries::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiSeries::set_coeff(int i, int j, const Rat& c) {
    if (i < 0 || j < 0)
        throw ValuationError("negative exponent " + key_str(i, j));
    if (i > trunc_.nx || j > trunc_.ny || c == 0)
        terms_.erase({i, j});
    else
        terms_[{i, j}] = c;
}

int BiSeries::x_valuation() const {
    int v = kInfValuation;
    for (const auto& [k, c] : terms_) v = std::min(v, k.first);
    return v;
}

int BiSeries::y_valuation() const {
    int v = kInfValuation;
    for (const auto& [k, c] : terms_) v = std::min(v, k.second);
    return v;
}

int BiSeries::total_valuation() const {
    int v = kInfValuation;
    for (const auto& [k, c] : terms_) v = std::min(v, k.first + k.second);
    return v;
}

BiSeries BiSeries::truncated(Trunc t) const {
    t = t.meet(trunc_);
    BiSeries r(t);
    for (const auto& [k, c] : terms_)
        if (k.first <= t.nx && k.second <= t.ny) r.terms_[k] = c;
    return r;
}

bool BiSeries::is_identity_x() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{1, 0} &&
           terms_.begin()->second == 1;
}

bool BiSeries::is_identity_y() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 1} &&
           terms_.begin()->second == 1;
}

bool equal_to_order(const BiSeries& a, const BiSeries& b) {
    return first_difference(a, b).empty();
}

std::string first_difference(const BiSeries& a, const BiSeries& b) {
    Trunc t = a.trunc().meet(b.trunc());
    std::map<BiSeries::Key, std::pair<Rat, Rat>> joint;
    for (const auto& [k, c] : a.terms())
        if (k.first <= t.nx && k.second <= t.ny) joint[k].first = c;
    for (const auto& [k, c] : b.terms())
        if (k.first <= t.nx && k.second <= t.ny) joint[k].second = c;
    for (const auto& [k, pq] : joint)
        if (pq.first != pq.second)
            return key_str(k.first, k.second) + ": " + rat_to_string(pq.first) +
                   " vs " + rat_to_string(pq.second);
    return {};
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r = a.truncated(a.trunc().meet(b.trunc()));
    Trunc t = r.trunc();
    for (const auto& [k, c] : b.terms()) {
        if (k.first > t.nx || k.second > t.ny) continue;
        r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) + c);
    }
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator-(const BiSeries& a) { return Rat(-1) * a; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    Trunc t = a.trunc().meet(b.trunc());
    BiSeries r(t);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.first > t.nx || ka.second > t.ny) continue;
        for (const auto& [kb, cb] : b.terms()) {
            int i = ka.first + kb.first, j = ka.second + kb.second;
            if (i > t.nx || j > t.ny) continue;
            r.set_coeff(i, j, r.coeff(i, j) + ca * cb);
        }
    }
    return r;
}

BiSeries operator*(const Rat& c, const BiSeries& a) {
    BiSeries r(a.trunc());
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms()) r.set_coeff(k.first, k.second, c * v);
    return r;
}

BiSeries exp_series(const BiSeries& a) {
    if (a.coeff(0, 0) != 0)
        throw ConstantTermViolation("exp needs zero constant term, got " +
                                    rat_to_string(a.coeff(0, 0)));
    Trunc t = a.trunc();
    BiSeries r = BiSeries::one(t), p = BiSeries::one(t);
    Rat kfac = 1;
    for (int k = 1; k <= t.nx + t.ny; ++k) {
        p = p * a;
        if (p.is_zero()) break;
        kfac *= k;
        r = r + Rat(1) / kfac * p;
    }
    return r;
}

BiSeries log_series(const BiSeries& a) {
    if (a.coeff(0, 0) != 1)
        throw ConstantTermViolation("log needs constant term 1, got " +
                                    rat_to_string(a.coeff(0, 0)));
    Trunc t = a.trunc();
    BiSeries z = a - BiSeries::one(t);
    BiSeries r = BiSeries::zero(t), p = BiSeries::one(t);
    for (int k = 1; k <= t.nx + t.ny; ++k) {
        p = p * z;
        if (p.is_zero()) break;
        r = r + frac(k % 2 ? 1 : -1, k) * p;
    }
    return r;
}

BiSeries exp_ge(const BiSeries& a, int k) {
    BiSeries r = exp_series(a);
    BiSeries p = BiSeries::one(a.trunc());
    Rat ifac = 1;
    for (int i = 0; i < k; ++i) {
        if (i > 0) {
            p = p * a;
            ifac *= i;
        }
        r = r - Rat(1) / ifac * p;
    }
    return r;
}

BiSeries loga_ge(const BiSeries& a, int k) {
    if (a.coeff(0, 0) != 0)
        throw ConstantTermViolation("loga_ge needs zero constant term");
    BiSeries r = log_series(BiSeries::one(a.trunc()) - a);
    r = -r; // log(1/(1-a))
    BiSeries p = BiSeries::one(a.trunc());
    for (int i = 1; i < k; ++i) {
        p = p * a;
        r = r - frac(1, i) * p;
    }
    return r;
}

BiSeries reciprocal(const BiSeries& a) {
    Rat c0 = a.coeff(0, 0);
    if (c0 == 0)
        throw ConstantTermViolation("reciprocal needs nonzero constant term");
    Trunc t = a.trunc();
    // 1/a = (1/c0) * 1/(1 - z) with z = 1 - a/c0 of positive valuation.
    BiSeries z = BiSeries::one(t) - Rat(1) / c0 * a;
    BiSeries r = BiSeries::one(t), p = BiSeries::one(t);
    for (int k = 1; k <= t.nx + t.ny; ++k) {
        p = p * z;
        if (p.is_zero()) break;
        r = r + p;
    }
    return Rat(1) / c0 * r;
}

BiSeries pow_int(const BiSeries& a, int k) {
    BiSeries r = BiSeries::one(a.trunc());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

BiSeries deriv_x(const BiSeries& a) {
    BiSeries r(Trunc{a.trunc().nx - 1, a.trunc().ny});
    for (const auto& [k, c] : a.terms())
        if (k.first >= 1) r.set_coeff(k.first - 1, k.second, Rat(k.first) * c);
    return r;
}

BiSeries deriv_y(const BiSeries& a) {
    BiSeries r(Trunc{a.trunc().nx, a.trunc().ny - 1});
    for (const auto& [k, c] : a.terms())
        if (k.second >= 1) r.set_coeff(k.first, k.second - 1, Rat(k.second) * c);
    return r;
}

BiSeries rooted_deriv(const BiSeries& a) {
    return Rat(2) * divide_by_monomial(deriv_y(a), 2, 0);
}

BiSeries divide_by_monomial(const BiSeries& a, int i0, int j0) {
    BiSeries r(Trunc{a.trunc().nx - i0, a.trunc().ny - j0});
    for (const auto& [k, c] : a.terms()) {
        if (k.first < i0 || k.second < j0)
            throw DivisibilityError("term " + key_str(k.first, k.second) +
                                    " not divisible by " + key_str(i0, j0));
        r.set_coeff(k.first - i0, k.second - j0, c);
    }
    return r;
}

BiSeries mul_monomial(const BiSeries& a, int i, int j, const Rat& c) {
    BiSeries r(Trunc{a.trunc().nx + i, a.trunc().ny + j});
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms())
        r.set_coeff(k.first + i, k.second + j, c * v);
    return r;
}

namespace {

// Result bounds and well-foundedness for substitution. Plugs contribute
// exponents at least linearly in their valuations, so it is enough to check
// the first index dropped by a's truncation in each variable.
struct PlugInfo {
    bool ident;      // literal identity monomial in its own slot
    int vx, vy;      // valuations (kInfValuation when zero series)
    Trunc tr;
};

PlugInfo plug_info(const BiSeries& p, bool x_slot) {
    PlugInfo info{x_slot ? p.is_identity_x() : p.is_identity_y(),
                  p.x_valuation(), p.y_valuation(), p.trunc()};
    if (!info.ident && p.coeff(0, 0) != 0)
        throw ValuationError(
            "substitution plug must have zero constant term or be the "
            "identity monomial");
    return info;
}

} // namespace

BiSeries substitute(const BiSeries& a, const BiSeries& px, const BiSeries& py) {
    PlugInfo ix = plug_info(px, true);
    PlugInfo iy = plug_info(py, false);

    // Result bounds: meet of the plug truncations (identity slots carry no
    // truncation of their own), then shrink so that everything a's truncation
    // dropped lands outside the result rectangle. A plug with valuation v in
    // its preferred variable pushes a-terms of index i to degree >= i*v there.
    const int INF = BiSeries::kInfValuation;
    int rtx = std::min(ix.ident ? INF : ix.tr.nx, iy.ident ? INF : iy.tr.nx);
    int rty = std::min(ix.ident ? INF : ix.tr.ny, iy.ident ? INF : iy.tr.ny);
    auto cap = [](long long v) {
        return (int)std::min<long long>(v, BiSeries::kInfValuation);
    };
    if (!px.is_zero()) {
        if (ix.vx > 0)
            rtx = std::min(rtx, cap((a.trunc().nx + 1LL) * ix.vx - 1));
        else
            rty = std::min(rty, cap((a.trunc().nx + 1LL) * ix.vy - 1));
    }
    if (!py.is_zero()) {
        if (iy.vy > 0)
            rty = std::min(rty, cap((a.trunc().ny + 1LL) * iy.vy - 1));
        else
            rtx = std::min(rtx, cap((a.trunc().ny + 1LL) * iy.vx - 1));
    }
    if (rtx >= INF || rty >= INF) {
        // Only possible when a plug is zero or degenerate in one variable;
        // fall back to a's own bounds there.
        if (rtx >= INF) rtx = a.trunc().nx;
        if (rty >= INF) rty = a.trunc().ny;
    }
    if (rtx < 0 || rty < 0)
        throw ValuationError(
            "substitution not well-founded: plug valuations leave no "
            "representable result rectangle");
    Trunc rt{rtx, rty};

    auto unreachable = [&](long long i, long long j) {
        long long xdeg = i * (long long)ix.vx + j * (long long)iy.vx;
        long long ydeg = i * (long long)ix.vy + j * (long long)iy.vy;
        return xdeg > rt.nx || ydeg > rt.ny;
    };
    if (!unreachable(a.trunc().nx + 1, 0) || !unreachable(0, a.trunc().ny + 1))
        throw ValuationError("substitution not well-founded at this truncation");

    BiSeries r(rt);
    std::map<int, BiSeries> xpow, ypow;
    xpow[0] = BiSeries::one(rt);
    ypow[0] = BiSeries::one(rt);
    auto power = [&](std::map<int, BiSeries>& cache, const BiSeries& base, int e) {
        int have = cache.rbegin()->first;
        while (have < e) {
            cache[have + 1] = cache[have] * base.truncated(rt);
            ++have;
        }
        return cache[e];
    };

    for (const auto& [k, c] : a.terms()) {
        auto [i, j] = k;
        BiSeries t = BiSeries::constant(c, rt);
        if (ix.ident && iy.ident) {
            t = BiSeries::monomial(i, j, c, rt);
        } else if (ix.ident) {
            t = BiSeries::monomial(i, 0, c, rt) * power(ypow, py, j);
        } else if (iy.ident) {
            t = BiSeries::monomial(0, j, c, rt) * power(xpow, px, i);
        } else {
            t = c * (power(xpow, px, i) * power(ypow, py, j));
        }
        r = r + t;
    }
    return r;
}

BiSeries subst_x(const BiSeries& a, const BiSeries& px) {
    return substitute(a, px, BiSeries::var_y(Trunc{0, 1}));
}

BiSeries subst_y(const BiSeries& a, const BiSeries& py) {
    return substitute(a, BiSeries::var_x(Trunc{1, 0}), py);
}

} // namespace tutte
