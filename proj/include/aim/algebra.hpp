#ifndef AIM_ALGEBRA_HPP
#define AIM_ALGEBRA_HPP

// Arithmetic for polynomials in the energy variable E and truncated power
// series in u = (x - x0) whose coefficients are such polynomials.  Every AIM
// quantity lives in this ring.  All values are immutable after construction.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aim/errors.hpp"
#include "aim/real.hpp"

namespace aim {

// Trailing coefficients below kCoeffTrimFor<R> are trimmed so that a computed
// zero and a literal zero share one canonical form (see real.hpp for the
// per-type thresholds).

// ---------------------------------------------------------------------------
// PolyT: dense univariate polynomial in E, coefficient i multiplies E^i.
// Canonical zero is the empty coefficient list.
// ---------------------------------------------------------------------------
template <class R>
struct PolyT {
    std::vector<R> coeffs;

    PolyT() = default;
    explicit PolyT(std::vector<R> c) : coeffs(std::move(c)) { trim(); }

    static PolyT constant(R v) { return PolyT(std::vector<R>{v}); }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    void trim() {
        while (!coeffs.empty() && abs_of(coeffs.back()) < kCoeffTrimFor<R>)
            coeffs.pop_back();
    }
};

template <class R>
bool poly_equal(const PolyT<R>& p, const PolyT<R>& q) {
    if (p.coeffs.size() != q.coeffs.size()) return false;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != q.coeffs[i]) return false;
    return true;
}

template <class R>
PolyT<R> poly_add(const PolyT<R>& p, const PolyT<R>& q) {
    std::vector<R> r(std::max(p.coeffs.size(), q.coeffs.size()), R(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) r[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) r[i] += q.coeffs[i];
    return PolyT<R>(std::move(r));
}

template <class R>
PolyT<R> poly_scale(const PolyT<R>& p, R s) {
    std::vector<R> r(p.coeffs);
    for (auto& c : r) c *= s;
    return PolyT<R>(std::move(r));
}

template <class R>
PolyT<R> poly_sub(const PolyT<R>& p, const PolyT<R>& q) {
    return poly_add(p, poly_scale(q, R(-1)));
}

template <class R>
PolyT<R> poly_mul(const PolyT<R>& p, const PolyT<R>& q) {
    if (p.is_zero() || q.is_zero()) return PolyT<R>();
    std::vector<R> r(p.coeffs.size() + q.coeffs.size() - 1, R(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        const R pi = p.coeffs[i];
        if (pi == R(0)) continue;
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) r[i + j] += pi * q.coeffs[j];
    }
    return PolyT<R>(std::move(r));
}

template <class R>
R poly_eval(const PolyT<R>& p, R e) {
    R v(0);
    for (std::size_t i = p.coeffs.size(); i-- > 0;) v = v * e + p.coeffs[i];
    return v;
}

template <class R>
PolyT<R> poly_deriv(const PolyT<R>& p) {
    if (p.coeffs.size() <= 1) return PolyT<R>();
    std::vector<R> r(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) r[i - 1] = static_cast<R>(i) * p.coeffs[i];
    return PolyT<R>(std::move(r));
}

template <class R>
R poly_max_abs(const PolyT<R>& p) {
    R m(0);
    for (const R& c : p.coeffs)
        if (abs_of(c) > m) m = abs_of(c);
    return m;
}

// ---------------------------------------------------------------------------
// SeriesT: truncated power series in u = (x - x0); terms[j] multiplies u^j.
// Exactly order+1 slots are stored; missing terms are canonical zero.
// ---------------------------------------------------------------------------
template <class R>
struct SeriesT {
    int order = 0;
    double x0 = 0.0;
    std::vector<PolyT<R>> terms;  // size order+1

    SeriesT() : terms(1) {}
    SeriesT(int ord, double x0_) : order(ord), x0(x0_), terms(static_cast<std::size_t>(ord) + 1) {}
    SeriesT(int ord, double x0_, std::vector<PolyT<R>> t)
        : order(ord), x0(x0_), terms(std::move(t)) {
        terms.resize(static_cast<std::size_t>(ord) + 1);
    }

    const PolyT<R>& term(int j) const { return terms[static_cast<std::size_t>(j)]; }
};

template <class R>
void require_same_point(const SeriesT<R>& s, const SeriesT<R>& t, const char* op) {
    if (s.x0 != t.x0)
        throw Error(std::string(op) + ": mismatched expansion points");
}

template <class R>
SeriesT<R> series_add(const SeriesT<R>& s, const SeriesT<R>& t) {
    require_same_point(s, t, "series_add");
    const int ord = std::min(s.order, t.order);
    SeriesT<R> r(ord, s.x0);
    for (int j = 0; j <= ord; ++j) r.terms[j] = poly_add(s.terms[j], t.terms[j]);
    return r;
}

template <class R>
SeriesT<R> series_scale(const SeriesT<R>& s, R c) {
    SeriesT<R> r(s.order, s.x0);
    for (int j = 0; j <= s.order; ++j) r.terms[j] = poly_scale(s.terms[j], c);
    return r;
}

// Multiply by u (raises every power by one); the top term falls off the
// truncation edge.
template <class R>
SeriesT<R> series_shift(const SeriesT<R>& s) {
    SeriesT<R> r(s.order, s.x0);
    for (int j = 1; j <= s.order; ++j) r.terms[j] = s.terms[j - 1];
    return r;
}

// Serial reference implementation of the Cauchy product.  Kept verbatim as
// the ground truth the parallel kernel is tested and benchmarked against.
template <class R>
SeriesT<R> series_mul_serial(const SeriesT<R>& s, const SeriesT<R>& t) {
    require_same_point(s, t, "series_mul");
    const int ord = std::min(s.order, t.order);
    SeriesT<R> r(ord, s.x0);
    for (int j = 0; j <= ord; ++j) {
        PolyT<R> acc;
        for (int i = 0; i <= j; ++i) acc = poly_add(acc, poly_mul(s.terms[i], t.terms[j - i]));
        r.terms[j] = std::move(acc);
    }
    return r;
}

// Parallel kernel: output terms are independent, so the loop over j is an
// embarrassingly parallel map.  Small products are not worth the fork/join
// overhead and stay serial.
template <class R>
SeriesT<R> series_mul(const SeriesT<R>& s, const SeriesT<R>& t) {
    require_same_point(s, t, "series_mul");
    const int ord = std::min(s.order, t.order);
#ifdef _OPENMP
    if (ord >= 16 && omp_get_max_threads() > 1) {
        SeriesT<R> r(ord, s.x0);
#pragma omp parallel for schedule(dynamic, 4)
        for (int j = 0; j <= ord; ++j) {
            PolyT<R> acc;
            for (int i = 0; i <= j; ++i)
                acc = poly_add(acc, poly_mul(s.terms[i], t.terms[j - i]));
            r.terms[j] = std::move(acc);
        }
        return r;
    }
#endif
    return series_mul_serial(s, t);
}

// Term-by-term derivative in x; one order of validity is consumed.
template <class R>
SeriesT<R> series_diff(const SeriesT<R>& s) {
    if (s.order < 1)
        throw Error("series_diff: order-0 series has no derivative information left");
    SeriesT<R> r(s.order - 1, s.x0);
    for (int j = 0; j < s.order; ++j)
        r.terms[j] = poly_scale(s.terms[j + 1], static_cast<R>(j + 1));
    return r;
}

// Reciprocal via the linear recurrence r_j = -(sum_{i>=1} s_i r_{j-i}) / s_0.
// Only numeric (E-free) nonzero constant terms are invertible; anything else
// is exactly the kappa=0 / lambda_R=0 degeneracy and must route to the exact
// special-case path.
template <class R>
SeriesT<R> series_recip(const SeriesT<R>& s) {
    const PolyT<R>& c0 = s.terms[0];
    if (c0.degree() > 0)
        throw SingularCoefficient("series_recip: constant term depends on E");
    if (c0.is_zero())
        throw SingularCoefficient("series_recip: zero constant term (pole at expansion point)");
    const R inv = R(1) / c0.coeffs[0];
    SeriesT<R> r(s.order, s.x0);
    r.terms[0] = PolyT<R>::constant(inv);
    for (int j = 1; j <= s.order; ++j) {
        PolyT<R> acc;
        for (int i = 1; i <= j; ++i)
            acc = poly_add(acc, poly_mul(s.terms[i], r.terms[j - i]));
        r.terms[j] = poly_scale(acc, -inv);
    }
    return r;
}

// Value of the series at its own expansion point: the constant term.
template <class R>
PolyT<R> series_at_x0(const SeriesT<R>& s) {
    return s.terms[0];
}

template <class R>
R series_max_abs(const SeriesT<R>& s) {
    R m(0);
    for (const auto& p : s.terms) {
        const R pm = poly_max_abs(p);
        if (pm > m) m = pm;
    }
    return m;
}

// Numeric evaluation of the truncated series at (x, e).
template <class R>
R series_eval(const SeriesT<R>& s, R x, R e) {
    const R u = x - static_cast<R>(s.x0);
    R v(0);
    for (int j = s.order; j >= 0; --j) v = v * u + poly_eval(s.terms[j], e);
    return v;
}

// Public aliases: the double-precision ring is the library API surface.
using EnergyPoly = PolyT<double>;
using XSeries = SeriesT<double>;

}  // namespace aim

#endif
