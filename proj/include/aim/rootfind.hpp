#ifndef AIM_ROOTFIND_HPP
#define AIM_ROOTFIND_HPP

// Real-root location for EnergyPoly inside a search window: coarse sign scan,
// one adaptive subdivision pass per bracket, then bracketed refinement.
// These roots are the eigenvalue candidates of the quantization condition.

#include <algorithm>
#include <utility>
#include <vector>

#include "aim/algebra.hpp"
#include "aim/errors.hpp"

namespace aim {

struct RootWindow {
    double lo;
    double hi;
    double scan_step;

    RootWindow(double lo_, double hi_, double step = 0.0)
        : lo(lo_), hi(hi_), scan_step(step) {
        if (!(lo < hi)) throw Error("RootWindow: requires lo < hi");
        if (scan_step < 0.0) throw Error("RootWindow: scan_step must be positive");
        if (scan_step == 0.0) scan_step = 1e-3 * (hi - lo);  // default: 1e-3 of the width
        if (scan_step > (hi - lo) / 10.0)
            throw Error("RootWindow: scan_step must be at most a tenth of the window");
    }
};

namespace detail {

// Normalize by the largest absolute coefficient: delta coefficients grow
// factorially with the iteration count, and scaling is root-preserving.
template <class R>
PolyT<R> normalized(const PolyT<R>& p) {
    const R m = poly_max_abs(p);
    if (m == R(0)) return p;
    return poly_scale(p, R(1) / m);
}

template <class R>
bool opposite_signs(R a, R b) {
    return (a < R(0)) != (b < R(0));
}

}  // namespace detail

template <class R>
using Bracket = std::pair<R, R>;

// Sample p on a uniform grid and return every step interval across which the
// value changes sign (or touches zero on the left edge).
template <class R>
std::vector<Bracket<R>> scan_sign_changes(const PolyT<R>& p, const RootWindow& w) {
    if (p.degree() < 1)
        throw NoRoots("scan_sign_changes: degree-0 polynomial has no bracketable roots");
    const PolyT<R> q = detail::normalized(p);
    std::vector<Bracket<R>> out;
    const R lo = static_cast<R>(w.lo), hi = static_cast<R>(w.hi);
    const R step = static_cast<R>(w.scan_step);
    R x = lo, fx = poly_eval(q, x);
    while (x < hi) {
        R y = x + step;
        if (y > hi) y = hi;
        const R fy = poly_eval(q, y);
        if (fx == R(0) || detail::opposite_signs(fx, fy)) {
            // a value touching zero on a grid point triggers on both adjacent
            // intervals; merge them into one bracket
            if (!out.empty() && out.back().second == x)
                out.back().second = y;
            else
                out.emplace_back(x, y);
        }
        x = y;
        fx = fy;
    }
    return out;
}

// Bracketed refinement: bisection guarantees convergence; a secant probe is
// layered on top but is always clamped inside the current bracket.
template <class R>
R refine_root(const PolyT<R>& p, Bracket<R> bracket, double tol) {
    const PolyT<R> q = detail::normalized(p);
    R lo = bracket.first, hi = bracket.second;
    R flo = poly_eval(q, lo), fhi = poly_eval(q, hi);
    if (flo == R(0)) return lo;
    if (fhi == R(0)) return hi;
    if (!detail::opposite_signs(flo, fhi))
        throw BadBracket("refine_root: no sign change across bracket");
    const R rtol = static_cast<R>(tol);
    for (int it = 0; it < 400 && hi - lo > rtol; ++it) {
        R mid = (it % 2 == 0 && fhi != flo) ? (lo * fhi - hi * flo) / (fhi - flo)
                                            : (lo + hi) / R(2);
        // keep the secant probe strictly interior so the bracket always shrinks
        const R margin = (hi - lo) / R(64);
        if (!(mid > lo + margin) || !(mid < hi - margin)) mid = (lo + hi) / R(2);
        const R fm = poly_eval(q, mid);
        if (fm == R(0)) return mid;
        if (detail::opposite_signs(flo, fm)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return (lo + hi) / R(2);
}

// Scan + subdivide + refine.  Each coarse bracket is re-scanned once at
// step/10 so close root pairs inside one coarse cell are separated.  On top
// of the sign scan, sign changes of p' are probed: a critical point where |p|
// collapses relative to its neighbourhood is accepted as an even-multiplicity
// root (the quasi-exact spectra present their eigenvalues as double roots of
// delta, which a pure sign scan cannot see).
namespace detail {

// refine_root, but tolerant of endpoint values at rounding-noise level: when
// the detected sign change is not reproducible inside the refiner, the
// endpoint with the smaller |p| is itself a root to machine precision.
template <class R>
R refine_or_endpoint(const PolyT<R>& q, Bracket<R> br, double tol) {
    try {
        return refine_root(q, br, tol);
    } catch (const BadBracket&) {
        const R fa = abs_of(poly_eval(q, br.first));
        const R fb = abs_of(poly_eval(q, br.second));
        return fa <= fb ? br.first : br.second;
    }
}

}  // namespace detail

template <class R>
std::vector<R> real_roots(const PolyT<R>& p, const RootWindow& w, double tol = 1e-10) {
    std::vector<R> roots;
    if (p.degree() < 1) return roots;
    const PolyT<R> q = detail::normalized(p);
    const RootWindow wq(w.lo, w.hi, w.scan_step);

    std::vector<Bracket<R>> coarse;
    try {
        coarse = scan_sign_changes(q, wq);
    } catch (const NoRoots&) {
        return roots;
    }
    const R fine = static_cast<R>(w.scan_step) / R(10);
    for (const auto& br : coarse) {
        // one adaptive subdivision pass per bracket
        R x = br.first, fx = poly_eval(q, x);
        bool found = false;
        while (x < br.second) {
            R y = std::min(x + fine, br.second);
            const R fy = poly_eval(q, y);
            if (fx == R(0)) {
                roots.push_back(x);
                found = true;
            } else if (detail::opposite_signs(fx, fy)) {
                roots.push_back(detail::refine_or_endpoint(q, Bracket<R>{x, y}, tol));
                found = true;
            }
            x = y;
            fx = fy;
        }
        if (!found && detail::opposite_signs(poly_eval(q, br.first), poly_eval(q, br.second)))
            roots.push_back(detail::refine_or_endpoint(q, br, tol));
    }

    // even-multiplicity recovery via critical points of p
    const PolyT<R> dq = detail::normalized(poly_deriv(q));
    if (dq.degree() >= 1) {
        const R step = static_cast<R>(w.scan_step);
        R x = static_cast<R>(w.lo), gx = poly_eval(dq, x);
        while (x < static_cast<R>(w.hi)) {
            R y = std::min(x + step, static_cast<R>(w.hi));
            const R gy = poly_eval(dq, y);
            if (detail::opposite_signs(gx, gy)) {
                const R c = detail::refine_or_endpoint(dq, Bracket<R>{x, y}, tol);
                const R pc = abs_of(poly_eval(q, c));
                const R ngb = (abs_of(poly_eval(q, c - step)) + abs_of(poly_eval(q, c + step))) / R(2);
                if (ngb > R(0) && pc <= R(1e-6) * ngb) roots.push_back(c);
            }
            x = y;
            gx = gy;
        }
    }

    std::sort(roots.begin(), roots.end());
    // merge duplicates closer than 10*tol
    std::vector<R> merged;
    for (const R r : roots) {
        if (!merged.empty() && r - merged.back() < static_cast<R>(10 * tol)) continue;
        merged.push_back(r);
    }
    return merged;
}

}  // namespace aim

#endif
