#ifndef AIM_ENGINE_HPP
#define AIM_ENGINE_HPP

// The AIM core: run the derivative recurrence on the coefficient ring, form
// the quantization condition delta, track root convergence across iterations,
// and reconstruct wavefunction combinations by quadrature of the closed-form
// coefficients.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aim/algebra.hpp"
#include "aim/errors.hpp"
#include "aim/rootfind.hpp"

namespace aim {

// The four coefficient functions of the first-order system, expanded as
// series at x0, plus the closed-form callables used for quadrature (the
// truncated series would pollute the integral away from x0).
//
// pole_order: 0 for systems regular at x0.  1 means the raw c0 and d0 carry a
// simple pole at x0 (the z=0 regular singular point of the Rashba system); in
// that case the stored c0/d0 slots hold the cleared forms u*c0 and u*d0, the
// recurrence runs in the matching cleared representation, and the
// quantization condition is read off at the structural series order instead
// of the constant term.  pole_order 0 reproduces the textbook recurrence
// exactly.
template <class R>
struct CoefficientSetT {
    SeriesT<R> a0, b0, c0, d0;
    double x0 = 0.0;
    int order = 0;
    int pole_order = 0;

    using Callable = std::function<double(double, double)>;  // (x, E) -> value
    Callable fa, fb, fc, fd;
    // denominators of the rational coefficients, used for pole-on-grid checks
    std::vector<std::function<double(double)>> denominators;
};

template <class R>
struct AimLevelT {
    int n = 0;
    SeriesT<R> a, b, c, d;
    R scale = R(1);  // cumulative joint normalization: true values = stored * scale
    int pole_order = 0;
};

struct SpectrumEntry {
    double E = 0.0;
    int first_stable_iteration = 0;  // iteration at which the accepted streak began
    double drift = 0.0;              // |E_n - E_{n-1}| at acceptance
    double residual = 0.0;           // |delta(E)| of the max-coefficient-normalized delta
    int branch = 0;                  // 1, 2, or 3 (= both)
    std::vector<double> drift_history;
};

struct Spectrum {
    std::vector<SpectrumEntry> eigenvalues;  // strictly increasing in E
    int iterations_used = 0;
    bool converged = true;  // false: max_iter reached with nothing stable (partial result)
};

struct SolveOptions {
    int max_iter = 40;
    double conv_tol = 1e-8;
    RootWindow window;
    int min_stable = 3;

    explicit SolveOptions(RootWindow w) : window(w) {}
};

struct WaveSample {
    std::vector<double> grid;
    std::vector<double> values;
    double gamma = 0.0;
    int branch = 1;
};

template <class R>
AimLevelT<R> init_level(const CoefficientSetT<R>& c) {
    return AimLevelT<R>{0, c.a0, c.b0, c.c0, c.d0, R(1), c.pole_order};
}

// One step of the recurrence
//   a_n = a0 a_{n-1} + a_{n-1}' + d0 b_{n-1}   (and the b, c, d analogues),
// generalized to the cleared representation when pole_order = 1 (each raw
// 1/u factor shows up as a u-shift and a level-index counterterm).  The four
// results are jointly rescaled by the reciprocal of the largest coefficient:
// the iterates grow factorially, and a joint positive rescale provably
// preserves the roots of delta.
template <class R>
AimLevelT<R> iterate(const AimLevelT<R>& prev, const CoefficientSetT<R>& c) {
    if (prev.a.order < 1)
        throw OrderExhausted("iterate: series order budget exhausted at level " +
                             std::to_string(prev.n) + "; restart with a larger order");
    const int n = prev.n + 1;
    SeriesT<R> an, bn, cn, dn;
    if (c.pole_order == 0) {
        an = series_add(series_add(series_mul(c.a0, prev.a), series_diff(prev.a)),
                        series_mul(c.d0, prev.b));
        bn = series_add(series_add(series_mul(c.b0, prev.a), series_diff(prev.b)),
                        series_mul(c.c0, prev.b));
        cn = series_add(series_add(series_mul(c.c0, prev.c), series_diff(prev.c)),
                        series_mul(c.b0, prev.d));
        dn = series_add(series_add(series_mul(c.d0, prev.c), series_diff(prev.d)),
                        series_mul(c.a0, prev.d));
    } else {
        // cleared representation: level n stores u^{n} c-chain / u^{n-1}... the
        // bookkeeping reduces to a shift per raw product plus -m * identity
        const R m = static_cast<R>(prev.n);
        const R nn = static_cast<R>(n);
        an = series_add(
            series_add(series_shift(series_mul(c.a0, prev.a)),
                       series_add(series_shift(series_diff(prev.a)), series_scale(prev.a, -m))),
            series_mul(c.d0, prev.b));
        bn = series_add(
            series_add(series_shift(series_mul(c.b0, prev.a)),
                       series_add(series_shift(series_diff(prev.b)), series_scale(prev.b, -m))),
            series_mul(c.c0, prev.b));
        cn = series_add(
            series_add(series_mul(c.c0, prev.c),
                       series_add(series_shift(series_diff(prev.c)), series_scale(prev.c, -nn))),
            series_shift(series_mul(c.b0, prev.d)));
        dn = series_add(
            series_add(series_mul(c.d0, prev.c),
                       series_add(series_shift(series_diff(prev.d)), series_scale(prev.d, -nn))),
            series_shift(series_mul(c.a0, prev.d)));
    }
    R mx = series_max_abs(an);
    mx = std::max(mx, series_max_abs(bn));
    mx = std::max(mx, series_max_abs(cn));
    mx = std::max(mx, series_max_abs(dn));
    R scale = prev.scale;
    if (mx > R(0)) {
        const R inv = R(1) / mx;
        an = series_scale(an, inv);
        bn = series_scale(bn, inv);
        cn = series_scale(cn, inv);
        dn = series_scale(dn, inv);
        scale = prev.scale * mx;
    }
    return AimLevelT<R>{n, std::move(an), std::move(bn), std::move(cn), std::move(dn), scale,
                        prev.pole_order};
}

namespace detail {

// Coefficient of u^m in the product s*t minus u^m in p*q (the bilinear delta
// combination), as an EnergyPoly.
template <class R>
PolyT<R> cross_term(const SeriesT<R>& s, const SeriesT<R>& t, const SeriesT<R>& p,
                    const SeriesT<R>& q, int m) {
    PolyT<R> acc;
    for (int j = 0; j <= m; ++j) {
        acc = poly_add(acc, poly_mul(s.term(j), t.term(m - j)));
        acc = poly_sub(acc, poly_mul(p.term(j), q.term(m - j)));
    }
    return acc;
}

template <class R>
PolyT<R> normalize_poly(const PolyT<R>& p) {
    const R m = poly_max_abs(p);
    if (m == R(0)) return p;
    return poly_scale(p, R(1) / m);
}

}  // namespace detail

// Quantization condition: delta1 = b_{n-1} a_n - a_{n-1} b_n and delta2 from
// the (c, d) chain, both read at x0 and normalized by their largest
// coefficient.  In the cleared representation the leading Laurent orders of
// the combination cancel identically, so the condition lives at series order
// pole_order*(n-1) for delta1 and pole_order*n for delta2; with pole_order 0
// both reduce to the plain constant term.
template <class R>
std::pair<PolyT<R>, PolyT<R>> delta(const AimLevelT<R>& prev, const AimLevelT<R>& cur) {
    if (cur.n != prev.n + 1) throw Error("delta: levels must be consecutive");
    const int s = prev.pole_order;
    const int m1 = s * prev.n;
    const int m2 = s * cur.n;
    if (m1 > std::min(prev.a.order, cur.a.order) || m2 > std::min(prev.c.order, cur.c.order))
        throw OrderExhausted("delta: series order budget too small for the cleared condition");
    PolyT<R> d1 = detail::cross_term(prev.b, cur.a, prev.a, cur.b, m1);
    PolyT<R> d2 = detail::cross_term(prev.d, cur.c, prev.c, cur.d, m2);
    return {detail::normalize_poly(d1), detail::normalize_poly(d2)};
}

namespace detail {

template <class R>
struct Track {
    R value;
    int streak = 1;
    int streak_start = 0;
    R drift = R(0);
    std::vector<double> drift_history;
};

}  // namespace detail

// Iterate levels, at each n >= 2 locate the roots of delta1/delta2 in the
// window, match them to the previous iteration's roots by nearest neighbour,
// and accept a root once it has persisted within conv_tol for min_stable
// consecutive iterations.  Roots accepted by both branches within
// 10*conv_tol are reported once with branch = both.
template <class R>
Spectrum solve_spectrum(const CoefficientSetT<R>& c, const SolveOptions& opts) {
    if (series_max_abs(c.b0) == R(0) && series_max_abs(c.d0) == R(0))
        throw DecoupledSystem(
            "solve_spectrum: b0 and d0 are identically zero; use the exact decoupled solver");
    // one series order per level plus the final delta read
    int cap = opts.max_iter;
    if (c.pole_order > 0) cap = std::min(cap, c.order / 2);
    if (c.order < (c.pole_order == 0 ? cap + 2 : 2 * cap))
        throw OrderExhausted("solve_spectrum: order must be at least max_iter + 2");

    struct Accepted {
        R value;
        int branch;
        int streak_start;
        R drift;
        R residual;
        std::vector<double> drift_history;
    };
    std::vector<Accepted> accepted;
    std::vector<detail::Track<R>> tracks[2];

    AimLevelT<R> prev = init_level(c);
    AimLevelT<R> cur = iterate(prev, c);
    int iterations_used = 1;
    const double root_tol = std::min(1e-12, opts.conv_tol * 1e-3);

    for (int n = 2; n <= cap; ++n) {
        prev = std::move(cur);
        cur = iterate(prev, c);
        iterations_used = n;
        auto [d1, d2] = delta(prev, cur);
        const PolyT<R>* ds[2] = {&d1, &d2};
        for (int br = 0; br < 2; ++br) {
            const PolyT<R>& dp = *ds[br];
            if (dp.degree() < 1) {
                tracks[br].clear();
                continue;
            }
            std::vector<R> roots = real_roots(dp, opts.window, root_tol);
            std::vector<detail::Track<R>> next;
            next.reserve(roots.size());
            for (const R r : roots) {
                const detail::Track<R>* best = nullptr;
                for (const auto& t : tracks[br])
                    if (!best || abs_of(r - t.value) < abs_of(r - best->value)) best = &t;
                detail::Track<R> nt;
                nt.value = r;
                if (best && abs_of(r - best->value) <= static_cast<R>(opts.conv_tol)) {
                    nt.streak = best->streak + 1;
                    nt.streak_start = best->streak == 1 ? n - 1 : best->streak_start;
                    nt.drift = abs_of(r - best->value);
                    nt.drift_history = best->drift_history;
                } else {
                    nt.streak = 1;
                    nt.streak_start = n;
                }
                nt.drift_history.push_back(to_double(nt.drift));
                if (nt.streak >= opts.min_stable) {
                    const R res = abs_of(poly_eval(dp, r));
                    bool merged = false;
                    for (auto& acc : accepted) {
                        if (abs_of(acc.value - r) <= static_cast<R>(10 * opts.conv_tol)) {
                            acc.value = r;  // latest (most converged) estimate
                            if (acc.branch != br + 1) acc.branch = 3;
                            acc.drift = std::min(acc.drift, nt.drift);
                            acc.residual = res;
                            acc.drift_history = nt.drift_history;
                            merged = true;
                            break;
                        }
                    }
                    if (!merged)
                        accepted.push_back({r, br + 1, nt.streak_start, nt.drift, res,
                                            nt.drift_history});
                }
                next.push_back(std::move(nt));
            }
            tracks[br] = std::move(next);
        }
    }

    Spectrum sp;
    sp.iterations_used = iterations_used;
    sp.converged = !accepted.empty();
    std::sort(accepted.begin(), accepted.end(),
              [](const Accepted& x, const Accepted& y) { return x.value < y.value; });
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        // cross-branch merge of near-identical eigenvalues
        if (i + 1 < accepted.size() &&
            abs_of(accepted[i + 1].value - accepted[i].value) <=
                static_cast<R>(10 * opts.conv_tol)) {
            if (accepted[i + 1].branch != accepted[i].branch) accepted[i + 1].branch = 3;
            accepted[i + 1].streak_start =
                std::min(accepted[i + 1].streak_start, accepted[i].streak_start);
            accepted[i + 1].drift = std::min(accepted[i + 1].drift, accepted[i].drift);
            continue;
        }
        SpectrumEntry e;
        e.E = to_double(accepted[i].value);
        e.first_stable_iteration = accepted[i].streak_start;
        e.drift = to_double(accepted[i].drift);
        e.residual = to_double(accepted[i].residual);
        e.branch = accepted[i].branch;
        e.drift_history = accepted[i].drift_history;
        sp.eigenvalues.push_back(std::move(e));
    }
    return sp;
}

namespace detail {

// gamma from the pointwise consistency of (phi1 + g phi2)' = (a0 + g d0)
// (phi1 + g phi2) at x0, which closes into g^2 d0 + g (a0 - c0) - b0 = 0.
// The level ratio b_n/a_n of the recurrence is the fallback; at x0 = 0 it is
// identically degenerate for parity-structured systems (one chain's constant
// term vanishes at every level), so the quadratic is the primary route.  The
// root giving the faster-decaying combination is selected.
template <class R>
double wave_gamma(const CoefficientSetT<R>& c, const AimLevelT<R>& level, double E, int branch) {
    const double x0 = c.x0;
    const double A = c.fa(x0, E), B = c.fb(x0, E), C = c.fc(x0, E), D = c.fd(x0, E);
    const double lead = branch == 1 ? D : B;        // quadratic coefficient
    const double lin = branch == 1 ? A - C : C - A;  // linear coefficient
    const double rhs = branch == 1 ? B : D;          // constant term (negated)
    const double scale = std::max({std::fabs(A), std::fabs(B), std::fabs(C), std::fabs(D), 1.0});
    auto decay_rate = [&](double g) { return branch == 1 ? A + g * D : C + g * B; };
    if (std::fabs(lead) > 1e-12 * scale) {
        const double disc = lin * lin + 4.0 * lead * rhs;
        if (disc < 0.0)
            throw GammaSingular("wavefunction: no real gamma solves the consistency condition");
        const double sq = std::sqrt(disc);
        const double g1 = (-lin + sq) / (2.0 * lead);
        const double g2 = (-lin - sq) / (2.0 * lead);
        return decay_rate(g1) <= decay_rate(g2) ? g1 : g2;
    }
    if (std::fabs(lin) > 1e-12 * scale) return rhs / lin;
    // fully degenerate at x0: fall back to the level ratio of the recurrence
    const PolyT<R>& num = branch == 1 ? series_at_x0(level.b) : series_at_x0(level.d);
    const PolyT<R>& den = branch == 1 ? series_at_x0(level.a) : series_at_x0(level.c);
    const double dv = to_double(poly_eval(den, static_cast<R>(E)));
    const double nv = to_double(poly_eval(num, static_cast<R>(E)));
    if (std::fabs(dv) <= 1e-12 * std::max(1.0, std::fabs(nv)))
        throw GammaSingular("wavefunction: a(x0)(E) = 0, gamma undefined");
    return nv / dv;
}

// Locate a sign change of den between xa and xb by bisection.
inline double locate_pole(const std::function<double(double)>& den, double xa, double xb) {
    double fa = den(xa);
    for (int it = 0; it < 200 && xb - xa > 1e-15 * std::max(1.0, std::fabs(xb)); ++it) {
        const double mid = 0.5 * (xa + xb);
        const double fm = den(mid);
        if ((fa < 0) != (fm < 0)) {
            xb = mid;
        } else {
            xa = mid;
            fa = fm;
        }
    }
    return 0.5 * (xa + xb);
}

}  // namespace detail

// Reconstruct the combination phi1 + gamma1 phi2 (branch 1) or
// phi2 + gamma2 phi1 (branch 2) as exp of the running integral of the
// closed-form integrand, by composite Simpson from x0.  gamma is frozen at
// its value at x0.
template <class R>
WaveSample wavefunction_combination(const CoefficientSetT<R>& c, const AimLevelT<R>& level,
                                    double E, int branch, const std::vector<double>& grid) {
    if (grid.size() < 2) throw Error("wavefunction: grid needs at least two points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw Error("wavefunction: grid must be strictly increasing");

    const double gamma = detail::wave_gamma(c, level, E, branch);
    auto f = [&](double x) {
        return branch == 1 ? c.fa(x, E) + gamma * c.fd(x, E) : c.fc(x, E) + gamma * c.fb(x, E);
    };

    // A denominator zero crossed by the integration range is a pole unless the
    // numerator cancels it at this E (the quasi-exact energies do exactly
    // that); probe the integrand close to the crossing to tell the two apart.
    const double range_lo = std::min(c.x0, grid.front());
    const double range_hi = std::max(c.x0, grid.back());
    for (const auto& den : c.denominators) {
        const int probes = 2048;
        double xa = range_lo, da = den(xa);
        for (int i = 1; i <= probes; ++i) {
            const double xb = range_lo + (range_hi - range_lo) * i / probes;
            const double db = den(xb);
            if ((da < 0) != (db < 0)) {
                const double xp = detail::locate_pole(den, xa, xb);
                const double h = 1e-8 * std::max(1.0, std::fabs(xp));
                const double near = std::max(std::fabs(f(xp - h)), std::fabs(f(xp + h)));
                const double far = std::fabs(f(xp - 1e-2)) + std::fabs(f(xp + 1e-2));
                // a simple pole grows ~1e6x between the far and near probes;
                // a cancelled one stays at the far scale
                if (!std::isfinite(near) || near > 1e3 * (1.0 + far))
                    throw PoleOnGrid(xp, "wavefunction: integrand pole inside the grid at x = " +
                                             std::to_string(xp));
            }
            xa = xb;
            da = db;
        }
    }

    WaveSample w;
    w.grid = grid;
    w.gamma = gamma;
    w.branch = branch;
    w.values.reserve(grid.size());
    // running integral from x0, Simpson on each panel with its midpoint
    auto panel = [&](double a, double b) {
        const double m = 0.5 * (a + b);
        const double v = (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
        if (!std::isfinite(v))
            throw PoleOnGrid(m, "wavefunction: non-finite integrand near x = " + std::to_string(m));
        return v;
    };
    double x_prev = c.x0, integral = 0.0;
    for (double x : grid) {
        // split long jumps (x0 to the first grid point) into fine panels
        const double span = x - x_prev;
        const int nseg = std::max(1, static_cast<int>(std::ceil(std::fabs(span) / 1e-2)));
        for (int s = 0; s < nseg; ++s)
            integral += panel(x_prev + span * s / nseg, x_prev + span * (s + 1) / nseg);
        w.values.push_back(std::exp(integral));
        x_prev = x;
    }
    return w;
}

}  // namespace aim

#endif
