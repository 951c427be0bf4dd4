#ifndef AIM_MODELS_HPP
#define AIM_MODELS_HPP

// Coefficient-set builders for the two built-in Hamiltonians plus the
// analytic oracles for their exactly solvable limits.  Units: hbar = omega =
// m = 1 for the two-level model, hbar = m* = confinement omega0 = 1 for the
// spin-orbit dot.

#include <cmath>
#include <optional>
#include <vector>

#include "aim/engine.hpp"
#include "aim/errors.hpp"

namespace aim {

struct RabiParams {
    double omega0 = 0.0;  // atomic level splitting
    double kappa = 0.0;   // coupling strength; 0 routes to the exact oracle
};

struct RashbaParams {
    double lambdaR = 0.0;  // spin-orbit strength; 0 routes to the decoupled oracle
    double B = 0.0;        // magnetic field magnitude
    int k = 0;             // angular quantum number, >= 0
    double gmu = 1.0;      // combined Zeeman factor g*mu
    double echarge = 1.0;  // charge entering omega_c = e*B
};

inline double rashba_omega_c(const RashbaParams& p) { return p.echarge * p.B; }
inline double rashba_omega(const RashbaParams& p) {
    const double wc = rashba_omega_c(p);
    return std::sqrt(1.0 + 0.25 * wc * wc);
}

// a0 = x(2E-1+k^2-2w0)/(2x^2-k^2),  b0 = k(1-2E-2x^2-2w0)/(sqrt2 (2x^2-k^2)),
// c0, d0 the same with the sign of w0 flipped.  Expanded at x0 = 0 through
// series_recip of the shared denominator.
template <class R>
CoefficientSetT<R> rabi_coefficients(const RabiParams& p, int order) {
    if (p.kappa == 0.0)
        throw DecoupledSystem("rabi_coefficients: kappa = 0 decouples; use rabi_exact_special");
    const R kap = static_cast<R>(p.kappa);
    const R w0 = static_cast<R>(p.omega0);
    const R s2 = sqrt_of(R(2));

    SeriesT<R> den(order, 0.0);
    den.terms[0] = PolyT<R>::constant(-kap * kap);
    if (order >= 2) den.terms[2] = PolyT<R>::constant(R(2));
    const SeriesT<R> rec = series_recip(den);

    auto make = [&](std::vector<std::pair<int, PolyT<R>>> num) {
        SeriesT<R> s(order, 0.0);
        for (auto& [j, poly] : num)
            if (j <= order) s.terms[j] = std::move(poly);
        return series_mul(s, rec);
    };
    CoefficientSetT<R> c;
    c.a0 = make({{1, PolyT<R>({kap * kap - R(1) - R(2) * w0, R(2)})}});
    c.b0 = make({{0, PolyT<R>({kap * (R(1) - R(2) * w0) / s2, -R(2) * kap / s2})},
                 {2, PolyT<R>::constant(-R(2) * kap / s2)}});
    c.c0 = make({{1, PolyT<R>({kap * kap - R(1) + R(2) * w0, R(2)})}});
    c.d0 = make({{0, PolyT<R>({kap * (R(1) + R(2) * w0) / s2, -R(2) * kap / s2})},
                 {2, PolyT<R>::constant(-R(2) * kap / s2)}});
    c.x0 = 0.0;
    c.order = order;
    c.pole_order = 0;

    const double kd = p.kappa, wd = p.omega0, sd = std::sqrt(2.0);
    auto den_f = [kd](double x) { return 2.0 * x * x - kd * kd; };
    c.fa = [kd, wd, den_f](double x, double E) {
        return x * (2.0 * E - 1.0 + kd * kd - 2.0 * wd) / den_f(x);
    };
    c.fb = [kd, wd, sd, den_f](double x, double E) {
        return kd * (1.0 - 2.0 * E - 2.0 * x * x - 2.0 * wd) / (sd * den_f(x));
    };
    c.fc = [kd, wd, den_f](double x, double E) {
        return x * (2.0 * E - 1.0 + kd * kd + 2.0 * wd) / den_f(x);
    };
    c.fd = [kd, wd, sd, den_f](double x, double E) {
        return kd * (1.0 - 2.0 * E - 2.0 * x * x + 2.0 * wd) / (sd * den_f(x));
    };
    c.denominators = {den_f};
    return c;
}

// Closed-form eigenvalues for the known exact families: kappa = 0 ladders and
// the displaced-oscillator family at omega0 = 0 (E = n + 1/2 - kappa^2/2).
inline std::optional<double> rabi_exact_special(const RabiParams& p, int n) {
    if (n < 0) return std::nullopt;
    if (p.kappa == 0.0 && p.omega0 == 0.0) return n + 0.5;
    if (p.kappa == 0.0 && p.omega0 == 0.5) return static_cast<double>(n);
    if (p.omega0 == 0.0) return n + 0.5 - 0.5 * p.kappa * p.kappa;
    return std::nullopt;
}

// Full exact spectrum where a closed form exists: for kappa = 0 the two
// decoupled ladders E = m + 1/2 -/+ omega0 merged (exact degeneracies
// reported once); for omega0 = 0 the displaced-oscillator family.
inline std::optional<std::vector<double>> rabi_exact_spectrum(const RabiParams& p, int n_max) {
    std::vector<double> out;
    if (p.kappa == 0.0) {
        std::vector<double> all;
        for (int m = 0; m <= n_max + 1; ++m) {
            all.push_back(m + 0.5 - p.omega0);
            all.push_back(m + 0.5 + p.omega0);
        }
        std::sort(all.begin(), all.end());
        for (double v : all) {
            if (!out.empty() && std::fabs(v - out.back()) < 1e-12) continue;
            out.push_back(v);
            if (static_cast<int>(out.size()) > n_max) break;
        }
        return out;
    }
    if (p.omega0 == 0.0) {
        for (int n = 0; n <= n_max; ++n) out.push_back(*rabi_exact_special(p, n));
        return out;
    }
    return std::nullopt;
}

// a0 = w(2E+l^2+Bgm-wc k-2w(k+1))/(4w^2 z+l^2), b0, c0, d0 per the coupled
// system in z; c0 and d0 carry a raw 1/z factor, so the builder stores the
// cleared forms z*c0 and z*d0 and marks pole_order = 1 (the recurrence and
// the quantization read-off run in the cleared representation).  The
// closed-form callables keep the raw 1/z forms for quadrature away from 0.
template <class R>
CoefficientSetT<R> rashba_coefficients(const RashbaParams& p, int order) {
    if (p.lambdaR == 0.0)
        throw DecoupledSystem(
            "rashba_coefficients: lambda_R = 0 decouples; use rashba_decoupled_oracle");
    const R lam = static_cast<R>(p.lambdaR);
    const R Bf = static_cast<R>(p.B);
    const R gmu = static_cast<R>(p.gmu);
    const R kk = static_cast<R>(p.k);
    const R wc = static_cast<R>(rashba_omega_c(p));
    const R w = sqrt_of(R(1) + wc * wc / R(4));

    SeriesT<R> den(order, 0.0);
    den.terms[0] = PolyT<R>::constant(lam * lam);
    if (order >= 1) den.terms[1] = PolyT<R>::constant(R(4) * w * w);
    const SeriesT<R> rec = series_recip(den);

    auto make = [&](std::vector<std::pair<int, PolyT<R>>> num) {
        SeriesT<R> s(order, 0.0);
        for (auto& [j, poly] : num)
            if (j <= order) s.terms[j] = std::move(poly);
        return series_mul(s, rec);
    };
    CoefficientSetT<R> c;
    c.a0 = make({{0, PolyT<R>({w * (lam * lam + Bf * gmu - wc * kk - R(2) * w * (kk + R(1))),
                               R(2) * w})}});
    c.b0 = make({{0, PolyT<R>({lam / R(2) * (Bf * gmu + wc * (kk + R(1)) - R(2) * w * kk), -lam})},
                 {1, PolyT<R>::constant(R(2) * lam * w * w)}});
    // cleared z*c0 and z*d0
    c.c0 = make({{0, PolyT<R>::constant(-lam * lam * (R(1) + kk))},
                 {1, PolyT<R>({w * (-Bf * gmu - wc * (kk + R(1)) - R(2) * w * (kk + R(2))) +
                                   lam * lam * w,
                               R(2) * w})}});
    c.d0 = make({{0, PolyT<R>({lam / R(2) * (Bf * gmu - wc * kk - R(2) * w * (kk + R(1))), lam})},
                 {1, PolyT<R>::constant(-R(2) * lam * w * w)}});
    c.x0 = 0.0;
    c.order = order;
    c.pole_order = 1;

    const double l = p.lambdaR, Bd = p.B, g = p.gmu, kd = p.k;
    const double wcd = rashba_omega_c(p), wd = rashba_omega(p);
    auto den_f = [wd, l](double z) { return 4.0 * wd * wd * z + l * l; };
    c.fa = [=](double z, double E) {
        return wd * (2.0 * E + l * l + Bd * g - wcd * kd - 2.0 * wd * (kd + 1.0)) / den_f(z);
    };
    c.fb = [=](double z, double E) {
        return l * (-2.0 * E + Bd * g + wcd * (kd + 1.0) - 2.0 * wd * kd + 4.0 * wd * wd * z) /
               (2.0 * den_f(z));
    };
    c.fc = [=](double z, double E) {
        return (wd * z * (2.0 * E - Bd * g - wcd * (kd + 1.0) - 2.0 * wd * (kd + 2.0)) -
                l * l * (1.0 + kd - wd * z)) /
               (z * den_f(z));
    };
    c.fd = [=](double z, double E) {
        return l * (2.0 * E + Bd * g - wcd * kd - 2.0 * wd * (kd + 1.0) - 4.0 * wd * wd * z) /
               (2.0 * z * den_f(z));
    };
    c.denominators = {den_f, [](double z) { return z; }};
    return c;
}

// lambda_R = 0 limit: polynomial solutions z^m of the separated equations
// give two analytic ladders merged into one sorted spectrum.
inline std::vector<double> rashba_oracle_up(const RashbaParams& p, int count) {
    const double w = rashba_omega(p), wc = rashba_omega_c(p);
    std::vector<double> v;
    for (int m = 0; m < count; ++m)
        v.push_back(w * (2 * m + p.k + 1) + p.k * wc / 2.0 - p.gmu * p.B / 2.0);
    return v;
}

inline std::vector<double> rashba_oracle_down(const RashbaParams& p, int count) {
    const double w = rashba_omega(p), wc = rashba_omega_c(p);
    std::vector<double> v;
    for (int m = 0; m < count; ++m)
        v.push_back(w * (2 * m + p.k + 2) + (p.k + 1) * wc / 2.0 + p.gmu * p.B / 2.0);
    return v;
}

inline std::vector<double> rashba_decoupled_oracle(const RashbaParams& p, int n_max) {
    std::vector<double> all = rashba_oracle_up(p, n_max + 1);
    const std::vector<double> dn = rashba_oracle_down(p, n_max + 1);
    all.insert(all.end(), dn.begin(), dn.end());
    std::sort(all.begin(), all.end());
    all.resize(static_cast<std::size_t>(n_max) + 1);
    return all;
}

// Default search windows bracketing every tabulated value with margin.
inline RootWindow rabi_window(const RabiParams& p, int n_max) {
    return RootWindow(-(std::fabs(p.omega0) + p.kappa * p.kappa + 2.0), n_max + 3.0);
}
inline RootWindow rashba_window(const RashbaParams& p, int n_max) {
    return RootWindow(-(p.k + p.B + 4.0), 2.0 * n_max + p.k + 6.0);
}

}  // namespace aim

#endif
