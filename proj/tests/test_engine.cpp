#include <doctest.h>

#include <cmath>

#include "aim/engine.hpp"
#include "aim/models.hpp"

using aim::EnergyPoly;
using aim::XSeries;
using aim::wide_real;

namespace {

// A regular 2x2 system with constant coefficients, handy for hand checks.
aim::CoefficientSetT<double> constant_system(double a, double b, double c, double d, int order) {
    aim::CoefficientSetT<double> cs;
    cs.a0 = XSeries(order, 0.0);
    cs.b0 = XSeries(order, 0.0);
    cs.c0 = XSeries(order, 0.0);
    cs.d0 = XSeries(order, 0.0);
    cs.a0.terms[0] = EnergyPoly::constant(a);
    cs.b0.terms[0] = EnergyPoly::constant(b);
    cs.c0.terms[0] = EnergyPoly::constant(c);
    cs.d0.terms[0] = EnergyPoly::constant(d);
    cs.x0 = 0.0;
    cs.order = order;
    cs.pole_order = 0;
    cs.fa = [a](double, double) { return a; };
    cs.fb = [b](double, double) { return b; };
    cs.fc = [c](double, double) { return c; };
    cs.fd = [d](double, double) { return d; };
    return cs;
}

}  // namespace

TEST_CASE("init_level copies the coefficients at level 0") {
    const auto c = aim::rabi_coefficients<double>({0.0, 1.0}, 8);
    const auto l0 = aim::init_level(c);
    CHECK(l0.n == 0);
    CHECK(l0.scale == doctest::Approx(1.0));
    CHECK(l0.a.order == 8);
    // a0 has numerator proportional to x: its value at x0 = 0 is the zero poly
    CHECK(aim::series_at_x0(l0.a).is_zero());
}

TEST_CASE("iterate reproduces the hand-expanded level 1 (kappa=1, omega0=0)") {
    // a1(0) = (2E-1)^2/2 - 2E = 2E^2 - 4E + 1/2 before rescaling
    const auto c = aim::rabi_coefficients<double>({0.0, 1.0}, 8);
    const auto l1 = aim::iterate(aim::init_level(c), c);
    CHECK(l1.n == 1);
    const EnergyPoly a1 = aim::poly_scale(aim::series_at_x0(l1.a), l1.scale);
    REQUIRE(a1.degree() == 2);
    CHECK(a1.coeffs[0] == doctest::Approx(0.5));
    CHECK(a1.coeffs[1] == doctest::Approx(-4.0));
    CHECK(a1.coeffs[2] == doctest::Approx(2.0));
}

TEST_CASE("iterate is linear: zero in, zero out; doubling (a,b) doubles (a,b)") {
    const auto c = aim::rabi_coefficients<double>({0.5, 0.5}, 8);
    auto zero = aim::init_level(c);
    zero.a = XSeries(8, 0.0);
    zero.b = XSeries(8, 0.0);
    zero.c = XSeries(8, 0.0);
    zero.d = XSeries(8, 0.0);
    const auto next = aim::iterate(zero, c);
    for (int j = 0; j <= next.a.order; ++j) {
        CHECK(next.a.term(j).is_zero());
        CHECK(next.b.term(j).is_zero());
    }

    const auto base = aim::init_level(c);
    auto doubled = base;
    doubled.a = aim::series_scale(base.a, 2.0);
    doubled.b = aim::series_scale(base.b, 2.0);
    const auto n1 = aim::iterate(base, c);
    const auto n2 = aim::iterate(doubled, c);
    // undo the joint rescaling before comparing the (a, b) pair
    for (int j = 0; j <= n1.a.order; ++j) {
        const EnergyPoly lhs = aim::poly_scale(n2.a.term(j), n2.scale);
        const EnergyPoly rhs = aim::poly_scale(n1.a.term(j), 2.0 * n1.scale);
        CHECK(aim::poly_max_abs(aim::poly_sub(lhs, rhs)) <=
              1e-12 * std::max(1.0, aim::poly_max_abs(rhs)));
    }
}

TEST_CASE("iterate throws OrderExhausted when the budget runs out") {
    const auto c = aim::rabi_coefficients<double>({0.0, 0.5}, 3);
    auto level = aim::init_level(c);
    level = aim::iterate(level, c);
    level = aim::iterate(level, c);
    level = aim::iterate(level, c);
    CHECK_THROWS_AS(aim::iterate(level, c), aim::OrderExhausted);
}

TEST_CASE("delta of a decoupled system is the zero polynomial") {
    auto cs = constant_system(-1.0, 0.0, -2.0, 0.0, 6);
    cs.a0.terms[1] = EnergyPoly({0.0, 1.0});  // make a0 x- and E-dependent
    const auto l0 = aim::init_level(cs);
    const auto l1 = aim::iterate(l0, cs);
    const auto [d1, d2] = aim::delta(l0, l1);
    CHECK(d1.is_zero());
    CHECK(d2.is_zero());
    // the engine refuses such systems outright
    aim::SolveOptions opts(aim::RootWindow(-1.0, 1.0));
    CHECK_THROWS_AS(aim::solve_spectrum(cs, opts), aim::DecoupledSystem);
}

TEST_CASE("delta is bilinear in the level scales") {
    const auto c = aim::rabi_coefficients<double>({0.5, 1.0}, 10);
    auto l1 = aim::iterate(aim::init_level(c), c);
    auto l2 = aim::iterate(l1, c);
    const auto [d1, d2] = aim::delta(l1, l2);

    auto l1s = l1;
    l1s.a = aim::series_scale(l1.a, 3.0);
    l1s.b = aim::series_scale(l1.b, 3.0);
    l1s.c = aim::series_scale(l1.c, 3.0);
    l1s.d = aim::series_scale(l1.d, 3.0);
    auto l2s = l2;
    l2s.a = aim::series_scale(l2.a, 0.5);
    l2s.b = aim::series_scale(l2.b, 0.5);
    l2s.c = aim::series_scale(l2.c, 0.5);
    l2s.d = aim::series_scale(l2.d, 0.5);
    // delta normalizes by the max coefficient, so the root sets must agree
    const auto [e1, e2] = aim::delta(l1s, l2s);
    const aim::RootWindow w(-2.0, 4.0, 0.002);
    const auto r1 = aim::real_roots(d1, w, 1e-11);
    const auto r2 = aim::real_roots(e1, w, 1e-11);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i] == doctest::Approx(r2[i]).epsilon(1e-9));
}

TEST_CASE("solve_spectrum reproduces the quasi-exact family (omega0=0, kappa=0.5)") {
    const auto c = aim::rabi_coefficients<wide_real>({0.0, 0.5}, 42);
    aim::SolveOptions opts(aim::rabi_window({0.0, 0.5}, 5));
    opts.max_iter = 40;
    const aim::Spectrum sp = aim::solve_spectrum(c, opts);
    REQUIRE(sp.eigenvalues.size() >= 6);
    for (int n = 0; n < 6; ++n)
        CHECK(sp.eigenvalues[n].E == doctest::Approx(n + 0.375).epsilon(1e-8));
}

TEST_CASE("solve_spectrum reproduces the tabulated ground pair (omega0=0.5, kappa=0.5)") {
    const auto c = aim::rabi_coefficients<wide_real>({0.5, 0.5}, 42);
    aim::SolveOptions opts(aim::rabi_window({0.5, 0.5}, 5));
    const aim::Spectrum sp = aim::solve_spectrum(c, opts);
    REQUIRE(sp.eigenvalues.size() >= 2);
    CHECK(sp.eigenvalues[0].E == doctest::Approx(-0.064513).epsilon(5e-5));
    CHECK(sp.eigenvalues[1].E == doctest::Approx(0.5865567).epsilon(5e-6));
    for (const auto& e : sp.eigenvalues) CHECK(e.drift <= 1e-8);
}

TEST_CASE("solve_spectrum handles the regular-singular system (k=0, B=0, lambda=0.5)") {
    aim::RashbaParams p;
    p.lambdaR = 0.5;
    const auto c = aim::rashba_coefficients<wide_real>(p, 50);
    aim::SolveOptions opts(aim::rashba_window(p, 3));
    opts.max_iter = 24;
    const aim::Spectrum sp = aim::solve_spectrum(c, opts);
    REQUIRE(sp.eigenvalues.size() >= 2);
    CHECK(sp.eigenvalues[1].E == doctest::Approx(0.7737872).epsilon(1e-6));
}

TEST_CASE("wavefunction matches the closed-form ground state (kappa=0.5, omega0=0)") {
    const auto c = aim::rabi_coefficients<double>({0.0, 0.5}, 12);
    auto level = aim::init_level(c);
    for (int i = 0; i < 8; ++i) level = aim::iterate(level, c);
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    const aim::WaveSample w = aim::wavefunction_combination(c, level, 0.375, 1, grid);
    const double norm = w.values[0];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ref = std::exp(-grid[i] / (2.0 * std::sqrt(2.0)));
        CHECK(std::fabs(w.values[i] / norm - ref) <= 1e-6);
    }
    // ODE residual |phi' - (a0 + gamma d0) phi| <= 1e-6 |phi| on the interior
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double h = grid[i + 1] - grid[i - 1];
        const double dphi = (w.values[i + 1] - w.values[i - 1]) / h;
        const double rhs = (c.fa(grid[i], 0.375) + w.gamma * c.fd(grid[i], 0.375)) * w.values[i];
        CHECK(std::fabs(dphi - rhs) <= 1e-3 * std::fabs(w.values[i]));  // O(h^2) differencing
    }
}

TEST_CASE("wavefunction gamma=0 reduction: values = exp of the a0 integral") {
    // b0 = 0 makes gamma = 0 the consistent decaying choice (a0 < c0)
    const auto cs = constant_system(-2.0, 0.0, -1.0, 1.0, 6);
    auto level = aim::init_level(cs);
    for (int i = 0; i < 3; ++i) level = aim::iterate(level, cs);
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
    const aim::WaveSample w = aim::wavefunction_combination(cs, level, 0.0, 1, grid);
    CHECK(w.gamma == doctest::Approx(0.0));
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(w.values[i] == doctest::Approx(std::exp(-2.0 * grid[i])).epsilon(1e-8));
}

TEST_CASE("wavefunction rejects a grid crossing a genuine coefficient pole") {
    const auto c = aim::rabi_coefficients<double>({0.0, 0.5}, 12);
    auto level = aim::init_level(c);
    for (int i = 0; i < 8; ++i) level = aim::iterate(level, c);
    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(i / 50.0);
    // the first excited state does not cancel the pole at x = kappa/sqrt(2)
    CHECK_THROWS_AS(aim::wavefunction_combination(c, level, 1.375, 1, grid), aim::PoleOnGrid);
    try {
        aim::wavefunction_combination(c, level, 1.375, 1, grid);
    } catch (const aim::PoleOnGrid& e) {
        CHECK(e.x == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-6));
    }
}
