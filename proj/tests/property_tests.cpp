// Randomized property suites.  Each suite runs at least 100 cases drawn from
// a fixed-seed generator; any violation prints the offending case and fails
// the process.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "aim/engine.hpp"
#include "aim/expr.hpp"
#include "aim/models.hpp"

using aim::EnergyPoly;
using aim::XSeries;
using aim::wide_real;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& suite, int case_id, const std::string& what) {
    if (ok) return;
    ++g_failures;
    std::fprintf(stderr, "FAIL [%s] case %d: %s\n", suite.c_str(), case_id, what.c_str());
}

EnergyPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<double> c(deg(rng) + 1);
    for (double& v : c) v = coef(rng);
    return EnergyPoly(std::move(c));
}

XSeries random_series(std::mt19937& rng, int order, bool unit_constant = false) {
    XSeries s(order, 0.0);
    for (int j = 0; j <= order; ++j) s.terms[j] = random_poly(rng, 2);
    if (unit_constant) {
        std::uniform_real_distribution<double> c0(0.5, 2.0);
        s.terms[0] = EnergyPoly::constant(c0(rng) * (rng() % 2 ? 1.0 : -1.0));
    }
    return s;
}

double series_distance(const XSeries& a, const XSeries& b, int up_to) {
    double d = 0.0;
    for (int j = 0; j <= up_to; ++j)
        d = std::max(d, aim::poly_max_abs(aim::poly_sub(a.term(j), b.term(j))));
    return d;
}

// ------------------------------------------------------------------------

void suite_ring_laws() {
    std::mt19937 rng(101);
    for (int i = 0; i < 100; ++i) {
        const XSeries s = random_series(rng, 8);
        const XSeries t = random_series(rng, 8);
        const XSeries u = random_series(rng, 8);
        expect(series_distance(aim::series_mul(s, t), aim::series_mul(t, s), 8) <= 1e-12,
               "ring", i, "series_mul not commutative");
        expect(series_distance(aim::series_mul(aim::series_mul(s, t), u),
                               aim::series_mul(s, aim::series_mul(t, u)), 8) <= 1e-10,
               "ring", i, "series_mul not associative");
        expect(series_distance(aim::series_mul(s, aim::series_add(t, u)),
                               aim::series_add(aim::series_mul(s, t), aim::series_mul(s, u)),
                               8) <= 1e-11,
               "ring", i, "series_mul does not distribute over series_add");

        // poly_eval is multiplicative
        std::uniform_real_distribution<double> ed(-3.0, 3.0);
        const EnergyPoly p = random_poly(rng, 4), q = random_poly(rng, 4);
        const double e = ed(rng);
        const double lhs = aim::poly_eval(aim::poly_mul(p, q), e);
        const double rhs = aim::poly_eval(p, e) * aim::poly_eval(q, e);
        expect(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)), "ring", i,
               "poly_eval not multiplicative");
    }
    std::printf("suite ring laws: 100 cases\n");
}

void suite_recip_identity() {
    std::mt19937 rng(202);
    std::uniform_real_distribution<double> c0(1.0, 2.0), coef(-0.5, 0.5);
    for (int i = 0; i < 100; ++i) {
        // keep |s_k / s_0| <= 1/2 so the reciprocal recurrence stays well
        // conditioned and the absolute 1e-12 bound is meaningful
        XSeries s(10, 0.0);
        for (int j = 1; j <= 10; ++j) {
            std::vector<double> c(3);
            for (double& v : c) v = coef(rng);
            s.terms[j] = EnergyPoly(std::move(c));
        }
        s.terms[0] = EnergyPoly::constant(c0(rng) * (rng() % 2 ? 1.0 : -1.0));
        const XSeries prod = aim::series_mul(s, aim::series_recip(s));
        expect(std::fabs(aim::poly_eval(prod.term(0), 0.0) - 1.0) <= 1e-12, "recip", i,
               "constant term of s * recip(s) is not 1");
        double worst = 0.0;
        for (int j = 1; j <= 10; ++j) worst = std::max(worst, aim::poly_max_abs(prod.term(j)));
        expect(worst <= 1e-12, "recip", i,
               "s * recip(s) deviates from unit by " + std::to_string(worst));
    }
    std::printf("suite reciprocal identity: 100 cases\n");
}

void suite_leibniz() {
    std::mt19937 rng(303);
    for (int i = 0; i < 100; ++i) {
        const XSeries s = random_series(rng, 9);
        const XSeries t = random_series(rng, 9);
        const XSeries lhs = aim::series_diff(aim::series_mul(s, t));
        const XSeries rhs = aim::series_add(aim::series_mul(aim::series_diff(s), t),
                                            aim::series_mul(s, aim::series_diff(t)));
        expect(series_distance(lhs, rhs, 8) <= 1e-11, "leibniz", i, "product rule violated");
    }
    std::printf("suite Leibniz rule: 100 cases\n");
}

void suite_root_recovery() {
    std::mt19937 rng(404);
    for (int i = 0; i < 100; ++i) {
        // 12 simple roots with pairwise separation >= 5 * scan_step.  The
        // polynomial is expanded in wide precision, matching the engine's
        // solve path: a degree-12 product with clustered roots is too
        // ill-conditioned for 1e-10 recovery from double coefficients.
        const aim::RootWindow w(-1.0, 1.0, 0.002);
        std::uniform_real_distribution<double> jitter(0.02, 0.13);
        std::vector<double> roots;
        double x = -0.95;
        for (int k = 0; k < 12; ++k) {
            x += jitter(rng);
            roots.push_back(x);
        }
        aim::PolyT<wide_real> p = aim::PolyT<wide_real>::constant(1.0);
        for (double r : roots)
            p = aim::poly_mul(p, aim::PolyT<wide_real>({-static_cast<wide_real>(r), 1.0}));
        const auto found = aim::real_roots(p, w, 1e-12);
        expect(found.size() == roots.size(), "roots", i,
               "expected 12 roots, found " + std::to_string(found.size()));
        if (found.size() == roots.size())
            for (std::size_t k = 0; k < roots.size(); ++k) {
                const double dev = std::fabs(aim::to_double(found[k]) - roots[k]);
                expect(dev <= 1e-10, "roots", i,
                       "root " + std::to_string(roots[k]) + " off by " + std::to_string(dev));
            }
    }
    std::printf("suite root recovery: 100 cases\n");
}

void suite_recurrence_linearity() {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> w0d(0.1, 1.0), kd(0.3, 1.2), sd(0.2, 5.0);
    for (int i = 0; i < 100; ++i) {
        const auto c = aim::rabi_coefficients<double>({w0d(rng), kd(rng)}, 8);
        const double s = sd(rng);
        const auto base = aim::init_level(c);
        auto scaled = base;
        scaled.a = aim::series_scale(base.a, s);
        scaled.b = aim::series_scale(base.b, s);
        const auto n1 = aim::iterate(base, c);
        const auto n2 = aim::iterate(scaled, c);
        double worst = 0.0, magnitude = 1.0;
        for (int j = 0; j <= n1.a.order; ++j) {
            const EnergyPoly ra = aim::poly_scale(n1.a.term(j), s * n1.scale);
            const EnergyPoly rb = aim::poly_scale(n1.b.term(j), s * n1.scale);
            worst = std::max(worst, aim::poly_max_abs(aim::poly_sub(
                                        aim::poly_scale(n2.a.term(j), n2.scale), ra)));
            worst = std::max(worst, aim::poly_max_abs(aim::poly_sub(
                                        aim::poly_scale(n2.b.term(j), n2.scale), rb)));
            magnitude = std::max({magnitude, aim::poly_max_abs(ra), aim::poly_max_abs(rb)});
        }
        expect(worst <= 1e-12 * magnitude, "linearity", i,
               "(a,b) chain not linear, relative deviation " + std::to_string(worst / magnitude));
    }
    std::printf("suite recurrence linearity: 100 cases\n");
}

void suite_delta_root_invariance() {
    std::mt19937 rng(606);
    std::uniform_real_distribution<double> w0d(0.0, 1.0), kd(0.4, 1.2), sd(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const aim::RabiParams p{w0d(rng), kd(rng)};
        const auto c = aim::rabi_coefficients<double>(p, 10);
        auto l1 = aim::iterate(aim::init_level(c), c);
        auto l2 = aim::iterate(l1, c);
        const auto [d1, d2] = aim::delta(l1, l2);
        const double s = sd(rng), t = sd(rng);
        auto l1s = l1;
        l1s.a = aim::series_scale(l1.a, s);
        l1s.b = aim::series_scale(l1.b, s);
        l1s.c = aim::series_scale(l1.c, s);
        l1s.d = aim::series_scale(l1.d, s);
        auto l2s = l2;
        l2s.a = aim::series_scale(l2.a, t);
        l2s.b = aim::series_scale(l2.b, t);
        l2s.c = aim::series_scale(l2.c, t);
        l2s.d = aim::series_scale(l2.d, t);
        const auto [e1, e2] = aim::delta(l1s, l2s);
        const aim::RootWindow w = aim::rabi_window(p, 3);
        const auto r1 = aim::real_roots(d1, w, 1e-11);
        const auto r2 = aim::real_roots(e1, w, 1e-11);
        expect(r1.size() == r2.size(), "delta-invariance", i,
               "root count changed under rescaling");
        if (r1.size() == r2.size())
            for (std::size_t k = 0; k < r1.size(); ++k)
                expect(std::fabs(r1[k] - r2[k]) <= 1e-9, "delta-invariance", i,
                       "root moved by " + std::to_string(std::fabs(r1[k] - r2[k])));
    }
    std::printf("suite delta root invariance: 100 cases\n");
}

void suite_branch_agreement() {
    std::mt19937 rng(707);
    std::uniform_real_distribution<double> w0d(0.1, 0.9), kd(0.4, 1.1);
    for (int i = 0; i < 100; ++i) {
        const aim::RabiParams p{w0d(rng), kd(rng)};
        const auto c = aim::rabi_coefficients<wide_real>(p, 20);
        aim::SolveOptions opts(aim::rabi_window(p, 2));
        opts.max_iter = 18;
        opts.conv_tol = 1e-7;
        const aim::Spectrum sp = aim::solve_spectrum(c, opts);
        expect(!sp.eigenvalues.empty(), "branch", i, "no accepted eigenvalues");

        // re-derive the final delta pair and check each accepted eigenvalue is
        // a root of both branches to 1e-6
        auto prev = aim::init_level(c);
        for (int n = 0; n < 17; ++n) prev = aim::iterate(prev, c);
        const auto cur = aim::iterate(prev, c);
        const auto [d1, d2] = aim::delta(prev, cur);
        const aim::RootWindow w = aim::rabi_window(p, 2);
        const auto r1 = aim::real_roots(d1, w, 1e-10);
        const auto r2 = aim::real_roots(d2, w, 1e-10);
        for (std::size_t k = 0; k < std::min<std::size_t>(sp.eigenvalues.size(), 3); ++k) {
            const double E = sp.eigenvalues[k].E;
            auto nearest = [E](const std::vector<wide_real>& rs) {
                double best = 1e30;
                for (const wide_real r : rs)
                    best = std::min(best, std::fabs(aim::to_double(r) - E));
                return best;
            };
            expect(nearest(r1) <= 1e-6, "branch", i,
                   "delta1 root misses E=" + std::to_string(E));
            expect(nearest(r2) <= 1e-6, "branch", i,
                   "delta2 root misses E=" + std::to_string(E));
        }
    }
    std::printf("suite branch agreement: 100 cases\n");
}

void suite_kappa_parity() {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> w0d(0.0, 1.0), kd(0.4, 1.1);
    for (int i = 0; i < 100; ++i) {
        const double w0 = w0d(rng), kap = kd(rng);
        auto solve = [&](double k) {
            const auto c = aim::rabi_coefficients<wide_real>({w0, k}, 18);
            aim::SolveOptions opts(aim::rabi_window({w0, std::fabs(k)}, 2));
            opts.max_iter = 16;
            return aim::solve_spectrum(c, opts);
        };
        const aim::Spectrum sp = solve(kap);
        const aim::Spectrum sm = solve(-kap);
        const std::size_t m = std::min({sp.eigenvalues.size(), sm.eigenvalues.size(),
                                        std::size_t(3)});
        expect(m > 0, "parity", i, "no eigenvalues to compare");
        for (std::size_t k = 0; k < m; ++k)
            expect(std::fabs(sp.eigenvalues[k].E - sm.eigenvalues[k].E) <= 1e-8, "parity", i,
                   "kappa -> -kappa moved an eigenvalue by " +
                       std::to_string(std::fabs(sp.eigenvalues[k].E - sm.eigenvalues[k].E)));
    }
    std::printf("suite kappa parity: 100 cases\n");
}

// Random expression generator over the bounded grammar.
aim::expr::AstPtr random_ast(std::mt19937& rng, int depth);

aim::expr::AstPtr leaf(std::mt19937& rng) {
    std::uniform_real_distribution<double> num(0.5, 3.0);
    switch (rng() % 3) {
        case 0: return aim::expr::parse_expression(std::to_string(num(rng)));
        case 1: return aim::expr::parse_expression("x");
        default: return aim::expr::parse_expression("E");
    }
}

aim::expr::AstPtr random_ast(std::mt19937& rng, int depth) {
    if (depth <= 0) return leaf(rng);
    using aim::expr::AstNode;
    const auto node = [](AstNode n) { return std::make_shared<const AstNode>(std::move(n)); };
    switch (rng() % 6) {
        case 0:
            return node({AstNode::Add, 0.0, "", random_ast(rng, depth - 1),
                         random_ast(rng, depth - 1), 0});
        case 1:
            return node({AstNode::Sub, 0.0, "", random_ast(rng, depth - 1),
                         random_ast(rng, depth - 1), 0});
        case 2:
            return node({AstNode::Mul, 0.0, "", random_ast(rng, depth - 1),
                         random_ast(rng, depth - 1), 0});
        case 3:
            // keep denominators regular at x0 = 0: shift by a positive constant
            return node({AstNode::Div, 0.0, "", random_ast(rng, depth - 1),
                         node({AstNode::Add, 0.0, "", leaf(rng),
                               aim::expr::parse_expression("4"), 0}),
                         0});
        case 4:
            return node({AstNode::Neg, 0.0, "", random_ast(rng, depth - 1), nullptr, 0});
        default:
            return node({AstNode::Pow, 0.0, "", random_ast(rng, depth - 1), nullptr,
                         static_cast<int>(rng() % 3)});
    }
}

void suite_expr_round_trip() {
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> xd(-0.05, 0.05), ed(-1.0, 1.0);
    int done = 0;
    while (done < 100) {
        const auto ast = random_ast(rng, 3);
        XSeries s(12, 0.0);
        try {
            s = aim::expr::eval_series<double>(ast, {}, 0.0, 12);
        } catch (const aim::SingularCoefficient&) {
            continue;  // an E-dependent denominator slipped in; redraw
        }
        const double x = xd(rng), e = ed(rng);
        const double direct = aim::expr::eval_numeric(ast, {}, x, e);
        if (!std::isfinite(direct) || std::fabs(direct) > 1e6) continue;
        const double via_series = aim::series_eval(s, x, e);
        expect(std::fabs(via_series - direct) <= 1e-9 * std::max(1.0, std::fabs(direct)),
               "expr-round-trip", done,
               "series disagrees with direct evaluation by " +
                   std::to_string(std::fabs(via_series - direct)));
        ++done;
    }
    std::printf("suite expr round trip: 100 cases\n");
}

void suite_parser_totality() {
    std::mt19937 rng(1010);
    const std::string alphabet = "xE+-*/^() 0123456789.ab_";
    for (int i = 0; i < 200; ++i) {
        std::string text;
        const int len = 1 + static_cast<int>(rng() % 24);
        for (int k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
        try {
            (void)aim::expr::parse_expression(text);
        } catch (const aim::LexError&) {
        } catch (const aim::ParseError&) {
        } catch (...) {
            expect(false, "parser-totality", i, "unexpected exception type on: " + text);
        }
    }
    std::printf("suite parser totality: 200 cases\n");
}

}  // namespace

int main() {
    suite_ring_laws();
    suite_recip_identity();
    suite_leibniz();
    suite_root_recovery();
    suite_recurrence_linearity();
    suite_delta_root_invariance();
    suite_branch_agreement();
    suite_kappa_parity();
    suite_expr_round_trip();
    suite_parser_totality();
    if (g_failures) {
        std::fprintf(stderr, "%d property failures\n", g_failures);
        return 1;
    }
    std::printf("all property suites passed\n");
    return 0;
}
