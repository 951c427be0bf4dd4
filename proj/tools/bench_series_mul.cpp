// Micro-benchmark comparing the serial series product against the
// OpenMP-parallel kernel used by the engine.  Prints wall time per call and
// the max coefficient deviation between the two results.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aim/algebra.hpp"

namespace {

aim::XSeries random_series(int order, int poly_deg, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    aim::XSeries s(order, 0.0);
    for (int j = 0; j <= order; ++j) {
        std::vector<double> c(poly_deg + 1);
        for (double& v : c) v = dist(rng);
        s.terms[j] = aim::EnergyPoly(std::move(c));
    }
    return s;
}

template <class F>
double time_per_call(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial kernel\n");
#endif
    std::printf("%8s %8s %12s %12s %10s %12s\n", "order", "polydeg", "serial(ms)", "openmp(ms)",
                "speedup", "max|diff|");

    std::mt19937 rng(20240817);
    for (int order : {16, 32, 64, 128, 256}) {
        const int poly_deg = order / 4;
        const aim::XSeries a = random_series(order, poly_deg, rng);
        const aim::XSeries b = random_series(order, poly_deg, rng);
        const int reps = order <= 64 ? 50 : 10;

        aim::XSeries r_serial = aim::series_mul_serial(a, b);
        aim::XSeries r_par = aim::series_mul(a, b);
        double diff = 0.0;
        for (int j = 0; j <= r_serial.order; ++j) {
            const aim::EnergyPoly d = aim::poly_sub(r_serial.term(j), r_par.term(j));
            diff = std::max(diff, aim::poly_max_abs(d));
        }

        const double ts = time_per_call([&] { r_serial = aim::series_mul_serial(a, b); }, reps);
        const double tp = time_per_call([&] { r_par = aim::series_mul(a, b); }, reps);
        std::printf("%8d %8d %12.4f %12.4f %9.2fx %12.3e\n", order, poly_deg, ts, tp,
                    tp > 0 ? ts / tp : 0.0, diff);
    }
    return 0;
}
