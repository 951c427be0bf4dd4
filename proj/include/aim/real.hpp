#ifndef AIM_REAL_HPP
#define AIM_REAL_HPP

// Scalar abstraction so the algebra/rootfind/engine templates can run either
// in plain double (public API, unit tests) or in binary128 (the internal
// solve pipeline).  The AIM recurrence loses roughly one decimal digit per
// iteration to cancellation; double alone cannot reach the paper's printed
// accuracy past the first few states, so solves run wide and results are
// rounded to double at the boundary.

#include <cmath>
#include <cstdlib>

#if defined(__GNUC__) && defined(__x86_64__)
#define AIM_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

namespace aim {

#ifdef AIM_HAVE_FLOAT128
using wide_real = __float128;

inline wide_real abs_of(wide_real x) { return fabsq(x); }
inline wide_real sqrt_of(wide_real x) { return sqrtq(x); }
inline bool finite_of(wide_real x) { return finiteq(x) != 0; }
#else
using wide_real = long double;
#endif

inline double abs_of(double x) { return std::fabs(x); }
inline double sqrt_of(double x) { return std::sqrt(x); }
inline bool finite_of(double x) { return std::isfinite(x); }

inline long double abs_of(long double x) { return std::fabs(x); }
inline long double sqrt_of(long double x) { return std::sqrt(x); }
inline bool finite_of(long double x) { return std::isfinite(x); }

template <class R>
double to_double(R x) {
    return static_cast<double>(x);
}

// Smallest magnitude kept when trimming trailing polynomial coefficients.
// Must sit near the bottom of the type's exponent range: the joint level
// rescale in the engine legitimately pushes coefficients far below 1 when the
// series has a large dynamic range (small coupling constants), and trimming
// them would corrupt the quantization condition.
template <class R>
inline constexpr R kCoeffTrimFor = R(1e-300);

#ifdef AIM_HAVE_FLOAT128
namespace detail {
// 10^-n, constexpr (binary128 literals need a non-standard suffix)
constexpr wide_real pow10_neg(int n) {
    wide_real r = 1;
    for (int i = 0; i < n; ++i) r /= wide_real(10);
    return r;
}
}  // namespace detail

template <>
inline constexpr wide_real kCoeffTrimFor<wide_real> = detail::pow10_neg(4900);
#endif

}  // namespace aim

#endif
