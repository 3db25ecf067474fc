#pragma once

// Complex special-function kernels used by the series representations.
//
// All functions are pure. Poles raise PoleError when the argument is within
// kPoleThreshold of the pole; nothing returns an unflagged infinity.

#include "tornheim/types.hpp"

namespace tornheim {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kPoleThreshold = 1e-12;

/// sin(pi z), exact zeros at integers.
Complex sin_pi(Complex z);
/// cos(pi z), exact zeros at half-integers.
Complex cos_pi(Complex z);
/// e^{i pi z}
Complex exp_i_pi(Complex z);

Complex gamma(Complex z);
/// 1/Gamma(z); entire, exactly zero near the non-positive integers.
Complex recip_gamma(Complex z);

Complex riemann_zeta(Complex z);
/// zeta(z) - 1 without cancellation for Re z >= 2.
Complex zeta_minus_one(Complex z);
/// delta * zeta(1 + delta): entire, equals 1 at delta = 0.
Complex zeta_pole_product(Complex delta);
/// Dirichlet eta function sum (-1)^{n-1} n^{-z} for Re z >= 0.5.
Complex dirichlet_eta(Complex z);

/// zeta(z, a) for real a > 0.
Complex hurwitz_zeta(Complex z, double a);

/// Polynomial value of binomial(k - s, k) = prod_{j=1}^{k} (j - s)/j.
Complex binom_poly(int k, Complex s);

/// 2 Gamma(s) (2 pi)^{-s} cos(pi s / 2)
Complex gamma_cos(Complex s);
/// 2 Gamma(s) (2 pi)^{-s} sin(pi s / 2)
Complex gamma_sin(Complex s);
/// 1 / gamma_cos(s); poles at positive odd integers.
Complex recip_gamma_cos(Complex s);
/// 1 / gamma_sin(s); poles at positive even integers.
Complex recip_gamma_sin(Complex s);

/// 1/(Gamma(s) (s + N)), finite everywhere including s = -N.
Complex recip_gamma_over_linear(Complex s, int n);

/// 1/B(x, y) = Gamma(x + y) / (Gamma(x) Gamma(y)).
///
/// When x + y sits on a pole of Gamma that is canceled by a zero of 1/Gamma(x)
/// or 1/Gamma(y), the limit taken with the other argument held fixed is
/// returned.
Complex beta_recip(Complex x, Complex y);

/// e^{-pi i (s+t+u)/2} (2 pi)^{s+t+u}
Complex g_phase(Complex s, Complex t, Complex u);
/// g_phase(s,t,u) / (Gamma(s) Gamma(t) Gamma(u))
Complex g_prefactor(Complex s, Complex t, Complex u);
/// 4 / (gamma_cos(s) gamma_cos(t) gamma_cos(u))
Complex g_ccc(Complex s, Complex t, Complex u);
/// 4 / (gamma_sin(s) gamma_sin(t) gamma_cos(u))
Complex g_ssc(Complex s, Complex t, Complex u);

/// Distance from z to the nearest integer n with n <= max_value.
double distance_to_integer_at_most(Complex z, int max_value, int* nearest = nullptr);

}  // namespace tornheim
