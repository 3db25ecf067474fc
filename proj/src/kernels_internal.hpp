#pragma once

#include "tornheim/series.hpp"

namespace tornheim::detail {

/// sum_{n>=0} (x0 + n)^{-z}, Euler-Maclaurin with ten Bernoulli corrections.
Complex euler_maclaurin_tail(Complex z, double x0);

/// sin(pi y / 2) / y, finite at y = 0.
Complex half_sin_pi_over(Complex y);

/// (2 pi)^e Gamma(z) for Re z >= 0.5, the exponent formed in long double.
Complex two_pi_pow_times_gamma(Complex e, Complex z);

/// sum_shells that does not stop before shell `min_shells`. A slot whose
/// prefactor vanishes at x = -N only contributes through bare/(x + N), which
/// first appears at shell N; earlier shells can all be exactly zero.
SeriesValue sum_shells_from(const ShellTerm& term, const EvalConfig& cfg, int min_shells);

}  // namespace tornheim::detail
