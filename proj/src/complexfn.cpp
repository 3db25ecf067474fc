#include "tornheim/complexfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "tornheim/errors.hpp"
#include "kernels_internal.hpp"

namespace tornheim {
namespace {


using LComplex = std::complex<long double>;

constexpr long double kLnTwoPiL = 1.837877066409345483560659472811235279L;
constexpr long double kHalfLnTwoPiL = 0.918938533204672741780329736405617640L;
constexpr long double kLn2L = 0.693147180559945309417232121458176568L;
constexpr long double kLnPiL = 1.144729885849400174143427351353058712L;

// B_{2k} / (2k (2k-1)), k = 1..10, for the Stirling series of log Gamma.
constexpr std::array<long double, 10> kStirling = {
    1.0L / 12.0L,         -1.0L / 360.0L,       1.0L / 1260.0L,       -1.0L / 1680.0L,
    1.0L / 1188.0L,       -691.0L / 360360.0L,  1.0L / 156.0L,        -3617.0L / 122400.0L,
    43867.0L / 244188.0L, -174611.0L / 125400.0L};

LComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// n^{-z} in extended precision; the phase z log n is what loses digits.
LComplex inverse_power(LComplex z, long double n) { return std::exp(-z * std::log(n)); }

// B_{2j} / (2j)! for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
    (-3617.0 / 510.0) / 20922789888000.0,
    (43867.0 / 798.0) / 6402373705728000.0,
    (-174611.0 / 330.0) / 2432902008176640000.0};

constexpr std::array<long double, 10> kBernoulliOverFactorialLong = {
    (1.0L / 6.0L) / 2.0L,
    (-1.0L / 30.0L) / 24.0L,
    (1.0L / 42.0L) / 720.0L,
    (-1.0L / 30.0L) / 40320.0L,
    (5.0L / 66.0L) / 3628800.0L,
    (-691.0L / 2730.0L) / 479001600.0L,
    (7.0L / 6.0L) / 87178291200.0L,
    (-3617.0L / 510.0L) / 20922789888000.0L,
    (43867.0L / 798.0L) / 6402373705728000.0L,
    (-174611.0L / 330.0L) / 2432902008176640000.0L};

// log Gamma(z) for Re z >= 0.5 (branch irrelevant: only ever exponentiated).
// Stirling series after shifting |z| past 15 with the recurrence, carried in
// long double so that exponentiating a large log keeps full double accuracy.
LComplex log_gamma_right(LComplex z) {
  LComplex w = z;
  LComplex shift_product = 1.0L;
  while (std::abs(w) < 15.0L) {
    shift_product *= w;
    w += 1.0L;
  }
  const LComplex inv = 1.0L / w;
  const LComplex inv2 = inv * inv;
  LComplex series = kStirling.back();
  for (int k = static_cast<int>(kStirling.size()) - 2; k >= 0; --k) series = series * inv2 + kStirling[static_cast<std::size_t>(k)];
  series *= inv;
  return (w - 0.5L) * std::log(w) - w + kHalfLnTwoPiL + series - std::log(shift_product);
}

void require_finite(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
}

bool near_nonpositive_integer(Complex z, double threshold, int* which = nullptr) {
  const double n = std::nearbyint(z.real());
  if (n > 0.0) return false;
  if (std::abs(z - n) >= threshold) return false;
  if (which != nullptr) *which = static_cast<int>(n);
  return true;
}

Complex two_pi_pow(Complex s) { return narrow(std::exp(widen(s) * kLnTwoPiL)); }

// x / (e^x - 1)
Complex bernoulli_generating(Complex x) {
  if (std::abs(x) < 0.2) {
    const Complex x2 = x * x;
    // 1 - x/2 + sum B_{2j} x^{2j} / (2j)!
    Complex even = kBernoulliOverFactorial[4];
    for (int j = 3; j >= 0; --j) even = even * x2 + kBernoulliOverFactorial[j];
    return 1.0 - 0.5 * x + x2 * even;
  }
  return x / (std::exp(x) - 1.0);
}

int borwein_terms(Complex z) {
  const double y = std::abs(z.imag());
  return static_cast<int>(std::ceil((40.0 + 1.5708 * y + std::log1p(2.0 * y)) / 1.7627));
}

// zeta(z) for Re z >= 0.5, z away from 1.
Complex zeta_right(Complex z) {
  const Complex delta = z - 1.0;
  if (std::abs(delta) < 0.25) return zeta_pole_product(delta) / delta;
  return dirichlet_eta(z) / narrow(1.0L - std::exp(-widen(delta) * kLn2L));
}

}  // namespace

namespace detail {

// sum_{n>=0} (x0 + n)^{-z} by Euler-Maclaurin with ten Bernoulli corrections.
Complex euler_maclaurin_tail(Complex z, double x0) {
  const LComplex zl = widen(z);
  const long double x = x0;
  const LComplex x0_pow = inverse_power(zl, x);
  LComplex sum = x0_pow * x / (zl - 1.0L) + 0.5L * x0_pow;
  LComplex rising = zl;          // (z)_{2j-1}
  LComplex power = x0_pow / x;   // x0^{-z-2j+1}
  for (std::size_t j = 0; j < kBernoulliOverFactorialLong.size(); ++j) {
    sum += kBernoulliOverFactorialLong[j] * rising * power;
    const long double k = 2.0L * static_cast<long double>(j) + 1.0L;
    rising *= (zl + k) * (zl + k + 1.0L);
    power /= x * x;
  }
  return narrow(sum);
}

Complex half_sin_pi_over(Complex y) {
  // sin(pi y / 2) / y
  if (std::abs(y) < 1e-4) {
    const Complex h = 0.5 * kPi * y;
    return 0.5 * kPi * (1.0 - h * h / 6.0);
  }
  return sin_pi(0.5 * y) / y;
}

Complex two_pi_pow_times_gamma(Complex e, Complex z) {
  return narrow(std::exp(widen(e) * kLnTwoPiL + log_gamma_right(widen(z))));
}

}  // namespace detail

Complex sin_pi(Complex z) {
  const double n = std::nearbyint(z.real());
  const double f = z.real() - n;
  constexpr long double kPiL = 3.141592653589793238462643383279502884L;
  const Complex v = narrow(std::sin(LComplex(kPiL * f, kPiL * z.imag())));
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -v : v;
}

Complex cos_pi(Complex z) { return sin_pi(z + 0.5); }

Complex exp_i_pi(Complex z) { return cos_pi(z) + Complex(0.0, 1.0) * sin_pi(z); }

Complex gamma(Complex z) {
  require_finite(z, "gamma");
  if (z.real() >= 0.5) return narrow(std::exp(log_gamma_right(widen(z))));
  if (near_nonpositive_integer(z, kPoleThreshold)) {
    throw PoleError("gamma: argument at a non-positive integer");
  }
  return kPi / (sin_pi(z) * narrow(std::exp(log_gamma_right(1.0L - widen(z)))));
}

Complex recip_gamma(Complex z) {
  require_finite(z, "recip_gamma");
  if (z.real() >= 0.5) return narrow(std::exp(-log_gamma_right(widen(z))));
  if (near_nonpositive_integer(z, kPoleThreshold)) return 0.0;
  return sin_pi(z) * narrow(std::exp(log_gamma_right(1.0L - widen(z)))) / kPi;
}

Complex dirichlet_eta(Complex z) {
  require_finite(z, "dirichlet_eta");
  // Borwein's algorithm 2.
  const int n = borwein_terms(z);
  const double nd = n;
  double term = 1.0 / nd;
  double d_partial = term;
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  d[0] = nd * d_partial;
  for (int i = 1; i <= n; ++i) {
    const double id = i;
    term *= 4.0 * (nd + id - 1.0) * (nd - id + 1.0) / ((2.0 * id - 1.0) * (2.0 * id));
    d_partial += term;
    d[static_cast<std::size_t>(i)] = nd * d_partial;
  }
  const double dn = d[static_cast<std::size_t>(n)];
  const LComplex zl = widen(z);
  LComplex sum = 0.0L;
  for (int k = 0; k < n; ++k) {
    const LComplex power = inverse_power(zl, static_cast<long double>(k + 1));
    const long double weight = d[static_cast<std::size_t>(k)] - dn;
    sum += (k % 2 == 0 ? weight : -weight) * power;
  }
  return narrow(-sum / static_cast<long double>(dn));
}

Complex zeta_pole_product(Complex delta) {
  require_finite(delta, "zeta_pole_product");
  if (std::abs(delta) < 0.25) {
    return dirichlet_eta(1.0 + delta) * bernoulli_generating(-delta * kLn2) / kLn2;
  }
  return delta * riemann_zeta(1.0 + delta);
}

Complex riemann_zeta(Complex z) {
  require_finite(z, "riemann_zeta");
  if (std::abs(z - 1.0) < kPoleThreshold) throw PoleError("riemann_zeta: pole at z = 1");
  if (z.real() >= 0.5) return zeta_right(z);
  // zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z)
  const LComplex zl = widen(z);
  const Complex factor = narrow(std::exp(zl * kLn2L + (zl - 1.0L) * kLnPiL + log_gamma_right(1.0L - zl)));
  if (std::abs(z) < 0.25) {
    // sin(pi z/2) zeta(1-z) = -(sin(pi z/2)/z) * (-z) zeta(1-z)
    return -factor * detail::half_sin_pi_over(z) * zeta_pole_product(-z);
  }
  return factor * sin_pi(0.5 * z) * zeta_right(1.0 - z);
}

Complex zeta_minus_one(Complex z) {
  require_finite(z, "zeta_minus_one");
  if (std::abs(z - 1.0) < kPoleThreshold) throw PoleError("zeta_minus_one: pole at z = 1");
  if (z.real() < 2.0) return riemann_zeta(z) - 1.0;
  const int cutoff = 10 + static_cast<int>(std::ceil(std::abs(z.imag())));
  const LComplex zl = widen(z);
  LComplex sum = 0.0L;
  for (int n = cutoff - 1; n >= 2; --n) sum += inverse_power(zl, static_cast<long double>(n));
  return detail::euler_maclaurin_tail(z, cutoff) + narrow(sum);
}

Complex hurwitz_zeta(Complex z, double a) {
  require_finite(z, "hurwitz_zeta");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz_zeta: parameter a must be > 0");
  if (std::abs(z - 1.0) < kPoleThreshold) throw PoleError("hurwitz_zeta: pole at z = 1");
  // For Re z < 0 the head sum and the tail cancel heavily, so both run in
  // extended precision with the shift kept as small as the imaginary part allows.
  const LComplex zl = widen(z);
  const int shift = std::max(6, static_cast<int>(std::ceil(0.6 * std::abs(z.imag()) + 4.0)));
  LComplex sum = 0.0L;
  for (int n = shift - 1; n >= 0; --n) {
    sum += inverse_power(zl, static_cast<long double>(n) + a);
  }
  const long double x0 = static_cast<long double>(shift) + a;
  const LComplex x0_pow = inverse_power(zl, x0);
  LComplex tail = x0_pow * x0 / (zl - 1.0L) + 0.5L * x0_pow;
  LComplex rising = zl;
  LComplex power = x0_pow / x0;
  for (std::size_t j = 0; j < kBernoulliOverFactorialLong.size(); ++j) {
    tail += kBernoulliOverFactorialLong[j] * rising * power;
    const long double k = 2.0L * static_cast<long double>(j) + 1.0L;
    rising *= (zl + k) * (zl + k + 1.0L);
    power /= x0 * x0;
  }
  return narrow(sum + tail);
}

Complex binom_poly(int k, Complex s) {
  if (k < 0) throw DomainError("binom_poly: negative order");
  Complex product = 1.0;
  for (int j = 1; j <= k; ++j) product *= (static_cast<double>(j) - s) / static_cast<double>(j);
  return product;
}

Complex gamma_cos(Complex s) {
  require_finite(s, "gamma_cos");
  if (s.real() >= 0.5) return 2.0 * gamma(s) * two_pi_pow(-s) * cos_pi(0.5 * s);
  // Gamma(s) cos(pi s/2) = pi / (2 sin(pi s/2) Gamma(1-s))
  if (near_nonpositive_integer(0.5 * s, 0.5 * kPoleThreshold)) {
    throw PoleError("gamma_cos: pole at a non-positive even integer");
  }
  return two_pi_pow(-s) * kPi * recip_gamma(1.0 - s) / sin_pi(0.5 * s);
}

Complex gamma_sin(Complex s) {
  require_finite(s, "gamma_sin");
  if (s.real() >= 0.5) return 2.0 * gamma(s) * two_pi_pow(-s) * sin_pi(0.5 * s);
  if (near_nonpositive_integer(0.5 * (s + 1.0), 0.5 * kPoleThreshold)) {
    throw PoleError("gamma_sin: pole at a negative odd integer");
  }
  return two_pi_pow(-s) * kPi * recip_gamma(1.0 - s) / cos_pi(0.5 * s);
}

Complex recip_gamma_cos(Complex s) {
  require_finite(s, "recip_gamma_cos");
  if (s.real() >= 0.5) {
    const Complex c = cos_pi(0.5 * s);
    if (std::abs(c) < 0.5 * kPi * kPoleThreshold) {
      throw PoleError("recip_gamma_cos: gamma_cos vanishes at a positive odd integer");
    }
    return two_pi_pow(s) * recip_gamma(s) / (2.0 * c);
  }
  return sin_pi(0.5 * s) * detail::two_pi_pow_times_gamma(s, 1.0 - s) / kPi;
}

Complex recip_gamma_sin(Complex s) {
  require_finite(s, "recip_gamma_sin");
  if (s.real() >= 0.5) {
    const Complex c = sin_pi(0.5 * s);
    if (std::abs(c) < 0.5 * kPi * kPoleThreshold) {
      throw PoleError("recip_gamma_sin: gamma_sin vanishes at a positive even integer");
    }
    return two_pi_pow(s) * recip_gamma(s) / (2.0 * c);
  }
  return cos_pi(0.5 * s) * detail::two_pi_pow_times_gamma(s, 1.0 - s) / kPi;
}

Complex recip_gamma_over_linear(Complex s, int n) {
  require_finite(s, "recip_gamma_over_linear");
  if (n < 0) throw DomainError("recip_gamma_over_linear: negative offset");
  const Complex shifted = s + static_cast<double>(n);
  if (std::abs(shifted) >= 0.5) return recip_gamma(s) / shifted;
  // 1/(Gamma(s)(s+N)) = prod_{j<N} (s+j) / Gamma(s+N+1)
  Complex product = 1.0;
  for (int j = 0; j < n; ++j) product *= s + static_cast<double>(j);
  return product * recip_gamma(shifted + 1.0);
}

Complex beta_recip(Complex x, Complex y) {
  require_finite(x, "beta_recip");
  require_finite(y, "beta_recip");
  const Complex sum = x + y;
  int pole = 0;
  if (!near_nonpositive_integer(sum, kPoleThreshold, &pole)) {
    return gamma(sum) * recip_gamma(x) * recip_gamma(y);
  }
  int jx = 0;
  int jy = 0;
  const bool x_zero = near_nonpositive_integer(x, kPoleThreshold, &jx);
  const bool y_zero = near_nonpositive_integer(y, kPoleThreshold, &jy);
  if (x_zero && y_zero) return 0.0;
  if (!x_zero && !y_zero) throw PoleError("beta_recip: Gamma(x+y) diverges");
  // Ratio of residues of Gamma at -N and -j: (-1)^{N-j} j! / N!
  const int big = -pole;
  const int small = x_zero ? -jx : -jy;
  double ratio = 1.0;
  for (int k = small + 1; k <= big; ++k) ratio /= -static_cast<double>(k);
  return ratio * recip_gamma(x_zero ? y : x);
}

Complex g_phase(Complex s, Complex t, Complex u) {
  const Complex sum = s + t + u;
  return exp_i_pi(-0.5 * sum) * two_pi_pow(sum);
}

Complex g_prefactor(Complex s, Complex t, Complex u) {
  return g_phase(s, t, u) * recip_gamma(s) * recip_gamma(t) * recip_gamma(u);
}

Complex g_ccc(Complex s, Complex t, Complex u) {
  return 4.0 * recip_gamma_cos(s) * recip_gamma_cos(t) * recip_gamma_cos(u);
}

Complex g_ssc(Complex s, Complex t, Complex u) {
  return 4.0 * recip_gamma_sin(s) * recip_gamma_sin(t) * recip_gamma_cos(u);
}

double distance_to_integer_at_most(Complex z, int max_value, int* nearest) {
  const double rounded = std::min(static_cast<double>(max_value), std::nearbyint(z.real()));
  if (nearest != nullptr) *nearest = static_cast<int>(rounded);
  return std::abs(z - rounded);
}

}  // namespace tornheim
