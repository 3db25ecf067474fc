#pragma once

// Reference computations used by the tests. They are written independently of
// the library kernels (different algorithms, extended precision) so that an
// agreement means something.

#include <cmath>
#include <complex>
#include <vector>

#include "tornheim/complexfn.hpp"
#include "tornheim/oracle.hpp"

namespace oracles {

using tornheim::Complex;
using LC = std::complex<long double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

inline LC widen(Complex z) { return {z.real(), z.imag()}; }
inline Complex narrow(LC z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// Gamma by the recurrence to z+30 and a short Stirling series there; the
// reflection formula for Re z < 0.5.
inline LC gamma_l(LC z) {
  if (z.real() < 0.5L) return kPiL / (std::sin(kPiL * z) * gamma_l(1.0L - z));
  LC prod = 1.0L;
  LC w = z;
  for (int k = 0; k < 30; ++k) {
    prod *= w;
    w += 1.0L;
  }
  const LC inv = 1.0L / w, inv2 = inv * inv;
  const LC series = inv * (1.0L / 12 + inv2 * (-1.0L / 360 + inv2 * (1.0L / 1260 + inv2 * (-1.0L / 1680 + inv2 / 1188.0L))));
  const LC lg = (w - 0.5L) * std::log(w) - w + 0.5L * std::log(2.0L * kPiL) + series;
  return std::exp(lg) / prod;
}
inline Complex gamma(Complex z) { return narrow(gamma_l(widen(z))); }

// zeta(z) = sum_{n<N} n^{-z} + Euler-Maclaurin tail at N = 40 + |Im z| for
// Re z >= 0.5, continued by the functional equation below that.
inline LC zeta_direct_l(LC z) {
  const int N = 40 + static_cast<int>(std::abs(z.imag()));
  LC sum = 0.0L;
  for (int n = N - 1; n >= 1; --n) sum += std::exp(-z * std::log(static_cast<long double>(n)));
  const long double x = N;
  const LC xp = std::exp(-z * std::log(x));
  LC tail = xp * x / (z - 1.0L) + 0.5L * xp;
  // B2/2!, B4/4!, B6/6!, B8/8!, B10/10!
  const long double b[] = {1.0L / 12, -1.0L / 720, 1.0L / 30240, -1.0L / 1209600, 1.0L / 47900160};
  LC rising = z, power = xp / x;
  long double k = 1.0L;
  for (long double c : b) {
    tail += c * rising * power;
    rising *= (z + k) * (z + k + 1.0L);
    k += 2.0L;
    power /= x * x;
  }
  return sum + tail;
}
inline Complex zeta(Complex z) {
  if (z.real() >= 0.5) return narrow(zeta_direct_l(widen(z)));
  const LC zl = widen(z);
  const LC f = std::pow(2.0L, zl) * std::pow(kPiL, zl - 1.0L) * std::sin(0.5L * kPiL * zl) * gamma_l(1.0L - zl);
  return narrow(f * zeta_direct_l(1.0L - zl));
}

// Bernoulli polynomial B_n(a) from the explicit sum over Bernoulli numbers.
inline double bernoulli_poly(int n, double a) {
  std::vector<double> B(n + 1, 0.0);
  B[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0.0, c = 1.0;  // c = C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += c * B[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    B[m] = -s / (m + 1);
  }
  double v = 0.0, c = 1.0;
  for (int k = 0; k <= n; ++k) {
    v += c * B[k] * std::pow(a, n - k);
    c = c * (n - k) / (k + 1);
  }
  return v;
}

// sum_{n>=0} (n + 1/2)^{-2}, summed directly with an integral tail.
inline double hurwitz_half_two() {
  long double s = 0.0L;
  const int N = 200000;
  for (int n = N - 1; n >= 0; --n) s += 1.0L / ((n + 0.5L) * (n + 0.5L));
  const long double x = N + 0.5L;
  return static_cast<double>(s + 1.0L / x + 0.5L / (x * x) + 1.0L / (3.0L * x * x * x));
}

// The defining combinations of S1..S4 in terms of T at the three cyclic
// permutations, with T from the double-sum oracle.
struct DefiningValues {
  Complex S1, S2, S3, S4, T;
  double slack;  // combined oracle tail bounds, weighted by the largest coefficient
};

inline DefiningValues defining_values(const tornheim::TriplePoint& p, int N = 20000) {
  using tornheim::exp_i_pi;
  const auto o1 = tornheim::oracle_T(p, N), o2 = tornheim::oracle_T(p.rotated(), N),
             o3 = tornheim::oracle_T(p.rotated_twice(), N);
  const Complex T1 = o1.value, T2 = o2.value, T3 = o3.value;
  auto e = [](Complex z) { return exp_i_pi(-z); };
  DefiningValues d;
  d.T = T1;
  d.S1 = (1.0 + e(p.s + p.t + p.u)) * T1 + (e(p.s) + e(p.u + p.t)) * T2 + (e(p.t) + e(p.u + p.s)) * T3;
  d.S2 = (e(p.u) + e(p.s + p.t)) * T1 + (e(p.t) + e(p.u + p.s)) * T2 + (e(p.s) + e(p.t + p.u)) * T3;
  d.S3 = T1 + T2 + T3;
  d.S4 = -T1 + T2 + T3;
  // |e^{-pi i z}| <= e^{pi |Im z|}
  const double w = 2.0 * std::exp(kPiL * (std::abs(p.s.imag()) + std::abs(p.t.imag()) + std::abs(p.u.imag())));
  d.slack = w * (o1.tail_bound + o2.tail_bound + o3.tail_bound);
  return d;
}

}  // namespace oracles
