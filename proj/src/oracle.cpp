#include "tornheim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "tornheim/complexfn.hpp"
#include "tornheim/errors.hpp"

namespace tornheim {
namespace {

// Bound sum_{m <= k/2} m^{-a} <= A k^e for all k >= 2.
struct PartialBound {
  double A;
  double e;
};

PartialBound partial_power_bound(double a) {
  if (a >= 1.1) return {1.0 + 1.0 / (a - 1.0), 0.0};
  if (a >= 1.0) return {4.68, 0.1};
  if (a >= 0.9) return {4.68, 0.2};
  if (a >= 0.0) return {1.0 + 1.0 / (1.0 - a), 1.0 - a};
  return {1.0, 1.0 - a};
}

// sum_{k > N} C k^{-p} <= C N^{1-p} / (p - 1)
double power_tail(double C, double p, int N) {
  if (!(p > 1.0)) throw DomainError("oracle_T: tail majorant does not converge at this point");
  return C * std::pow(static_cast<double>(N), 1.0 - p) / (p - 1.0);
}

// Tail of the square partial sum. Every omitted (m, n) has k = m + n > N and
// sum_{m+n=k} m^{-a} n^{-b} <= 2^{max(b,0)} k^{-b} A_a k^{e_a} + 2^{max(a,0)} k^{-a} A_b k^{e_b}
// (split at m = k/2), so the tail is majorized by two power sums over k.
double tail_bound(double a, double b, double c, int N) {
  const PartialBound pa = partial_power_bound(a);
  const PartialBound pb = partial_power_bound(b);
  const double first = power_tail(std::pow(2.0, std::max(b, 0.0)) * pa.A, c + b - pa.e, N);
  const double second = power_tail(std::pow(2.0, std::max(a, 0.0)) * pb.A, c + a - pb.e, N);
  return 4.0 * (first + second);
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Complex s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

void fill_powers(Complex z, int count, std::vector<double>& re, std::vector<double>& im) {
  re.assign(static_cast<std::size_t>(count) + 1, 0.0);
  im.assign(static_cast<std::size_t>(count) + 1, 0.0);
  for (int k = 1; k <= count; ++k) {
    const Complex v = std::exp(-z * std::log(static_cast<double>(k)));
    re[static_cast<std::size_t>(k)] = v.real();
    im[static_cast<std::size_t>(k)] = v.imag();
  }
}

void require_unit_interval(double a, const char* who) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError(std::string(who) + ": parameter a must lie in (0, 1)");
}

}  // namespace

OracleResult oracle_T(const TriplePoint& p, int N) {
  if (!p.finite()) throw DomainError("oracle_T: non-finite argument");
  if (N < 100) throw DomainError("oracle_T: cutoff N must be at least 100");
  const double a = p.s.real(), b = p.t.real(), c = p.u.real();
  if (!(a + c > 1.0 && b + c > 1.0 && a + b + c > 2.0)) {
    throw DomainError("oracle_T: point outside the region of absolute convergence");
  }
  OracleResult out;
  out.tail_bound = tail_bound(a, b, c, N);

  std::vector<double> s_re, s_im, t_re, t_im, u_re, u_im;
  fill_powers(p.s, N, s_re, s_im);
  fill_powers(p.t, N, t_re, t_im);
  fill_powers(p.u, 2 * N, u_re, u_im);

  std::vector<Complex> rows(static_cast<std::size_t>(N));
  auto work = [&](int first, int last) {
    for (int m = first; m < last; ++m) {
      double acc_re = 0.0, acc_im = 0.0;
      const double* ur = u_re.data() + m;
      const double* ui = u_im.data() + m;
      for (int n = 1; n <= N; ++n) {
        acc_re += t_re[static_cast<std::size_t>(n)] * ur[n] - t_im[static_cast<std::size_t>(n)] * ui[n];
        acc_im += t_re[static_cast<std::size_t>(n)] * ui[n] + t_im[static_cast<std::size_t>(n)] * ur[n];
      }
      const Complex row(acc_re, acc_im);
      rows[static_cast<std::size_t>(m - 1)] = Complex(s_re[static_cast<std::size_t>(m)], s_im[static_cast<std::size_t>(m)]) * row;
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, 8));
  if (workers == 1) {
    work(1, N + 1);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (N + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int first = 1 + w * chunk;
      const int last = std::min(N + 1, first + chunk);
      if (first < last) pool.emplace_back(work, first, last);
    }
    for (auto& th : pool) th.join();
  }
  out.value = pairwise_sum(rows, 0, rows.size());
  out.terms = static_cast<std::int64_t>(N) * N;
  return out;
}

Complex periodic_zeta(Complex s, double a) {
  require_unit_interval(a, "periodic_zeta");
  if (!(s.real() > 1.0)) throw DomainError("periodic_zeta: requires Re s > 1");
  const Complex z = std::polar(1.0, 2.0 * kPi * a);
  const double gap = std::abs(1.0 - z);
  const int M = std::max(2000, static_cast<int>(std::ceil(200.0 / gap)));

  // Direct part, n < M, smallest terms first.
  Complex head = 0.0;
  for (int n = M - 1; n >= 1; --n) {
    head += std::polar(1.0, 2.0 * kPi * std::fmod(a * n, 1.0)) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  // sum_{n>=M} z^n f(n) = sum_j z^{M+j} (Delta^j f)(M) / (1 - z)^{j+1}
  constexpr int kOrders = 7;
  std::vector<Complex> f(kOrders);
  for (int j = 0; j < kOrders; ++j) f[static_cast<std::size_t>(j)] = std::exp(-s * std::log(static_cast<double>(M + j)));
  Complex tail = 0.0;
  const Complex inv = 1.0 / (1.0 - z);
  Complex factor = std::polar(1.0, 2.0 * kPi * std::fmod(a * M, 1.0)) * inv;
  for (int j = 0; j < kOrders; ++j) {
    tail += factor * f[0];
    // forward differences in place
    for (int i = 0; i + 1 < kOrders - j; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i) + 1] - f[static_cast<std::size_t>(i)];
    factor *= z * inv;
  }
  return head + tail;
}

double check_periodic_fe(Complex s, double a) {
  require_unit_interval(a, "check_periodic_fe");
  const Complex lhs = exp_i_pi(-0.5 * s) * periodic_zeta(s, a) + exp_i_pi(0.5 * s) * periodic_zeta(s, 1.0 - a);
  const Complex rhs = std::exp(s * std::log(2.0 * kPi)) * recip_gamma(s) * hurwitz_zeta(1.0 - s, a);
  return std::abs(lhs - rhs);
}

std::pair<double, double> check_cos_sin_fe(Complex s, double a) {
  require_unit_interval(a, "check_cos_sin_fe");
  const Complex fa = periodic_zeta(s, a);
  const Complex fb = periodic_zeta(s, 1.0 - a);
  const Complex cos_sum = 0.5 * (fa + fb);
  const Complex sin_sum = (fa - fb) / Complex(0.0, 2.0);
  auto rhs = [a](Complex z) {
    const Complex h1 = hurwitz_zeta(1.0 - z, a);
    const Complex h2 = hurwitz_zeta(1.0 - z, 1.0 - a);
    return std::pair<Complex, Complex>{(h1 + h2) / (2.0 * gamma_cos(z)), (h1 - h2) / (2.0 * gamma_sin(z))};
  };
  // Gamma_cos vanishes at odd and Gamma_sin at even integers, where Z resp. Y
  // vanish too; there the right-hand sides are limits, taken as circle means.
  const double off_integer = std::abs(s - std::nearbyint(s.real()));
  if (off_integer > 1e-6) {
    const auto [c, sn] = rhs(s);
    return {std::abs(cos_sum - c), std::abs(sin_sum - sn)};
  }
  constexpr int kNodes = 32;
  Complex c = 0.0, sn = 0.0;
  for (int j = 0; j < kNodes; ++j) {
    const auto [cj, sj] = rhs(s + std::polar(0.25, 2.0 * kPi * (j + 0.5) / kNodes));
    c += cj;
    sn += sj;
  }
  c /= static_cast<double>(kNodes);
  sn /= static_cast<double>(kNodes);
  return {std::abs(cos_sum - c), std::abs(sin_sum - sn)};
}

double check_hurwitz_taylor(Complex s, double a, int K) {
  if (!(std::abs(a) <= 0.45)) throw DomainError("check_hurwitz_taylor: requires |a| <= 0.45");
  if (K < 0) throw DomainError("check_hurwitz_taylor: negative truncation");
  auto G = [&](double x) {
    Complex sum = 0.0;
    double power = 1.0;
    for (int k = 0; k <= K; ++k) {
      sum += binom_poly(k, s) * riemann_zeta(1.0 - s + static_cast<double>(k)) * power;
      power *= x;
    }
    return sum;
  };
  double worst = std::abs(G(a) - hurwitz_zeta(1.0 - s, 1.0 - a));
  if (a > 0.0) {
    const Complex second = std::exp((s - 1.0) * std::log(a)) + G(-a);
    worst = std::max(worst, std::abs(second - hurwitz_zeta(1.0 - s, a)));
  }
  return worst;
}

}  // namespace tornheim
