#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "kernels_internal.hpp"
#include "slots.hpp"
#include "tornheim/tornheim.hpp"

namespace tornheim {
namespace {

using detail::Lazy;
using detail::Slot;
using detail::SlotKind;

Complex pow2(Complex x) { return std::exp(x * kLn2); }

struct Acc {
  Complex value{};
  double abs_sum = 0.0;
  int count = 0;
  void add(Complex v) {
    value += v;
    abs_sum += std::abs(v);
    ++count;
  }
  TermSample sample() const { return {value, count, abs_sum}; }
};

// Sums the bracket (whose terms already carry the per-slot prefactor pieces)
// and applies the remaining common factor.
SeriesValue finish(const ShellTerm& term, const TriplePoint& p, Complex common, const EvalConfig& cfg,
                   const char* method) {
  EvalConfig inner = cfg;
  const double scale = std::abs(common);
  inner.tol = cfg.tol / scale;
  // the removable terms at x = -N sit at shell N
  int depth = 0;
  for (const Complex& x : {p.s, p.t, p.u}) depth = std::max(depth, static_cast<int>(std::ceil(-x.real())));
  SeriesValue out = detail::sum_shells_from(term, inner, std::min(depth, cfg.max_order));
  out.value *= common;
  out.err_estimate *= scale;
  out.magnitude *= scale;
  out.method = method;
  return out;
}

double eta_minus_sign(int k) {
  if (testing::eta_sign_fault_active()) return 1.0;
  return k % 2 == 0 ? 1.0 : -1.0;
}

Lazy eta_table(const Slot& slot, int sign) {
  return Lazy([&slot, sign](int k) {
    const double s = sign < 0 ? eta_minus_sign(k) : 1.0;
    return s * std::ldexp(1.0, -k) * slot.with_eta(k);
  });
}

// eta^+_{2k+offset} paired with the slot
Lazy parity_table(const Slot& slot, int offset) {
  return Lazy([&slot, offset](int k) {
    const int order = 2 * k + offset;
    return std::ldexp(1.0, -order) * slot.with_eta(order);
  });
}

// bare / (x + stride*j + offset); only the offsets a series actually uses are touched
Lazy linear_table(const Slot& slot, int stride = 1, int offset = 0) {
  return Lazy([&slot, stride, offset](int j) { return slot.over_linear(stride * j + offset); });
}

SeriesValue direct_S1(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Gamma), T(p.t, SlotKind::Gamma), U(p.u, SlotKind::Gamma);
  Lazy ep_s = eta_table(S, 1), em_s = eta_table(S, -1);
  Lazy ep_t = eta_table(T, 1), em_t = eta_table(T, -1);
  Lazy ep_u = eta_table(U, 1), em_u = eta_table(U, -1);
  Lazy l_s = linear_table(S), l_t = linear_table(T), l_u = linear_table(U);
  const Complex w_s = pow2(-p.s), w_t = pow2(-p.t), w_u = pow2(-p.u);
  const Complex single = pow2(1.0 - p.s - p.t) * S.bare() * T.bare();
  const Complex st1 = p.s + p.t - 1.0;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    const int k = l + m + n;
    if (k % 2 == 0) acc.add(ep_s[l] * ep_t[m] * em_u[n] / static_cast<double>(k + 1));
    if (l == 0) acc.add(w_s * l_s[m + n] * em_t[m] * ep_u[n]);
    if (m == 0) acc.add(w_t * l_t[l + n] * em_s[l] * ep_u[n]);
    if (n == 0) acc.add(w_u * l_u[l + m] * ep_s[l] * ep_t[m]);
    if (l == 0 && m == 0) acc.add(single * ep_u[n] / (st1 + static_cast<double>(n)));
    return acc.sample();
  };
  return finish(term, p, g_phase(p.s, p.t, p.u), cfg, "S1:eta");
}

SeriesValue direct_S2(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Gamma), T(p.t, SlotKind::Gamma), U(p.u, SlotKind::Gamma);
  Lazy ep_s = eta_table(S, 1), em_s = eta_table(S, -1);
  Lazy ep_t = eta_table(T, 1), em_t = eta_table(T, -1);
  Lazy ep_u = eta_table(U, 1), em_u = eta_table(U, -1);
  Lazy l_s = linear_table(S), l_t = linear_table(T), l_u = linear_table(U);
  const Complex w_s = pow2(-p.s), w_t = pow2(-p.t), w_u = pow2(-p.u);
  const Complex r_s = S.bare(), r_t = T.bare(), r_u = U.bare();
  const Complex sum = p.s + p.t + p.u;
  const Complex constant = pow2(2.0 - sum) * r_s * r_t * r_u / (sum - 2.0);
  const Complex single_s = pow2(1.0 - p.t - p.u) * r_t * r_u;
  const Complex single_t = pow2(1.0 - p.u - p.s) * r_u * r_s;
  const Complex single_u = pow2(1.0 - p.s - p.t) * r_s * r_t;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    const int k = l + m + n;
    if (k == 0) acc.add(constant);
    if (k % 2 == 0) acc.add(ep_s[l] * ep_t[m] * ep_u[n] / static_cast<double>(k + 1));
    if (n == 0) acc.add(w_u * l_u[l + m] * em_s[l] * em_t[m]);
    if (l == 0) acc.add(w_s * l_s[m + n] * em_t[m] * em_u[n]);
    if (m == 0) acc.add(w_t * l_t[n + l] * em_u[n] * em_s[l]);
    if (m == 0 && n == 0) acc.add(single_s * em_s[l] / (p.t + p.u + static_cast<double>(l - 1)));
    if (n == 0 && l == 0) acc.add(single_t * em_t[m] / (p.u + p.s + static_cast<double>(m - 1)));
    if (l == 0 && m == 0) acc.add(single_u * em_u[n] / (p.s + p.t + static_cast<double>(n - 1)));
    return acc.sample();
  };
  return finish(term, p, g_phase(p.s, p.t, p.u), cfg, "S2:eta");
}

SeriesValue direct_S3(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Cos), T(p.t, SlotKind::Cos), U(p.u, SlotKind::Cos);
  Lazy c_s = parity_table(S, 0), c_t = parity_table(T, 0), c_u = parity_table(U, 0);
  Lazy l_s = linear_table(S, 2), l_t = linear_table(T, 2), l_u = linear_table(U, 2);
  const Complex w_s = pow2(-p.s), w_t = pow2(-p.t), w_u = pow2(-p.u);
  const Complex r_s = S.bare(), r_t = T.bare(), r_u = U.bare();
  const Complex sum = p.s + p.t + p.u;
  const Complex constant = pow2(-sum) * r_s * r_t * r_u / (sum - 2.0);
  const Complex single_s = w_t * w_u * r_t * r_u;
  const Complex single_t = w_u * w_s * r_u * r_s;
  const Complex single_u = w_s * w_t * r_s * r_t;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    const int k = l + m + n;
    if (k == 0) acc.add(constant);
    acc.add(c_s[l] * c_t[m] * c_u[n] / static_cast<double>(2 * k + 1));
    if (n == 0) acc.add(w_u * l_u[l + m] * c_s[l] * c_t[m]);
    if (l == 0) acc.add(w_s * l_s[m + n] * c_t[m] * c_u[n]);
    if (m == 0) acc.add(w_t * l_t[n + l] * c_u[n] * c_s[l]);
    if (m == 0 && n == 0) acc.add(single_s * c_s[l] / (p.t + p.u + static_cast<double>(2 * l - 1)));
    if (n == 0 && l == 0) acc.add(single_t * c_t[m] / (p.u + p.s + static_cast<double>(2 * m - 1)));
    if (l == 0 && m == 0) acc.add(single_u * c_u[n] / (p.s + p.t + static_cast<double>(2 * n - 1)));
    return acc.sample();
  };
  return finish(term, p, 4.0, cfg, "S3:eta");
}

SeriesValue direct_S4(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Sin), T(p.t, SlotKind::Sin), U(p.u, SlotKind::Cos);
  Lazy o_s = parity_table(S, 1), o_t = parity_table(T, 1), c_u = parity_table(U, 0);
  Lazy l_s = linear_table(S, 2, 1), l_t = linear_table(T, 2, 1), l_u = linear_table(U, 2, 2);
  const Complex w_s = pow2(-p.s), w_t = pow2(-p.t), w_u = pow2(-p.u);
  const Complex r_s = S.bare(), r_t = T.bare(), r_u = U.bare();
  const Complex sum = p.s + p.t + p.u;
  const Complex constant = pow2(-sum) * r_s * r_t * r_u / (sum - 2.0);
  const Complex single_s = -w_t * w_u * r_t * r_u;
  const Complex single_t = -w_u * w_s * r_u * r_s;
  const Complex single_u = w_s * w_t * r_s * r_t;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    const int k = l + m + n;
    if (k == 0) acc.add(constant);
    acc.add(o_s[l] * o_t[m] * c_u[n] / static_cast<double>(2 * k + 3));
    if (n == 0) acc.add(w_u * l_u[l + m] * o_s[l] * o_t[m]);
    if (l == 0) acc.add(-w_s * l_s[m + n] * o_t[m] * c_u[n]);
    if (m == 0) acc.add(-w_t * l_t[n + l] * c_u[n] * o_s[l]);
    if (m == 0 && n == 0) acc.add(single_s * o_s[l] / (p.t + p.u + static_cast<double>(2 * l)));
    if (n == 0 && l == 0) acc.add(single_t * o_t[m] / (p.u + p.s + static_cast<double>(2 * m)));
    if (l == 0 && m == 0) acc.add(single_u * c_u[n] / (p.s + p.t + static_cast<double>(2 * n - 1)));
    return acc.sample();
  };
  return finish(term, p, 4.0, cfg, "S4:eta");
}

double factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> f(171, 1.0);
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
    return f;
  }();
  return table.at(static_cast<std::size_t>(n));
}

// B(a+1, b+1) = a! b! / (a+b+1)! for non-negative integers
double beta_int(int a, int b) {
  return std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
}

Lazy z_table(const Slot& slot) {
  return Lazy([&slot](int k) { return slot.with_z(k); });
}

// rGamma(x + k), k >= 0
Lazy shifted_recip_gamma(Complex x) {
  return Lazy([x](int k) { return recip_gamma(x + static_cast<double>(k)); });
}

// Pochhammer (x)_k; Lazy asks for k = 0, 1, 2, ... in order.
Lazy pochhammer(Complex x) {
  return Lazy([x, running = Complex(1.0)](int k) mutable {
    if (k > 0) running *= x + static_cast<double>(k - 1);
    return running;
  });
}

SeriesValue direct_S1_legacy(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Gamma), T(p.t, SlotKind::Gamma), U(p.u, SlotKind::Gamma);
  Lazy z_s = z_table(S), z_t = z_table(T), z_u = z_table(U);
  Lazy l_u = linear_table(U);
  Lazy poch_s = pochhammer(p.s), poch_t = pochhammer(p.t), poch_u = pochhammer(p.u);
  Lazy rg_s1 = shifted_recip_gamma(p.s + 1.0), rg_t1 = shifted_recip_gamma(p.t + 1.0);
  Lazy rg_tu = shifted_recip_gamma(p.t + p.u), rg_su = shifted_recip_gamma(p.s + p.u);
  const Complex r_s = S.bare(), r_t = T.bare();
  const Complex constant = r_s * r_t * gamma(p.s + p.t - 1.0) * recip_gamma(p.s + p.t + p.u - 1.0);
  const Complex st1 = p.s + p.t - 1.0;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    if (l + m + n == 0) acc.add(constant);
    acc.add(z_s[l] * z_t[m] * z_u[n] * beta_int(n, l + m));
    if (n == 0) acc.add(z_s[l] * z_t[m] * l_u[l + m]);
    // rGamma(t) B(l+1, t+n) = l! (t)_n rGamma(t+n+l+1)
    if (m == 0) acc.add(z_s[l] * z_u[n] * (poch_t[n] * rg_t1[n + l]) * factorial(l));
    if (l == 0) acc.add(z_t[m] * z_u[n] * (poch_s[n] * rg_s1[n + m]) * factorial(m));
    if (l == 0 && m == 0) acc.add(r_s * r_t * z_u[n] / (st1 + static_cast<double>(n)));
    if (m == 0 && n == 0) acc.add(z_s[l] * poch_u[l] * rg_tu[l]);
    if (l == 0 && n == 0) acc.add(z_t[m] * poch_u[m] * rg_su[m]);
    return acc.sample();
  };
  return finish(term, p, g_phase(p.s, p.t, p.u), cfg, "S1:legacy");
}

SeriesValue direct_S2_legacy(const TriplePoint& p, const EvalConfig& cfg) {
  const Slot S(p.s, SlotKind::Gamma), T(p.t, SlotKind::Gamma), U(p.u, SlotKind::Gamma);
  Lazy z_s = z_table(S), z_t = z_table(T), z_u = z_table(U);
  Lazy rg_s1 = shifted_recip_gamma(p.s + 1.0), rg_t1 = shifted_recip_gamma(p.t + 1.0),
       rg_u1 = shifted_recip_gamma(p.u + 1.0);
  const Complex r_s = S.bare(), r_t = T.bare(), r_u = U.bare();
  const Complex sum = p.s + p.t + p.u;
  const Complex constant = r_s * r_t * r_u / (sum - 2.0);

  // l! Gamma(a) / Gamma(a + l + 1) = (1/a) prod_{j=1}^{l} j / (a + j)
  auto falling = [](Complex a, int l) {
    Complex v = 1.0 / a;
    for (int j = 1; j <= l; ++j) v *= static_cast<double>(j) / (a + static_cast<double>(j));
    return v;
  };
  const Complex a_s = p.t + p.u - 1.0, a_t = p.u + p.s - 1.0, a_u = p.s + p.t - 1.0;

  auto term = [&](int l, int m, int n) {
    Acc acc;
    const int k = l + m + n;
    if (k == 0) acc.add(constant);
    acc.add(z_s[l] * z_t[m] * z_u[n] / static_cast<double>(k + 1));
    // rGamma(u) / beta(u, N+1) = N! rGamma(u + N + 1)
    if (n == 0) acc.add(z_s[l] * z_t[m] * factorial(l + m) * rg_u1[l + m]);
    if (l == 0) acc.add(z_t[m] * z_u[n] * factorial(m + n) * rg_s1[m + n]);
    if (m == 0) acc.add(z_u[n] * z_s[l] * factorial(n + l) * rg_t1[n + l]);
    if (m == 0 && n == 0) acc.add(z_s[l] * r_t * r_u * falling(a_s, l));
    if (n == 0 && l == 0) acc.add(z_t[m] * r_u * r_s * falling(a_t, m));
    if (l == 0 && m == 0) acc.add(z_u[n] * r_s * r_t * falling(a_u, n));
    return acc.sample();
  };
  return finish(term, p, g_phase(p.s, p.t, p.u), cfg, "S2:legacy");
}

// ---------------------------------------------------------------------------
// S3/S4 next to a pole of 1/Gamma_cos or 1/Gamma_sin. The function itself is
// regular there but the bracket has a compensating zero, so the value is taken
// as the mean over a circle around the point in the offending slots.

constexpr double kPrefactorPoleRadius = 0.05;

double distance_to_prefactor_pole(Complex x, SlotKind kind) {
  // Cos slots: positive odd integers. Sin slots: positive even integers.
  const double first = kind == SlotKind::Cos ? 1.0 : 2.0;
  double k = std::nearbyint((x.real() - first) / 2.0);
  if (k < 0.0) k = 0.0;
  return std::abs(x - (first + 2.0 * k));
}

using DirectEval = SeriesValue (*)(const TriplePoint&, const EvalConfig&);

double coefficient_along(LinearForm form, const std::array<double, 3>& d) {
  switch (form) {
    case LinearForm::SPlusT: return d[0] + d[1];
    case LinearForm::TPlusU: return d[1] + d[2];
    case LinearForm::UPlusS: return d[2] + d[0];
    case LinearForm::SPlusTPlusU: return d[0] + d[1] + d[2];
  }
  return 0.0;
}

SeriesValue circle_mean(FunctionId f, DirectEval direct, const TriplePoint& p, const std::array<double, 3>& d,
                        const EvalConfig& cfg) {
  double reach = 1.0;
  for (const SingularityReport& r : classify(p, f)) {
    const double c = coefficient_along(r.form, d);
    if (c != 0.0) reach = std::min(reach, r.distance / c);
  }
  const double radius = std::min(0.25, 0.5 * reach);
  const int nodes = radius > reach / 3.0 ? 64 : 32;
  SeriesValue out;
  out.converged = true;
  double err = 0.0;
  Complex total = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / nodes;
    const Complex z = std::polar(radius, theta);
    const TriplePoint q{p.s + d[0] * z, p.t + d[1] * z, p.u + d[2] * z};
    const SeriesValue v = direct(q, cfg);
    total += v.value;
    err = std::max(err, v.err_estimate);
    out.terms_used += v.terms_used;
    out.max_order = std::max(out.max_order, v.max_order);
    out.magnitude += v.magnitude / nodes;
    out.method = v.method + "+circle";
  }
  out.value = total / static_cast<double>(nodes);
  out.err_estimate = err;
  return out;
}

SeriesValue with_prefactor_guard(FunctionId f, DirectEval direct, const TriplePoint& p,
                                 const std::array<SlotKind, 3>& kinds, const EvalConfig& cfg) {
  const std::array<Complex, 3> xs{p.s, p.t, p.u};
  std::array<double, 3> d{0.0, 0.0, 0.0};
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (distance_to_prefactor_pole(xs[i], kinds[i]) < kPrefactorPoleRadius) {
      d[i] = 1.0;
      any = true;
    }
  }
  if (!any) return direct(p, cfg);
  return circle_mean(f, direct, p, d, cfg);
}

void prepare(const TriplePoint& p, FunctionId f, const EvalConfig& cfg) {
  cfg.validate();
  require_regular(p, f, cfg);
}

}  // namespace

SeriesValue eval_S1(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S1, cfg);
  return direct_S1(p, cfg);
}

SeriesValue eval_S2(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S2, cfg);
  return direct_S2(p, cfg);
}

SeriesValue eval_S3(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S3, cfg);
  return with_prefactor_guard(FunctionId::S3, direct_S3, p, {SlotKind::Cos, SlotKind::Cos, SlotKind::Cos},
                              cfg);
}

SeriesValue eval_S4(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S4, cfg);
  return with_prefactor_guard(FunctionId::S4, direct_S4, p, {SlotKind::Sin, SlotKind::Sin, SlotKind::Cos},
                              cfg);
}

SeriesValue eval_S1_legacy(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S1, cfg);
  return direct_S1_legacy(p, cfg);
}

SeriesValue eval_S2_legacy(const TriplePoint& p, const EvalConfig& cfg) {
  prepare(p, FunctionId::S2, cfg);
  return direct_S2_legacy(p, cfg);
}

SeriesValue eval_S(FunctionId f, const TriplePoint& p, const EvalConfig& cfg) {
  switch (f) {
    case FunctionId::S1: return eval_S1(p, cfg);
    case FunctionId::S2: return eval_S2(p, cfg);
    case FunctionId::S3: return eval_S3(p, cfg);
    case FunctionId::S4: return eval_S4(p, cfg);
    case FunctionId::T: break;
  }
  throw DomainError("eval_S: use eval_T for T");
}

}  // namespace tornheim
