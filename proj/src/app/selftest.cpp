#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "tornheim/app.hpp"
#include "tornheim/oracle.hpp"

namespace tornheim::app {
namespace {

// Each check returns its worst discrepancy; the suite passes when all are
// within their limits.
struct Check {
  std::string what;
  double worst = 0.0;
  double limit = 0.0;
};

using Suite = std::function<std::vector<Check>()>;

SuiteResult run_suite(const std::string& name, const Suite& suite) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const std::vector<Check> checks = suite();
    r.passed = true;
    std::ostringstream os;
    os.precision(2);
    for (const Check& c : checks) {
      const bool ok = c.worst <= c.limit;  // false for NaN as well
      r.passed = r.passed && ok;
      if (!ok || os.tellp() == 0) {
        if (os.tellp() != 0) os << "; ";
        os << c.what << ' ' << std::scientific << c.worst << (ok ? " <= " : " > ") << c.limit;
      }
    }
    r.detail = os.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Complex exp_neg(Complex z) { return exp_i_pi(-z); }

// max that lets a NaN through instead of dropping it
double worse(double a, double b) { return std::isnan(a) || std::isnan(b) ? std::nan("") : std::max(a, b); }

std::vector<Check> kernel_suite() {
  Check refl{"gamma reflection", 0, 1e-11}, rec{"gamma recurrence", 0, 1e-12}, fe{"zeta functional equation", 0, 1e-10};
  for (double x = -4.65; x <= 4.8; x += 0.9) {
    for (double y = -4.5; y <= 4.6; y += 1.5) {
      const Complex z(x, y);
      refl.worst = worse(refl.worst, std::abs(gamma(z) * gamma(1.0 - z) * sin_pi(z) / kPi - 1.0));
      rec.worst = worse(rec.worst, std::abs(gamma(z + 1.0) / (z * gamma(z)) - 1.0));
      const Complex rhs = std::pow(2.0, z) * std::pow(kPi, z - 1.0) * sin_pi(0.5 * z) * gamma(1.0 - z) * riemann_zeta(1.0 - z);
      fe.worst = worse(fe.worst, std::abs(riemann_zeta(z) - rhs) / std::abs(riemann_zeta(z)));
    }
  }
  Check tail{"zeta-1 tail bound (violations)", 0, 0};
  for (int sigma = -3; sigma <= 3; ++sigma) {
    for (int k = sigma + 2; k <= 60; ++k) {
      if (std::abs(zeta_minus_one(static_cast<double>(k + 1 - sigma))) > std::ldexp(1.0, sigma - k)) tail.worst += 1;
    }
  }
  return {refl, rec, fe, tail};
}

std::vector<Check> functional_equation_suite() {
  Check periodic{"periodic zeta FE", 0, 1e-8}, cos_sin{"cos/sin sum FE", 0, 1e-8};
  for (Complex s : {Complex(1.5, 0.0), Complex(2.0, 0.5), Complex(2.5, 0.0), Complex(3.0, -1.0), Complex(4.0, 0.0)}) {
    for (double a : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      const auto [c, sn] = check_cos_sin_fe(s, a);
      for (double d : {c, sn}) cos_sin.worst = worse(cos_sin.worst, d);
      periodic.worst = worse(periodic.worst, check_periodic_fe(s, a));
    }
  }
  return {periodic, cos_sin};
}

std::vector<Check> taylor_suite() {
  Check taylor{"Hurwitz Taylor expansions", 0, 1e-8};
  for (Complex s : {Complex(2.3, 0.0), Complex(-1.7, 0.0), Complex(0.6, 1.2), Complex(3.4, -0.8)}) {
    for (double a : {0.0, 0.1, 0.25, 0.4, -0.3}) taylor.worst = worse(taylor.worst, check_hurwitz_taylor(s, a, 60));
  }
  return {taylor};
}

// Series against the defining double sums.
std::vector<Check> oracle_grid_suite() {
  const TriplePoint points[] = {{2.2, 2.4, 2.6}, {{2.5, 0.3}, {2.1, -0.4}, 2.8}, {3.0, 2.0, 2.5}, {{2.7, 0.8}, 2.3, {2.4, -0.6}}};
  Check t{"T vs double sum", 0, 1e-8}, s1{"S1 vs double sums", 0, 1e-8}, s2{"S2 vs double sums", 0, 1e-8};
  constexpr int kCutoff = 8000;
  for (const TriplePoint& p : points) {
    const OracleResult o1 = oracle_T(p, kCutoff), o2 = oracle_T(p.rotated(), kCutoff), o3 = oracle_T(p.rotated_twice(), kCutoff);
    const double slack = 4.0 * (o1.tail_bound + o2.tail_bound + o3.tail_bound);
    const Complex T1 = o1.value, T2 = o2.value, T3 = o3.value;
    const Complex d1 = (1.0 + exp_neg(p.s + p.t + p.u)) * T1 + (exp_neg(p.s) + exp_neg(p.u + p.t)) * T2 +
                       (exp_neg(p.t) + exp_neg(p.u + p.s)) * T3;
    const Complex d2 = (exp_neg(p.u) + exp_neg(p.s + p.t)) * T1 + (exp_neg(p.t) + exp_neg(p.u + p.s)) * T2 +
                       (exp_neg(p.s) + exp_neg(p.t + p.u)) * T3;
    t.worst = worse(t.worst, std::abs(eval_T(p).value - T1) - o1.tail_bound);
    s1.worst = worse(s1.worst, std::abs(eval_S1(p).value - d1) - slack);
    s2.worst = worse(s2.worst, std::abs(eval_S2(p).value - d2) - slack);
  }
  return {t, s1, s2};
}

std::vector<Check> identity_suite() {
  Check zz{"T(0,0,s) = zeta(s-1) - zeta(s)", 0, 1e-9}, zss{"2T(0,s,s) = zeta(s)^2 - zeta(2s)", 0, 1e-9};
  for (Complex s : {Complex(3.0, 0.0), Complex(4.0, 0.0), Complex(2.5, 1.3)}) {
    zz.worst = worse(zz.worst, std::abs(eval_T({0.0, 0.0, s}).value - (riemann_zeta(s - 1.0) - riemann_zeta(s))));
  }
  for (Complex s : {Complex(2.5, 0.0), Complex(3.0, 0.0), Complex(2.0, 0.7)}) {
    const Complex z = riemann_zeta(s);
    zss.worst = worse(zss.worst, std::abs(2.0 * eval_T({0.0, s, s}).value - (z * z - riemann_zeta(2.0 * s))));
  }
  Check rec{"(iii) vs (viii)", 0, 1e-8};
  for (const TriplePoint& p : {TriplePoint{2.3, 2.6, 2.9}, TriplePoint{{-0.4, 0.3}, 1.7, {0.8, -0.2}}}) {
    rec.worst = worse(rec.worst, std::abs(recombine(p, RecombinationId::III).value - recombine(p, RecombinationId::VIII).value));
  }
  Check diag{"T(d,d,d) -> 1/3", std::abs(eval_T_diag(1e-6).value - 1.0 / 3.0), 1e-4};
  return {zz, zss, rec, diag};
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  std::optional<testing::ScopedEtaSignFault> fault;
  if (opts.inject_eta_sign_fault) fault.emplace();
  return {
      run_suite("kernels", kernel_suite),
      run_suite("functional-equations", functional_equation_suite),
      run_suite("taylor-expansions", taylor_suite),
      run_suite("oracle-grid", oracle_grid_suite),
      run_suite("identities", identity_suite),
  };
}

}  // namespace tornheim::app
