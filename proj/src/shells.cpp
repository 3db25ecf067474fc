#include <cmath>
#include <string>

#include "tornheim/errors.hpp"
#include "kernels_internal.hpp"
#include "tornheim/series.hpp"

namespace tornheim {
namespace {

// Neumaier's variant of Kahan summation, per component.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

SeriesValue detail::sum_shells_from(const ShellTerm& term, const EvalConfig& cfg, int min_shells) {
  cfg.validate();
  CompensatedSum re;
  CompensatedSum im;
  double magnitude = 0.0;
  std::int64_t terms = 0;
  int small_run = 0;
  const double small = cfg.tol / 8.0;

  for (int shell = 0; shell <= cfg.max_order; ++shell) {
    double shell_abs = 0.0;
    for (int l = 0; l <= shell; ++l) {
      for (int m = 0; m <= shell - l; ++m) {
        const TermSample sample = term(l, m, shell - l - m);
        if (!std::isfinite(sample.value.real()) || !std::isfinite(sample.value.imag())) {
          throw ConvergenceError("sum_shells: non-finite term at shell " + std::to_string(shell));
        }
        re.add(sample.value.real());
        im.add(sample.value.imag());
        const double a = sample.abs_sum > 0.0 ? sample.abs_sum : std::abs(sample.value);
        shell_abs += a;
        terms += sample.count;
      }
    }
    magnitude += shell_abs;
    small_run = shell_abs < small ? small_run + 1 : 0;
    if (small_run >= 3 && shell >= min_shells) {
      SeriesValue out;
      out.value = Complex(re.value(), im.value());
      out.err_estimate = 8.0 * shell_abs;
      out.terms_used = terms > 0 ? terms : 1;
      out.max_order = shell;
      out.converged = true;
      out.magnitude = magnitude;
      return out;
    }
  }
  throw ConvergenceError("sum_shells: tolerance not met within " + std::to_string(cfg.max_order) +
                         " shells");
}

SeriesValue sum_shells(const ShellTerm& term, const EvalConfig& cfg) { return detail::sum_shells_from(term, cfg, 0); }

}  // namespace tornheim
