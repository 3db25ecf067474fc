#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tornheim/tornheim.hpp"

namespace tornheim {
namespace {

constexpr int kResidueNodes = 8;
constexpr double kSpreadLimit = 0.1;
// |T| must grow at least this much from `radius` to radius/10 (a simple pole
// gives 10). An absolute threshold does not work here: the residues at
// 1/2 - k fall to ~1e-5, so |T| is below 1 a millimetre away.
constexpr double kGrowth = 5.0;
constexpr double kAgreement = 1e-3;

double abs_T(double x, const EvalConfig& cfg) {
  try {
    return std::abs(eval_T_diag(x, cfg).value);
  } catch (const SingularPointError&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Secant iteration on 1/T from two starting points. Returns NaN when the
// iterate wanders outside [lo, hi].
double refine(double x0, double x1, double lo, double hi, const EvalConfig& cfg) {
  auto inv = [&](double x, bool& hit) -> double {
    try {
      return (1.0 / eval_T_diag(x, cfg).value).real();
    } catch (const SingularPointError&) {
      hit = true;
      return 0.0;
    }
  };
  bool hit = false;
  double g0 = inv(x0, hit);
  if (hit) return x0;
  double g1 = inv(x1, hit);
  if (hit) return x1;
  for (int it = 0; it < 40; ++it) {
    if (g1 == g0) break;
    const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    if (!(x2 >= lo && x2 <= hi)) return std::numeric_limits<double>::quiet_NaN();
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = inv(x1, hit);
    if (hit || std::abs(x1 - x0) < 1e-13 * std::max(1.0, std::abs(x1))) return x1;
  }
  return x1;
}

}  // namespace

ResidueEstimate residue_diag(double s0, const EvalConfig& cfg, double radius) {
  cfg.validate();
  if (!(radius > 0.0) || !std::isfinite(s0)) throw DomainError("residue_diag: invalid center or radius");
  std::vector<Complex> samples;
  Complex mean = 0.0;
  for (int j = 0; j < kResidueNodes; ++j) {
    const Complex h = std::polar(radius, 2.0 * kPi * (j + 0.5) / kResidueNodes);
    const Complex v = h * eval_T_diag(s0 + h, cfg).value;
    samples.push_back(v);
    mean += v;
  }
  mean /= static_cast<double>(kResidueNodes);
  double deviation = 0.0;
  for (const Complex& v : samples) deviation = std::max(deviation, std::abs(v - mean));
  const double spread = std::abs(mean) > 0.0 ? deviation / std::abs(mean) : std::numeric_limits<double>::infinity();
  if (!(spread <= kSpreadLimit)) {
    std::ostringstream msg;
    msg << "residue_diag: no simple pole at " << s0 << " (sample spread " << spread << ")";
    throw NotAPoleError(msg.str());
  }
  return {mean, spread};
}

std::vector<PoleCandidate> scan_poles(double lo, double hi, double step, const EvalConfig& cfg, double radius) {
  cfg.validate();
  if (!(hi > lo) || !(step > 0.0)) throw DomainError("scan_poles: need lo < hi and step > 0");
  if (!(radius > 0.0 && radius < step)) throw DomainError("scan_poles: radius must lie in (0, step)");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> xs(static_cast<std::size_t>(count));
  std::vector<double> mags(xs.size());
  for (int i = 0; i < count; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + step * i;
    mags[static_cast<std::size_t>(i)] = abs_T(xs[static_cast<std::size_t>(i)], cfg);
  }

  std::vector<PoleCandidate> found;
  for (int i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const double left = i > 0 ? mags[ui - 1] : -1.0;
    const double right = i + 1 < count ? mags[ui + 1] : -1.0;
    if (!(mags[ui] >= left && mags[ui] >= right)) continue;
    // Start the secant from the larger neighbour.
    const std::size_t other = (left > right) ? ui - 1 : std::min(ui + 1, xs.size() - 1);
    const double window_lo = std::max(lo, xs[ui] - 2.0 * step);
    const double window_hi = std::min(hi, xs[ui] + 2.0 * step);
    double x = xs[ui];
    if (std::isfinite(mags[ui]) && other != ui) {
      x = refine(xs[ui], xs[other], window_lo, window_hi, cfg);
    }
    if (!std::isfinite(x)) continue;
    bool duplicate = false;
    for (const PoleCandidate& c : found) duplicate = duplicate || std::abs(c.location - x) < 1e-6;
    if (duplicate) continue;

    try {
      const ResidueEstimate wide = residue_diag(x, cfg, radius);
      const ResidueEstimate narrow = residue_diag(x, cfg, 0.1 * radius);
      if (abs_T(x + 0.1 * radius, cfg) < kGrowth * abs_T(x + radius, cfg)) continue;
      if (std::abs(wide.value - narrow.value) > kAgreement * std::abs(narrow.value)) continue;
      found.push_back({x, narrow.value, narrow.spread});
    } catch (const NotAPoleError&) {
      continue;
    } catch (const SingularPointError&) {
      continue;
    }
  }
  std::sort(found.begin(), found.end(),
            [](const PoleCandidate& a, const PoleCandidate& b) { return a.location < b.location; });
  return found;
}

}  // namespace tornheim
