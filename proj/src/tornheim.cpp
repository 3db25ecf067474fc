#include "tornheim/tornheim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace tornheim {
namespace {

constexpr double kPrefactorZero = 1e-8;
constexpr double kRoundoff = std::numeric_limits<double>::epsilon();
// Distance from the s+t hyperplanes below which (iii) gives way to (viii).
constexpr double kAutoMargin = 0.05;

struct Component {
  Complex coef;
  FunctionId f;
  TriplePoint at;
};

struct Identity {
  Complex lhs;  // multiplies T(s,t,u)
  std::vector<Component> rhs;
};

Identity build_identity(const TriplePoint& p, RecombinationId id) {
  const Complex a = exp_i_pi(-p.s);
  const Complex b = exp_i_pi(-p.t);
  const Complex g = exp_i_pi(-p.u);
  const TriplePoint usT = p.rotated();        // (u,s,t)
  const TriplePoint tuS = p.rotated_twice();  // (t,u,s)
  using F = FunctionId;
  switch (id) {
    case RecombinationId::I:
      return {(1.0 - a * a) * (1.0 - b * b) * (a * b * g - 1.0),
              {{a * a * b * b - 1.0, F::S1, p}, {a * (1.0 - b * b), F::S1, usT}, {b * (1.0 - a * a), F::S1, tuS}}};
    case RecombinationId::II:
      return {(1.0 - a * a) * (1.0 - b * b) * (a * b - g),
              {{a * a * b * b - 1.0, F::S2, p}, {b * (1.0 - a * a), F::S1, usT}, {a * (1.0 - b * b), F::S1, tuS}}};
    case RecombinationId::III:
      return {2.0, {{1.0, F::S3, p}, {-1.0, F::S4, p}}};
    case RecombinationId::IV:
      return {(1.0 - a) * (1.0 - b) * (1.0 + g),
              {{(1.0 + g) * (1.0 + a * b), F::S3, p}, {-1.0, F::S1, usT}, {-1.0, F::S1, tuS}}};
    case RecombinationId::V:
      return {(1.0 + a) * (1.0 + b) * (1.0 + g),
              {{-(1.0 + g) * (1.0 + a * b), F::S4, p}, {1.0, F::S1, usT}, {1.0, F::S1, tuS}}};
    case RecombinationId::VI:
      return {(1.0 - a) * (1.0 - b) * (1.0 + g),
              {{1.0, F::S1, p}, {1.0, F::S2, p}, {-(a + b) * (1.0 + g), F::S3, p}}};
    case RecombinationId::VII:
      return {(1.0 + a) * (1.0 + b) * (1.0 + g),
              {{1.0, F::S1, p}, {1.0, F::S2, p}, {-(a + b) * (1.0 + g), F::S4, p}}};
    case RecombinationId::VIII:
      return {2.0, {{1.0, F::S4, usT}, {1.0, F::S4, tuS}}};
    case RecombinationId::AUTO: break;
  }
  throw DomainError("build_identity: AUTO is not an identity");
}

// Smallest distance from the component points to their singular sets.
double component_clearance(const Identity& ident) {
  double best = std::numeric_limits<double>::infinity();
  for (const Component& c : ident.rhs) {
    for (const SingularityReport& r : classify(c.at, c.f)) best = std::min(best, r.distance);
  }
  return best;
}

SeriesValue combine(const Identity& ident, RecombinationId id, const EvalConfig& cfg) {
  const double lhs_abs = std::abs(ident.lhs);
  if (lhs_abs < kPrefactorZero) {
    std::ostringstream msg;
    msg << "recombine(" << to_string(id) << "): left prefactor " << lhs_abs << " is below " << kPrefactorZero;
    throw PrefactorZeroError(msg.str());
  }
  double coef_sum = 0.0;
  for (const Component& c : ident.rhs) coef_sum += std::abs(c.coef);

  EvalConfig inner = cfg;
  inner.tol = cfg.tol * lhs_abs / coef_sum;

  SeriesValue out;
  out.converged = true;
  Complex total = 0.0;
  double err = 0.0;
  double largest = 0.0;
  for (const Component& c : ident.rhs) {
    const SeriesValue v = eval_S(c.f, c.at, inner);
    const Complex piece = c.coef * v.value;
    total += piece;
    err += std::abs(c.coef) * v.err_estimate;
    largest = std::max(largest, std::abs(piece));
    out.terms_used += v.terms_used;
    out.max_order = std::max(out.max_order, v.max_order);
    out.magnitude += std::abs(c.coef) * v.magnitude / lhs_abs;
    out.converged = out.converged && v.converged;
  }
  out.value = total / ident.lhs;
  out.err_estimate = (err + largest * kRoundoff * static_cast<double>(ident.rhs.size())) / lhs_abs;
  out.method = std::string(to_string(id));
  return out;
}

// Distance of s+t from the odd integers <= 1: where (iii) stops being usable.
double odd_clearance(const TriplePoint& p) {
  int k = 0;
  return 2.0 * distance_to_integer_at_most(0.5 * (p.s + p.t - 1.0), 0, &k);
}

}  // namespace

SeriesValue recombine(const TriplePoint& p, RecombinationId id, const EvalConfig& cfg) {
  cfg.validate();
  if (id == RecombinationId::AUTO) return eval_T(p, cfg, id);
  require_regular(p, FunctionId::T, cfg);
  return combine(build_identity(p, id), id, cfg);
}

SeriesValue eval_T(const TriplePoint& p, const EvalConfig& cfg, RecombinationId method) {
  cfg.validate();
  require_regular(p, FunctionId::T, cfg);
  if (method != RecombinationId::AUTO) return combine(build_identity(p, method), method, cfg);

  if (odd_clearance(p) >= kAutoMargin) {
    return combine(build_identity(p, RecombinationId::III), RecombinationId::III, cfg);
  }
  const Identity viii = build_identity(p, RecombinationId::VIII);
  if (component_clearance(viii) > cfg.singular_proximity) {
    return combine(viii, RecombinationId::VIII, cfg);
  }
  // Last resort: the exponential-weighted identities, best conditioned first.
  std::vector<std::pair<RecombinationId, Identity>> rest;
  for (RecombinationId id : {RecombinationId::I, RecombinationId::II}) {
    Identity ident = build_identity(p, id);
    if (std::abs(ident.lhs) >= kPrefactorZero && component_clearance(ident) > cfg.singular_proximity) {
      rest.emplace_back(id, std::move(ident));
    }
  }
  if (rest.empty()) {
    throw MethodUnavailableError("eval_T: no recombination identity is regular at this point");
  }
  if (rest.size() == 2 && std::abs(rest[1].second.lhs) > std::abs(rest[0].second.lhs)) {
    std::swap(rest[0], rest[1]);
  }
  return combine(rest[0].second, rest[0].first, cfg);
}

std::vector<double> diagonal_poles(double lo, double hi) {
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double x = 0.5 - k;
    if (x < lo) break;
    if (x <= hi) out.push_back(x);
  }
  if (2.0 / 3.0 >= lo && 2.0 / 3.0 <= hi) out.push_back(2.0 / 3.0);
  std::sort(out.begin(), out.end());
  return out;
}

SeriesValue eval_T_diag(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("eval_T_diag: non-finite argument");
  const TriplePoint p{s, s, s};
  auto near_pole = [&](double x) { return std::abs(s - x) < cfg.singular_proximity; };
  bool pole = near_pole(2.0 / 3.0);
  if (s.real() < 1.0) {
    const double k = std::max(0.0, std::nearbyint(0.5 - s.real()));
    pole = pole || near_pole(0.5 - k);
  }
  if (pole) {
    std::ostringstream msg;
    msg << "eval_T_diag: s = " << s.real() << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag())
        << "i is a pole of T(s,s,s)";
    throw SingularPointError(msg.str(), singular_near(p, FunctionId::T, 0.5));
  }

  // Near a non-positive integer the point (s,s,s) touches t+u in Z<=1, but the
  // diagonal function is regular there: take its mean over a small circle.
  int nearest = 0;
  const double dist = distance_to_integer_at_most(s, 0, &nearest);
  constexpr double kRadius = 0.1;
  if (dist < 0.02) {
    constexpr int kNodes = 32;
    SeriesValue out;
    out.converged = true;
    Complex total = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      const Complex z = s + std::polar(kRadius, 2.0 * kPi * (j + 0.5) / kNodes);
      const SeriesValue v = eval_T({z, z, z}, cfg);
      total += v.value;
      out.err_estimate = std::max(out.err_estimate, v.err_estimate);
      out.terms_used += v.terms_used;
      out.max_order = std::max(out.max_order, v.max_order);
      out.magnitude += v.magnitude / kNodes;
      out.converged = out.converged && v.converged;
      out.method = v.method + "+circle";
    }
    out.value = total / static_cast<double>(kNodes);
    return out;
  }
  return eval_T(p, cfg);
}

}  // namespace tornheim
