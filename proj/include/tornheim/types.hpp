#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace tornheim {

using Complex = std::complex<double>;

/// Argument triple (s, t, u) of T and the symmetric variants S1..S4.
struct TriplePoint {
  Complex s;
  Complex t;
  Complex u;

  /// (s,t,u) -> (u,s,t)
  TriplePoint rotated() const { return {u, s, t}; }
  /// (s,t,u) -> (t,u,s)
  TriplePoint rotated_twice() const { return {t, u, s}; }

  bool finite() const;
};

/// Result of a truncated series evaluation.
///
/// `err_estimate` is an absolute bound on the truncation error. `magnitude` is
/// the sum of the absolute values of all summed terms; multiplied by the unit
/// roundoff it gives the scale of the accumulated rounding error.
struct SeriesValue {
  Complex value{};
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;
  int max_order = 0;
  bool converged = false;
  double magnitude = 0.0;
  std::string method;
};

struct EvalConfig {
  double tol = 1e-12;
  int max_order = 120;
  double singular_proximity = 1e-6;

  /// Throws DomainError unless tol > 0 and 8 <= max_order <= 150.
  void validate() const;
};

enum class FunctionId { T, S1, S2, S3, S4 };

std::string_view to_string(FunctionId f);
FunctionId function_from_string(std::string_view name);

/// The linear form whose value is tested against an integer set.
enum class LinearForm { SPlusT, TPlusU, UPlusS, SPlusTPlusU };

/// Which values of the linear form are singular.
enum class SingularSet {
  IntegersAtMostOne,  // Z_{<=1}
  OddAtMostOne,       // odd integers <= 1
  EvenAtMostZero,     // even integers <= 0
  PlaneTwo,           // s+t+u = 2
};

struct SingularityReport {
  LinearForm form = LinearForm::SPlusT;
  SingularSet set = SingularSet::IntegersAtMostOne;
  double distance = 0.0;
  FunctionId function = FunctionId::T;
  /// The admissible value nearest to the form's value (2 for the plane).
  int nearest = 0;

  /// Human readable hyperplane name, e.g. "t+u in Z<=1".
  std::string hyperplane() const;
};

enum class RecombinationId { I, II, III, IV, V, VI, VII, VIII, AUTO };

std::string_view to_string(RecombinationId id);
RecombinationId recombination_from_string(std::string_view name);

}  // namespace tornheim
