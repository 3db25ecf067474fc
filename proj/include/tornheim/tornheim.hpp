#pragma once

// T(s,t,u) everywhere off its singular hyperplanes, assembled from S1..S4.

#include <vector>

#include "tornheim/complexfn.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/series.hpp"
#include "tornheim/types.hpp"

namespace tornheim {

/// Every declared singular hyperplane of f, with the distance from p.
std::vector<SingularityReport> classify(const TriplePoint& p, FunctionId f);

/// The subset of classify(p, f) closer than `proximity`.
std::vector<SingularityReport> singular_near(const TriplePoint& p, FunctionId f, double proximity);

/// Throws SingularPointError if p is within cfg.singular_proximity of a
/// singular hyperplane of f.
void require_regular(const TriplePoint& p, FunctionId f, const EvalConfig& cfg);

/// T extracted from one of the eight recombination identities.
SeriesValue recombine(const TriplePoint& p, RecombinationId id, const EvalConfig& cfg = {});

/// T(s,t,u); AUTO chooses an identity that is well conditioned at p.
SeriesValue eval_T(const TriplePoint& p, const EvalConfig& cfg = {},
                   RecombinationId method = RecombinationId::AUTO);

/// T(s,s,s).
SeriesValue eval_T_diag(Complex s, const EvalConfig& cfg = {});

/// Declared poles of T(s,s,s) inside [lo, hi]: 2/3 and 1/2 - k.
std::vector<double> diagonal_poles(double lo, double hi);

struct ResidueEstimate {
  Complex value{};
  /// Largest deviation of a sample from the mean, relative to |mean|.
  double spread = 0.0;
};

/// Residue of T(s,s,s) at s0 from the mean of (s - s0) T(s,s,s) on a circle
/// of the given radius. NotAPoleError when the samples disagree by > 10%.
ResidueEstimate residue_diag(double s0, const EvalConfig& cfg = {}, double radius = 1e-3);

struct PoleCandidate {
  double location = 0.0;
  Complex residue{};
  double spread = 0.0;
};

/// Locates the poles of T(s,s,s) on the real segment [lo, hi] from a grid of
/// |T| with the given step, refines them, and confirms each with residues at
/// `radius` and radius/10: |T| must grow at least fivefold between the two
/// radii and the two estimates must agree to 3 digits.
std::vector<PoleCandidate> scan_poles(double lo, double hi, double step, const EvalConfig& cfg = {},
                                      double radius = 1e-3);

}  // namespace tornheim
