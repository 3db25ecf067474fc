#pragma once

// Independent reference computations: the defining double sum of T and the
// classical Hurwitz/periodic zeta identities the series rest on.

#include <cstdint>
#include <utility>

#include "tornheim/types.hpp"

namespace tornheim {

struct OracleResult {
  Complex value{};
  /// Rigorous bound on |T - value| from an integral-comparison majorant.
  double tail_bound = 0.0;
  std::int64_t terms = 0;
};

/// Partial sum of m^{-s} n^{-t} (m+n)^{-u} over 1 <= m, n <= N.
/// DomainError unless Re(s+u) > 1, Re(t+u) > 1, Re(s+t+u) > 2 and N >= 100.
OracleResult oracle_T(const TriplePoint& p, int N = 20000);

/// Periodic zeta F(s, a) = sum_{n>=1} e^{2 pi i n a} n^{-s}, Re s > 1, 0 < a < 1.
Complex periodic_zeta(Complex s, double a);

/// |e^{-pi i s/2} F(s,a) + e^{pi i s/2} F(s,1-a) - (2 pi)^s / Gamma(s) zeta(1-s,a)|
double check_periodic_fe(Complex s, double a);

/// Discrepancies of the cosine-sum and sine-sum functional equations.
std::pair<double, double> check_cos_sin_fe(Complex s, double a);

/// Truncated Taylor series of zeta(1-s, 1-a) in a (K+1 terms) against the
/// Hurwitz zeta itself; for a > 0 also the companion expansion of zeta(1-s,a).
/// Returns the larger discrepancy.
double check_hurwitz_taylor(Complex s, double a, int K);

}  // namespace tornheim
