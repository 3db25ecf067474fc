#pragma once

// Series representations of the symmetric Tornheim functions S1..S4.
//
// Every representation has the shape  prefactor(s,t,u) * { sum of series },
// where the prefactor carries 1/Gamma (or 1/Gamma_cos, 1/Gamma_sin) of each
// argument. The prefactor zeros cancel poles of individual bracket terms, so
// each term is evaluated together with the matching prefactor piece instead of
// multiplying a finite prefactor into a divergent bracket.

#include <cstdint>
#include <functional>

#include "tornheim/types.hpp"

namespace tornheim {

/// Which coefficient family a series uses, and which indices it keeps.
struct CoeffKind {
  enum class Tag { Z, EtaPlus, EtaMinus };
  enum class Parity { None, EvenOnly, OddOnly };
  Tag tag = Tag::Z;
  Parity parity = Parity::None;
};

/// Z_k(s) = binomial(k - s, k) (zeta(k + 1 - s) - 1). PoleError at s = k.
Complex coeff_Z(int k, Complex s);

/// eta_k^{+-}(s) = (+-2)^{-k} binomial(k - s, k) zeta(k + 1 - s). PoleError at s = k.
Complex coeff_eta(int k, Complex s, int sign);

/// Coefficient of family `kind` at parity-adjusted position `index`
/// (index i maps to order 2i or 2i+1 under a parity restriction).
Complex coeff(CoeffKind kind, int index, Complex s);

/// One bundle of terms at index (l, m, n), and how many elementary terms it held.
struct TermSample {
  Complex value{};
  int count = 0;
  double abs_sum = 0.0;
};

using ShellTerm = std::function<TermSample(int l, int m, int n)>;

/// Sums term(l,m,n) over shells l+m+n = 0, 1, 2, ... in increasing order
/// (lexicographic within a shell) with compensated accumulation.
///
/// Stops after three consecutive shells whose absolute-term sums are each below
/// tol/8; err_estimate is eight times the last shell's absolute sum. Throws
/// ConvergenceError if cfg.max_order is reached first.
SeriesValue sum_shells(const ShellTerm& term, const EvalConfig& cfg);

/// S1 from the eta-coefficient representation (five series).
SeriesValue eval_S1(const TriplePoint& p, const EvalConfig& cfg = {});
/// S2 from the eta-coefficient representation.
SeriesValue eval_S2(const TriplePoint& p, const EvalConfig& cfg = {});
/// S3 = T(s,t,u) + T(u,s,t) + T(t,u,s), cosine-weighted even-index representation.
SeriesValue eval_S3(const TriplePoint& p, const EvalConfig& cfg = {});
/// S4 = -T(s,t,u) + T(u,s,t) + T(t,u,s), sine/sine/cosine representation.
SeriesValue eval_S4(const TriplePoint& p, const EvalConfig& cfg = {});

/// S1 from the older Z_k / beta-function representation (seven series).
SeriesValue eval_S1_legacy(const TriplePoint& p, const EvalConfig& cfg = {});
/// S2 from the older Z_k / beta-function representation.
SeriesValue eval_S2_legacy(const TriplePoint& p, const EvalConfig& cfg = {});

/// Dispatch on FunctionId; T is not accepted here (see tornheim.hpp).
SeriesValue eval_S(FunctionId f, const TriplePoint& p, const EvalConfig& cfg = {});

namespace testing {

/// While alive, flips the sign convention of eta^- in the S1/S2 series on
/// the current thread. Used to check that the self-test notices a broken
/// coefficient.
class ScopedEtaSignFault {
 public:
  ScopedEtaSignFault();
  ~ScopedEtaSignFault();
  ScopedEtaSignFault(const ScopedEtaSignFault&) = delete;
  ScopedEtaSignFault& operator=(const ScopedEtaSignFault&) = delete;

 private:
  bool previous_;
};

bool eta_sign_fault_active();

}  // namespace testing

}  // namespace tornheim
