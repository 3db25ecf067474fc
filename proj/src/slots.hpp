#pragma once

// One argument slot of a series representation: the prefactor piece belonging
// to that argument (1/Gamma, 1/Gamma_cos or 1/Gamma_sin) together with the
// bracket factors it multiplies. Products are formed analytically near the
// points where the prefactor vanishes and the bracket factor has a pole.

#include <functional>
#include <vector>

#include "tornheim/types.hpp"

namespace tornheim::detail {

enum class SlotKind { Gamma, Cos, Sin };

/// binomial(k - x, k) zeta(k + 1 - x), continued through the removable point x = k
/// for k >= 1. Throws PoleError at x = 0 when k = 0.
Complex binom_zeta(int k, Complex x);

class Slot {
 public:
  Slot(Complex x, SlotKind kind);

  Complex x() const { return x_; }
  /// The prefactor piece alone.
  Complex bare() const;
  /// bare * binomial(k - x, k) zeta(k + 1 - x)
  Complex with_eta(int k) const;
  /// bare * Z_k(x), Gamma slots only.
  Complex with_z(int k) const;
  /// bare / (x + n)
  Complex over_linear(int n) const;

 private:
  Complex x_;
  SlotKind kind_;
  mutable bool have_bare_ = false;
  mutable Complex bare_{};
};

/// Values produced on demand in index order and cached.
class Lazy {
 public:
  explicit Lazy(std::function<Complex(int)> gen) : gen_(std::move(gen)) {}
  Complex operator[](int i) {
    while (static_cast<int>(cache_.size()) <= i) cache_.push_back(gen_(static_cast<int>(cache_.size())));
    return cache_[static_cast<std::size_t>(i)];
  }

 private:
  std::function<Complex(int)> gen_;
  std::vector<Complex> cache_;
};

}  // namespace tornheim::detail
