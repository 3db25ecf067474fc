#include <cmath>

#include "kernels_internal.hpp"
#include "slots.hpp"
#include "tornheim/complexfn.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/series.hpp"

namespace tornheim {
namespace {

thread_local bool g_eta_sign_fault = false;

// Radius inside which removable products are formed analytically.
constexpr double kRemovableRadius = 0.25;
constexpr double kLinearRadius = 0.5;

void check_order(int k, const char* who) {
  if (k < 0) throw DomainError(std::string(who) + ": negative order");
}

// (2 pi)^x Gamma(1 - x) / pi, the part of 1/Gamma_cos and 1/Gamma_sin left after
// removing the trigonometric factor (valid for Re x < 0.5).
Complex trig_free_part(Complex x) {
  return detail::two_pi_pow_times_gamma(x, 1.0 - x) / kPi;
}

}  // namespace

namespace detail {

Complex binom_zeta(int k, Complex x) {
  check_order(k, "binom_zeta");
  if (k >= 1 && std::abs(x - static_cast<double>(k)) < kRemovableRadius) {
    // binom(k-x,k) = ((k-x)/k) prod_{j<k} (j-x)/j, and (k-x) zeta(1+k-x) is entire.
    Complex product = 1.0 / static_cast<double>(k);
    for (int j = 1; j < k; ++j) product *= (static_cast<double>(j) - x) / static_cast<double>(j);
    return product * zeta_pole_product(static_cast<double>(k) - x);
  }
  return binom_poly(k, x) * riemann_zeta(static_cast<double>(k) + 1.0 - x);
}

Slot::Slot(Complex x, SlotKind kind) : x_(x), kind_(kind) {}

Complex Slot::bare() const {
  if (!have_bare_) {
    switch (kind_) {
      case SlotKind::Gamma: bare_ = recip_gamma(x_); break;
      case SlotKind::Cos: bare_ = recip_gamma_cos(x_); break;
      case SlotKind::Sin: bare_ = recip_gamma_sin(x_); break;
    }
    have_bare_ = true;
  }
  return bare_;
}

Complex Slot::with_eta(int k) const {
  check_order(k, "Slot::with_eta");
  if (k == 0 && std::abs(x_) < kRemovableRadius) {
    // zeta(1 - x) has its pole at x = 0, where 1/Gamma and 1/Gamma_cos vanish.
    switch (kind_) {
      case SlotKind::Gamma: return -recip_gamma(x_ + 1.0) * zeta_pole_product(-x_);
      case SlotKind::Cos:
        return -trig_free_part(x_) * detail::half_sin_pi_over(x_) * zeta_pole_product(-x_);
      case SlotKind::Sin: break;
    }
  }
  if (kind_ == SlotKind::Gamma) {
    const Complex b = bare();
    if (b == 0.0) return 0.0;
    return b * binom_zeta(k, x_);
  }
  return bare() * binom_zeta(k, x_);
}

Complex Slot::with_z(int k) const {
  check_order(k, "Slot::with_z");
  if (kind_ != SlotKind::Gamma) throw DomainError("Slot::with_z: only defined for Gamma slots");
  const double kd = k;
  if (k == 0 && std::abs(x_) < kRemovableRadius) {
    return -recip_gamma(x_ + 1.0) * zeta_pole_product(-x_) - recip_gamma(x_);
  }
  const Complex b = bare();
  if (b == 0.0) return 0.0;
  if (k >= 1 && std::abs(x_ - kd) < kRemovableRadius) {
    return b * (binom_zeta(k, x_) - binom_poly(k, x_));
  }
  return b * binom_poly(k, x_) * zeta_minus_one(kd + 1.0 - x_);
}

Complex Slot::over_linear(int n) const {
  check_order(n, "Slot::over_linear");
  const Complex y = x_ + static_cast<double>(n);
  if (std::abs(y) >= kLinearRadius) return bare() / y;
  switch (kind_) {
    case SlotKind::Gamma: return recip_gamma_over_linear(x_, n);
    case SlotKind::Cos:
      if (n % 2 == 0) {
        // sin(pi x/2)/(x + 2j) = (-1)^j sin(pi y/2)/y
        const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * trig_free_part(x_) * detail::half_sin_pi_over(y);
      }
      break;
    case SlotKind::Sin:
      if (n % 2 == 1) {
        // cos(pi x/2)/(x + 2j + 1) = (-1)^j sin(pi y/2)/y
        const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * trig_free_part(x_) * detail::half_sin_pi_over(y);
      }
      break;
  }
  if (std::abs(y) < kPoleThreshold) throw PoleError("Slot::over_linear: unpaired pole");
  return bare() / y;
}

}  // namespace detail

Complex coeff_Z(int k, Complex s) {
  check_order(k, "coeff_Z");
  return binom_poly(k, s) * zeta_minus_one(static_cast<double>(k) + 1.0 - s);
}

Complex coeff_eta(int k, Complex s, int sign) {
  check_order(k, "coeff_eta");
  if (sign != 1 && sign != -1) throw DomainError("coeff_eta: sign must be +1 or -1");
  const double base = std::ldexp(1.0, -k);
  const double scale = (sign < 0 && k % 2 == 1) ? -base : base;
  return scale * binom_poly(k, s) * riemann_zeta(static_cast<double>(k) + 1.0 - s);
}

Complex coeff(CoeffKind kind, int index, Complex s) {
  check_order(index, "coeff");
  int k = index;
  if (kind.parity == CoeffKind::Parity::EvenOnly) k = 2 * index;
  if (kind.parity == CoeffKind::Parity::OddOnly) k = 2 * index + 1;
  switch (kind.tag) {
    case CoeffKind::Tag::Z: return coeff_Z(k, s);
    case CoeffKind::Tag::EtaPlus: return coeff_eta(k, s, 1);
    case CoeffKind::Tag::EtaMinus: return coeff_eta(k, s, -1);
  }
  return 0.0;
}

namespace testing {

ScopedEtaSignFault::ScopedEtaSignFault() : previous_(g_eta_sign_fault) { g_eta_sign_fault = true; }
ScopedEtaSignFault::~ScopedEtaSignFault() { g_eta_sign_fault = previous_; }
bool eta_sign_fault_active() { return g_eta_sign_fault; }

}  // namespace testing

}  // namespace tornheim
