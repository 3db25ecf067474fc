#include <algorithm>
#include <cmath>
#include <sstream>

#include "tornheim/tornheim.hpp"

namespace tornheim {
namespace {

Complex form_value(const TriplePoint& p, LinearForm form) {
  switch (form) {
    case LinearForm::SPlusT: return p.s + p.t;
    case LinearForm::TPlusU: return p.t + p.u;
    case LinearForm::UPlusS: return p.u + p.s;
    case LinearForm::SPlusTPlusU: return p.s + p.t + p.u;
  }
  return 0.0;
}

SingularityReport measure(const TriplePoint& p, LinearForm form, SingularSet set, FunctionId f) {
  const Complex v = form_value(p, form);
  SingularityReport r;
  r.form = form;
  r.set = set;
  r.function = f;
  switch (set) {
    case SingularSet::IntegersAtMostOne:
      r.distance = distance_to_integer_at_most(v, 1, &r.nearest);
      break;
    case SingularSet::OddAtMostOne: {
      int k = 0;
      r.distance = 2.0 * distance_to_integer_at_most(0.5 * (v - 1.0), 0, &k);
      r.nearest = 2 * k + 1;
      break;
    }
    case SingularSet::EvenAtMostZero: {
      int k = 0;
      r.distance = 2.0 * distance_to_integer_at_most(0.5 * v, 0, &k);
      r.nearest = 2 * k;
      break;
    }
    case SingularSet::PlaneTwo:
      r.distance = std::abs(v - 2.0);
      r.nearest = 2;
      break;
  }
  return r;
}

const char* form_name(LinearForm form) {
  switch (form) {
    case LinearForm::SPlusT: return "s+t";
    case LinearForm::TPlusU: return "t+u";
    case LinearForm::UPlusS: return "u+s";
    case LinearForm::SPlusTPlusU: return "s+t+u";
  }
  return "?";
}

}  // namespace

bool TriplePoint::finite() const {
  for (const Complex& z : {s, t, u}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void EvalConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("EvalConfig: tol must be a positive number");
  if (max_order < 8 || max_order > 150) throw DomainError("EvalConfig: max_order must lie in [8, 150]");
  if (!(singular_proximity > 0.0) || !std::isfinite(singular_proximity)) {
    throw DomainError("EvalConfig: singular_proximity must be positive");
  }
}

std::string_view to_string(FunctionId f) {
  switch (f) {
    case FunctionId::T: return "T";
    case FunctionId::S1: return "S1";
    case FunctionId::S2: return "S2";
    case FunctionId::S3: return "S3";
    case FunctionId::S4: return "S4";
  }
  return "?";
}

FunctionId function_from_string(std::string_view name) {
  for (FunctionId f : {FunctionId::T, FunctionId::S1, FunctionId::S2, FunctionId::S3, FunctionId::S4}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("unknown function '" + std::string(name) + "'");
}

std::string_view to_string(RecombinationId id) {
  switch (id) {
    case RecombinationId::I: return "i";
    case RecombinationId::II: return "ii";
    case RecombinationId::III: return "iii";
    case RecombinationId::IV: return "iv";
    case RecombinationId::V: return "v";
    case RecombinationId::VI: return "vi";
    case RecombinationId::VII: return "vii";
    case RecombinationId::VIII: return "viii";
    case RecombinationId::AUTO: return "auto";
  }
  return "?";
}

RecombinationId recombination_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (RecombinationId id : {RecombinationId::I, RecombinationId::II, RecombinationId::III,
                             RecombinationId::IV, RecombinationId::V, RecombinationId::VI,
                             RecombinationId::VII, RecombinationId::VIII, RecombinationId::AUTO}) {
    if (lower == to_string(id)) return id;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string SingularityReport::hyperplane() const {
  if (set == SingularSet::PlaneTwo) return "s+t+u=2";
  std::ostringstream out;
  out << form_name(form) << " in ";
  switch (set) {
    case SingularSet::IntegersAtMostOne: out << "Z<=1"; break;
    case SingularSet::OddAtMostOne: out << "odd Z<=1"; break;
    case SingularSet::EvenAtMostZero: out << "even Z<=0"; break;
    case SingularSet::PlaneTwo: break;
  }
  return out.str();
}

std::vector<SingularityReport> classify(const TriplePoint& p, FunctionId f) {
  using F = LinearForm;
  using S = SingularSet;
  std::vector<SingularityReport> out;
  auto add = [&](F form, S set) { out.push_back(measure(p, form, set, f)); };
  switch (f) {
    case FunctionId::T:
      add(F::TPlusU, S::IntegersAtMostOne);
      add(F::UPlusS, S::IntegersAtMostOne);
      add(F::SPlusTPlusU, S::PlaneTwo);
      break;
    case FunctionId::S1:
      add(F::SPlusT, S::IntegersAtMostOne);
      break;
    case FunctionId::S2:
      add(F::SPlusT, S::IntegersAtMostOne);
      add(F::TPlusU, S::IntegersAtMostOne);
      add(F::UPlusS, S::IntegersAtMostOne);
      add(F::SPlusTPlusU, S::PlaneTwo);
      break;
    case FunctionId::S3:
      add(F::SPlusT, S::OddAtMostOne);
      add(F::TPlusU, S::OddAtMostOne);
      add(F::UPlusS, S::OddAtMostOne);
      add(F::SPlusTPlusU, S::PlaneTwo);
      break;
    case FunctionId::S4:
      add(F::SPlusT, S::OddAtMostOne);
      add(F::TPlusU, S::EvenAtMostZero);
      add(F::UPlusS, S::EvenAtMostZero);
      add(F::SPlusTPlusU, S::PlaneTwo);
      break;
  }
  return out;
}

std::vector<SingularityReport> singular_near(const TriplePoint& p, FunctionId f, double proximity) {
  std::vector<SingularityReport> out;
  for (const SingularityReport& r : classify(p, f)) {
    if (r.distance < proximity) out.push_back(r);
  }
  return out;
}

void require_regular(const TriplePoint& p, FunctionId f, const EvalConfig& cfg) {
  if (!p.finite()) throw DomainError(std::string(to_string(f)) + ": non-finite argument");
  auto hits = singular_near(p, f, cfg.singular_proximity);
  if (hits.empty()) return;
  std::ostringstream msg;
  msg << to_string(f) << ": point lies on the singular hyperplane " << hits.front().hyperplane()
      << " (distance " << hits.front().distance << ")";
  throw SingularPointError(msg.str(), std::move(hits));
}

}  // namespace tornheim
