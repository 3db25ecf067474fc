#include "doctest.h"
#include "oracles.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/oracle.hpp"

using namespace tornheim;

TEST_CASE("oracle_T(2,2,2): tail bound and doubling") {
  const OracleResult o = oracle_T({2.0, 2.0, 2.0}, 20000);
  CHECK(o.tail_bound <= 1e-9);
  CHECK(o.tail_bound > 0.0);
  CHECK(o.terms == 20000LL * 20000LL);
  // T(2,2,2) = zeta(6)/3
  CHECK(std::abs(o.value - std::pow(kPi, 6) / 2835.0) <= o.tail_bound);
}

TEST_CASE("oracle_T: doubling N moves the value by less than the tail bound") {
  for (const TriplePoint& p : {TriplePoint{2.0, 2.0, 2.0}, TriplePoint{{1.6, 0.5}, 2.2, {1.1, -0.7}},
                               TriplePoint{0.7, 0.9, 1.6}, TriplePoint{3.0, 0.2, 1.3}}) {
    const OracleResult coarse = oracle_T(p, 1000);
    const OracleResult fine = oracle_T(p, 2000);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
    CHECK(fine.tail_bound < coarse.tail_bound);
  }
}

TEST_CASE("oracle_T(0,0,3) = zeta(2) - zeta(3)") {
  const OracleResult o = oracle_T({0.0, 0.0, 3.0}, 20000);
  CHECK(std::abs(o.value - (oracles::zeta(2.0) - oracles::zeta(3.0))) <= o.tail_bound);
}

TEST_CASE("oracle_T: outside absolute convergence") {
  CHECK_THROWS_AS(oracle_T({0.5, 0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(oracle_T({2.0, 0.0, 1.0}), DomainError);  // Re(t+u) = 1
  CHECK_THROWS_AS(oracle_T({2.0, 2.0, 2.0}, 99), DomainError);
  CHECK_NOTHROW(oracle_T({1.0, 1.0, 0.5}, 100));
}

TEST_CASE("oracle_T is symmetric under m <-> n") {
  for (const TriplePoint& p : {TriplePoint{2.3, 1.7, 1.1}, TriplePoint{{1.5, 0.4}, {2.6, -1.1}, {0.8, 0.3}}}) {
    const Complex a = oracle_T(p, 3000).value, b = oracle_T({p.t, p.s, p.u}, 3000).value;
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("periodic zeta functional equation") {
  CHECK(check_periodic_fe(2.5, 0.3) <= 1e-9);
  CHECK(check_periodic_fe(3.0, 0.5) <= 1e-10);
  CHECK_THROWS_AS(check_periodic_fe(2.5, 1.0), DomainError);
  CHECK_THROWS_AS(check_periodic_fe(2.5, 0.0), DomainError);
  CHECK_THROWS_AS(check_periodic_fe(0.8, 0.3), DomainError);
  // F(2, 1/2) = -eta(2) = -pi^2/12
  CHECK(std::abs(periodic_zeta(2.0, 0.5) + kPi * kPi / 12.0) <= 1e-12);
}

TEST_CASE("cosine and sine sum functional equations") {
  auto [c1, s1] = check_cos_sin_fe(2.5, 0.3);
  CHECK(c1 <= 1e-9);
  CHECK(s1 <= 1e-9);
  auto [c2, s2] = check_cos_sin_fe(4.0, 0.1);
  CHECK(c2 <= 1e-9);
  CHECK(s2 <= 1e-9);
  // at a = 1/2 both sides of the sine equation vanish
  auto [c3, s3] = check_cos_sin_fe(3.0, 0.5);
  CHECK(c3 <= 1e-9);
  CHECK(s3 <= 1e-14);
  CHECK(hurwitz_zeta(-2.0, 0.5) - hurwitz_zeta(-2.0, 1.0 - 0.5) == Complex(0.0));
  CHECK_THROWS_AS(check_cos_sin_fe(2.5, 1.0), DomainError);
}

TEST_CASE("functional equations over a 5x5 grid") {
  for (Complex s : {Complex(1.5), Complex(2.0, 0.5), Complex(2.75), Complex(3.3, -1.0), Complex(4.0)}) {
    for (double a : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      CHECK(check_periodic_fe(s, a) <= 1e-8);
      const auto [c, sn] = check_cos_sin_fe(s, a);
      CHECK(c <= 1e-8);
      CHECK(sn <= 1e-8);
    }
  }
}

TEST_CASE("Hurwitz Taylor expansions") {
  CHECK(check_hurwitz_taylor(2.3, 0.25, 40) <= 1e-10);
  CHECK(check_hurwitz_taylor(-1.7, 0.4, 60) <= 1e-9);
  // a = 0 leaves the k = 0 term, zeta(1-s) itself
  CHECK(check_hurwitz_taylor(2.3, 0.0, 0) <= 1e-15);
  CHECK(check_hurwitz_taylor({0.6, 1.2}, 0.0, 5) <= 1e-15);
  CHECK_THROWS_AS(check_hurwitz_taylor(3.0, 0.2, 10), PoleError);
}

TEST_CASE("Taylor discrepancies shrink geometrically in K") {
  for (Complex s : {Complex(2.3), Complex(-1.7), Complex(0.6, 1.2)}) {
    for (double a : {0.1, 0.25, 0.4, -0.3}) {
      const double ratio = std::max(2.0 * std::abs(a), 0.5) * 1.1;
      const int k0 = 6;
      const double start = check_hurwitz_taylor(s, a, k0);
      for (int K = k0 + 4; K <= 60; K += 4) {
        const double d = check_hurwitz_taylor(s, a, K);
        // until rounding takes over
        CHECK(d <= start * std::pow(ratio, K - k0) + 1e-12);
      }
    }
  }
}
