#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latsqm/power_sum.hpp"

using namespace latsqm;

namespace {

// Deterministic integer-valued power sums; every coefficient operation
// on them is exact in double precision.
PowerSum random_integer_power_sum(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(-4, 4);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::vector<PowerSum::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({static_cast<double>(c), static_cast<double>(expo(rng))});
  }
  return PowerSum(std::move(terms));
}

} // namespace

TEST_CASE("normalization merges exponents and drops zeros") {
  PowerSum p({{1.0, 2.0}, {3.0, 2.0}, {2.0, 0.0}, {-2.0, 0.0}});
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].coeff == 4.0);
  CHECK(p.terms()[0].exponent == 2.0);

  PowerSum q({{0.0, 5.0}});
  CHECK(q.is_zero());
}

TEST_CASE("terms are sorted by descending exponent") {
  PowerSum p({{1.0, -1.0}, {2.0, 3.0}, {4.0, 0.0}});
  REQUIRE(p.size() == 3);
  CHECK(p.terms()[0].exponent == 3.0);
  CHECK(p.terms()[1].exponent == 0.0);
  CHECK(p.terms()[2].exponent == -1.0);
}

TEST_CASE("arithmetic: commutative, associative, exponents add") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const PowerSum a = random_integer_power_sum(rng);
    const PowerSum b = random_integer_power_sum(rng);
    const PowerSum c = random_integer_power_sum(rng);
    CHECK((a + b - (b + a)).is_zero());
    CHECK((a * b - b * a).is_zero());
    CHECK(((a * b) * c - a * (b * c)).is_zero());
  }
  const PowerSum m = PowerSum::monomial(2.0, 1.5) * PowerSum::monomial(3.0, -0.5);
  REQUIRE(m.size() == 1);
  CHECK(m.terms()[0].coeff == 6.0);
  CHECK(m.terms()[0].exponent == 1.0);
}

TEST_CASE("power rule: D1 n^2 = 2n, D1 n^-1 = -n^-2, D1 const = 0") {
  const PowerSum d1 = apply_difference_symbolic(1, PowerSum::monomial(1.0, 2.0));
  REQUIRE(d1.size() == 1);
  CHECK(d1.terms()[0].coeff == 2.0);
  CHECK(d1.terms()[0].exponent == 1.0);

  const PowerSum d2 = apply_difference_symbolic(1, PowerSum::monomial(1.0, -1.0));
  REQUIRE(d2.size() == 1);
  CHECK(d2.terms()[0].coeff == -1.0);
  CHECK(d2.terms()[0].exponent == -2.0);

  CHECK(apply_difference_symbolic(1, PowerSum::constant(5.0)).is_zero());
}

TEST_CASE("second difference is the first applied twice") {
  const PowerSum n2 = PowerSum::monomial(1.0, 2.0);
  const PowerSum d = apply_difference_symbolic(2, n2);
  REQUIRE(d.size() == 1);
  CHECK(d.terms()[0].coeff == 2.0);
  CHECK(d.terms()[0].exponent == 0.0);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const PowerSum p = random_integer_power_sum(rng);
    const PowerSum twice =
        apply_difference_symbolic(1, apply_difference_symbolic(1, p));
    CHECK((apply_difference_symbolic(2, p) - twice).is_zero());
  }
}

TEST_CASE("difference is linear") {
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    const PowerSum a = random_integer_power_sum(rng);
    const PowerSum b = random_integer_power_sum(rng);
    const PowerSum lhs = apply_difference_symbolic(1, a + b.scaled(3.0));
    const PowerSum rhs = apply_difference_symbolic(1, a) +
                         apply_difference_symbolic(1, b).scaled(3.0);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("leibniz identity holds exactly") {
  // n * n: both sides are 2n.
  CHECK(verify_leibniz(PowerSum::monomial(1.0, 1.0),
                       PowerSum::monomial(1.0, 1.0)) == 0.0);
  // n^2 * n^-1: both sides are 1.
  CHECK(verify_leibniz(PowerSum::monomial(1.0, 2.0),
                       PowerSum::monomial(1.0, -1.0)) == 0.0);
  // (1 - 1/n) * n.
  CHECK(verify_leibniz(PowerSum({{1.0, 0.0}, {-1.0, -1.0}}),
                       PowerSum::monomial(1.0, 1.0)) == 0.0);

  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    const PowerSum f = random_integer_power_sum(rng);
    const PowerSum g = random_integer_power_sum(rng);
    CHECK(verify_leibniz(f, g) == 0.0);
  }
}

TEST_CASE("constant detection uses a relative threshold") {
  PowerSum p({{1.0, 0.0}, {1e-15, 2.0}});
  CHECK(p.is_constant());
  CHECK(p.trimmed(1e-12).size() == 1);
  PowerSum q({{1.0, 0.0}, {1e-3, 2.0}});
  CHECK_FALSE(q.is_constant());
}

TEST_CASE("evaluation and bad order") {
  PowerSum p({{2.0, 2.0}, {-1.0, 0.0}});
  CHECK(p.evaluate(3.0) == doctest::Approx(17.0));
  CHECK_THROWS_AS((void)apply_difference_symbolic(3, p), std::invalid_argument);
}
