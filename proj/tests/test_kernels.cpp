#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "latsqm/kernels.hpp"

using namespace latsqm;

namespace {

constexpr double pi = std::numbers::pi;

SampledFunction plane_wave(double k) {
  return SampledFunction(-2, 2, [k](long long n) {
    return std::polar(1.0, k * static_cast<double>(n));
  });
}

// Independent scalar oracle: paired partial sum of the first-order
// symbol, sum_j 2 (-1)^{j+1} sin(kj)/j -> k for |k| < pi.
double d1_symbol_oracle(double k, long long J) {
  double s = 0.0;
  for (long long j = 1; j <= J; ++j)
    s += 2.0 * ((j % 2 == 0) ? -1.0 : 1.0) * std::sin(k * j) / j;
  return s;
}

// Second-order symbol oracle via sum_j (-1)^j cos(kj)/j^2 = k^2/4 - pi^2/12.
double d2_symbol_oracle(double k, long long J) {
  double s = -pi * pi / 3.0;
  for (long long j = 1; j <= J; ++j)
    s += -4.0 * ((j % 2 == 0) ? 1.0 : -1.0) * std::cos(k * j) / (j * j);
  return s;
}

} // namespace

TEST_CASE("kernel coefficients match the defining formulas") {
  CHECK(kernel_coefficient(1, 1) == -1.0);
  CHECK(kernel_coefficient(1, 0) == 0.0);
  CHECK(kernel_coefficient(1, 2) == 0.5);
  CHECK(kernel_coefficient(2, 0) == doctest::Approx(-pi * pi / 3.0).epsilon(1e-15));
  CHECK(kernel_coefficient(2, 1) == 2.0);
  CHECK(kernel_coefficient(2, 3) == doctest::Approx(2.0 / 9.0));
  CHECK_THROWS_AS((void)kernel_coefficient(3, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)kernel_coefficient(0, 1), std::invalid_argument);
}

TEST_CASE("kernel parity is exact") {
  for (long long j = 1; j <= 1000; ++j) {
    CHECK(kernel_coefficient(1, -j) == -kernel_coefficient(1, j));
    CHECK(kernel_coefficient(2, -j) == kernel_coefficient(2, j));
  }
}

TEST_CASE("off-center K2 mass cancels the j=0 term") {
  double mass = 0.0;
  for (long long j = 1; j <= 1000000; ++j)
    mass += kernel_coefficient(2, j) + kernel_coefficient(2, -j);
  CHECK(mass == doctest::Approx(pi * pi / 3.0).epsilon(1e-11));
}

TEST_CASE("constants are annihilated") {
  SampledFunction one(-1, 1, [](long long) { return Complex{1.0, 0.0}; });
  SumPolicy p;
  p.j_max = 10000;

  // Order 1: paired terms cancel exactly.
  CHECK(apply_difference(1, one, 0, p).value == Complex{0.0, 0.0});

  // Order 2: the slow 1/j^2 tail needs the averaged mode at this cutoff.
  p.mode = SumPolicy::Mode::paired_cesaro;
  p.j_max = 2000;
  CHECK(std::abs(apply_difference(2, one, 0, p).value) < 1e-9);
}

TEST_CASE("plane-wave spectral symbols: D1 -> ik, D2 -> -k^2") {
  SumPolicy p;
  p.j_max = 10000;
  for (double kf : {0.1, 0.5, 0.9}) {
    const double k = kf * pi;
    const SampledFunction f = plane_wave(k);
    const Complex fn = f.eval(1);

    const Complex r1 = apply_difference(1, f, 1, p).value / fn;
    CHECK(std::abs(r1 - Complex{0.0, k}) < 1e-3);
    // Matches the independent scalar partial-sum oracle at the same cutoff.
    CHECK(std::abs(r1.imag() - d1_symbol_oracle(k, p.j_max)) < 1e-12);

    const Complex r2 = apply_difference(2, f, 1, p).value / fn;
    CHECK(std::abs(r2 - Complex{-k * k, 0.0}) < 1e-3);
    CHECK(std::abs(r2.real() - d2_symbol_oracle(k, p.j_max)) < 1e-12);
  }
}

TEST_CASE("symbol error decreases when the cutoff doubles") {
  for (double kf : {0.1, 0.5, 0.9}) {
    const double k = kf * pi;
    const double e1 = std::abs(d1_symbol_oracle(k, 10000) - k);
    const double e2 = std::abs(d1_symbol_oracle(k, 20000) - k);
    CHECK(e2 < e1);
  }
}

TEST_CASE("symbol convergence over a dense k-grid, monotone past burn-in") {
  // Individual (k, J) errors oscillate with the tail phase; the mean
  // over the grid decays like 1/J once past a short burn-in.
  SumPolicy p;
  const long long cutoffs[] = {500, 1000, 2000, 4000, 8000};
  std::vector<double> mean_err;
  for (long long J : cutoffs) {
    p.j_max = J;
    double acc = 0.0;
    int count = 0;
    for (int i = -9; i <= 9; i += 2) {
      const double k = 0.1 * i * pi;
      const SampledFunction f = plane_wave(k);
      const Complex r = apply_difference(1, f, 0, p).value / f.eval(0);
      acc += std::abs(r - Complex{0.0, k});
      ++count;
    }
    mean_err.push_back(acc / count);
  }
  for (std::size_t i = 2; i < mean_err.size(); ++i) {
    CAPTURE(mean_err[i - 1]);
    CAPTURE(mean_err[i]);
    CHECK(mean_err[i] < mean_err[i - 1]);
  }
}

TEST_CASE("power-law regularization: cesaro-paired D1 n^k = k n^{k-1}") {
  SumPolicy p;
  p.j_max = 10000;
  p.mode = SumPolicy::Mode::paired_cesaro;
  p.tail_tol = 1e-2;
  for (int k = 1; k <= 4; ++k) {
    for (long long n : {10, 25, 50}) {
      SampledFunction f(n, n, [k](long long m) {
        return Complex{std::pow(static_cast<double>(m), k), 0.0};
      });
      const double expected = k * std::pow(static_cast<double>(n), k - 1);
      const double got = apply_difference(1, f, n, p).value.real();
      CHECK(std::abs(got - expected) / std::abs(expected) < 1e-2);
    }
  }
}

TEST_CASE("symbolic and regularized-numeric D1 agree on n^-1 away from the pole") {
  SumPolicy p;
  p.j_max = 50; // window choice keeps the pole n = 0 outside the reach
  p.mode = SumPolicy::Mode::paired_cesaro;
  for (double n : {60.0, 100.0}) {
    SampledFunction f(static_cast<long long>(n), static_cast<long long>(n),
                      [](long long m) {
                        return Complex{1.0 / static_cast<double>(m), 0.0};
                      });
    const double got =
        apply_difference(1, f, static_cast<long long>(n), p).value.real();
    CHECK(std::abs(got - (-1.0 / (n * n))) < 1e-10);
  }
}

TEST_CASE("semigroup property on a band-limited wave") {
  const double k = 0.3 * pi;
  SampledFunction f(-20, 20, [k](long long n) {
    return std::polar(1.0, k * static_cast<double>(n));
  });
  SumPolicy p;
  p.j_max = 1200;
  p.mode = SumPolicy::Mode::paired_cesaro;
  CHECK(verify_semigroup(f, -20, 20, p) < 1e-3);
}

TEST_CASE("semigroup property on a constant") {
  SampledFunction f(-5, 5, [](long long) { return Complex{1.0, 0.0}; });
  SumPolicy p;
  p.j_max = 600;
  p.mode = SumPolicy::Mode::paired_cesaro;
  CHECK(verify_semigroup(f, -5, 5, p) < 1e-9);
}

TEST_CASE("semigroup property on a decaying function") {
  SampledFunction f(-10, 10, [](long long n) {
    const double x = static_cast<double>(n);
    return Complex{x * std::exp(-std::abs(x)), 0.0};
  });
  SumPolicy p;
  p.j_max = 400;
  p.mode = SumPolicy::Mode::paired_cesaro;
  p.tail_tol = 1e-3;
  CHECK(verify_semigroup(f, -10, 10, p) < p.tail_tol);
}

TEST_CASE("zero extension raises the coverage flag") {
  SampledFunction f(0, 4, std::vector<Complex>{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  SumPolicy p;
  p.j_max = 100;
  const DifferenceResult r = apply_difference(1, f, 2, p);
  CHECK(r.coverage_warning);

  SampledFunction g(-200, 200, [](long long) { return Complex{1.0, 0.0}; });
  p.j_max = 100;
  CHECK_FALSE(apply_difference(1, g, 0, p).coverage_warning);
}

TEST_CASE("unmet tail tolerance raises with the estimate attached") {
  const double k = 0.37 * pi; // keeps sin(k j_max) away from zero
  SampledFunction f(0, 0, [k](long long n) {
    return std::polar(1.0, k * static_cast<double>(n));
  });
  SumPolicy p;
  p.j_max = 10;
  p.tail_tol = 1e-8;
  try {
    (void)apply_difference(1, f, 0, p);
    FAIL("expected ToleranceNotMet");
  } catch (const ToleranceNotMet& e) {
    CHECK(e.tail_estimate > 1e-8);
  }
}

TEST_CASE("sampled-function window validation") {
  CHECK_THROWS_AS(SampledFunction(0, 2, std::vector<Complex>{{1, 0}}),
                  std::invalid_argument);
  SampledFunction f(1, 3, std::vector<Complex>{{1, 0}, {2, 0}, {3, 0}});
  CHECK(f.eval(2) == Complex{2.0, 0.0});
  bool outside = false;
  CHECK(f.eval(9, &outside) == Complex{0.0, 0.0});
  CHECK(outside);
}

TEST_CASE("analytic extension agrees with stored values in-window") {
  SampledFunction f(-3, 3, [](long long n) {
    return Complex{static_cast<double>(n * n), 0.0};
  });
  for (long long m = -3; m <= 3; ++m)
    CHECK(f.eval(m).real() == static_cast<double>(m * m));
  CHECK(f.eval(10).real() == 100.0); // rule beyond the window
}
