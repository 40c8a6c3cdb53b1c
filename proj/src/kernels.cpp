#include "latsqm/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace latsqm {

namespace {

double parity(long long j) { return (std::llabs(j) % 2 == 0) ? 1.0 : -1.0; }

// One pass of adjacent averaging; len shrinks by one.
void average_pass(Complex* buf, int len) {
  for (int i = 0; i + 1 < len; ++i) buf[i] = 0.5 * (buf[i] + buf[i + 1]);
}

// Repeated adjacent averaging of a window of partial sums down to a
// single value (Euler-style).  Kills an oscillating remainder
// (-1)^J Q(J) with deg Q < len-1 exactly, and preserves limits of
// convergent sequences.
Complex euler_reduce(const Complex* window, int len) {
  Complex buf[SumPolicy::cesaro_window + 1];
  for (int i = 0; i < len; ++i) buf[i] = window[i];
  for (int l = len; l > 1; --l) average_pass(buf, l);
  return buf[0];
}

} // namespace

double kernel_coefficient(int order, long long j) {
  if (order == 1) {
    if (j == 0) return 0.0;
    return parity(j) / static_cast<double>(j);
  }
  if (order == 2) {
    if (j == 0) return -std::numbers::pi * std::numbers::pi / 3.0;
    const double jd = static_cast<double>(j);
    return -2.0 * parity(j) / (jd * jd);
  }
  throw std::invalid_argument("kernel_coefficient: order must be 1 or 2");
}

SampledFunction::SampledFunction(long long n_min, long long n_max,
                                 std::vector<Complex> values)
    : n_min_(n_min), n_max_(n_max), values_(std::move(values)),
      extension_(Extension::zero) {
  if (n_max_ < n_min_ ||
      values_.size() != static_cast<std::size_t>(n_max_ - n_min_ + 1))
    throw std::invalid_argument(
        "SampledFunction: values length must equal window length");
}

SampledFunction::SampledFunction(long long n_min, long long n_max,
                                 std::function<Complex(long long)> rule)
    : n_min_(n_min), n_max_(n_max), extension_(Extension::analytic),
      rule_(std::move(rule)) {
  if (n_max_ < n_min_)
    throw std::invalid_argument("SampledFunction: empty window");
  values_.reserve(static_cast<std::size_t>(n_max_ - n_min_ + 1));
  for (long long m = n_min_; m <= n_max_; ++m) values_.push_back(rule_(m));
}

Complex SampledFunction::eval(long long m, bool* outside) const {
  if (m >= n_min_ && m <= n_max_)
    return values_[static_cast<std::size_t>(m - n_min_)];
  if (extension_ == Extension::analytic) return rule_(m);
  if (outside) *outside = true;
  return Complex{0.0, 0.0};
}

DifferenceResult apply_difference(int order, const SampledFunction& f,
                                  long long n, const SumPolicy& policy) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("apply_difference: order must be 1 or 2");
  if (policy.j_max < 1)
    throw std::invalid_argument("apply_difference: j_max must be positive");

  bool outside = false;
  Complex sum{0.0, 0.0};
  if (order == 2) sum = kernel_coefficient(2, 0) * f.eval(n, &outside);

  const bool cesaro = policy.mode == SumPolicy::Mode::paired_cesaro;
  constexpr int B = SumPolicy::cesaro_window;
  Complex window[B + 1]; // trailing paired partial sums
  int filled = 0;

  Complex last_increment{0.0, 0.0};
  for (long long j = 1; j <= policy.j_max; ++j) {
    const Complex inc = kernel_coefficient(order, j) * f.eval(n - j, &outside) +
                        kernel_coefficient(order, -j) * f.eval(n + j, &outside);
    sum += inc;
    last_increment = inc;
    if (cesaro) {
      if (filled == B + 1) {
        for (int i = 0; i < B; ++i) window[i] = window[i + 1];
        window[B] = sum;
      } else {
        window[filled++] = sum;
      }
    }
  }

  DifferenceResult out;
  if (cesaro) {
    const int len = filled;
    out.value = euler_reduce(window + (len > B ? 1 : 0), std::min(len, B));
    if (len > 1) {
      const Complex prev = euler_reduce(window, std::min(len - 1, B));
      out.tail_estimate = 2.0 * std::abs(out.value - prev);
    }
  } else {
    out.value = sum;
    out.tail_estimate = 2.0 * std::abs(last_increment);
  }
  out.coverage_warning = outside;

  if (out.tail_estimate > policy.tail_tol)
    throw ToleranceNotMet(
        "apply_difference: truncated tail estimate " +
            std::to_string(out.tail_estimate) + " exceeds tail_tol " +
            std::to_string(policy.tail_tol) + " at j_max " +
            std::to_string(policy.j_max),
        out.tail_estimate);
  return out;
}

double verify_semigroup(const SampledFunction& f, long long n_min,
                        long long n_max, const SumPolicy& policy) {
  if (n_max < n_min)
    throw std::invalid_argument("verify_semigroup: empty window");

  // The outer first difference at window sites reaches every site in
  // [n_min - j_max, n_max + j_max]; evaluate the inner D1 f there once.
  const long long lo = n_min - policy.j_max;
  const long long hi = n_max + policy.j_max;
  std::vector<Complex> inner;
  inner.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long m = lo; m <= hi; ++m)
    inner.push_back(apply_difference(1, f, m, policy).value);
  SampledFunction g(lo, hi, std::move(inner));

  double worst = 0.0;
  for (long long n = n_min; n <= n_max; ++n) {
    const Complex d2 = apply_difference(2, f, n, policy).value;
    const Complex d11 = apply_difference(1, g, n, policy).value;
    worst = std::max(worst, std::abs(d2 - d11));
  }
  return worst;
}

} // namespace latsqm
