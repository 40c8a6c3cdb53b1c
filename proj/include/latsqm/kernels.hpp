#pragma once

/**
 * @file kernels.hpp
 *
 * Long-range difference kernels of the exact lattice discretization.
 *
 * The first- and second-order difference operators act by discrete
 * convolution over all integer offsets,
 *
 *     D1 f[n] = sum_{j != 0} (-1)^j / j    * f[n-j]
 *     D2 f[n] = sum_{j != 0} -2(-1)^j / j^2 * f[n-j]  -  (pi^2/3) f[n]
 *
 * so that on band-limited lattice functions their Fourier symbols are
 * exactly ik and -k^2.  The sums are conditionally (order 1) or slowly
 * (order 2) convergent; they are always accumulated in paired +-j order,
 * optionally with iterated averaging of the trailing partial sums, which
 * recovers the Abel-summed value for polynomially growing inputs.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "latsqm/errors.hpp"

namespace latsqm {

using Complex = std::complex<double>;

/// Coefficient K_m[j] of the order-m difference kernel, m in {1, 2}.
/// K_1[0] = 0, K_1[j] = (-1)^j/j; K_2[0] = -pi^2/3, K_2[j] = -2(-1)^j/j^2.
double kernel_coefficient(int order, long long j);

/// Truncation and regularization policy for the kernel sums.
struct SumPolicy {
  enum class Mode {
    paired,        ///< accumulate +j and -j together, plain partial sum
    paired_cesaro  ///< additionally average the trailing paired partial sums
  };

  long long j_max = 10000;
  Mode mode = Mode::paired;
  double tail_tol = 1e-3;

  /// Length of the partial-sum window reduced by repeated adjacent
  /// averaging in paired_cesaro mode.  Each averaging pass cancels one
  /// polynomial degree of the oscillating remainder, so 16 passes sum
  /// inputs up to degree ~15 exactly.
  static constexpr int cesaro_window = 16;
};

/// A lattice function known on a finite window, with a rule for values
/// outside it.  With Extension::zero, out-of-window sites read as 0 and
/// the access is flagged on the result; with Extension::analytic the
/// attached evaluator is consulted instead.
class SampledFunction {
public:
  enum class Extension { zero, analytic };

  SampledFunction(long long n_min, long long n_max,
                  std::vector<Complex> values);
  SampledFunction(long long n_min, long long n_max,
                  std::function<Complex(long long)> rule);

  long long n_min() const { return n_min_; }
  long long n_max() const { return n_max_; }
  std::size_t size() const { return values_.size(); }
  Extension extension() const { return extension_; }

  /// Value at site m.  Sets *outside when m falls beyond the window and
  /// the zero extension had to be used.
  Complex eval(long long m, bool* outside = nullptr) const;

  const std::vector<Complex>& values() const { return values_; }

private:
  long long n_min_;
  long long n_max_;
  std::vector<Complex> values_;
  Extension extension_;
  std::function<Complex(long long)> rule_;
};

/// Result of one regularized kernel application.
struct DifferenceResult {
  Complex value;
  double tail_estimate = 0.0;    ///< conservative bound on the dropped tail
  bool coverage_warning = false; ///< zero extension was consulted
};

/// Apply the order-m kernel to f at site n under the given policy.
/// Throws ToleranceNotMet when the tail estimate exceeds policy.tail_tol.
DifferenceResult apply_difference(int order, const SampledFunction& f,
                                  long long n, const SumPolicy& policy);

/// Max over the window of |D2 f[n] - D1(D1 f)[n]|, the inner D1 being
/// evaluated by apply_difference at every site the outer sum reaches.
double verify_semigroup(const SampledFunction& f, long long n_min,
                        long long n_max, const SumPolicy& policy);

} // namespace latsqm
