#pragma once

/**
 * @file power_sum.hpp
 *
 * Finite formal sums  sum_i c_i n^{a_i}  with real exponents.  This is
 * the symbolic home of superpotentials, partner potentials and ground
 * state series ansaetze.  The first difference acts termwise by the
 * power rule D1 n^a = a n^{a-1}, extended to real exponents.
 */

#include <string>
#include <vector>

#include "latsqm/errors.hpp"

namespace latsqm {

class PowerSum {
public:
  struct Term {
    double coeff;
    double exponent;
  };

  PowerSum() = default;
  /// Builds a normalized sum: like exponents merged, zero coefficients
  /// dropped, terms sorted by descending exponent.
  explicit PowerSum(std::vector<Term> terms);

  static PowerSum constant(double c) { return PowerSum({{c, 0.0}}); }
  static PowerSum monomial(double c, double exponent) {
    return PowerSum({{c, exponent}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of n^exponent (0 when absent).  Exponents compare
  /// exactly; the families handled here only use small rationals, which
  /// add and subtract without rounding.
  double coefficient(double exponent) const;

  double max_abs_coeff() const;
  double evaluate(double n) const;

  /// Constant part (the exponent-0 term) and the rest.
  double constant_part() const { return coefficient(0.0); }
  PowerSum nonconstant_part() const;

  /// Copy with every coefficient below rel_tol * max|coeff| removed.
  PowerSum trimmed(double rel_tol) const;

  /// True when only an exponent-0 term remains after trimming.
  bool is_constant(double rel_tol = 1e-12) const;

  PowerSum operator-() const;
  PowerSum operator+(const PowerSum& rhs) const;
  PowerSum operator-(const PowerSum& rhs) const;
  PowerSum operator*(const PowerSum& rhs) const;
  PowerSum scaled(double s) const;

  std::string to_string() const;

private:
  std::vector<Term> terms_; // descending exponent, nonzero coeffs
};

/// Termwise power rule, applied `order` times; order in {1, 2}.
PowerSum apply_difference_symbolic(int order, const PowerSum& p);

/// Largest absolute coefficient of D1(fg) - D1(f) g - f D1(g).
/// Identically zero in exact arithmetic.
double verify_leibniz(const PowerSum& f, const PowerSum& g);

} // namespace latsqm
