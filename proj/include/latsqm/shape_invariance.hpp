#pragma once

/**
 * @file shape_invariance.hpp
 *
 * Shape invariance for parametrized superpotential families:
 *   v_plus(a) = v_minus(phi(a)) + R(a)  with R independent of n.
 * When the condition holds along a parameter trail, the spectrum follows
 * algebraically as partial sums of the rest function.
 */

#include <functional>
#include <string>
#include <vector>

#include "latsqm/sqm.hpp"

namespace latsqm {

struct ShapeInvariantModel {
  std::string name;
  std::function<Superpotential(double)> family;
  std::function<double(double)> phi;  ///< parameter flow a -> a'
  std::function<double(double)> rest; ///< declared R(a)
  std::function<double(double)> e0;   ///< declared ground-state reference energy
};

struct ShapeInvarianceCheck {
  bool holds;
  double rest_extracted;  ///< constant part of v_plus(a) - v_minus(phi(a))
  PowerSum residual;      ///< non-constant remainder; zero when holds
};

/// Symbolic check of v_plus(a) - v_minus(phi(a)) == const.  Coefficients
/// below 1e-12 of the largest are treated as zero.  Failure is data, not
/// an exception.
ShapeInvarianceCheck check_shape_invariance(const ShapeInvariantModel& model,
                                            double a);

struct AlgebraicSpectrum {
  struct Level {
    int n;
    double e_susy;  ///< sum_{k=1..n} R(a_k), ground level 0
    double e_paper; ///< e0(a_1) + e_susy
  };
  std::vector<Level> levels;
  std::vector<double> parameter_trail; ///< a_1 .. a_{n_levels}
};

/// Accumulates the symbolically extracted rest terms along the trail
/// a, phi(a), ... .  Throws NotShapeInvariant naming the first failing
/// parameter.
AlgebraicSpectrum algebraic_spectrum(const ShapeInvariantModel& model,
                                     double a1, int n_levels);

/// Member s of the Hamiltonian hierarchy: potential v_minus(n, a_s) plus
/// the accumulated offset sum_{k<s} R(a_k).
struct HierarchyMember {
  PowerSum potential;
  double offset;
  double parameter;
};

std::vector<HierarchyMember> hamiltonian_hierarchy(
    const ShapeInvariantModel& model, double a1, int depth);

/// Built-in discrete Coulomb family: W(l) = 1/(l+1) - (l+1)/n,
/// phi(l) = l+1, R(l) = (2l+3)/((l+1)^2 (l+2)^2), e0(l) = 1/(l+1)^2.
ShapeInvariantModel coulomb_model(double prefactor = 1.0);

/// Registry lookup by name ("coulomb" built in).  Throws BadConfig for
/// unknown names.
ShapeInvariantModel find_model(const std::string& name, double prefactor = 1.0);

/// Model from the CLI configuration format (JSON text): W terms as
/// (coefficient expression, exponent) pairs, phi affine, rest/e0 rational
/// expressions in the parameter.
ShapeInvariantModel model_from_json(const std::string& json_text);

} // namespace latsqm
