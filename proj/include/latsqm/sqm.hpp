#pragma once

/**
 * @file sqm.hpp
 *
 * Discretized N=2 supersymmetric quantum mechanics on the lattice:
 * ladder operators A = +p D1 + W and A^dag = -p D1 + W built on the
 * exact-discretization first difference, the partner potentials
 * V_-/+ = W^2 -/+ p D1 W, the ground-state series solver for two-term
 * superpotentials, and the intertwining map between partner sectors.
 * The prefactor p is hbar/sqrt(2m) in lattice units.
 */

#include <optional>
#include <vector>

#include "latsqm/kernels.hpp"
#include "latsqm/power_sum.hpp"

namespace latsqm {

struct Superpotential {
  PowerSum w;
  double prefactor = 1.0; ///< hbar / sqrt(2m), divided by the lattice constant
};

/// Sign-tagged partner potentials.  v_minus carries the -D1 W sign and
/// is the potential of the factorized sector A^dag A; v_plus belongs to
/// the partner A A^dag.
struct PartnerPotentials {
  PowerSum v_minus;
  PowerSum v_plus;
};

PartnerPotentials build_partner_potentials(const Superpotential& W);

/// How a window realization treats sites beyond the window.
enum class BoundaryPolicy {
  truncate,   ///< drop all couplings to outside sites
  odd_images  ///< method of images about n = 0: f(-m) = -f(m), f(0) = 0
};

/// One ladder operator, applicable symbolically to PowerSums, numerically
/// through a SampledFunction's extension, or as a dense window matrix.
class LadderOp {
public:
  LadderOp(double sign, Superpotential W) : sign_(sign), W_(std::move(W)) {}

  double sign() const { return sign_; }
  const Superpotential& superpotential() const { return W_; }

  /// sign * p * D1 psi + W psi, exact on coefficients.
  PowerSum apply_symbolic(const PowerSum& psi) const;

  /// Kernel application at one site; psi's extension policy governs
  /// out-of-window values.
  Complex apply_sampled(const SampledFunction& psi, long long n,
                        const SumPolicy& policy) const;

  /// Dense matrix over window [n_min, n_max].  Under odd_images the
  /// adjoint (sign -1) matrix is defined as the transpose of the sign +1
  /// matrix, which keeps the pairing matrix(A^dag) = matrix(A)^T exact
  /// for both policies.
  std::vector<double> matrix(long long n_min, long long n_max,
                             long long kernel_cutoff,
                             BoundaryPolicy boundary) const;

private:
  double sign_;
  Superpotential W_;
};

struct LadderPair {
  LadderOp a;
  LadderOp a_dagger;
};

LadderPair ladder_pair(const Superpotential& W);

/// Power-series solution of W psi = -p D1 psi for two-term
/// superpotentials W = w0 + w_{-1}/n.
struct GroundStateSeries {
  std::vector<double> coefficients; ///< c_0 .. c_{max_terms-1}

  struct ClosedForm {
    double leading_power; ///< p in  N n^p exp(-rate n)
    double decay_rate;
  };
  std::optional<ClosedForm> closed_form;
  double normalization = 1.0;

  /// Truncated series value at n.
  double evaluate(double n) const;
};

GroundStateSeries solve_ground_state_series(const Superpotential& W,
                                            int max_terms);

/// Largest absolute coefficient of
///   A^dag(A psi) - (-p^2 D2 psi + v_minus psi)
/// for a probe PowerSum psi; zero in exact arithmetic because the
/// symbolic calculus obeys the semigroup and Leibniz identities.
double verify_factorization(const Superpotential& W, const PowerSum& probe);

/// Ladder image of psi on [n_min, n_max].  When the image norm falls
/// below annihilation_threshold * |psi| the state is reported as
/// annihilated and no normalization is attempted; otherwise the image is
/// scaled to unit discrete norm.
struct IntertwineResult {
  std::vector<Complex> image; ///< one value per window site
  bool annihilated = false;
  double image_norm = 0.0; ///< before normalization
  double input_norm = 0.0;
};

IntertwineResult intertwine(const LadderOp& op, const SampledFunction& psi,
                            long long n_min, long long n_max,
                            const SumPolicy& policy,
                            double annihilation_threshold = 1e-6);

} // namespace latsqm
