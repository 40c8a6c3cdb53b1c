#pragma once

/**
 * @file oracle.hpp
 *
 * Independent numerical validator: dense window realizations of the
 * lattice Hamiltonian -p^2 D2 + V, a cyclic plane-rotation symmetric
 * eigensolver, and comparison against algebraic spectra.
 */

#include <span>
#include <vector>

#include "latsqm/shape_invariance.hpp"
#include "latsqm/sqm.hpp"

namespace latsqm {

struct AssemblyInfo {
  long long n_min = 1;
  long long n_max = 1;
  long long kernel_cutoff = 0;
  BoundaryPolicy boundary = BoundaryPolicy::truncate;
  double prefactor2 = 1.0; ///< hbar^2 / (2m), in lattice units
  bool factorized = false; ///< built as a ladder-matrix product
};

class TruncatedOperator {
public:
  TruncatedOperator(AssemblyInfo info, std::vector<double> matrix);

  std::size_t dim() const { return dim_; }
  const AssemblyInfo& info() const { return info_; }
  double at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  const std::vector<double>& matrix() const { return m_; }

  /// Largest |H[r,c] - H[c,r]|; zero by construction for assembled forms.
  double max_asymmetry() const;

private:
  AssemblyInfo info_;
  std::size_t dim_;
  std::vector<double> m_;
};

/// H[r,c] = -p^2 K2[r-c] off the diagonal (|r-c| <= cutoff, plus the
/// image term under odd_images) and H[n,n] = -p^2 K2[0] + V[n].
/// Throws InvalidDomain when the window touches a pole of V.
TruncatedOperator assemble_hamiltonian(const PowerSum& V, long long n_min,
                                       long long n_max, long long kernel_cutoff,
                                       double prefactor2 = 1.0,
                                       BoundaryPolicy boundary =
                                           BoundaryPolicy::truncate);

/// Same with a sampled potential; the window must lie inside V's window.
TruncatedOperator assemble_hamiltonian(const SampledFunction& V, long long n_min,
                                       long long n_max, long long kernel_cutoff,
                                       double prefactor2 = 1.0,
                                       BoundaryPolicy boundary =
                                           BoundaryPolicy::truncate);

/// The positive semi-definite factorized realization: matrix(A^dag) *
/// matrix(A) when dagger_first (the v_minus sector), matrix(A) *
/// matrix(A^dag) otherwise.  On the infinite lattice both equal the
/// assembled form; on a finite window they differ near the boundary.
TruncatedOperator factorized_hamiltonian(const Superpotential& W,
                                         long long n_min, long long n_max,
                                         long long kernel_cutoff,
                                         BoundaryPolicy boundary,
                                         bool dagger_first = true);

struct EigenReport {
  std::vector<double> eigenvalues;   ///< ascending
  std::vector<double> eigenvectors;  ///< column k at [k*dim .. k*dim+dim)
  std::size_t dim = 0;
  int sweeps = 0;
  double off_residual = 0.0; ///< final max |off-diagonal| / initial scale

  std::span<const double> vector(std::size_t k) const {
    return {eigenvectors.data() + k * dim, dim};
  }
};

/// Full eigendecomposition by cyclic Jacobi sweeps.  Terminates when the
/// largest off-diagonal magnitude falls below tol * max|H| of the input;
/// throws ConvergenceFailure carrying the residual when the sweep budget
/// is exhausted, std::invalid_argument on non-symmetric input.
EigenReport diagonalize(const TruncatedOperator& op, double tol = 1e-10,
                        int max_sweeps = 100);

struct SpectrumReport {
  struct Row {
    int level;
    double oracle_value;
    double algebraic_value; ///< e_susy
    double abs_dev;
    double rel_dev;
  };
  std::vector<Row> rows;
  long long window_size = 0; ///< truncation metadata
};

/// Pairs the lowest n_levels oracle eigenvalues with e_susy levels by
/// sorted rank.  No verdict; thresholds belong to the caller.
SpectrumReport compare_spectra(const EigenReport& report,
                               const AlgebraicSpectrum& algebraic,
                               int n_levels);

/// |H psi - energy psi|_2 / |psi|_2 over the operator window.
double residual_check(const TruncatedOperator& op, std::span<const double> psi,
                      double energy);

} // namespace latsqm
