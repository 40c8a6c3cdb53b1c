#include "latsqm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace latsqm {

TruncatedOperator::TruncatedOperator(AssemblyInfo info,
                                     std::vector<double> matrix)
    : info_(info), m_(std::move(matrix)) {
  dim_ = static_cast<std::size_t>(info_.n_max - info_.n_min + 1);
  if (m_.size() != dim_ * dim_)
    throw std::invalid_argument("TruncatedOperator: matrix size mismatch");
}

double TruncatedOperator::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      worst = std::max(worst, std::abs(m_[r * dim_ + c] - m_[c * dim_ + r]));
  return worst;
}

namespace {

TruncatedOperator assemble_impl(const std::function<double(long long)>& V,
                                long long n_min, long long n_max,
                                long long cutoff, double prefactor2,
                                BoundaryPolicy boundary) {
  if (n_max < n_min)
    throw std::invalid_argument("assemble_hamiltonian: empty window");
  if (cutoff < 1)
    throw std::invalid_argument("assemble_hamiltonian: kernel cutoff must be >= 1");

  const std::size_t N = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<double> m(N * N, 0.0);
  for (std::size_t r = 0; r < N; ++r) {
    const long long nr = n_min + static_cast<long long>(r);
    for (std::size_t c = 0; c < N; ++c) {
      const long long nc = n_min + static_cast<long long>(c);
      double v = 0.0;
      const long long d = nr - nc;
      if (d != 0 && std::llabs(d) <= cutoff)
        v -= prefactor2 * kernel_coefficient(2, d);
      if (boundary == BoundaryPolicy::odd_images) {
        const long long s = nr + nc;
        if (std::llabs(s) <= cutoff)
          v += prefactor2 * kernel_coefficient(2, s);
      }
      if (d == 0) v += -prefactor2 * kernel_coefficient(2, 0) + V(nr);
      m[r * N + c] = v;
    }
  }
  return TruncatedOperator(
      {n_min, n_max, cutoff, boundary, prefactor2, false}, std::move(m));
}

} // namespace

TruncatedOperator assemble_hamiltonian(const PowerSum& V, long long n_min,
                                       long long n_max, long long kernel_cutoff,
                                       double prefactor2,
                                       BoundaryPolicy boundary) {
  bool has_negative_exponent = false;
  for (const auto& t : V.terms())
    if (t.exponent < 0.0) has_negative_exponent = true;
  if (has_negative_exponent && n_min <= 0 && n_max >= 0)
    throw InvalidDomain(
        "assemble_hamiltonian: window contains the pole n = 0 of the potential");
  return assemble_impl(
      [&V](long long n) { return V.evaluate(static_cast<double>(n)); }, n_min,
      n_max, kernel_cutoff, prefactor2, boundary);
}

TruncatedOperator assemble_hamiltonian(const SampledFunction& V, long long n_min,
                                       long long n_max, long long kernel_cutoff,
                                       double prefactor2,
                                       BoundaryPolicy boundary) {
  if (n_min < V.n_min() || n_max > V.n_max())
    throw InvalidDomain(
        "assemble_hamiltonian: window not covered by the sampled potential");
  return assemble_impl(
      [&V](long long n) { return V.eval(n).real(); }, n_min, n_max,
      kernel_cutoff, prefactor2, boundary);
}

TruncatedOperator factorized_hamiltonian(const Superpotential& W,
                                         long long n_min, long long n_max,
                                         long long kernel_cutoff,
                                         BoundaryPolicy boundary,
                                         bool dagger_first) {
  const LadderPair L = ladder_pair(W);
  const std::vector<double> A = L.a.matrix(n_min, n_max, kernel_cutoff, boundary);
  const std::size_t N = static_cast<std::size_t>(n_max - n_min + 1);
  // matrix(A^dag) = matrix(A)^T, so both products are Gram matrices.
  std::vector<double> m(N * N, 0.0);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r; c < N; ++c) {
      double v = 0.0;
      if (dagger_first) {
        for (std::size_t k = 0; k < N; ++k) v += A[k * N + r] * A[k * N + c];
      } else {
        for (std::size_t k = 0; k < N; ++k) v += A[r * N + k] * A[c * N + k];
      }
      m[r * N + c] = v;
      m[c * N + r] = v;
    }
  return TruncatedOperator(
      {n_min, n_max, kernel_cutoff, boundary, W.prefactor * W.prefactor, true},
      std::move(m));
}

EigenReport diagonalize(const TruncatedOperator& op, double tol,
                        int max_sweeps) {
  const std::size_t N = op.dim();
  std::vector<double> a = op.matrix();

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;

  if (op.max_asymmetry() > 1e-12 * scale)
    throw std::invalid_argument("diagonalize: matrix is not symmetric");

  std::vector<double> q(N * N, 0.0); // accumulated rotations, row-major
  for (std::size_t i = 0; i < N; ++i) q[i * N + i] = 1.0;

  auto max_off = [&]() {
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r + 1; c < N; ++c)
        worst = std::max(worst, std::abs(a[r * N + c]));
    return worst;
  };

  int sweeps = 0;
  double off = max_off();
  const double target = tol * scale;
  while (off > target) {
    if (sweeps >= max_sweeps)
      throw ConvergenceFailure(
          "diagonalize: sweep budget exhausted with off-diagonal residual " +
              std::to_string(off / scale),
          off / scale);
    // One cyclic sweep over the upper triangle.
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t iq = p + 1; iq < N; ++iq) {
        const double apq = a[p * N + iq];
        if (std::abs(apq) == 0.0) continue;
        const double app = a[p * N + p];
        const double aqq = a[iq * N + iq];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * N + p] = app - t * apq;
        a[iq * N + iq] = aqq + t * apq;
        a[p * N + iq] = 0.0;
        a[iq * N + p] = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          if (k == p || k == iq) continue;
          const double akp = a[k * N + p];
          const double akq = a[k * N + iq];
          a[k * N + p] = akp - s * (akq + tau * akp);
          a[k * N + iq] = akq + s * (akp - tau * akq);
          a[p * N + k] = a[k * N + p];
          a[iq * N + k] = a[k * N + iq];
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double qkp = q[k * N + p];
          const double qkq = q[k * N + iq];
          q[k * N + p] = qkp - s * (qkq + tau * qkp);
          q[k * N + iq] = qkq + s * (qkp - tau * qkq);
        }
      }
    }
    ++sweeps;
    off = max_off();
  }

  // Sort ascending and permute eigenvector columns to match.
  std::vector<std::size_t> idx(N);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return a[i * N + i] < a[j * N + j];
  });

  EigenReport out;
  out.dim = N;
  out.sweeps = sweeps;
  out.off_residual = off / scale;
  out.eigenvalues.reserve(N);
  out.eigenvectors.assign(N * N, 0.0);
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues.push_back(a[idx[k] * N + idx[k]]);
    for (std::size_t r = 0; r < N; ++r)
      out.eigenvectors[k * N + r] = q[r * N + idx[k]];
  }
  return out;
}

SpectrumReport compare_spectra(const EigenReport& report,
                               const AlgebraicSpectrum& algebraic,
                               int n_levels) {
  if (n_levels < 0)
    throw std::invalid_argument("compare_spectra: negative level count");
  if (static_cast<std::size_t>(n_levels) > report.eigenvalues.size() ||
      static_cast<std::size_t>(n_levels) > algebraic.levels.size())
    throw std::invalid_argument(
        "compare_spectra: fewer levels available than requested");

  SpectrumReport out;
  out.window_size = static_cast<long long>(report.dim);
  for (int k = 0; k < n_levels; ++k) {
    const double oracle = report.eigenvalues[static_cast<std::size_t>(k)];
    const double alg = algebraic.levels[static_cast<std::size_t>(k)].e_susy;
    const double abs_dev = std::abs(oracle - alg);
    const double rel_dev = alg != 0.0 ? abs_dev / std::abs(alg) : abs_dev;
    out.rows.push_back({k, oracle, alg, abs_dev, rel_dev});
  }
  return out;
}

double residual_check(const TruncatedOperator& op, std::span<const double> psi,
                      double energy) {
  const std::size_t N = op.dim();
  if (psi.size() != N)
    throw std::invalid_argument("residual_check: state size mismatch");
  double norm2 = 0.0;
  for (double v : psi) norm2 += v * v;
  if (norm2 == 0.0)
    throw std::invalid_argument("residual_check: zero-norm state");

  double r2 = 0.0;
  for (std::size_t r = 0; r < N; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < N; ++c) acc += op.at(r, c) * psi[c];
    acc -= energy * psi[r];
    r2 += acc * acc;
  }
  return std::sqrt(r2 / norm2);
}

} // namespace latsqm
