#include "latsqm/sqm.hpp"

#include <cmath>
#include <cstdlib>

namespace latsqm {

PartnerPotentials build_partner_potentials(const Superpotential& W) {
  const PowerSum w2 = W.w * W.w;
  const PowerSum dw = apply_difference_symbolic(1, W.w).scaled(W.prefactor);
  return {w2 - dw, w2 + dw};
}

PowerSum LadderOp::apply_symbolic(const PowerSum& psi) const {
  return apply_difference_symbolic(1, psi).scaled(sign_ * W_.prefactor) +
         W_.w * psi;
}

Complex LadderOp::apply_sampled(const SampledFunction& psi, long long n,
                                const SumPolicy& policy) const {
  const Complex d = apply_difference(1, psi, n, policy).value;
  return sign_ * W_.prefactor * d +
         W_.w.evaluate(static_cast<double>(n)) * psi.eval(n);
}

std::vector<double> LadderOp::matrix(long long n_min, long long n_max,
                                     long long kernel_cutoff,
                                     BoundaryPolicy boundary) const {
  if (n_max < n_min) throw std::invalid_argument("LadderOp::matrix: empty window");
  const std::size_t N = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<double> m(N * N, 0.0);
  // Build the sign +1 realization, transpose afterwards for the adjoint.
  for (std::size_t r = 0; r < N; ++r) {
    const long long nr = n_min + static_cast<long long>(r);
    for (std::size_t c = 0; c < N; ++c) {
      const long long nc = n_min + static_cast<long long>(c);
      double v = 0.0;
      const long long d = nr - nc;
      if (d != 0 && std::llabs(d) <= kernel_cutoff)
        v += W_.prefactor * kernel_coefficient(1, d);
      if (boundary == BoundaryPolicy::odd_images) {
        const long long s = nr + nc;
        if (std::llabs(s) <= kernel_cutoff)
          v -= W_.prefactor * kernel_coefficient(1, s);
      }
      if (d == 0) v += W_.w.evaluate(static_cast<double>(nr));
      m[r * N + c] = v;
    }
  }
  if (sign_ < 0.0) {
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r + 1; c < N; ++c)
        std::swap(m[r * N + c], m[c * N + r]);
    // transpose flips the antisymmetric kernel part and keeps the diagonal
  }
  return m;
}

LadderPair ladder_pair(const Superpotential& W) {
  return {LadderOp(+1.0, W), LadderOp(-1.0, W)};
}

double GroundStateSeries::evaluate(double n) const {
  // Horner evaluation of sum_j c_j n^j.
  double v = 0.0;
  for (std::size_t j = coefficients.size(); j-- > 0;)
    v = v * n + coefficients[j];
  return v;
}

GroundStateSeries solve_ground_state_series(const Superpotential& W,
                                            int max_terms) {
  if (max_terms < 2)
    throw std::invalid_argument(
        "solve_ground_state_series: max_terms must be at least 2");

  // Require the two-term form w0 + w_{-1} / n.
  double w0 = 0.0, wm1 = 0.0;
  for (const auto& t : W.w.terms()) {
    if (t.exponent == 0.0)
      w0 = t.coeff;
    else if (t.exponent == -1.0)
      wm1 = t.coeff;
    else
      throw UnsupportedForm(
          "solve_ground_state_series: superpotential must have the form "
          "w0 + w_{-1}/n, found exponent " +
          std::to_string(t.exponent));
  }

  const double pf = W.prefactor;
  if (pf == 0.0)
    throw std::invalid_argument("solve_ground_state_series: zero prefactor");

  // Imposing W psi + pf D1 psi = 0 on psi = sum_j c_j n^j gives the
  // n^{-1} constraint w_{-1} c_0 = 0 and, for j >= 0,
  //   (pf (j+1) + w_{-1}) c_{j+1} = -w0 c_j.
  GroundStateSeries out;
  out.coefficients.assign(static_cast<std::size_t>(max_terms), 0.0);

  bool seeded = false;
  long long seed_index = -1;
  if (wm1 == 0.0) {
    out.coefficients[0] = 1.0; // c_0 free: pure exponential family
    seeded = true;
    seed_index = 0;
  }

  for (int j = 0; j + 1 < max_terms; ++j) {
    const double denom = pf * (j + 1) + wm1;
    const double incoming = out.coefficients[static_cast<std::size_t>(j)];
    if (denom == 0.0) {
      if (incoming != 0.0)
        throw NoSeriesSolution(
            "solve_ground_state_series: recurrence pole at j=" +
            std::to_string(j + 1) + " with nonzero incoming coefficient");
      if (!seeded) {
        out.coefficients[static_cast<std::size_t>(j + 1)] = 1.0; // normalization
        seeded = true;
        seed_index = j + 1;
      }
      continue;
    }
    out.coefficients[static_cast<std::size_t>(j + 1)] = -w0 * incoming / denom;
  }

  if (!seeded)
    throw NoSeriesSolution(
        "solve_ground_state_series: recurrence admits only the zero series "
        "(no integer pole index -w_{-1}/prefactor in range)");

  // c_{p+m} = (-w0/pf)^m / m! * c_p  =>  psi = N n^p exp(-(w0/pf) n).
  const double rate = w0 / pf;
  if (rate > 0.0)
    out.closed_form = GroundStateSeries::ClosedForm{
        static_cast<double>(seed_index), rate};
  return out;
}

double verify_factorization(const Superpotential& W, const PowerSum& probe) {
  const LadderPair L = ladder_pair(W);
  const PowerSum lhs = L.a_dagger.apply_symbolic(L.a.apply_symbolic(probe));
  const PartnerPotentials V = build_partner_potentials(W);
  const PowerSum rhs =
      apply_difference_symbolic(2, probe).scaled(-W.prefactor * W.prefactor) +
      V.v_minus * probe;
  return (lhs - rhs).max_abs_coeff();
}

IntertwineResult intertwine(const LadderOp& op, const SampledFunction& psi,
                            long long n_min, long long n_max,
                            const SumPolicy& policy,
                            double annihilation_threshold) {
  if (n_max < n_min) throw std::invalid_argument("intertwine: empty window");

  IntertwineResult out;
  out.image.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long long n = n_min; n <= n_max; ++n)
    out.image.push_back(op.apply_sampled(psi, n, policy));

  double in2 = 0.0;
  for (const Complex& v : psi.values()) in2 += std::norm(v);
  double im2 = 0.0;
  for (const Complex& v : out.image) im2 += std::norm(v);
  out.input_norm = std::sqrt(in2);
  out.image_norm = std::sqrt(im2);

  if (out.input_norm == 0.0)
    throw std::invalid_argument("intertwine: zero-norm input state");

  if (out.image_norm < annihilation_threshold * out.input_norm) {
    out.annihilated = true;
    return out;
  }
  for (Complex& v : out.image) v /= out.image_norm;
  return out;
}

} // namespace latsqm
