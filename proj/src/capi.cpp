#include "latsqm/latsqm.h"

#include <cstring>
#include <string>

#include "latsqm/kernels.hpp"
#include "latsqm/oracle.hpp"
#include "latsqm/power_sum.hpp"
#include "latsqm/shape_invariance.hpp"
#include "latsqm/sqm.hpp"

using namespace latsqm;

struct latsqm_power_sum {
  PowerSum value;
};
struct latsqm_series {
  GroundStateSeries value;
};
struct latsqm_model {
  ShapeInvariantModel value;
};
struct latsqm_spectrum {
  AlgebraicSpectrum value;
};
struct latsqm_operator {
  TruncatedOperator value;
};
struct latsqm_eigen {
  EigenReport value;
};

namespace {

thread_local std::string g_last_error;

latsqm_status fail(latsqm_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename F>
latsqm_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(LATSQM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const InvalidDomain& e) {
    return fail(LATSQM_ERR_INVALID_DOMAIN, e.what());
  } catch (const ToleranceNotMet& e) {
    return fail(LATSQM_ERR_TOLERANCE_NOT_MET, e.what());
  } catch (const NoSeriesSolution& e) {
    return fail(LATSQM_ERR_NO_SERIES_SOLUTION, e.what());
  } catch (const UnsupportedForm& e) {
    return fail(LATSQM_ERR_UNSUPPORTED_FORM, e.what());
  } catch (const NotShapeInvariant& e) {
    return fail(LATSQM_ERR_NOT_SHAPE_INVARIANT, e.what());
  } catch (const ConvergenceFailure& e) {
    return fail(LATSQM_ERR_CONVERGENCE_FAILURE, e.what());
  } catch (const BadConfig& e) {
    return fail(LATSQM_ERR_BAD_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(LATSQM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LATSQM_ERR_INTERNAL, "unknown exception");
  }
}

latsqm_status require(bool ok, const char* what) {
  return ok ? LATSQM_OK : fail(LATSQM_ERR_INVALID_ARGUMENT, what);
}

SumPolicy to_policy(const latsqm_sum_policy* p) {
  if (!p) return SumPolicy{};
  SumPolicy out;
  out.j_max = p->j_max;
  out.mode = p->mode == LATSQM_SUM_PAIRED_CESARO ? SumPolicy::Mode::paired_cesaro
                                                 : SumPolicy::Mode::paired;
  out.tail_tol = p->tail_tol;
  return out;
}

// Wraps a C callback as an analytic extension rule.
struct CallbackError {};
SampledFunction wrap_callback(latsqm_lattice_fn f, void* user, long long n_min,
                              long long n_max) {
  auto rule = [f, user](long long n) -> Complex {
    double re = 0.0, im = 0.0;
    if (f(n, &re, &im, user) != 0) throw CallbackError{};
    return {re, im};
  };
  return SampledFunction(n_min, n_max, rule);
}

BoundaryPolicy to_boundary(int b) {
  return b == LATSQM_BOUNDARY_ODD_IMAGES ? BoundaryPolicy::odd_images
                                         : BoundaryPolicy::truncate;
}

} // namespace

extern "C" {

const char* latsqm_version(void) { return "1.0.0"; }

const char* latsqm_last_error_message(void) { return g_last_error.c_str(); }

latsqm_status latsqm_kernel_coefficient(int order, long long j, double* out) {
  if (auto s = require(out, "null output"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = kernel_coefficient(order, j);
    return LATSQM_OK;
  });
}

latsqm_sum_policy latsqm_sum_policy_default(void) {
  const SumPolicy p;
  return {p.j_max, LATSQM_SUM_PAIRED, p.tail_tol};
}

latsqm_status latsqm_apply_difference(int order, latsqm_lattice_fn f,
                                      void* user, long long n,
                                      const latsqm_sum_policy* policy,
                                      double* out_re, double* out_im,
                                      double* out_tail) {
  if (auto s = require(f && out_re && out_im, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&]() -> latsqm_status {
    const SumPolicy p = to_policy(policy);
    try {
      // Window [n, n] with analytic rule: every other site goes through
      // the callback.
      const SampledFunction sf = wrap_callback(f, user, n, n);
      const DifferenceResult r = apply_difference(order, sf, n, p);
      *out_re = r.value.real();
      *out_im = r.value.imag();
      if (out_tail) *out_tail = r.tail_estimate;
      return LATSQM_OK;
    } catch (const CallbackError&) {
      return fail(LATSQM_ERR_INTERNAL, "lattice callback reported failure");
    }
  });
}

latsqm_status latsqm_verify_semigroup(latsqm_lattice_fn f, void* user,
                                      long long n_min, long long n_max,
                                      const latsqm_sum_policy* policy,
                                      double* out_max_residual) {
  if (auto s = require(f && out_max_residual, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&]() -> latsqm_status {
    try {
      const SampledFunction sf = wrap_callback(f, user, n_min, n_max);
      *out_max_residual = verify_semigroup(sf, n_min, n_max, to_policy(policy));
      return LATSQM_OK;
    } catch (const CallbackError&) {
      return fail(LATSQM_ERR_INTERNAL, "lattice callback reported failure");
    }
  });
}

latsqm_status latsqm_power_sum_create(const double* coeffs,
                                      const double* exponents, size_t n_terms,
                                      latsqm_power_sum** out) {
  if (auto s = require(out && (n_terms == 0 || (coeffs && exponents)),
                       "null argument");
      s != LATSQM_OK)
    return s;
  return guarded([&] {
    std::vector<PowerSum::Term> terms;
    terms.reserve(n_terms);
    for (size_t i = 0; i < n_terms; ++i)
      terms.push_back({coeffs[i], exponents[i]});
    *out = new latsqm_power_sum{PowerSum(std::move(terms))};
    return LATSQM_OK;
  });
}

void latsqm_power_sum_destroy(latsqm_power_sum* p) { delete p; }

latsqm_status latsqm_power_sum_num_terms(const latsqm_power_sum* p,
                                         size_t* out) {
  if (auto s = require(p && out, "null argument"); s != LATSQM_OK) return s;
  *out = p->value.size();
  return LATSQM_OK;
}

latsqm_status latsqm_power_sum_term(const latsqm_power_sum* p, size_t index,
                                    double* coeff, double* exponent) {
  if (auto s = require(p && coeff && exponent, "null argument"); s != LATSQM_OK)
    return s;
  if (index >= p->value.size())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "term index out of range");
  *coeff = p->value.terms()[index].coeff;
  *exponent = p->value.terms()[index].exponent;
  return LATSQM_OK;
}

latsqm_status latsqm_power_sum_eval(const latsqm_power_sum* p, double n,
                                    double* out) {
  if (auto s = require(p && out, "null argument"); s != LATSQM_OK) return s;
  *out = p->value.evaluate(n);
  return LATSQM_OK;
}

latsqm_status latsqm_power_sum_difference(const latsqm_power_sum* p, int order,
                                          latsqm_power_sum** out) {
  if (auto s = require(p && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_power_sum{apply_difference_symbolic(order, p->value)};
    return LATSQM_OK;
  });
}

latsqm_status latsqm_verify_leibniz(const latsqm_power_sum* f,
                                    const latsqm_power_sum* g,
                                    double* out_max_residual) {
  if (auto s = require(f && g && out_max_residual, "null argument");
      s != LATSQM_OK)
    return s;
  *out_max_residual = verify_leibniz(f->value, g->value);
  return LATSQM_OK;
}

latsqm_status latsqm_verify_factorization(const latsqm_power_sum* w,
                                          double prefactor,
                                          const latsqm_power_sum* psi,
                                          double* out_max_residual) {
  if (auto s = require(w && psi && out_max_residual, "null argument");
      s != LATSQM_OK)
    return s;
  return guarded([&] {
    *out_max_residual =
        verify_factorization(Superpotential{w->value, prefactor}, psi->value);
    return LATSQM_OK;
  });
}

latsqm_status latsqm_partner_potentials(const latsqm_power_sum* w,
                                        double prefactor,
                                        latsqm_power_sum** v_minus,
                                        latsqm_power_sum** v_plus) {
  if (auto s = require(w && v_minus && v_plus, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&] {
    const PartnerPotentials v =
        build_partner_potentials(Superpotential{w->value, prefactor});
    *v_minus = new latsqm_power_sum{v.v_minus};
    *v_plus = new latsqm_power_sum{v.v_plus};
    return LATSQM_OK;
  });
}

latsqm_status latsqm_ground_state_series(const latsqm_power_sum* w,
                                         double prefactor, int max_terms,
                                         latsqm_series** out) {
  if (auto s = require(w && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_series{solve_ground_state_series(
        Superpotential{w->value, prefactor}, max_terms)};
    return LATSQM_OK;
  });
}

void latsqm_series_destroy(latsqm_series* s) { delete s; }

latsqm_status latsqm_series_num_coefficients(const latsqm_series* s,
                                             size_t* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  *out = s->value.coefficients.size();
  return LATSQM_OK;
}

latsqm_status latsqm_series_coefficient(const latsqm_series* s, size_t j,
                                        double* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  if (j >= s->value.coefficients.size())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "coefficient index out of range");
  *out = s->value.coefficients[j];
  return LATSQM_OK;
}

latsqm_status latsqm_series_has_closed_form(const latsqm_series* s, int* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  *out = s->value.closed_form.has_value() ? 1 : 0;
  return LATSQM_OK;
}

latsqm_status latsqm_series_closed_form(const latsqm_series* s,
                                        double* leading_power,
                                        double* decay_rate) {
  if (auto st = require(s && leading_power && decay_rate, "null argument");
      st != LATSQM_OK)
    return st;
  if (!s->value.closed_form)
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "series has no closed form");
  *leading_power = s->value.closed_form->leading_power;
  *decay_rate = s->value.closed_form->decay_rate;
  return LATSQM_OK;
}

latsqm_status latsqm_series_eval(const latsqm_series* s, double n,
                                 double* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  *out = s->value.evaluate(n);
  return LATSQM_OK;
}

latsqm_status latsqm_model_create_builtin(const char* name, double prefactor,
                                          latsqm_model** out) {
  if (auto s = require(name && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_model{find_model(name, prefactor)};
    return LATSQM_OK;
  });
}

latsqm_status latsqm_model_from_json(const char* json_text,
                                     latsqm_model** out) {
  if (auto s = require(json_text && out, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&] {
    *out = new latsqm_model{model_from_json(json_text)};
    return LATSQM_OK;
  });
}

void latsqm_model_destroy(latsqm_model* m) { delete m; }

latsqm_status latsqm_model_superpotential(const latsqm_model* m, double a,
                                          latsqm_power_sum** w_out,
                                          double* prefactor_out) {
  if (auto s = require(m && w_out && prefactor_out, "null argument");
      s != LATSQM_OK)
    return s;
  return guarded([&] {
    const Superpotential w = m->value.family(a);
    *w_out = new latsqm_power_sum{w.w};
    *prefactor_out = w.prefactor;
    return LATSQM_OK;
  });
}

latsqm_status latsqm_model_phi(const latsqm_model* m, double a, double* out) {
  if (auto s = require(m && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = m->value.phi(a);
    return LATSQM_OK;
  });
}

latsqm_status latsqm_model_rest(const latsqm_model* m, double a, double* out) {
  if (auto s = require(m && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = m->value.rest(a);
    return LATSQM_OK;
  });
}

latsqm_status latsqm_model_e0(const latsqm_model* m, double a, double* out) {
  if (auto s = require(m && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = m->value.e0(a);
    return LATSQM_OK;
  });
}

latsqm_status latsqm_check_shape_invariance(const latsqm_model* m, double a,
                                            int* holds, double* rest_extracted,
                                            double* max_residual_coeff) {
  if (auto s = require(m && holds && rest_extracted, "null argument");
      s != LATSQM_OK)
    return s;
  return guarded([&] {
    const ShapeInvarianceCheck c = check_shape_invariance(m->value, a);
    *holds = c.holds ? 1 : 0;
    *rest_extracted = c.rest_extracted;
    if (max_residual_coeff) *max_residual_coeff = c.residual.max_abs_coeff();
    return LATSQM_OK;
  });
}

latsqm_status latsqm_algebraic_spectrum(const latsqm_model* m, double a1,
                                        int n_levels, latsqm_spectrum** out) {
  if (auto s = require(m && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_spectrum{algebraic_spectrum(m->value, a1, n_levels)};
    return LATSQM_OK;
  });
}

void latsqm_spectrum_destroy(latsqm_spectrum* s) { delete s; }

latsqm_status latsqm_spectrum_num_levels(const latsqm_spectrum* s,
                                         size_t* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  *out = s->value.levels.size();
  return LATSQM_OK;
}

latsqm_status latsqm_spectrum_level(const latsqm_spectrum* s, size_t index,
                                    int* n, double* e_susy, double* e_paper) {
  if (auto st = require(s && n && e_susy && e_paper, "null argument");
      st != LATSQM_OK)
    return st;
  if (index >= s->value.levels.size())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "level index out of range");
  const auto& l = s->value.levels[index];
  *n = l.n;
  *e_susy = l.e_susy;
  *e_paper = l.e_paper;
  return LATSQM_OK;
}

latsqm_status latsqm_spectrum_num_parameters(const latsqm_spectrum* s,
                                             size_t* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  *out = s->value.parameter_trail.size();
  return LATSQM_OK;
}

latsqm_status latsqm_spectrum_parameter(const latsqm_spectrum* s, size_t index,
                                        double* out) {
  if (auto st = require(s && out, "null argument"); st != LATSQM_OK) return st;
  if (index >= s->value.parameter_trail.size())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "parameter index out of range");
  *out = s->value.parameter_trail[index];
  return LATSQM_OK;
}

latsqm_status latsqm_assemble_hamiltonian(const latsqm_power_sum* potential,
                                          long long n_min, long long n_max,
                                          long long kernel_cutoff,
                                          double prefactor2, int boundary,
                                          latsqm_operator** out) {
  if (auto s = require(potential && out, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&] {
    *out = new latsqm_operator{
        assemble_hamiltonian(potential->value, n_min, n_max, kernel_cutoff,
                             prefactor2, to_boundary(boundary))};
    return LATSQM_OK;
  });
}

latsqm_status latsqm_factorized_hamiltonian(const latsqm_power_sum* w,
                                            double prefactor, long long n_min,
                                            long long n_max,
                                            long long kernel_cutoff,
                                            int boundary, int dagger_first,
                                            latsqm_operator** out) {
  if (auto s = require(w && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_operator{factorized_hamiltonian(
        Superpotential{w->value, prefactor}, n_min, n_max, kernel_cutoff,
        to_boundary(boundary), dagger_first != 0)};
    return LATSQM_OK;
  });
}

void latsqm_operator_destroy(latsqm_operator* op) { delete op; }

latsqm_status latsqm_operator_dim(const latsqm_operator* op, size_t* out) {
  if (auto s = require(op && out, "null argument"); s != LATSQM_OK) return s;
  *out = op->value.dim();
  return LATSQM_OK;
}

latsqm_status latsqm_operator_entry(const latsqm_operator* op, size_t row,
                                    size_t col, double* out) {
  if (auto s = require(op && out, "null argument"); s != LATSQM_OK) return s;
  if (row >= op->value.dim() || col >= op->value.dim())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "matrix index out of range");
  *out = op->value.at(row, col);
  return LATSQM_OK;
}

latsqm_status latsqm_diagonalize(const latsqm_operator* op, double tol,
                                 latsqm_eigen** out) {
  if (auto s = require(op && out, "null argument"); s != LATSQM_OK) return s;
  return guarded([&] {
    *out = new latsqm_eigen{diagonalize(op->value, tol)};
    return LATSQM_OK;
  });
}

void latsqm_eigen_destroy(latsqm_eigen* e) { delete e; }

latsqm_status latsqm_eigen_dim(const latsqm_eigen* e, size_t* out) {
  if (auto s = require(e && out, "null argument"); s != LATSQM_OK) return s;
  *out = e->value.dim;
  return LATSQM_OK;
}

latsqm_status latsqm_eigen_value(const latsqm_eigen* e, size_t k,
                                 double* out) {
  if (auto s = require(e && out, "null argument"); s != LATSQM_OK) return s;
  if (k >= e->value.eigenvalues.size())
    return fail(LATSQM_ERR_INVALID_ARGUMENT, "eigenvalue index out of range");
  *out = e->value.eigenvalues[k];
  return LATSQM_OK;
}

latsqm_status latsqm_eigen_vector(const latsqm_eigen* e, size_t k, double* buf,
                                  size_t len) {
  if (auto s = require(e && buf, "null argument"); s != LATSQM_OK) return s;
  if (k >= e->value.dim || len < e->value.dim)
    return fail(LATSQM_ERR_INVALID_ARGUMENT,
                "eigenvector index out of range or buffer too small");
  const auto v = e->value.vector(k);
  std::memcpy(buf, v.data(), v.size() * sizeof(double));
  return LATSQM_OK;
}

latsqm_status latsqm_eigen_sweeps(const latsqm_eigen* e, int* out) {
  if (auto s = require(e && out, "null argument"); s != LATSQM_OK) return s;
  *out = e->value.sweeps;
  return LATSQM_OK;
}

latsqm_status latsqm_eigen_off_residual(const latsqm_eigen* e, double* out) {
  if (auto s = require(e && out, "null argument"); s != LATSQM_OK) return s;
  *out = e->value.off_residual;
  return LATSQM_OK;
}

latsqm_status latsqm_residual_check(const latsqm_operator* op,
                                    const double* psi, size_t len,
                                    double energy, double* out) {
  if (auto s = require(op && psi && out, "null argument"); s != LATSQM_OK)
    return s;
  return guarded([&] {
    *out = residual_check(op->value, std::span<const double>(psi, len), energy);
    return LATSQM_OK;
  });
}

} // extern "C"
