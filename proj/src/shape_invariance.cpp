#include "latsqm/shape_invariance.hpp"

#include <cmath>

#include <json.hpp>

#include "latsqm/rational_expr.hpp"

namespace latsqm {

namespace {
constexpr double kConstantTol = 1e-12;
}

ShapeInvarianceCheck check_shape_invariance(const ShapeInvariantModel& model,
                                            double a) {
  const PartnerPotentials va = build_partner_potentials(model.family(a));
  const PartnerPotentials vb = build_partner_potentials(model.family(model.phi(a)));
  const PowerSum diff = va.v_plus - vb.v_minus;
  const PowerSum residual = diff.nonconstant_part().trimmed(kConstantTol);
  return {residual.is_zero(), diff.constant_part(), residual};
}

AlgebraicSpectrum algebraic_spectrum(const ShapeInvariantModel& model,
                                     double a1, int n_levels) {
  if (n_levels < 0)
    throw std::invalid_argument("algebraic_spectrum: negative level count");

  AlgebraicSpectrum out;
  if (n_levels == 0) {
    out.parameter_trail.push_back(a1);
    return out;
  }

  const double ground_ref = model.e0(a1);
  double a = a1;
  double accumulated = 0.0;
  out.parameter_trail.push_back(a);
  out.levels.push_back({0, 0.0, ground_ref});
  for (int n = 1; n < n_levels; ++n) {
    const ShapeInvarianceCheck c = check_shape_invariance(model, a);
    if (!c.holds)
      throw NotShapeInvariant(
          "algebraic_spectrum: shape invariance fails for model '" +
              model.name + "' at parameter " + std::to_string(a) +
              " (residual " + c.residual.to_string() + ")",
          a);
    accumulated += c.rest_extracted;
    a = model.phi(a);
    out.parameter_trail.push_back(a);
    out.levels.push_back({n, accumulated, ground_ref + accumulated});
  }
  return out;
}

std::vector<HierarchyMember> hamiltonian_hierarchy(
    const ShapeInvariantModel& model, double a1, int depth) {
  if (depth < 1)
    throw std::invalid_argument("hamiltonian_hierarchy: depth must be >= 1");

  std::vector<HierarchyMember> out;
  double a = a1;
  double offset = 0.0;
  for (int s = 0; s < depth; ++s) {
    out.push_back({build_partner_potentials(model.family(a)).v_minus, offset, a});
    if (s + 1 == depth) break;
    const ShapeInvarianceCheck c = check_shape_invariance(model, a);
    if (!c.holds)
      throw NotShapeInvariant(
          "hamiltonian_hierarchy: shape invariance fails for model '" +
              model.name + "' at parameter " + std::to_string(a),
          a);
    offset += c.rest_extracted;
    a = model.phi(a);
  }
  return out;
}

ShapeInvariantModel coulomb_model(double prefactor) {
  ShapeInvariantModel m;
  m.name = "coulomb";
  m.family = [prefactor](double l) {
    return Superpotential{
        PowerSum({{1.0 / (l + 1.0), 0.0}, {-(l + 1.0), -1.0}}), prefactor};
  };
  m.phi = [](double l) { return l + 1.0; };
  m.rest = [](double l) {
    return (2.0 * l + 3.0) / ((l + 1.0) * (l + 1.0) * (l + 2.0) * (l + 2.0));
  };
  m.e0 = [](double l) { return 1.0 / ((l + 1.0) * (l + 1.0)); };
  return m;
}

ShapeInvariantModel find_model(const std::string& name, double prefactor) {
  if (name == "coulomb") return coulomb_model(prefactor);
  throw BadConfig("unknown model '" + name + "' (built in: coulomb)");
}

ShapeInvariantModel model_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("model config is not valid JSON: ") + e.what());
  }

  ShapeInvariantModel m;
  try {
    m.name = j.value("name", std::string("custom"));
    const double prefactor = j.value("prefactor", 1.0);

    struct TermSpec {
      std::string coeff_expr;
      double exponent;
    };
    std::vector<TermSpec> specs;
    for (const auto& t : j.at("w_terms")) {
      TermSpec ts;
      const auto& c = t.at(0);
      ts.coeff_expr = c.is_string() ? c.get<std::string>()
                                    : std::to_string(c.get<double>());
      ts.exponent = t.at(1).get<double>();
      (void)eval_rational_expr(ts.coeff_expr, 0.5); // eager syntax check
      specs.push_back(std::move(ts));
    }
    m.family = [specs, prefactor](double a) {
      std::vector<PowerSum::Term> terms;
      terms.reserve(specs.size());
      for (const auto& ts : specs)
        terms.push_back({eval_rational_expr(ts.coeff_expr, a), ts.exponent});
      return Superpotential{PowerSum(std::move(terms)), prefactor};
    };

    const double alpha = j.at("phi").at("alpha").get<double>();
    const double beta = j.at("phi").at("beta").get<double>();
    m.phi = [alpha, beta](double a) { return alpha * a + beta; };

    const std::string rest_expr = j.at("rest").get<std::string>();
    (void)eval_rational_expr(rest_expr, 0.5);
    m.rest = [rest_expr](double a) { return eval_rational_expr(rest_expr, a); };

    const std::string e0_expr = j.value("e0", std::string("0"));
    (void)eval_rational_expr(e0_expr, 0.5);
    m.e0 = [e0_expr](double a) { return eval_rational_expr(e0_expr, a); };
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("model config missing/bad field: ") + e.what());
  }
  return m;
}

} // namespace latsqm
