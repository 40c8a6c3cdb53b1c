#include "latsqm/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace latsqm {

PowerSum::PowerSum(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

double PowerSum::coefficient(double exponent) const {
  for (const Term& t : terms_)
    if (t.exponent == exponent) return t.coeff;
  return 0.0;
}

double PowerSum::max_abs_coeff() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

double PowerSum::evaluate(double n) const {
  double v = 0.0;
  for (const Term& t : terms_) v += t.coeff * std::pow(n, t.exponent);
  return v;
}

PowerSum PowerSum::nonconstant_part() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.exponent != 0.0) out.push_back(t);
  return PowerSum(std::move(out));
}

PowerSum PowerSum::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (std::abs(t.coeff) > cut) out.push_back(t);
  return PowerSum(std::move(out));
}

bool PowerSum::is_constant(double rel_tol) const {
  const PowerSum t = trimmed(rel_tol);
  return t.is_zero() || (t.size() == 1 && t.terms()[0].exponent == 0.0);
}

PowerSum PowerSum::operator-() const { return scaled(-1.0); }

PowerSum PowerSum::operator+(const PowerSum& rhs) const {
  std::vector<Term> out = terms_;
  out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
  return PowerSum(std::move(out));
}

PowerSum PowerSum::operator-(const PowerSum& rhs) const {
  return *this + (-rhs);
}

PowerSum PowerSum::operator*(const PowerSum& rhs) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : rhs.terms_)
      out.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
  return PowerSum(std::move(out));
}

PowerSum PowerSum::scaled(double s) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff *= s;
  return PowerSum(std::move(out));
}

std::string PowerSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    first = false;
    os << std::abs(t.coeff);
    if (t.exponent != 0.0) os << "*n^" << t.exponent;
  }
  return os.str();
}

PowerSum apply_difference_symbolic(int order, const PowerSum& p) {
  if (order != 1 && order != 2)
    throw std::invalid_argument(
        "apply_difference_symbolic: order must be 1 or 2");
  auto once = [](const PowerSum& q) {
    std::vector<PowerSum::Term> out;
    for (const auto& t : q.terms())
      if (t.exponent != 0.0)
        out.push_back({t.coeff * t.exponent, t.exponent - 1.0});
    return PowerSum(std::move(out));
  };
  PowerSum d = once(p);
  if (order == 2) d = once(d);
  return d;
}

double verify_leibniz(const PowerSum& f, const PowerSum& g) {
  const PowerSum lhs = apply_difference_symbolic(1, f * g);
  const PowerSum rhs =
      apply_difference_symbolic(1, f) * g + f * apply_difference_symbolic(1, g);
  return (lhs - rhs).max_abs_coeff();
}

} // namespace latsqm
