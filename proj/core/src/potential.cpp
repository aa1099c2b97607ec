#include "specbox/potential.hpp"

#include <vector>

namespace specbox {

Potential::Potential(std::map<int, Real> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("Potential: no coefficients given");
  }
  for (const auto& [exp, c] : coeffs_) {
    if (exp < 2 || exp % 2 != 0) {
      throw std::invalid_argument("Potential: exponent " + std::to_string(exp) +
                                  " is not an even integer >= 2");
    }
    (void)c;
  }
  if (coeffs_.rbegin()->second <= 0) {
    throw std::invalid_argument(
        "Potential: leading coefficient must be positive");
  }
}

Potential Potential::quartic(const Real& k, const Real& lambda) {
  return Potential({{2, -k}, {4, lambda}});
}

Real Potential::operator()(const Real& x) const {
  // Horner in y = x^2, walking exponents downward and bridging gaps.
  Real y = x * x;
  Real acc = 0;
  int prev_j = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int j = it->first / 2;
    if (prev_j != 0) {
      acc *= pow(y, prev_j - j);
    }
    acc += it->second;
    prev_j = j;
  }
  return acc * pow(y, prev_j);
}

Real Potential::derivative(const Real& x) const {
  Real acc = 0;
  for (const auto& [exp, c] : coeffs_) {
    acc += c * exp * pow(x, exp - 1);
  }
  return acc;
}

bool Potential::is_double_well_quartic() const {
  return coeffs_.size() == 2 && coeffs_.count(2) && coeffs_.count(4) &&
         coeffs_.at(2) < 0 && coeffs_.at(4) > 0;
}

Real Potential::rightmost_stationary_point(const PrecisionCtx& ctx) const {
  PrecisionGuard guard(ctx);
  if (is_double_well_quartic()) {
    return sqrt(quartic_k() / (2 * quartic_lambda()));
  }
  // V'(x)/x is even; search for the last sign change of V' on (0, B] where B
  // is a Cauchy-style bound on the stationary points.
  Real lead = coeffs_.rbegin()->second * coeffs_.rbegin()->first;
  Real bound = 1;
  for (const auto& [exp, c] : coeffs_) {
    Real r = 1 + abs(c * exp) / lead;
    if (r > bound) bound = r;
  }
  const int samples = 64 * static_cast<int>(coeffs_.size());
  Real lo = 0, hi = 0;
  Real prev_x = bound, prev_v = derivative(bound);
  bool found = false;
  for (int i = 1; i <= samples && !found; ++i) {
    Real x = bound * (samples - i) / samples;
    if (x == 0) break;
    Real v = derivative(x);
    if (v == 0) return x;
    if ((v < 0) != (prev_v < 0)) {
      lo = x;
      hi = prev_x;
      found = true;
    }
    prev_x = x;
    prev_v = v;
  }
  if (!found) return Real(0);
  for (int it = 0; it < ctx.decimal_digits * 4 + 32; ++it) {
    Real mid = (lo + hi) / 2;
    Real v = derivative(mid);
    if (v == 0) return mid;
    if ((v < 0) == (derivative(lo) < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Real Potential::min_value(const PrecisionCtx& ctx) const {
  PrecisionGuard guard(ctx);
  Real xs = rightmost_stationary_point(ctx);
  Real v = (*this)(xs);
  return v < 0 ? v : Real(0);
}

ScalingMap reduce(const Real& k, const Real& lambda) {
  if (k <= 0 || lambda <= 0) {
    throw std::invalid_argument("reduce: k and lambda must be positive");
  }
  ScalingMap map;
  map.k = k;
  map.beta = lambda / pow(k, Real(3) / 2);
  map.energy_factor = sqrt(k);
  map.length_factor = 1 / pow(k, Real(1) / 4);
  return map;
}

Potential reduced_potential(const ScalingMap& map) {
  return Potential::quartic(Real(1), map.beta);
}

Real outer_turning_point(const Potential& p, const Real& E,
                         const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  Real x_peak = p.rightmost_stationary_point(ctx);
  Real v_peak = p(x_peak);
  Real tol = pow10(-ctx.decimal_digits + 5) * max(Real(1), abs(E));
  if (E < p.min_value(ctx) - tol) {
    throw std::domain_error("outer_turning_point: E below potential minimum");
  }
  if (E <= v_peak + tol && E >= v_peak - tol && v_peak == 0 && x_peak == 0) {
    return Real(0);
  }
  if (E < v_peak) {
    throw std::domain_error(
        "outer_turning_point: E below the rightmost well; no turning point "
        "beyond the last stationary point");
  }
  Real hi = max(x_peak, Real(1));
  while (p(hi) <= E) hi *= 2;
  Real lo = x_peak;
  // V is increasing on [x_peak, inf), so plain bisection converges.
  for (int it = 0; it < ctx.decimal_digits * 4 + 64; ++it) {
    Real mid = (lo + hi) / 2;
    Real v = p(mid);
    if (abs(v - E) <= tol) return mid;
    if (v < E) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace specbox
