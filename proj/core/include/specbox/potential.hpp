#pragma once

#include <map>

#include "specbox/precision.hpp"

namespace specbox {

/// Even polynomial potential V(x) = sum_j c_{2j} x^(2j).
/// No constant term; the leading coefficient must be positive so the
/// spectrum is bounded below. The canonical double well is
/// V(x) = -k x^2 + lambda x^4.
class Potential {
 public:
  /// Keys are the (even, >= 2) exponents; values the coefficients.
  explicit Potential(std::map<int, Real> coeffs);

  static Potential quartic(const Real& k, const Real& lambda);

  const std::map<int, Real>& coeffs() const { return coeffs_; }
  int degree() const { return coeffs_.rbegin()->first; }

  Real operator()(const Real& x) const;
  Real derivative(const Real& x) const;

  /// True when the potential is exactly -k x^2 + lambda x^4 with k, lambda > 0.
  bool is_double_well_quartic() const;
  /// -coeff of x^2 for the double-well quartic.
  Real quartic_k() const { return -coeffs_.at(2); }
  Real quartic_lambda() const { return coeffs_.at(4); }

  /// Largest x >= 0 with V'(x) = 0 (0 when V is monotone on x > 0).
  Real rightmost_stationary_point(const PrecisionCtx& ctx) const;
  /// Global minimum of V (minimum over stationary points and the origin).
  Real min_value(const PrecisionCtx& ctx) const;

 private:
  std::map<int, Real> coeffs_;
};

/// Map between a general quartic double well H(k, lambda) and its reduced
/// k = 1 normal form: E(k, lambda) = k^(1/2) E(1, beta) and
/// L(k, lambda) = k^(-1/4) L(1, beta) with beta = k^(-3/2) lambda.
struct ScalingMap {
  Real k;
  Real beta;
  Real energy_factor;  // k^(1/2)
  Real length_factor;  // k^(-1/4)
};

/// Throws std::invalid_argument for non-positive k or lambda.
ScalingMap reduce(const Real& k, const Real& lambda);

/// The reduced potential -x^2 + beta x^4 of a scaling map.
Potential reduced_potential(const ScalingMap& map);

/// Largest real x with V(x) = E, located by bisection to
/// |V(x) - E| <= 10^(-digits+5) max(1, |E|).
/// Throws std::domain_error when E lies below the potential minimum.
Real outer_turning_point(const Potential& p, const Real& E,
                         const PrecisionCtx& ctx);

}  // namespace specbox
