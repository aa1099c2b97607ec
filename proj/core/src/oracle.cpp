#include "specbox/oracle.hpp"

#include <cmath>
#include <functional>

namespace specbox {

namespace {

struct SimpsonState {
  const std::function<Real(const Real&)>& f;
  const QuadratureConfig& cfg;
  Real error_sum;
  bool converged = true;
};

Real simpson(const Real& fa, const Real& fm, const Real& fb, const Real& a,
             const Real& b) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

Real adapt(SimpsonState& st, const Real& a, const Real& b, const Real& fa,
           const Real& fm, const Real& fb, const Real& whole, const Real& scale,
           int depth) {
  Real m = (a + b) / 2;
  Real lm = (a + m) / 2, rm = (m + b) / 2;
  Real flm = st.f(lm), frm = st.f(rm);
  Real left = simpson(fa, flm, fm, a, m);
  Real right = simpson(fm, frm, fb, m, b);
  Real err = (left + right - whole) / 15;
  Real budget =
      max(st.cfg.abs_tol, st.cfg.rel_tol * scale) * (b - a) / (2 * scale + 1);
  if (abs(err) <= budget || depth >= st.cfg.max_depth) {
    if (depth >= st.cfg.max_depth && abs(err) > budget) st.converged = false;
    st.error_sum += abs(err);
    return left + right + err;
  }
  return adapt(st, a, m, fa, flm, fm, left, scale, depth + 1) +
         adapt(st, m, b, fm, frm, fb, right, scale, depth + 1);
}

}  // namespace

QuadratureResult quadrature_moment(int j, int n, const Real& L,
                                   const QuadratureConfig& cfg,
                                   const PrecisionCtx& ctx) {
  if (j < 0 || j % 2 != 0) {
    throw std::invalid_argument("quadrature_moment: j must be even and >= 0");
  }
  PrecisionGuard guard(ctx);
  std::function<Real(const Real&)> f = [&](const Real& x) {
    return pow(x, j) * cos(n * ctx.pi * x / L);
  };
  // magnitude scale of the integrand, to give rel_tol a meaning
  Real scale = pow(L, j);
  SimpsonState st{f, cfg, Real(0)};
  // seed panels finer than the oscillation period before adapting
  int panels = std::max(8, 4 * n);
  Real total = 0;
  Real width = 2 * L / panels;
  for (int i = 0; i < panels; ++i) {
    Real a = -L + i * width;
    Real b = a + width;
    Real m = (a + b) / 2;
    Real fa = f(a), fm = f(m), fb = f(b);
    total += adapt(st, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), scale, 0);
  }
  return {total, st.error_sum, st.converged};
}

namespace {

// Sturm-sequence count of eigenvalues of the symmetric tridiagonal matrix
// (diag, off) strictly below x.
int count_below(const std::vector<double>& diag, double off_sq, double x) {
  int count = 0;
  double d = diag[0] - x;
  if (d < 0) ++count;
  for (size_t i = 1; i < diag.size(); ++i) {
    if (d == 0.0) d = 1e-300;
    d = diag[i] - x - off_sq / d;
    if (d < 0) ++count;
  }
  return count;
}

std::vector<double> tridiag_lowest(const std::vector<double>& diag,
                                   double off, int count) {
  double off_sq = off * off;
  double lo = diag[0], hi = diag[0];
  for (double d : diag) {
    lo = std::min(lo, d - 2 * std::abs(off));
    hi = std::max(hi, d + 2 * std::abs(off));
  }
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      double m = (a + b) / 2;
      if (count_below(diag, off_sq, m) <= k) {
        a = m;
      } else {
        b = m;
      }
      if (b - a < 1e-13 * (std::abs(a) + std::abs(b) + 1)) break;
    }
    out.push_back((a + b) / 2);
  }
  return out;
}

std::vector<double> fd_once(const Potential& p, double L, int grid_n,
                            int count) {
  // interior points of [-L, L]; psi(+-L) = 0
  int n = grid_n - 2;
  double h = 2 * L / (grid_n - 1);
  std::vector<double> diag(n);
  PrecisionGuard guard(20);
  for (int i = 0; i < n; ++i) {
    double x = -L + (i + 1) * h;
    diag[i] = 2.0 / (h * h) + p(Real(x)).convert_to<double>();
  }
  return tridiag_lowest(diag, -1.0 / (h * h), count);
}

}  // namespace

std::vector<double> fd_eigenvalues(const Potential& p, double L, int grid_n,
                                   int count) {
  if (grid_n < 201 || grid_n % 2 == 0) {
    throw std::invalid_argument("fd_eigenvalues: grid_n must be odd and >= 201");
  }
  if (count > 10) {
    throw std::invalid_argument("fd_eigenvalues: count must be <= 10");
  }
  std::vector<double> coarse = fd_once(p, L, grid_n, count);
  std::vector<double> fine = fd_once(p, L, 2 * grid_n - 1, count);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = (4 * fine[i] - coarse[i]) / 3;  // h^2 -> h^4
  }
  return out;
}

}  // namespace specbox
