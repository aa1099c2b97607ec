#include "specbox/eigensolve.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>

namespace specbox {

namespace {

constexpr int kMaxSweeps = 100;

inline mpfr_ptr raw(Real& x) { return x.backend().data(); }
inline mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

Real off_diagonal_norm(const std::vector<Real>& a, int n) {
  Real s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s += 2 * a[i * n + j] * a[i * n + j];
    }
  }
  return sqrt(s);
}

}  // namespace

SpectrumResult eig_sym(const SymMatrix& d, const PrecisionCtx& ctx,
                       bool want_vectors) {
  PrecisionGuard guard(ctx);
  const int n = d.order();
  std::vector<Real> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i * n + j] = d.at(i, j);
    }
  }
  std::vector<Real> v;
  if (want_vectors) {
    v.assign(static_cast<size_t>(n) * n, Real(0));
    for (int i = 0; i < n; ++i) v[i * n + i] = 1;
  }

  const Real norm_d = d.frobenius_norm();
  // absolute once the matrix is large: the per-pair residual bound is stated
  // against 1 + |eigenvalue|, not against the matrix norm
  const Real stop_tol = ctx.eig_tol * min(Real(1), norm_d);
  // Below this size a pivot cannot keep the off-norm above stop_tol.
  const Real skip_tol = n > 1 ? Real(stop_tol / n) : stop_tol;

  int sweeps = 0;
  // preallocated temporaries for the rotation kernel
  Real theta, t, c, s, h, t1, t2;
  t1 = 0;
  t2 = 0;
  while (true) {
    Real off = off_diagonal_norm(a, n);
    if (off <= stop_tol || n == 1) break;
    if (sweeps >= kMaxSweeps) {
      throw NonConvergenceError(
          "eig_sym: no convergence after " + std::to_string(kMaxSweeps) +
              " sweeps; off-diagonal norm " + off.str(6),
          off);
    }
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Real& apq = a[p * n + q];
        if (abs(apq) <= skip_tol) continue;
        h = a[q * n + q] - a[p * n + p];
        theta = h / (2 * apq);
        t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        c = 1 / sqrt(t * t + 1);
        s = t * c;
        // exact update of the 2x2 pivot block
        h = t * apq;
        a[p * n + p] -= h;
        a[q * n + q] += h;
        apq = 0;
        a[q * n + p] = 0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          mpfr_ptr apk = raw(a[p * n + k]);
          mpfr_ptr aqk = raw(a[q * n + k]);
          mpfr_fmms(raw(t1), raw(c), apk, raw(s), aqk, MPFR_RNDN);
          mpfr_fmma(raw(t2), raw(s), apk, raw(c), aqk, MPFR_RNDN);
          mpfr_swap(raw(t1), apk);
          mpfr_swap(raw(t2), aqk);
          mpfr_set(raw(a[k * n + p]), apk, MPFR_RNDN);
          mpfr_set(raw(a[k * n + q]), aqk, MPFR_RNDN);
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            mpfr_ptr vkp = raw(v[k * n + p]);
            mpfr_ptr vkq = raw(v[k * n + q]);
            mpfr_fmms(raw(t1), raw(c), vkp, raw(s), vkq, MPFR_RNDN);
            mpfr_fmma(raw(t2), raw(s), vkp, raw(c), vkq, MPFR_RNDN);
            mpfr_swap(raw(t1), vkp);
            mpfr_swap(raw(t2), vkq);
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

  SpectrumResult result;
  result.sweeps_used = sweeps;
  result.eigenvalues.reserve(n);
  for (int i : order) result.eigenvalues.push_back(a[i * n + i]);

  if (want_vectors) {
    result.eigenvectors.resize(n);
    result.residuals.resize(n);
    for (int col = 0; col < n; ++col) {
      int src = order[col];
      auto& vec = result.eigenvectors[col];
      vec.resize(n);
      for (int k = 0; k < n; ++k) vec[k] = v[k * n + src];
      Real res = 0;
      for (int row = 0; row < n; ++row) {
        Real acc = 0;
        for (int k = 0; k < n; ++k) acc += d.at(row, k) * vec[k];
        acc -= result.eigenvalues[col] * vec[row];
        res = max(res, abs(acc));
      }
      result.residuals[col] = res;
    }
  }
  return result;
}

int estimate_significant_digits(const Real& a, const Real& b, int max_digits) {
  if (a == b) return max_digits;
  if (a == 0 || b == 0) return 0;
  if ((a < 0) != (b < 0)) return 0;
  std::string sa = Real(abs(a)).str(max_digits + 2, std::ios_base::scientific);
  std::string sb = Real(abs(b)).str(max_digits + 2, std::ios_base::scientific);
  auto split = [](const std::string& s) {
    auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    long exp = std::stol(s.substr(e + 1));
    mantissa.erase(std::remove(mantissa.begin(), mantissa.end(), '.'),
                   mantissa.end());
    return std::pair<std::string, long>(mantissa, exp);
  };
  auto [ma, ea] = split(sa);
  auto [mb, eb] = split(sb);
  // digit-string comparison, plus a relative-error count to cover carries
  // across digit boundaries (1.000... vs 0.999...)
  int count = 0;
  if (ea == eb) {
    for (size_t i = 0; i < ma.size() && i < mb.size() && count < max_digits;
         ++i) {
      if (ma[i] != mb[i]) break;
      ++count;
    }
  } else if (ea - eb != 1 && eb - ea != 1) {
    return 0;
  }
  Real rel = abs(a - b) / max(abs(a), abs(b));
  long from_rel = -floor(log10(rel)).convert_to<long>() - 1;
  from_rel = std::clamp(from_rel, 0L, static_cast<long>(max_digits));
  return std::max(count, static_cast<int>(from_rel));
}

}  // namespace specbox
