#include "specbox/matelem.hpp"

#include <ostream>
#include <unordered_map>

namespace specbox {

Real SymMatrix::trace() const {
  Real t = 0;
  for (int i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

Real SymMatrix::frobenius_norm() const {
  Real s = 0;
  for (int i = 0; i < order_; ++i) {
    for (int j = i; j < order_; ++j) {
      Real w = at(i, j) * at(i, j);
      s += (i == j) ? w : 2 * w;
    }
  }
  return sqrt(s);
}

Real cosine_moment(int j, int n, const Real& L, const PrecisionCtx& ctx) {
  if (j < 0 || j % 2 != 0) {
    throw std::invalid_argument("cosine_moment: j must be even and >= 0");
  }
  PrecisionGuard guard(ctx);
  if (n == 0) {
    return 2 * pow(L, j + 1) / (j + 1);
  }
  if (j == 0) {
    return Real(0);
  }
  Real a2 = n * ctx.pi / L;
  a2 *= a2;
  int sign = (n % 2 == 0) ? 1 : -1;
  Real t = 0;  // T(0, n) for n >= 1
  for (int jj = 2; jj <= j; jj += 2) {
    t = (2 * sign * jj * pow(L, jj - 1) - jj * (jj - 1) * t) / a2;
  }
  return t;
}

namespace {

// Moment table shared across one assembly; entries along a diagonal reuse the
// same (j, n) pairs heavily.
class MomentTable {
 public:
  MomentTable(const Real& L, const PrecisionCtx& ctx) : L_(L), ctx_(ctx) {}

  const Real& get(int j, int n) {
    auto key = static_cast<long long>(j) * (1 << 20) + n;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, cosine_moment(j, n, L_, ctx_)).first->second;
  }

 private:
  Real L_;
  const PrecisionCtx& ctx_;
  std::unordered_map<long long, Real> cache_;
};

}  // namespace

SymMatrix potential_matrix(const Potential& p, const BasisSpec& spec,
                           const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  const int n = spec.n_basis;
  SymMatrix c(n);
  MomentTable moments(spec.half_width, ctx);

  // Product-to-sum: phi_m phi_m' = w_m w_m' / (2L) [cos(d theta) +- cos(s theta)]
  // with theta = pi x / L, d = |m - m'| and
  //   Periodic-Even:              s = m + m',     + sign
  //   Periodic-Odd, Dirichlet-Odd: s = m + m',     - sign
  //   Dirichlet-Even:             s = m + m' + 1, + sign
  const bool odd = spec.parity == Parity::Odd;
  const bool dirichlet_even =
      spec.family == BoundaryFamily::Dirichlet && !odd;
  const Real inv2l = 1 / (2 * spec.half_width);

  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      int m = spec.index_of(i);
      int mp = spec.index_of(k);
      int d = mp - m;
      int s = m + mp + (dirichlet_even ? 1 : 0);
      Real acc = 0;
      for (const auto& [exp, coeff] : p.coeffs()) {
        const Real& td = moments.get(exp, d);
        const Real& ts = moments.get(exp, s);
        acc += coeff * (odd ? Real(td - ts) : Real(td + ts));
      }
      c.at(i, k) = acc * inv2l * spec.weight(m) * spec.weight(mp);
    }
  }
  return c;
}

SymMatrix hamiltonian_matrix(const Potential& p, const BasisSpec& spec,
                             const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx);
  SymMatrix d = potential_matrix(p, spec, ctx);
  for (int i = 0; i < spec.n_basis; ++i) {
    d.at(i, i) += kinetic_eigenvalue(spec, spec.index_of(i), ctx);
  }
  return d;
}

void dump_matrix(const SymMatrix& m, std::ostream& out, int digits) {
  out << m.order() << "\n";
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i; j < m.order(); ++j) {
      out << m.at(i, j).str(digits) << "\n";
    }
  }
}

}  // namespace specbox
