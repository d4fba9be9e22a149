#include "aw/leonard.hpp"

#include <cmath>

#include "aw/classify.hpp"
#include "aw/linalg.hpp"

namespace aw {

bool diagonalizable_criterion(const Scalar& x, const Scalar& q, int n) {
  const Scalar x2 = x * x;
  for (int k = 0; k < n; ++k)
    if (x2 == pow(q, 2 * n - 2 - 2 * k)) return false;
  return true;
}

namespace {

bool irreducible_tridiagonal(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && !m(i, j).is_zero()) return false;
      if (gap == 1 && m(i, j).is_zero()) return false;
    }
  return true;
}

// Eigenvectors for theta_0..theta_n in order; nullopt unless they form a basis.
std::optional<ExactMatrix> theta_eigenbasis(const ExactMatrix& m, const SymbolArgs<Scalar>& s, const Scalar& x) {
  const std::size_t d = m.rows();
  std::vector<ExactMatrix> cols;
  for (std::size_t i = 0; i < d; ++i) {
    auto k = kernel(m - ExactMatrix::scalar(d, theta(static_cast<int>(i), s.lambda, s.q, x)));
    if (k.size() != 1) return std::nullopt;
    cols.push_back(k.front());
  }
  ExactMatrix basis = ExactMatrix::from_columns(cols);
  if (rank(basis) != d) return std::nullopt;
  return basis;
}

}  // namespace

bool LeonardReport::consistent() const {
  const auto& d = diag_flags;
  bool ok = pair_flags[0] == (d[0] && d[1]) && pair_flags[1] == (d[0] && d[2]) && pair_flags[2] == (d[1] && d[2]);
  ok = ok && triple_flag == (pair_flags[0] && pair_flags[1] && pair_flags[2]) && triple_flag == (d[0] && d[1] && d[2]);
  if (direct_diag) ok = ok && *direct_diag == diag_flags;
  if (direct_pairs) ok = ok && *direct_pairs == pair_flags;
  if (direct_triple) ok = ok && *direct_triple == triple_flag;
  return ok;
}

LeonardReport leonard_check(const ModuleParams& params, bool verify_directly) {
  if (!irreducible_criterion(params)) throw PreconditionError("leonard_check: V_n(a, b, c) is reducible");
  const int n = params.n;
  const Scalar xs[3] = {params.a, params.b, params.c};
  LeonardReport r;
  for (int k = 0; k < 3; ++k) r.diag_flags[k] = diagonalizable_criterion(xs[k], params.q, n);
  const auto& d = r.diag_flags;
  r.pair_flags = {d[0] && d[1], d[0] && d[2], d[1] && d[2]};
  r.triple_flag = d[0] && d[1] && d[2];
  if (!verify_directly) return r;

  const DeltaRep rep = vn_module(params);
  const ExactMatrix* ops[3] = {&rep.A, &rep.B, &rep.C};
  const auto s = SymbolArgs<Scalar>::specialized(n, params.q, params.a, params.b, params.c);
  std::array<bool, 3> dd{};
  std::array<std::optional<ExactMatrix>, 3> inv;
  for (int k = 0; k < 3; ++k) {
    r.eigenbases[k] = theta_eigenbasis(*ops[k], s, xs[k]);
    dd[k] = r.eigenbases[k].has_value();
    if (dd[k]) inv[k] = inverse(*r.eigenbases[k]);
  }
  // tri[k][l]: operator l is irreducible tridiagonal in the eigenbasis of k
  bool tri[3][3] = {};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (k != l && dd[k]) tri[k][l] = irreducible_tridiagonal(*inv[k] * *ops[l] * *r.eigenbases[k]);
  auto pair = [&](int x, int y) { return dd[x] && dd[y] && tri[x][y] && tri[y][x]; };
  r.direct_diag = dd;
  r.direct_pairs = std::array<bool, 3>{pair(0, 1), pair(0, 2), pair(1, 2)};
  r.direct_triple = pair(0, 1) && pair(0, 2) && pair(1, 2);
  return r;
}

namespace {

bool near(Complex x, Complex y, double tol) { return std::abs(x - y) < tol; }

double max_residual(const FloatMatrix& s_u, const FloatMatrix& sdag_v) {
  double best = 0;
  for (std::size_t i = 0; i < s_u.rows(); ++i)
    for (std::size_t j = 0; j < s_u.cols(); ++j) best = std::max(best, std::abs(s_u(j, i) - std::conj(sdag_v(i, j))));
  return best;
}

}  // namespace

UnitaryReport unitary_check_float(int n, Complex q, Complex a, Complex b, Complex c, double tolerance) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  for (Complex v : {q, a, b, c})
    if (std::abs(std::abs(v) - 1.0) > tolerance) throw PreconditionError("unitary check: parameters must lie on the unit circle");
  UnitaryReport out;
  out.tolerance = tolerance;
  if (!near(std::conj(a), 1.0 / b, tolerance)) {
    if (!near(std::conj(a), b, tolerance)) throw PreconditionError("unitary check: need a* in {b, b^-1}");
    b = 1.0 / b;
    out.b_inverted = true;
  }
  if (!near(std::conj(c), c, tolerance) && !near(std::conj(c), 1.0 / c, tolerance))
    throw PreconditionError("unitary check: need c* in {c, c^-1}");
  for (int k = 0; k < n; ++k)
    for (Complex p : {a * b * c, b * c / a, a * c / b, a * b / c})
      if (near(p, std::pow(q, 1 - n + 2 * k), tolerance)) throw PreconditionError("unitary check: (a, b, c) not in T");

  const std::size_t d = static_cast<std::size_t>(n) + 1;
  const auto s = SymbolArgs<Complex>::specialized(n, q, a, b, c);
  const auto m = build_rep<Complex>(d, s);
  std::vector<Complex> ta(d), tb(d);
  for (std::size_t i = 0; i < d; ++i) {
    ta[i] = theta(static_cast<int>(i), s.lambda, q, a);
    tb[i] = theta(static_cast<int>(i), s.lambda, q, b);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (near(ta[i], ta[j], tolerance) || near(tb[i], tb[j], tolerance))
        throw PreconditionError("unitary check: A or B is not diagonalizable");

  // A is lower bidiagonal and B upper bidiagonal, so eigenvectors follow by triangular recursion.
  FloatMatrix u(d, d), v(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    u(i, i) = 1.0;
    for (std::size_t j = i + 1; j < d; ++j) u(j, i) = u(j - 1, i) / (ta[i] - ta[j]);
    v(i, i) = 1.0;
    for (std::size_t j = i; j-- > 0;) v(j, i) = m.U(j, j + 1) * v(j + 1, i) / (tb[i] - tb[j]);
  }
  auto ui = inverse(u), vi = inverse(v);
  if (!ui || !vi) throw PreconditionError("unitary check: eigenvectors are dependent");
  const FloatMatrix cvee = m.T3 + (m.L * m.U - m.U * m.L) * (1.0 / (q - 1.0 / q));
  const FloatMatrix b_u = *ui * m.U * u;
  FloatMatrix a_v = *vi * m.L * v;
  // Rescale v_j by kappa_j so the (j, j-1) entries of the B condition hold, then test everything.
  std::vector<Complex> kappa(d, 1.0);
  for (std::size_t j = 1; j < d; ++j) kappa[j] = kappa[j - 1] * std::conj(b_u(j, j - 1)) / a_v(j - 1, j);
  FloatMatrix k = FloatMatrix::diagonal(kappa), k_inv(d, d);
  for (std::size_t j = 0; j < d; ++j) k_inv(j, j) = 1.0 / kappa[j];
  const FloatMatrix v2 = v * k, v2i = k_inv * *vi;
  out.residual_a = max_residual(*ui * m.L * u, v2i * m.U * v2);
  out.residual_b = max_residual(b_u, v2i * m.L * v2);
  out.residual_c = max_residual(*ui * m.T3 * u, v2i * cvee * v2);
  return out;
}

}  // namespace aw
