#include "aw/classify.hpp"

#include <random>
#include <stdexcept>

namespace aw {

bool irreducible_criterion(const ModuleParams& params) {
  params.validate();
  const int n = params.n;
  const Scalar& q = params.q;
  for (int i = 1; i <= n; ++i)
    if (pow(q, 2 * i) == Scalar(1)) return false;
  const Scalar &a = params.a, &b = params.b, &c = params.c;
  const Scalar products[4] = {a * b * c, a.inverse() * b * c, a * b.inverse() * c, a * b * c.inverse()};
  for (int k = 0; k < n; ++k) {
    const Scalar forbidden = pow(q, 1 - n + 2 * k);
    for (const auto& p : products)
      if (p == forbidden) return false;
  }
  return true;
}

namespace {

// Eigenvectors of m, provided each eigenspace is one-dimensional.
std::optional<std::vector<ExactMatrix>> simple_eigenvectors(const ExactMatrix& m) {
  std::vector<ExactMatrix> out;
  for (const auto& theta : roots_in_field(char_poly(m))) {
    auto k = kernel(m - ExactMatrix::scalar(m.rows(), theta));
    if (k.size() != 1) return std::nullopt;
    out.push_back(k.front());
  }
  return out;
}

SpanBuilder closure(const DeltaRep& rep, const ExactMatrix& seed) {
  SpanBuilder span(rep.dim());
  std::vector<ExactMatrix> queue{seed};
  span.insert(seed);
  while (!queue.empty()) {
    ExactMatrix v = std::move(queue.back());
    queue.pop_back();
    for (const auto* op : {&rep.A, &rep.B, &rep.C}) {
      ExactMatrix w = *op * v;
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span;
}

std::string quadratic_text(const Scalar& a2, const Scalar& a1, const Scalar& a0) {
  return "(" + a2.str() + ")X^2 + (" + a1.str() + ")X + (" + a0.str() + ")";
}

// Roots of a2 X^2 + a1 X + a0 in Q(i); FieldError when they lie outside.
std::vector<Scalar> solve_quadratic(const Scalar& a2, const Scalar& a1, const Scalar& a0) {
  auto r = sqrt_exact(a1 * a1 - Scalar(4) * a2 * a0);
  if (!r) throw FieldError("parameters outside scalar field: no root of " + quadratic_text(a2, a1, a0));
  const Scalar den = (Scalar(2) * a2).inverse();
  Scalar x1 = (-a1 + *r) * den, x2 = (-a1 - *r) * den;
  if (x1 == x2) return {x1};
  return {x1, x2};
}

bool is_eigenvalue(const Polynomial& cp, const Scalar& mu) { return cp(mu).is_zero(); }

// The scalar x = s q^{2i} with theta_{-1}(q;x) not an eigenvalue and theta_0(q;x) an eigenvalue.
Scalar ladder_bottom(const Polynomial& cp, const Scalar& s, const Scalar& q, int n, int dim) {
  auto args = SymbolArgs<Scalar>::specialized(n, q, s, s, s);
  for (int i = -(dim + 1); i <= dim + 1; ++i)
    if (!is_eigenvalue(cp, theta(i - 1, args)) && is_eigenvalue(cp, theta(i, args))) return s * pow(q, 2 * i);
  throw std::runtime_error("recognize: no ladder bottom found within the scan range");
}

}  // namespace

OracleResult irreducible_oracle_witness(const DeltaRep& rep) {
  rep.validate();
  const std::size_t d = rep.dim();
  if (d <= 1) return {true, std::nullopt};
  std::optional<std::vector<ExactMatrix>> seeds;
  std::string failure;
  for (const auto* op : {&rep.A, &rep.B, &rep.C}) {
    try {
      seeds = simple_eigenvectors(*op);
    } catch (const FieldError& e) {
      failure = e.what();
    }
    if (seeds) break;
  }
  if (!seeds) {
    if (!failure.empty()) throw FieldError("irreducible_oracle: eigenvalue outside the scalar field; " + failure);
    throw PreconditionError("irreducible_oracle: no generator has one-dimensional eigenspaces");
  }
  for (const auto& v : *seeds) {
    SpanBuilder span = closure(rep, v);
    if (span.dim() < d) return {false, span.basis()};
  }
  return {true, std::nullopt};
}

std::optional<ExactMatrix> isomorphic(const DeltaRep& rep1, const DeltaRep& rep2) {
  if (rep1.dim() != rep2.dim()) throw PreconditionError("isomorphic: dimensions differ");
  const std::pair<ExactMatrix, ExactMatrix> pairs[] = {{rep1.A, rep2.A}, {rep1.B, rep2.B}, {rep1.C, rep2.C}};
  return intertwiner(pairs);
}

std::optional<ExactMatrix> isomorphic(const ModuleParams& p1, const ModuleParams& p2) {
  DeltaRep r1 = vn_module(p1), r2 = vn_module(p2);
  if (r1.dim() != r2.dim()) return std::nullopt;
  if (r1.A.trace() != r2.A.trace() || r1.B.trace() != r2.B.trace() || r1.C.trace() != r2.C.trace())
    return std::nullopt;
  return isomorphic(r1, r2);
}

std::array<std::vector<Scalar>, 3> trace_quadratic_roots(const DeltaRep& rep) {
  rep.validate();
  const int n = static_cast<int>(rep.dim()) - 1;
  const Scalar m = qint(n + 1, rep.q);
  return {solve_quadratic(m, -rep.A.trace(), m), solve_quadratic(m, -rep.B.trace(), m),
          solve_quadratic(m, -rep.C.trace(), m)};
}

RecognitionResult recognize(const DeltaRep& rep) {
  rep.validate();
  const std::size_t dim = rep.dim();
  if (dim == 0) throw PreconditionError("recognize: empty representation");
  const int n = static_cast<int>(dim) - 1;
  const Scalar& q = rep.q;
  if (is_root_of_unity(q)) throw PreconditionError("recognize: q is a root of unity");
  auto gamma = gamma_image(rep).scalar_value();
  if (!gamma) throw PreconditionError("recognize: gamma does not act as a scalar");
  if (!irreducible_oracle(rep)) throw PreconditionError("recognize: representation is reducible");

  auto roots = trace_quadratic_roots(rep);
  const Polynomial cp_a = char_poly(rep.A), cp_b = char_poly(rep.B);
  const Scalar b = ladder_bottom(cp_b, roots[1].front(), q, n, static_cast<int>(dim));
  const Scalar a = ladder_bottom(cp_a, roots[0].front(), q, n, static_cast<int>(dim));
  const Scalar qn1 = pow(q, n + 1) + pow(q, -n - 1);
  const Scalar s = (*gamma - (a + a.inverse()) * (b + b.inverse())) / qn1;
  const Scalar c = solve_quadratic(Scalar(1), -s, Scalar(1)).front();

  ModuleParams params{n, q, a, b, c, std::nullopt};
  auto args = SymbolArgs<Scalar>::specialized(n, q, a, b, c);
  auto v0s = kernel(rep.B - ExactMatrix::scalar(dim, theta(0, args.lambda, q, b)));
  if (v0s.size() != 1) throw std::runtime_error("recognize: B-eigenspace for theta_0(q;b) is not one-dimensional");
  std::vector<ExactMatrix> v{v0s.front()};
  for (int i = 1; i <= n; ++i) v.push_back((rep.A - ExactMatrix::scalar(dim, theta(i - 1, args))) * v.back());

  const ExactMatrix lhs32 = (rep.B - ExactMatrix::scalar(dim, theta(1, args.lambda, q, b))) *
                            (rep.A - ExactMatrix::scalar(dim, theta(0, args))) * v[0];
  if (!(lhs32 == v[0] * phi(1, args))) throw std::runtime_error("recognize: ladder relation for v_0 fails");
  if (!(rep.A * v[n] == v[n] * theta(n, args))) throw std::runtime_error("recognize: A v_n is not theta_n v_n");

  ExactMatrix m = ExactMatrix::from_columns(v);
  auto m_inv = inverse(m);
  if (!m_inv) throw std::runtime_error("recognize: constructed vectors are dependent");
  DeltaRep target = vn_module(params);
  if (!(*m_inv * rep.A * m == target.A && *m_inv * rep.B * m == target.B && *m_inv * rep.C * m == target.C))
    throw std::runtime_error("recognize: conjugated matrices differ from V_n(a,b,c)");
  return {params, orbit_key(a, b, c), m};
}

DeltaRep conjugate(const DeltaRep& rep, const ExactMatrix& p) {
  auto p_inv = inverse(p);
  if (!p_inv) throw PreconditionError("conjugate: matrix is singular");
  DeltaRep out = rep;
  out.A = *p_inv * rep.A * p;
  out.B = *p_inv * rep.B * p;
  out.C = *p_inv * rep.C * p;
  return out;
}

Conjugated random_conjugation(const DeltaRep& rep, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::size_t d = rep.dim();
  for (;;) {
    ExactMatrix p(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) = Scalar(entry(rng));
    if (!determinant(p).is_zero()) return {conjugate(rep, p), p};
  }
}

}  // namespace aw
