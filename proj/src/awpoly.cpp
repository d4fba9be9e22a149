#include "aw/awpoly.hpp"

namespace aw {

namespace {

Scalar checked_inverse(const Scalar& d, const char* what) {
  if (d.is_zero()) throw PreconditionError(std::string("genericity violation: vanishing ") + what);
  return d.inverse();
}

}  // namespace

void AWContext::validate(int max_i) const {
  if (lambda.is_zero() || q.is_zero() || a.is_zero() || b.is_zero() || c.is_zero())
    throw PreconditionError("lambda, q, a, b, c must be nonzero");
  if (is_root_of_unity(q)) throw PreconditionError("q must not be a root of unity");
  const Scalar li = lambda.inverse();
  const Scalar forbidden[4] = {li * li, li * li * pow(q, -2) * b * b, li * q * a * b * c, li * q * a * b * c.inverse()};
  for (int i = 0; i <= max_i; ++i) {
    const Scalar v = pow(q, -2 * i);
    for (const auto& f : forbidden)
      if (v == f) throw PreconditionError("genericity violation at i = " + std::to_string(i));
  }
}

RecurrenceCoeffs recurrence_coeffs(int i, const AWContext& ctx) {
  if (i < 0) throw PreconditionError("recurrence index must be nonnegative");
  const Scalar& L = ctx.lambda;
  const Scalar& q = ctx.q;
  const Scalar& b = ctx.b;
  const Scalar Li = L.inverse(), bi = b.inverse();
  auto s = ctx.args();
  auto bq = [&](int k) { return Li * pow(q, k) * b - L * pow(q, -k) * bi; };
  const Scalar an = bq(i) * phi(i + 1, s);
  const Scalar ad = (pow(q, i + 1) - pow(q, -1 - i)) * bq(2 * i) * bq(2 * i + 1);
  const Scalar ai = an * checked_inverse(ad, "a_i denominator");
  Scalar bi_coeff(0);
  if (i > 0) {
    const Scalar bn = (pow(q, i) * b - pow(q, -i) * bi) * phi(i, s.with_xyz(ctx.a.inverse(), b, ctx.c));
    const Scalar bd = (Li * pow(q, i - 1) - L * pow(q, 1 - i)) * bq(2 * i - 1) * bq(2 * i);
    bi_coeff = bn * checked_inverse(bd, "b_i denominator");
  }
  return {ai, bi_coeff, theta(0, L, q, ctx.a) - ai - bi_coeff};
}

Polynomial aw_poly(int i, const AWContext& ctx) {
  if (i < 0) throw PreconditionError("polynomial index must be nonnegative");
  auto s = ctx.args();
  const Scalar ti = theta(i, ctx.lambda, ctx.q, ctx.b);
  Polynomial sum = Polynomial::constant(Scalar(1));
  Polynomial term = Polynomial::constant(Scalar(1));
  for (int h = 1; h <= i; ++h) {
    const Scalar ph = phi(h, s);
    if (ph.is_zero()) throw PreconditionError("aw_poly: phi_" + std::to_string(h) + " vanishes");
    const Scalar coef = (ti - theta(h - 1, ctx.lambda, ctx.q, ctx.b)) / ph;
    term = term * Polynomial({-theta(h - 1, ctx.lambda, ctx.q, ctx.a), Scalar(1)}) * coef;
    sum += term;
  }
  return sum;
}

Polynomial verma_image(int i, const AWContext& ctx) {
  Polynomial p = Polynomial::constant(Scalar(1));
  for (int h = 1; h <= i; ++h) p = p * Polynomial({-theta(h - 1, ctx.lambda, ctx.q, ctx.a), Scalar(1)});
  return p;
}

Scalar aw_weight(const Scalar& y, const AWContext& ctx) {
  const Scalar& L = ctx.lambda;
  const Scalar& q = ctx.q;
  const Scalar one(1);
  const Scalar num = L * (one - L.inverse() * ctx.a * y) * (one - L.inverse() * ctx.a.inverse() * y) *
                     (one - q * ctx.b * ctx.c * y) * (one - q * ctx.b * ctx.c.inverse() * y);
  const Scalar den = ctx.b * (one - y * y) * (one - q * q * y * y);
  return num * checked_inverse(den, "A(Y) denominator");
}

Scalar aw_operator_apply(const Polynomial& p, const Scalar& y, const AWContext& ctx) {
  const Scalar& q = ctx.q;
  const Scalar yi = y.inverse(), q2 = q * q, q2i = q2.inverse();
  const Scalar w = aw_weight(y, ctx), wi = aw_weight(yi, ctx);
  const Scalar mid = w + wi - ctx.lambda * ctx.b.inverse() - ctx.lambda.inverse() * ctx.b;
  return w * p(q2 * y + q2i * yi) - mid * p(y + yi) + wi * p(q2i * y + q2 * yi);
}

std::vector<Scalar> aw_sample_points(std::size_t count, const AWContext& ctx) {
  std::vector<Scalar> out;
  const Scalar q2 = ctx.q * ctx.q;
  for (long k = 5; out.size() < count; k += 2) {
    bool prime = true;
    for (long d = 3; d * d <= k; d += 2)
      if (k % d == 0) prime = false;
    if (!prime) continue;
    const Scalar y(k), y2 = y * y;
    if (y2 == Scalar(1) || y2 == q2 || y2 == q2.inverse()) continue;
    out.push_back(y);
  }
  return out;
}

bool aw_eigen_identity(const Polynomial& p, const Scalar& eigenvalue, const AWContext& ctx, std::size_t samples) {
  for (const auto& y : aw_sample_points(samples, ctx))
    if (aw_operator_apply(p, y, ctx) != eigenvalue * p(y + y.inverse())) return false;
  return true;
}

bool aw_operator_check(int i, const AWContext& ctx, std::size_t samples) {
  if (i < 0) throw PreconditionError("polynomial index must be nonnegative");
  if (samples <= static_cast<std::size_t>(4 * (i + 2)))
    throw PreconditionError("aw_operator_check: need more than " + std::to_string(4 * (i + 2)) + " samples");
  return aw_eigen_identity(aw_poly(i, ctx), theta(i, ctx.lambda, ctx.q, ctx.b), ctx, samples);
}

}  // namespace aw
