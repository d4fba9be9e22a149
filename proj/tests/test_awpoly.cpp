#include "aw/awpoly.hpp"
#include "doctest.h"

using aw::AWContext;
using aw::Polynomial;
using aw::Scalar;

namespace {

Scalar R(long p, long q = 1) { return Scalar::ratio(p, q); }
const AWContext kCtx{R(4), R(2), R(3), R(5), R(7)};
// (4, 2, 3, 5, 7) has lambda = q^2, so phi_3 vanishes and p_i exists only for i <= 2.
const AWContext kGen{R(4), R(3), R(3), R(5), R(7)};
const AWContext kCtx2{R(5, 3), R(3), Scalar::parse("2+i"), R(-2), R(3, 2)};

}  // namespace

TEST_CASE("recurrence coefficients") {
  for (const auto& ctx : {kGen, kCtx2}) {
    ctx.validate(8);
    CHECK(aw::recurrence_coeffs(0, ctx).b.is_zero());
    for (int i = 0; i <= 6; ++i) {
      auto r = aw::recurrence_coeffs(i, ctx);
      CHECK(r.a + r.b + r.c == aw::theta(0, ctx.lambda, ctx.q, ctx.a));
    }
    // a_0 from X p_0 = a_0 p_1 + c_0 p_0: a_0 = 1 / lead(p_1).
    CHECK(aw::recurrence_coeffs(0, ctx).a == aw::aw_poly(1, ctx).leading().inverse());
  }
  CHECK_THROWS_AS(aw::recurrence_coeffs(-1, kCtx), aw::PreconditionError);
}

TEST_CASE("genericity") {
  CHECK_NOTHROW(kGen.validate(10));
  CHECK_NOTHROW(kCtx.validate(1));
  CHECK_THROWS_AS(kCtx.validate(2), aw::PreconditionError);
  CHECK_THROWS_AS(aw::aw_poly(3, kCtx), aw::PreconditionError);
  AWContext bad{R(1), R(2), R(3), R(5), R(7)};  // lambda^-2 = q^0
  CHECK_THROWS_AS(bad.validate(3), aw::PreconditionError);
  AWContext bad2{R(4), R(2), R(1, 8), R(2), R(1)};  // lambda^-1 q a b c = 1/16 = q^-4
  CHECK_THROWS_AS(bad2.validate(3), aw::PreconditionError);
  CHECK_NOTHROW(bad2.validate(1));
}

TEST_CASE("Askey-Wilson polynomials") {
  CHECK(aw::aw_poly(0, kCtx) == Polynomial::constant(Scalar(1)));
  auto s = kCtx.args();
  Polynomial p1 = Polynomial::constant(Scalar(1)) +
                  Polynomial({-aw::theta(0, s.lambda, s.q, s.x), Scalar(1)}) *
                      ((aw::theta(1, s.lambda, s.q, s.y) - aw::theta(0, s.lambda, s.q, s.y)) / aw::phi(1, s));
  CHECK(aw::aw_poly(1, kCtx) == p1);
  for (int i = 0; i <= 2; ++i) CHECK(aw::aw_poly(i, kCtx).degree() == i);
  for (int i = 0; i <= 6; ++i) CHECK(aw::aw_poly(i, kGen).degree() == i);
}

TEST_CASE("three-term recurrence") {
  for (const auto& ctx : {kGen, kCtx2})
    for (int i = 0; i <= 5; ++i) {
      auto r = aw::recurrence_coeffs(i, ctx);
      Polynomial lhs = Polynomial::x() * aw::aw_poly(i, ctx);
      Polynomial rhs = r.a * aw::aw_poly(i + 1, ctx) + r.c * aw::aw_poly(i, ctx);
      if (i > 0) rhs += r.b * aw::aw_poly(i - 1, ctx);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("D eigenfunctions") {
  auto y = aw::aw_sample_points(3, kCtx);
  CHECK(y == std::vector<Scalar>{R(5), R(7), R(11)});
  CHECK(aw::aw_operator_apply(Polynomial::constant(Scalar(1)), R(5), kCtx) == aw::theta(0, R(4), R(2), R(5)));
  for (int i = 0; i <= 2; ++i) CHECK(aw::aw_operator_check(i, kCtx, 4 * (i + 2) + 1));
  for (const auto& ctx : {kGen, kCtx2})
    for (int i = 0; i <= 4; ++i) CHECK(aw::aw_operator_check(i, ctx, 4 * (i + 2) + 1));
  Polynomial bumped = aw::aw_poly(1, kCtx) + Polynomial::constant(Scalar(1));
  CHECK_FALSE(aw::aw_eigen_identity(bumped, aw::theta(1, R(4), R(2), R(5)), kCtx, 13));
  CHECK_THROWS_AS(aw::aw_operator_check(1, kCtx, 12), aw::PreconditionError);
}

TEST_CASE("Verma basis images") {
  // A is multiplication by X and B is D on the images of m_i.
  auto s = kCtx2.args();
  for (int j = 0; j <= 4; ++j) {
    Polynomial mj = aw::verma_image(j, kCtx2);
    Polynomial shifted = Polynomial::x() * mj;
    Polynomial expected = aw::verma_image(j + 1, kCtx2) + aw::theta(j, s.lambda, s.q, s.x) * mj;
    CHECK(shifted == expected);
    for (const auto& y : aw::aw_sample_points(30, kCtx2)) {
      Scalar rhs = aw::theta(j, s.lambda, s.q, s.y) * mj(y + y.inverse());
      if (j > 0) rhs += aw::phi(j, s) * aw::verma_image(j - 1, kCtx2)(y + y.inverse());
      CHECK(aw::aw_operator_apply(mj, y, kCtx2) == rhs);
    }
  }
}
