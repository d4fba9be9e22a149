#include "aw/classify.hpp"
#include "aw/linalg.hpp"
#include "aw/qgroups.hpp"
#include "doctest.h"

using aw::ExactMatrix;
using aw::ModuleParams;
using aw::Scalar;

namespace {

Scalar R(long p, long q = 1) { return Scalar::ratio(p, q); }
ModuleParams P(int n, Scalar q, Scalar a, Scalar b, Scalar c) { return {n, q, a, b, c, std::nullopt}; }

bool commutes(const ExactMatrix& a, const ExactMatrix& b) { return aw::commutator(a, b).is_zero(); }

}  // namespace

TEST_CASE("standard modules") {
  auto v = aw::standard_module(1, 1, R(2));
  CHECK(v.k == ExactMatrix(2, 2, {R(2), R(0), R(0), R(1, 2)}));
  CHECK(aw::casimir(v) == ExactMatrix::scalar(2, R(17, 9)));
  CHECK(aw::casimir_scalar(1, 1, R(2)) == R(17, 9));
  for (Scalar q : {R(2), R(1, 3), Scalar::parse("1+i")})
    for (int n = 0; n <= 5; ++n)
      for (int eps : {1, -1}) {
        auto r = aw::standard_module(n, eps, q);
        CHECK(aw::uq_relations_hold(r));
        ExactMatrix cas = aw::casimir(r);
        CHECK(cas == ExactMatrix::scalar(n + 1, aw::casimir_scalar(n, eps, q)));
        auto t = aw::equitable(r);
        // displayed bidiagonal forms
        for (int i = 0; i <= n; ++i) {
          CHECK(t.x(i, i) == Scalar(eps) * aw::pow(q, 2 * i - n));
          CHECK(t.y(i, i) == Scalar(eps) * aw::pow(q, n - 2 * i));
          CHECK(t.z(i, i) == Scalar(eps) * aw::pow(q, 2 * i - n));
          if (i >= 1) {
            CHECK(t.x(i - 1, i) == aw::pow(q, 2 * i - n - 1) * (aw::pow(q, i - n - 1) - aw::pow(q, n - i + 1)));
            CHECK(t.z(i, i - 1) == aw::pow(q, i) - aw::pow(q, -i));
          }
        }
        auto back = aw::from_equitable(t, q);
        CHECK(back.e == r.e);
        CHECK(back.f == r.f);
      }
  CHECK_THROWS_AS(aw::standard_module(1, 2, R(2)), aw::PreconditionError);
  CHECK_THROWS_AS(aw::standard_module(1, 1, Scalar::i()), aw::PreconditionError);
}

TEST_CASE("equitable rotator") {
  CHECK(aw::equitable_rotator(aw::standard_module(0, 1, R(2))) == ExactMatrix::identity(1));
  for (int n = 1; n <= 3; ++n)
    for (int eps : {1, -1}) {
      auto r = aw::standard_module(n, eps, R(2));
      auto t = aw::equitable(r);
      ExactMatrix l = aw::equitable_rotator(r);
      ExactMatrix li = *aw::inverse(l);
      CHECK(li * t.x * l == t.y);
      CHECK(li * t.y * l == t.z);
      CHECK(li * t.z * l == t.x);
      ExactMatrix l3 = l * l * l;
      CHECK(commutes(l3, t.x));
      CHECK(commutes(l3, t.y));
      CHECK(commutes(l3, t.z));
    }
}

TEST_CASE("coproduct and Casimir centrality") {
  auto v1 = aw::standard_module(1, 1, R(2));
  auto t = aw::coproduct(v1, v1);
  CHECK(t.dim() == 4);
  CHECK(aw::uq_relations_hold(t));
  CHECK(t.k == ExactMatrix::diagonal(std::vector<Scalar>{R(4), R(1), R(1), R(1, 4)}));
  auto t3 = aw::coproduct(aw::coproduct(aw::standard_module(2, 1, R(3)), aw::standard_module(1, -1, R(3))),
                          aw::standard_module(1, 1, R(3)));
  CHECK(aw::uq_relations_hold(t3));
  for (const auto* r : {&t, &t3}) {
    ExactMatrix cas = aw::casimir(*r);
    CHECK(commutes(cas, r->e));
    CHECK(commutes(cas, r->f));
    CHECK(commutes(cas, r->k));
  }
  // coassociativity
  auto a = aw::standard_module(1, 1, R(2)), b = aw::standard_module(2, 1, R(2)), c = aw::standard_module(1, 1, R(2));
  auto l = aw::coproduct(aw::coproduct(a, b), c), r = aw::coproduct(a, aw::coproduct(b, c));
  CHECK(l.e == r.e);
  CHECK(l.f == r.f);
  CHECK_THROWS_AS(aw::coproduct(a, aw::standard_module(1, 1, R(3))), aw::PreconditionError);
}

TEST_CASE("Clebsch-Gordan") {
  using M = std::map<std::pair<int, int>, int>;
  auto cg = [](int m, int n) {
    return aw::cg_decompose(aw::coproduct(aw::standard_module(m, 1, R(2)), aw::standard_module(n, 1, R(2))));
  };
  CHECK(cg(1, 1).multiplicities() == M{{{2, 1}, 1}, {{0, 1}, 1}});
  CHECK(cg(1, 0).multiplicities() == M{{{1, 1}, 1}});
  CHECK(cg(2, 1).multiplicities() == M{{{3, 1}, 1}, {{1, 1}, 1}});
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto d = cg(m, n);
      M expect;
      int total = 0;
      for (int i = 0; i <= std::min(m, n); ++i) ++expect[{m + n - 2 * i, 1}];
      for (const auto& b : d.blocks) total += b.n + 1;
      CHECK(d.multiplicities() == expect);
      CHECK(total == (m + 1) * (n + 1));
      // each block carries the canonical action
      auto rep = aw::coproduct(aw::standard_module(m, 1, R(2)), aw::standard_module(n, 1, R(2)));
      for (const auto& b : d.blocks) {
        auto s = aw::standard_module(b.n, b.eps, R(2));
        CHECK(rep.e * b.basis == b.basis * s.e);
        CHECK(rep.f * b.basis == b.basis * s.f);
        CHECK(rep.k * b.basis == b.basis * s.k);
      }
    }
  auto mixed = aw::cg_decompose(aw::coproduct(aw::standard_module(1, -1, R(2)), aw::standard_module(1, 1, R(2))));
  CHECK(mixed.multiplicities() == M{{{2, -1}, 1}, {{0, -1}, 1}});
}

TEST_CASE("U_q(sl2) realizations of V_n") {
  auto r = aw::realize_uq(P(1, R(2), R(2), R(1), R(1)), 1);
  REQUIRE(r);
  CHECK(r->ok());
  CHECK(aw::uq_relations_hold(r->module));
  CHECK_FALSE(aw::realize_uq(P(1, R(2), R(2), R(1), R(1)), -1));
  for (int n : {1, 2, 3}) {
    const ModuleParams p = P(n, R(2), Scalar::i(), Scalar::i(), Scalar::i());
    for (int eps : {1, -1}) {
      auto x = aw::realize_uq(p, eps);
      REQUIRE(x);
      CHECK(x->ok());
      CHECK(x->eps == eps);
      // type: y has eigenvalues eps q^{n-2i}
      auto s = aw::standard_module(n, eps, R(2));
      CHECK(aw::char_poly(x->xyz.y) == aw::char_poly(s.k));
    }
  }
  for (ModuleParams p : {P(2, R(3), R(2), R(5), R(7)), P(3, R(1, 2), R(3), R(-2), Scalar::parse("1+i")),
                         P(1, R(2), R(3), R(2), R(5))}) {
    auto x = aw::realize_uq(p, 1);
    REQUIRE(x);
    CHECK(x->ok());
    CHECK_FALSE(aw::realize_uq(p, -1));
    // trace obstruction for type -1
    auto neg = aw::equitable(aw::standard_module(p.n, -1, p.q));
    auto img = aw::equitable_images(neg, p.q, p.a, p.b, p.c);
    CHECK(img[0].trace() == -aw::qint(p.n + 1, p.q) * (p.a + p.a.inverse()));
  }
  CHECK_THROWS_AS(aw::realize_uq(P(1, R(2), R(1), R(1), R(1)), 1), aw::PreconditionError);
}

TEST_CASE("Racah data") {
  auto r = aw::racah(1, 1, 1, R(2));
  CHECK(r.relations.central);
  CHECK(r.cg_ok);
  CHECK(r.u_diagonalizes_a);
  CHECK(r.v_diagonalizes_b);
  CHECK(r.tridiagonal_ok);
  CHECK(r.ok());
  CHECK(r.components == std::map<int, int>{{3, 1}, {1, 2}});
  CHECK(aw::gamma_image(r.rep) == r.gamma);
  auto r0 = aw::racah(1, 1, 0, R(2));
  CHECK(r0.ok());
  bool diag = true;
  for (std::size_t i = 0; i < r0.transition.rows(); ++i)
    for (std::size_t j = 0; j < r0.transition.cols(); ++j)
      if (i != j && !r0.transition(i, j).is_zero()) diag = false;
  CHECK(diag);
  for (auto [m, n, p] : {std::array<int, 3>{1, 1, 2}, {2, 1, 1}, {1, 2, 1}}) {
    auto x = aw::racah(m, n, p, R(2));
    CHECK(x.ok());
    CHECK(x.irreducible_tridiagonal);
  }
}

TEST_CASE("so3 specialization") {
  for (Scalar q : {R(2), R(3)})
    for (int n = 0; n <= 3; ++n) {
      for (auto e : {std::array<int, 3>{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}})
        CHECK(aw::so3_check(n, q, {true, e}).ok());
      CHECK(aw::so3_check(n, q, {false, {}}).ok());
    }
  auto c = aw::so3_check(1, R(2), {true, {1, 1, 1}});
  CHECK(c.params.a == R(-4));
  CHECK(c.central_scalars == std::array<Scalar, 3>{R(0), R(0), R(0)});
  CHECK_THROWS_AS(aw::so3_check(1, R(2), {true, {1, 1, -1}}), aw::PreconditionError);
}
