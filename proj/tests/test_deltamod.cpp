#include <random>

#include "aw/classify.hpp"
#include "aw/deltamod.hpp"
#include "doctest.h"

using aw::DeltaRep;
using aw::ExactMatrix;
using aw::GroupElem24;
using aw::ModuleParams;
using aw::Scalar;

namespace {

Scalar R(long p, long q = 1) { return Scalar::ratio(p, q); }

ModuleParams P(int n, Scalar q, Scalar a, Scalar b, Scalar c) { return {n, q, a, b, c, std::nullopt}; }

}  // namespace

TEST_CASE("vn_module examples") {
  DeltaRep r = aw::vn_module(P(1, R(2), R(3), R(1), R(1)));
  CHECK(r.A.trace() == R(25, 3));
  CHECK(r.A.trace() == aw::qint(2, R(2)) * (R(3) + R(1, 3)));
  DeltaRep z = aw::vn_module(P(0, R(3), R(2), R(5), Scalar::i()));
  CHECK(z.A == ExactMatrix(1, 1, {R(5, 2)}));
  CHECK(z.B == ExactMatrix(1, 1, {R(26, 5)}));
  CHECK(z.C == ExactMatrix(1, 1, {Scalar(0)}));
  CHECK_THROWS_AS(aw::vn_module(ModuleParams{1, R(2), R(1), R(1), R(1), R(3)}), aw::PreconditionError);
  CHECK_THROWS_AS(aw::vn_module(P(1, Scalar::i(), R(1), R(1), R(1))), aw::PreconditionError);
  CHECK_THROWS_AS(aw::vn_module(P(1, R(2), R(0), R(1), R(1))), aw::PreconditionError);
}

TEST_CASE("characteristic polynomials of V_n generators") {
  for (int n = 0; n <= 3; ++n) {
    ModuleParams p = P(n, R(3, 2), R(2), R(-5, 3), Scalar::parse("1+2i"));
    DeltaRep r = aw::vn_module(p);
    auto s = aw::SymbolArgs<Scalar>::specialized(n, p.q, p.a, p.b, p.c);
    for (int k = 0; k < 3; ++k) {
      const Scalar x = k == 0 ? p.a : k == 1 ? p.b : p.c;
      std::vector<Scalar> roots;
      for (int i = 0; i <= n; ++i) roots.push_back(aw::theta(i, s.lambda, s.q, x));
      const ExactMatrix& m = k == 0 ? r.A : k == 1 ? r.B : r.C;
      CHECK(aw::char_poly(m) == aw::Polynomial::from_roots(roots));
      CHECK(m.trace() == aw::qint(n + 1, p.q) * (x + x.inverse()));
    }
  }
  DeltaRep t = aw::vn_module(P(1, R(2), R(2), R(1), R(1)));
  CHECK(aw::char_poly(t.C) == aw::Polynomial::from_roots({aw::theta(0, R(2), R(2), R(1)), aw::theta(1, R(2), R(2), R(1))}));
}

TEST_CASE("check_relations on V_n") {
  DeltaRep r = aw::vn_module(P(1, R(2), R(2), R(1), R(1)));
  auto rep = aw::check_relations(r);
  CHECK(rep.central);
  CHECK(rep.scalar());
  CHECK(rep.cubic_zero);
  CHECK(*rep.scalars[2] == aw::omega(R(2), R(2), R(2), R(1), R(1)));
  CHECK(rep.ok());
  // negative control
  DeltaRep bad = r;
  bad.B = ExactMatrix(2, 2, {R(1), R(2), R(3), R(5)});
  CHECK_FALSE(aw::check_relations(bad).central);
  CHECK_FALSE(aw::check_relations(bad).ok());
  // all grid points for small n
  for (Scalar q : {R(2), R(1, 2)})
    for (int n = 0; n <= 3; ++n)
      for (Scalar a : {R(1), R(-1), Scalar::i(), q})
        for (Scalar c : {R(3), q * q}) {
          auto rr = aw::check_relations(aw::vn_module(P(n, q, a, R(2), c)));
          CHECK(rr.ok());
          CHECK(rr.scalar());
        }
}

TEST_CASE("Verma truncations") {
  ModuleParams p{0, R(2), R(3), R(5, 2), Scalar::parse("1-i"), R(7, 3)};
  for (std::size_t depth : {4u, 7u, 10u}) {
    DeltaRep v = aw::verma_truncation(p, depth);
    CHECK(v.window == depth - 3);
    auto rep = aw::check_relations(v);
    CHECK(rep.ok());
    CHECK(rep.scalar());
    CHECK(*rep.scalars[2] == aw::omega(*p.lambda, p.q, p.a, p.b, p.c));
    // C-check: matrix of C-dual is T(1/lambda, 1/q; 1/a, 1/b, 1/c) on the window
    auto t = aw::build_rep<Scalar>(depth, {p.lambda->inverse(), p.q.inverse(), p.a.inverse(), p.b.inverse(), p.c.inverse()});
    CHECK((aw::c_vee(v) - t.T3).block(0, 0, v.window, v.window).is_zero());
    // C is recovered from gamma
    ExactMatrix g = ExactMatrix::scalar(depth, *rep.scalars[2]);
    CHECK((aw::c_from_gamma(v.A, v.B, g, p.q) - v.C).block(0, 0, v.window, v.window).is_zero());
  }
  // Truncation stability: depth d and d+5 agree on the window.
  DeltaRep v1 = aw::verma_truncation(p, 6), v2 = aw::verma_truncation(p, 11);
  auto g1 = aw::gamma_image(v1), g2 = aw::gamma_image(v2);
  CHECK(g1.block(0, 0, 3, 3) == g2.block(0, 0, 3, 3));
  CHECK(aw::cubic_residual(v1).block(0, 0, 3, 3) == aw::cubic_residual(v2).block(0, 0, 3, 3));
  // Canonical basis vectors are the coset images prod (A - theta_{h-1}) m_0.
  DeltaRep v = aw::verma_truncation(p, 8);
  ExactMatrix m0(8, 1);
  m0(0, 0) = Scalar(1);
  ExactMatrix m = m0;
  for (int i = 1; i < 8; ++i) {
    m = (v.A - ExactMatrix::scalar(8, aw::theta(i - 1, *p.lambda, p.q, p.a))) * m;
    ExactMatrix e(8, 1);
    e(i, 0) = Scalar(1);
    CHECK(m == e);
  }
  CHECK(v.B * m0 == m0 * aw::theta(0, *p.lambda, p.q, p.b));
}

TEST_CASE("group of order 24") {
  const auto& all = GroupElem24::all();
  CHECK(all.size() == 24);
  Scalar q = R(3);
  aw::Tuple4 t{1, R(2), R(5, 7), Scalar::parse("3+i")};
  for (const auto& g : all) {
    CHECK(aw::canonical_word(g).size() <= 6);
    GroupElem24 w = GroupElem24::identity();
    for (auto gen : aw::canonical_word(g)) w = w * aw::as_element(gen);
    CHECK(w == g);
    for (const auto& h : all) {
      CHECK(aw::act(aw::act(t, g), h) == aw::act(t, g * h));
      for (const auto& k : all) CHECK((g * h) * k == g * (h * k));
    }
  }
  // distinct elements act distinctly on a generic tuple
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(aw::act(t, all[i]) == aw::act(t, all[j]));
  // the S3 action on signs
  auto conj = [](const GroupElem24& g, const GroupElem24& e) { return (g * e) * g; };  // sigma and tau are involutions
  CHECK(conj(GroupElem24::sigma(), GroupElem24::neg0()) == GroupElem24::neg0());
  CHECK(conj(GroupElem24::sigma(), GroupElem24::neg1()) == GroupElem24{-1, -1, {0, 1, 2}});
  CHECK(conj(GroupElem24::tau(), GroupElem24::neg0()) == GroupElem24::neg1());
  CHECK(conj(GroupElem24::tau(), GroupElem24::neg1()) == GroupElem24::neg0());
  int klein = 0;
  for (const auto& g : all) klein += g.in_klein();
  CHECK(klein == 4);
  (void)q;
}

TEST_CASE("orbit keys") {
  CHECK(aw::orbit_key(R(2), R(3), R(5)) == aw::orbit_key(R(1, 2), R(3), R(1, 5)));
  CHECK(aw::orbit_key(R(2), R(3), R(5)).key == std::array<Scalar, 3>{R(2), R(3), R(5)});
  CHECK(aw::orbit_key(R(1), R(1), R(1)).key == std::array<Scalar, 3>{R(1), R(1), R(1)});
  auto k = aw::orbit_key(Scalar::i(), -Scalar::i(), Scalar::i());
  CHECK(k.key == std::array<Scalar, 3>{Scalar::i(), Scalar::i(), Scalar::i()});
  CHECK_FALSE(aw::orbit_key(R(2), R(3), R(5)) == aw::orbit_key(R(2), R(3), R(7)));
  CHECK_THROWS_AS(aw::orbit_key(R(0), R(1), R(1)), aw::PreconditionError);
}

TEST_CASE("24 bases") {
  ModuleParams p = P(1, R(2), R(2), R(1), R(1));
  auto id = aw::change_basis24(p, GroupElem24::identity());
  CHECK(id.transition == ExactMatrix::identity(2));
  auto e0 = aw::change_basis24(p, GroupElem24::neg0());
  CHECK(e0.matches);
  auto t = aw::build_rep<Scalar>(2, aw::SymbolArgs<Scalar>::specialized(1, R(2), R(1, 2), R(1), R(1)));
  CHECK(e0.A == t.L);
  CHECK(e0.B == t.U);
  CHECK(e0.C == t.T3);
  for (ModuleParams pp : {P(1, R(2), R(2), R(3), R(5)), P(2, R(3), R(2), R(5, 3), Scalar::i()), P(3, R(1, 2), R(3), R(-2), R(7))}) {
    REQUIRE(aw::irreducible_criterion(pp));
    for (const auto& g : GroupElem24::all()) {
      auto b = aw::change_basis24(pp, g);
      CHECK_MESSAGE(b.matches, g.str());
    }
    // (1,1,sigma tau): B and C become L(q;b), U(q;b,c,a)
    GroupElem24 st = GroupElem24::sigma() * GroupElem24::tau();
    auto b = aw::change_basis24(pp, st);
    auto f = aw::build_rep<Scalar>(pp.n + 1, aw::SymbolArgs<Scalar>::specialized(pp.n, pp.q, pp.b, pp.c, pp.a));
    CHECK(b.B == f.L);
    CHECK(b.C == f.U);
  }
  // Klein elements need no irreducibility
  ModuleParams red = P(1, R(2), R(1), R(1), R(1));
  CHECK(aw::change_basis24(red, GroupElem24::sigma()).matches);
  CHECK_THROWS_AS(aw::change_basis24(red, GroupElem24::tau()), aw::PreconditionError);
}

TEST_CASE("word independence up to a scalar") {
  ModuleParams p = P(2, R(3), R(2), R(5, 3), R(7));
  using G = aw::Generator;
  std::vector<std::pair<std::vector<G>, std::vector<G>>> words = {
      {{G::E0, G::Sigma}, {G::Sigma, G::E0}},
      {{G::Tau}, {G::Tau, G::Tau, G::Tau}},
      {{G::Sigma, G::Tau}, {G::Tau, G::Sigma, G::Tau, G::Sigma}},
      {{G::E1}, {G::E1, G::E1, G::E1}},
      {{G::E0, G::E1}, {G::E1, G::E0}},
  };
  for (const auto& [w1, w2] : words) {
    GroupElem24 g1 = GroupElem24::identity(), g2 = GroupElem24::identity();
    for (auto x : w1) g1 = g1 * aw::as_element(x);
    for (auto x : w2) g2 = g2 * aw::as_element(x);
    REQUIRE(g1 == g2);
    CHECK(aw::proportionality(aw::transition_for_word(p, w1), aw::transition_for_word(p, w2)).has_value());
  }
}
