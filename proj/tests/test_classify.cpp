#include "aw/classify.hpp"
#include "doctest.h"

using aw::DeltaRep;
using aw::ExactMatrix;
using aw::ModuleParams;
using aw::Scalar;

namespace {

Scalar R(long p, long q = 1) { return Scalar::ratio(p, q); }
ModuleParams P(int n, Scalar q, Scalar a, Scalar b, Scalar c) { return {n, q, a, b, c, std::nullopt}; }

// Invariant subspaces by brute force over all coordinate-free lines is infeasible; instead
// the oracle's witness is checked to be a genuine proper invariant subspace.
bool invariant(const DeltaRep& r, const std::vector<ExactMatrix>& basis) {
  aw::SpanBuilder s(r.dim());
  for (const auto& v : basis) s.insert(v);
  for (const auto& v : basis)
    for (const auto* op : {&r.A, &r.B, &r.C})
      if (!s.contains(*op * v)) return false;
  return true;
}

}  // namespace

TEST_CASE("irreducibility examples") {
  CHECK(aw::irreducible_criterion(P(0, R(2), R(1), R(1), R(1))));
  CHECK_FALSE(aw::irreducible_criterion(P(1, R(2), R(1), R(1), R(1))));
  CHECK(aw::irreducible_criterion(P(1, R(2), R(2), R(1), R(1))));
  auto red = aw::irreducible_oracle_witness(aw::vn_module(P(1, R(2), R(1), R(1), R(1))));
  CHECK_FALSE(red.irreducible);
  REQUIRE(red.witness);
  CHECK(red.witness->size() == 1);
  CHECK(invariant(aw::vn_module(P(1, R(2), R(1), R(1), R(1))), *red.witness));
  CHECK(aw::irreducible_oracle(aw::vn_module(P(1, R(2), R(2), R(1), R(1)))));
  CHECK(aw::irreducible_oracle(aw::vn_module(P(0, R(5), R(7), R(1), R(3)))));
}

TEST_CASE("criterion agrees with oracle on a grid") {
  int cases = 0;
  for (Scalar q : {R(2), R(1, 2)})
    for (int n = 0; n <= 3; ++n)
      for (Scalar a : {R(1), q, Scalar::i()})
        for (Scalar b : {R(1), R(-1), q * q})
          for (Scalar c : {R(1), R(3), q}) {
            ModuleParams p = P(n, q, a, b, c);
            auto o = aw::irreducible_oracle_witness(aw::vn_module(p));
            CHECK(o.irreducible == aw::irreducible_criterion(p));
            if (o.witness) CHECK(invariant(aw::vn_module(p), *o.witness));
            ++cases;
          }
  CHECK(cases == 216);
}

TEST_CASE("isomorphism") {
  ModuleParams p1 = P(1, R(2), R(2), R(1), R(1)), p2 = P(1, R(2), R(1, 2), R(1), R(1)), p3 = P(1, R(2), R(3), R(1), R(1));
  auto m = aw::isomorphic(p1, p2);
  REQUIRE(m);
  DeltaRep r1 = aw::vn_module(p1), r2 = aw::vn_module(p2);
  CHECK(aw::conjugate(r1, *m).A == r2.A);
  CHECK(aw::conjugate(r1, *m).B == r2.B);
  CHECK_FALSE(aw::isomorphic(p1, p3));
  CHECK_FALSE(aw::isomorphic(r1, aw::vn_module(p3)));
  CHECK(*aw::isomorphic(r1, r1) == ExactMatrix::identity(2));
  // every {+-1}^3 image is isomorphic
  ModuleParams p = P(2, R(3), R(2), R(5), R(7));
  for (int s = 0; s < 8; ++s) {
    ModuleParams img = P(2, R(3), s & 1 ? p.a.inverse() : p.a, s & 2 ? p.b.inverse() : p.b, s & 4 ? p.c.inverse() : p.c);
    CHECK(aw::isomorphic(p, img).has_value());
  }
}

TEST_CASE("recognize round trips") {
  DeltaRep base = aw::vn_module(P(1, R(2), R(2), R(1), R(1)));
  DeltaRep conj = aw::conjugate(base, ExactMatrix(2, 2, {R(1), R(1), R(0), R(1)}));
  auto res = aw::recognize(conj);
  CHECK(res.orbit == aw::orbit_key(R(2), R(1), R(1)));
  DeltaRep back = aw::conjugate(conj, res.intertwiner);
  DeltaRep target = aw::vn_module(res.params);
  CHECK(back.A == target.A);
  CHECK(back.B == target.B);
  CHECK(back.C == target.C);

  auto self = aw::recognize(base);
  CHECK(aw::conjugate(base, self.intertwiner).B == aw::vn_module(self.params).B);
  CHECK(aw::isomorphic(self.params, P(1, R(2), R(2), R(1), R(1))).has_value());

  DeltaRep b2 = aw::vn_module(P(2, R(2), R(3), R(2), R(5)));
  auto rc = aw::random_conjugation(b2, 42);
  CHECK(aw::recognize(rc.rep).orbit == aw::orbit_key(R(3), R(2), R(5)));
  auto roots = aw::trace_quadratic_roots(rc.rep);
  CHECK(roots[0] == std::vector<Scalar>{R(3), R(1, 3)});
  CHECK(roots[2] == std::vector<Scalar>{R(5), R(1, 5)});

  CHECK_THROWS_AS(aw::recognize(aw::vn_module(P(1, R(2), R(1), R(1), R(1)))), aw::PreconditionError);
}

TEST_CASE("recognize reports parameters outside the field") {
  // b = 2 + sqrt(3) is not in Q(i): a representation with b + 1/b = 4.
  DeltaRep r = aw::vn_module(P(0, R(2), R(3), R(1), R(1)));
  r.B = ExactMatrix(1, 1, {R(4)});
  CHECK_THROWS_AS(aw::recognize(r), aw::FieldError);
}

TEST_CASE("phi ladder recurrence") {
  for (int n = 1; n <= 4; ++n) {
    Scalar q = R(3, 2), a = R(2), b = R(-5, 3), c = Scalar::parse("2+i");
    auto s = aw::SymbolArgs<Scalar>::specialized(n, q, a, b, c);
    auto ph = [&](int i) { return (i <= 0 || i > n) ? Scalar(0) : aw::phi(i, s); };
    auto ta = [&](int i) { return aw::theta(i, s.lambda, q, a); };
    auto tb = [&](int i) { return aw::theta(i, s.lambda, q, b); };
    const Scalar q2 = q * q + (q * q).inverse(), d = q - q.inverse();
    for (int i = 1; i <= n; ++i) {
      Scalar rhs = q2 * (ta(i) * tb(i) + ta(i - 1) * tb(i - 1)) - (ta(i) + ta(i - 1)) * (tb(i) + tb(i - 1)) -
                   d * d * aw::omega(s);
      CHECK(ph(i + 1) - q2 * ph(i) + ph(i - 1) == rhs);
    }
  }
}
