#include <complex>

#include "aw/classify.hpp"
#include "aw/leonard.hpp"
#include "doctest.h"

using aw::Complex;
using aw::ModuleParams;
using aw::Scalar;

namespace {

Scalar R(long p, long q = 1) { return Scalar::ratio(p, q); }
ModuleParams P(int n, Scalar q, Scalar a, Scalar b, Scalar c) { return {n, q, a, b, c, std::nullopt}; }
Complex E(double t) { return std::polar(1.0, t); }

}  // namespace

TEST_CASE("Leonard criteria examples") {
  auto r = aw::leonard_check(P(1, R(2), R(2), R(1), R(1)), true);
  CHECK(r.diag_flags == std::array<bool, 3>{true, false, false});
  CHECK(r.pair_flags == std::array<bool, 3>{false, false, false});
  CHECK_FALSE(r.triple_flag);
  CHECK(r.consistent());
  auto t = aw::leonard_check(P(1, R(2), R(2), R(3), R(5)), true);
  CHECK(t.triple_flag);
  CHECK(*t.direct_triple);
  CHECK(t.consistent());
  auto z = aw::leonard_check(P(0, R(2), R(1), R(1), R(1)), true);
  CHECK(z.triple_flag);
  CHECK(z.consistent());
  CHECK_THROWS_AS(aw::leonard_check(P(1, R(2), R(1), R(1), R(1)), false), aw::PreconditionError);
}

TEST_CASE("Leonard criteria agree with direct verification on a grid") {
  int checked = 0;
  for (Scalar q : {R(2), R(3), R(1, 2)})
    for (int n = 0; n <= 3; ++n)
      for (Scalar a : {R(1), R(-1), q, q * q, Scalar::i()})
        for (Scalar b : {R(1), q, R(3)})
          for (Scalar c : {R(-1), q * q, R(5)}) {
            ModuleParams p = P(n, q, a, b, c);
            if (!aw::irreducible_criterion(p)) continue;
            auto r = aw::leonard_check(p, true);
            CHECK(r.consistent());
            ++checked;
          }
  CHECK(checked > 300);
}

TEST_CASE("unitary form") {
  auto r = aw::unitary_check_float(2, E(1.0), E(0.3), E(0.3), E(0.7));
  CHECK(r.pass());
  CHECK(r.residual_b < 1e-9);
  CHECK(r.residual_c < 1e-9);
  CHECK(aw::unitary_check_float(0, E(0.4), E(1.1), E(-1.1), E(2.0)).pass());
  for (int n = 1; n <= 4; ++n) CHECK(aw::unitary_check_float(n, E(0.9), E(0.25), E(-0.25), E(1.17)).pass());
  CHECK_FALSE(aw::unitary_check_float(3, E(0.9), E(0.25), E(0.25), E(1.17)).b_inverted);
  CHECK(aw::unitary_check_float(3, E(0.9), E(0.25), E(-0.25), E(1.17)).b_inverted);
  CHECK_THROWS_AS(aw::unitary_check_float(2, E(1.0), E(0.3), E(0.3), 2.0 * E(0.7)), aw::PreconditionError);
  CHECK_THROWS_AS(aw::unitary_check_float(2, E(1.0), E(0.3), E(0.5), E(0.7)), aw::PreconditionError);
}
