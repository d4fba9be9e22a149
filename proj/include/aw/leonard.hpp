#pragma once

#include <array>
#include <optional>
#include <string>

#include "aw/deltamod.hpp"

namespace aw {

struct LeonardReport {
  std::array<bool, 3> diag_flags{};  // A, B, C: x^2 not among q^{2n-2}, q^{2n-4}, ..., q^{2-2n}
  std::array<bool, 3> pair_flags{};  // (A,B), (A,C), (B,C)
  bool triple_flag = false;

  // Present when verified directly from eigenbases ordered by theta_i.
  std::optional<std::array<bool, 3>> direct_diag;
  std::optional<std::array<bool, 3>> direct_pairs;
  std::optional<bool> direct_triple;
  std::array<std::optional<ExactMatrix>, 3> eigenbases;  // columns in theta order, when diagonalizable

  bool consistent() const;  // the criteria agree with each other and with any direct verification
};

LeonardReport leonard_check(const ModuleParams& params, bool verify_directly);

/// Exact criterion: x^2 not in {q^{2n-2-2k} : 0 <= k < n}.
bool diagonalizable_criterion(const Scalar& x, const Scalar& q, int n);

struct UnitaryReport {
  double residual_a = 0;  // |(Au, v) - (u, Bv)|
  double residual_b = 0;  // |(Bu, v) - (u, Av)|
  double residual_c = 0;  // |(Cu, v) - (u, C'v)|, C' = C + (AB - BA)/(q - q^-1)
  bool b_inverted = false;  // a* = b was reduced to a* = b^-1 by the isomorphism b -> b^-1
  double tolerance = 1e-9;
  bool pass() const { return residual_a < tolerance && residual_b < tolerance && residual_c < tolerance; }
};

UnitaryReport unitary_check_float(int n, Complex q, Complex a, Complex b, Complex c, double tolerance = 1e-9);

}  // namespace aw
