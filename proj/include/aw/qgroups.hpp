#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aw/deltamod.hpp"

namespace aw {

/// Matrices of e, f, k, k^-1 for a U_q(sl2)-module.
struct Uqsl2Rep {
  ExactMatrix e, f, k, k_inv;
  Scalar q{2};
  std::optional<int> n;         // set for standard modules
  std::optional<int> type_eps;  // set for standard modules

  std::size_t dim() const { return k.rows(); }
};

/// kk^-1 = 1, ke = q^2 ek, kf = q^-2 fk, ef - fe = (k - k^-1)/(q - q^-1).
bool uq_relations_hold(const Uqsl2Rep& rep);

struct EquitableTriple {
  ExactMatrix x, y, y_inv, z;
};

/// V_{n,eps} in its canonical basis.
Uqsl2Rep standard_module(int n, int eps, const Scalar& q);

/// x = k^-1 - q^-1 (q - q^-1) e k^-1, y = k, z = k^-1 + (q - q^-1) f.
EquitableTriple equitable(const Uqsl2Rep& rep);

/// The inverse of `equitable`: e = q (1 - x k)/(q - q^-1), f = (z - k^-1)/(q - q^-1).
Uqsl2Rep from_equitable(const EquitableTriple& t, const Scalar& q);

/// ef + (q^-1 k + q k^-1)/(q - q^-1)^2.
ExactMatrix casimir(const Uqsl2Rep& rep);

/// eps (q^{n+1} + q^{-n-1})/(q - q^-1)^2, the Casimir scalar on V_{n,eps}.
Scalar casimir_scalar(int n, int eps, const Scalar& q);

/// Invertible L with L^-1 x L = y, L^-1 y L = z, L^-1 z L = x.
ExactMatrix equitable_rotator(const Uqsl2Rep& rep);

/// A U_q(sl2)-module on V_n(a, b, c) satisfying the three equitable expressions for A, B, C.
struct Realization {
  int eps = 1;
  Uqsl2Rep module;        // in the canonical basis of V_n(a, b, c)
  EquitableTriple xyz;
  ExactMatrix basis;      // columns: the basis on which x, y, z act as on V_{n,eps}
  std::array<bool, 3> residual_zero{};  // A, B, C equations
  bool ok() const { return residual_zero[0] && residual_zero[1] && residual_zero[2]; }
};

/// A = ax + a^-1 y + bc^-1 (xy - yx)/(q - q^-1) and its two cyclic companions, as matrices.
std::array<ExactMatrix, 3> equitable_images(const EquitableTriple& t, const Scalar& q, const Scalar& a, const Scalar& b,
                                            const Scalar& c);

/// The type-eps realization of V_n(a, b, c), or nullopt when none exists.
std::optional<Realization> realize_uq(const ModuleParams& params, int eps);

/// Delta(e) = e x 1 + k x e, Delta(f) = f x k^-1 + 1 x f, Delta(k) = k x k.
Uqsl2Rep coproduct(const Uqsl2Rep& r1, const Uqsl2Rep& r2);

struct CGBlock {
  int n = 0;
  int eps = 1;
  ExactMatrix basis;  // dim x (n+1), canonical basis of this copy of V_{n,eps}
};

struct CGDecomposition {
  std::vector<CGBlock> blocks;  // highest n first, type 1 before type -1
  ExactMatrix basis;            // all block bases side by side
  /// (n, eps) -> multiplicity.
  std::map<std::pair<int, int>, int> multiplicities() const;
};

/// Splits a completely reducible module into copies of V_{n,eps} via highest-weight vectors.
CGDecomposition cg_decompose(const Uqsl2Rep& rep);

struct RacahData {
  std::array<int, 3> dims{};
  DeltaRep rep;                         // A_img, B_img and C recovered from gamma_img
  ExactMatrix gamma;                    // gamma_img
  RelationReport relations;
  ExactMatrix u_basis, v_basis;         // columns, ordered by (total n desc, position asc, intermediate n desc)
  ExactMatrix transition;               // u_basis^-1 v_basis
  std::vector<std::array<int, 3>> u_labels, v_labels;  // (total n, position, intermediate n)
  std::map<int, int> components;        // total n -> multiplicity
  bool cg_ok = false;                   // both two-fold decompositions match the Clebsch-Gordan formula
  bool u_diagonalizes_a = false;
  bool v_diagonalizes_b = false;
  ExactMatrix a_in_v, b_in_u;
  bool tridiagonal_ok = false;          // blockwise tridiagonal shape
  bool irreducible_tridiagonal = false; // with nonzero sub- and superdiagonals
  bool ok() const {
    return relations.central && cg_ok && u_diagonalizes_a && v_diagonalizes_b && tridiagonal_ok;
  }
};

RacahData racah(int m, int n, int p, const Scalar& q);

struct So3Family {
  bool classical = true;
  std::array<int, 3> eps{1, 1, 1};
};

struct So3Report {
  ModuleParams params;
  std::array<ExactMatrix, 3> K;
  std::array<bool, 3> relation_zero{};       // q K1 K2 - q^-1 K2 K1 = K0 and cyclic
  std::array<Scalar, 3> central_scalars;     // alpha, beta, gamma on the module
  bool central_zero = false;
  bool ok() const { return relation_zero[0] && relation_zero[1] && relation_zero[2] && central_zero; }
};

So3Report so3_check(int n, const Scalar& q, const So3Family& family);

}  // namespace aw
