#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aw/matrix.hpp"
#include "aw/symbols.hpp"

namespace aw {

/// (n, q, a, b, c) plus lambda, which defaults to q^n.
struct ModuleParams {
  int n = 0;
  Scalar q{2};
  Scalar a{1};
  Scalar b{1};
  Scalar c{1};
  std::optional<Scalar> lambda;

  Scalar lam() const { return lambda ? *lambda : pow(q, n); }
  /// Nonzero parameters, n >= 0, q not a root of unity.
  void validate() const;
  SymbolArgs<Scalar> args() const;
  bool operator==(const ModuleParams&) const = default;
};

/// Matrices of A, B, C. Relations are asserted on the top-left window x window block.
struct DeltaRep {
  ExactMatrix A, B, C;
  Scalar q{2};
  std::optional<std::array<Scalar, 3>> central;  // alpha, beta, gamma
  std::size_t window = 0;

  std::size_t dim() const { return A.rows(); }
  void validate() const;
};

/// gamma' = (q + q^-1)(C + (qAB - q^-1 BA)/(q^2 - q^-2)).
ExactMatrix gamma_image(const DeltaRep& rep);
ExactMatrix alpha_image(const DeltaRep& rep, const ExactMatrix& gamma);
ExactMatrix beta_image(const DeltaRep& rep, const ExactMatrix& gamma);
/// C + (AB - BA)/(q - q^-1).
ExactMatrix c_vee(const DeltaRep& rep);
/// B^3A - [3]B^2AB + [3]BAB^2 - AB^3 + (q^2 - q^-2)^2 (BA - AB).
ExactMatrix cubic_residual(const DeltaRep& rep);
/// C recovered from A, B and the matrix of gamma.
ExactMatrix c_from_gamma(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& gamma, const Scalar& q);

struct RelationReport {
  std::size_t window = 0;
  bool central = false;                              // all nine commutators vanish
  std::array<std::optional<Scalar>, 3> scalars;      // alpha', beta', gamma' when scalar
  std::optional<bool> matches_expected;              // compared with rep.central
  bool cubic_zero = false;
  bool scalar() const { return scalars[0] && scalars[1] && scalars[2]; }
  /// Centrality, the cubic relation, and agreement with the expected scalars when given.
  bool ok() const { return central && cubic_zero && matches_expected.value_or(true); }
};

RelationReport check_relations(const DeltaRep& rep);

/// depth x depth truncation of the Verma module, window depth - 3.
DeltaRep verma_truncation(const ModuleParams& params, std::size_t depth);

/// The (n+1)-dimensional quotient V_n(a, b, c); requires lambda = q^n.
DeltaRep vn_module(const ModuleParams& params);

// The group {+-1}^2 x| S3 acting on (q^eps; a, b, c) from the right.

struct GroupElem24 {
  int sign0 = 1;
  int sign1 = 1;
  std::array<int, 3> perm{0, 1, 2};  // (x^g)[i] = x[perm[i]] up to inversion

  static GroupElem24 identity() { return {}; }
  static GroupElem24 neg0() { return {-1, 1, {0, 1, 2}}; }
  static GroupElem24 neg1() { return {1, -1, {0, 1, 2}}; }
  static GroupElem24 sigma() { return {1, 1, {2, 1, 0}}; }
  static GroupElem24 tau() { return {1, 1, {1, 0, 2}}; }

  std::array<int, 3> sign_triple() const { return {sign0, sign1, sign0 * sign1}; }
  bool odd() const;
  bool in_klein() const;
  std::string str() const;

  friend GroupElem24 operator*(const GroupElem24& g, const GroupElem24& h);
  friend bool operator==(const GroupElem24&, const GroupElem24&) = default;

  /// All 24 elements in canonical-word order.
  static const std::vector<GroupElem24>& all();
};

enum class Generator { E0, E1, Sigma, Tau };
GroupElem24 as_element(Generator g);
std::string generator_name(Generator g);

/// Shortest word, first in breadth-first order over (E0, E1, Sigma, Tau).
const std::vector<Generator>& canonical_word(const GroupElem24& g);

struct Tuple4 {
  int eps = 1;  // the tuple's first entry is q^eps
  Scalar a, b, c;
  bool operator==(const Tuple4&) const = default;
};

Tuple4 act(const Tuple4& t, const GroupElem24& g);

struct OrbitKey {
  std::array<Scalar, 3> key;
  bool operator==(const OrbitKey&) const = default;
};

OrbitKey orbit_key(const Scalar& a, const Scalar& b, const Scalar& c);

struct Basis24 {
  GroupElem24 element;
  Tuple4 params;             // (q; a, b, c)^g
  ExactMatrix transition;    // columns: new basis in the canonical basis
  ExactMatrix A, B, C;       // conjugated matrices
  bool matches = false;      // equal to the L/U/T forms assigned by g
};

/// Transition composed along a generator word starting from the canonical basis.
ExactMatrix transition_for_word(const ModuleParams& params, const std::vector<Generator>& word);

/// Expected matrices of (A, B, C) in the basis labelled by g.
std::array<ExactMatrix, 3> expected_matrices24(const ModuleParams& params, const GroupElem24& g);

Basis24 change_basis24(const ModuleParams& params, const GroupElem24& g);

}  // namespace aw
