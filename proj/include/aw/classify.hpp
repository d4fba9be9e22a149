#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "aw/deltamod.hpp"
#include "aw/linalg.hpp"

namespace aw {

/// q^{2i} != 1 for 1 <= i <= n, and none of abc, a^-1bc, ab^-1c, abc^-1 in {q^{1-n}, q^{3-n}, ..., q^{n-1}}.
bool irreducible_criterion(const ModuleParams& params);

struct OracleResult {
  bool irreducible = false;
  std::optional<std::vector<ExactMatrix>> witness;  // basis of a proper invariant subspace
};

/// Closure of every eigenvector of A (falling back to B, then C) under A, B, C.
OracleResult irreducible_oracle_witness(const DeltaRep& rep);
inline bool irreducible_oracle(const DeltaRep& rep) { return irreducible_oracle_witness(rep).irreducible; }

/// M with M^-1 rep1 M = rep2 for A, B and C, or nullopt.
std::optional<ExactMatrix> isomorphic(const DeltaRep& rep1, const DeltaRep& rep2);

/// Named modules: trace triples must agree before the linear system is solved.
std::optional<ExactMatrix> isomorphic(const ModuleParams& p1, const ModuleParams& p2);

struct RecognitionResult {
  ModuleParams params;
  OrbitKey orbit;
  ExactMatrix intertwiner;  // M^-1 rep M = vn_module(params)
};

RecognitionResult recognize(const DeltaRep& rep);

/// Roots of [n+1]_q X^2 - tr(S) X + [n+1]_q for S = A, B, C.
std::array<std::vector<Scalar>, 3> trace_quadratic_roots(const DeltaRep& rep);

struct Conjugated {
  DeltaRep rep;
  ExactMatrix by;  // rep = by^-1 * original * by
};

/// Conjugation by a seeded random invertible integer matrix.
Conjugated random_conjugation(const DeltaRep& rep, std::uint64_t seed);

DeltaRep conjugate(const DeltaRep& rep, const ExactMatrix& p);

}  // namespace aw
