#pragma once

#include <vector>

#include "aw/polynomial.hpp"
#include "aw/symbols.hpp"

namespace aw {

/// Generic parameters (lambda, q; a, b, c) with X = Y + Y^-1.
struct AWContext {
  Scalar lambda, q, a, b, c;

  /// Nonzero entries, q not a root of unity, and
  /// q^{-2i} not in {lambda^-2, lambda^-2 q^-2 b^2, lambda^-1 q a b c, lambda^-1 q a b c^-1} for 0 <= i <= max_i.
  void validate(int max_i) const;
  SymbolArgs<Scalar> args() const { return {lambda, q, a, b, c, std::nullopt}; }
};

struct RecurrenceCoeffs {
  Scalar a, b, c;
};

/// X p_i = a_i p_{i+1} + c_i p_i + b_i p_{i-1}.
RecurrenceCoeffs recurrence_coeffs(int i, const AWContext& ctx);

/// sum_j prod_{h=1..j} (theta_i(b) - theta_{h-1}(b)) (X - theta_{h-1}(a)) / phi_h.
Polynomial aw_poly(int i, const AWContext& ctx);

/// prod_{h=1..i} (X - theta_{h-1}(a)), the image of the Verma basis vector m_i.
Polynomial verma_image(int i, const AWContext& ctx);

/// A(Y) = lambda (1 - a Y/lambda)(1 - Y/(lambda a))(1 - q b c Y)(1 - q b Y/c) / (b (1 - Y^2)(1 - q^2 Y^2)).
Scalar aw_weight(const Scalar& y, const AWContext& ctx);

/// (D p)(Y) for p a polynomial in X = Y + Y^-1.
Scalar aw_operator_apply(const Polynomial& p, const Scalar& y, const AWContext& ctx);

/// Sample points 5, 7, 11, ... avoiding Y^2 in {1, q^2, q^-2}.
std::vector<Scalar> aw_sample_points(std::size_t count, const AWContext& ctx);

/// (D p)(Y) == eigenvalue * p(Y + Y^-1) at every sample point.
bool aw_eigen_identity(const Polynomial& p, const Scalar& eigenvalue, const AWContext& ctx, std::size_t samples);

/// aw_eigen_identity for p_i and theta_i(lambda, q; b); needs samples > 4(i + 2).
bool aw_operator_check(int i, const AWContext& ctx, std::size_t samples);

}  // namespace aw
