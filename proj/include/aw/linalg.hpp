#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aw/matrix.hpp"
#include "aw/polynomial.hpp"

namespace aw {

/// Raised when a computation needs a value that does not exist in Q(i).
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Null-space basis as column vectors, by exact Gauss-Jordan elimination with full pivoting.
/// Each basis vector carries a 1 in its own free coordinate. Empty when the kernel is trivial.
std::vector<ExactMatrix> kernel(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

Scalar determinant(const ExactMatrix& m);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Partial-pivoting Gauss-Jordan inverse for the floating backend.
std::optional<FloatMatrix> inverse(const FloatMatrix& m, double tolerance = 1e-14);

/// Monic characteristic polynomial det(X I - M), Faddeev-LeVerrier.
Polynomial char_poly(const ExactMatrix& m);

/// Distinct roots in Q(i). Throws FieldError if the polynomial does not split over Q(i).
std::vector<Scalar> roots_in_field(const Polynomial& p);

/// Solutions M of M * second = first * M for every pair (first, second), i.e.
/// M^{-1} first M = second. Returns an invertible solution scaled so that its
/// first nonzero entry (row-major) is 1, or nullopt.
std::optional<ExactMatrix> intertwiner(std::span<const std::pair<ExactMatrix, ExactMatrix>> pairs);

inline std::optional<ExactMatrix> intertwiner(const ExactMatrix& a1, const ExactMatrix& b1, const ExactMatrix& a2,
                                              const ExactMatrix& b2) {
  const std::pair<ExactMatrix, ExactMatrix> pairs[] = {{a1, a2}, {b1, b2}};
  return intertwiner(pairs);
}

/// Dimension of the solution space of the intertwining equations.
std::size_t intertwiner_space_dim(std::span<const std::pair<ExactMatrix, ExactMatrix>> pairs);

/// A rescaled so that its first nonzero entry (row-major) is 1.
ExactMatrix normalize_first_nonzero(const ExactMatrix& m);

/// The scalar s with a == s * b, if one exists (b nonzero).
std::optional<Scalar> proportionality(const ExactMatrix& a, const ExactMatrix& b);

/// Incrementally grown subspace, stored as reduced rows.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

  /// Adds a column vector; returns true if it enlarged the span.
  bool insert(const ExactMatrix& v);
  bool contains(const ExactMatrix& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  /// A basis of the span, as column vectors.
  std::vector<ExactMatrix> basis() const;

 private:
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  std::size_t ambient_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace aw
