#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

/// Univariate polynomial over Q(i), coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// prod (X - r) over the given roots.
  static Polynomial from_roots(const std::vector<Scalar>& roots);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace aw
