#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aw {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// mpq_class keeps both parts canonical (lowest terms, positive denominator),
/// so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I v) : re_(static_cast<long>(v)) {}  // NOLINT: implicit by design of the numeric tower
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational ratio(long num, long den) { return {mpq_class(num, den)}; }

  /// Accepts "p/q", "p/q+r/si", "p/q-r/si", and shorthands such as "2", "-i", "3+4i", "1/2i".
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form: "p/q" for reals, otherwise "p/q+r/si" (or "p/q-r/si").
  std::string str() const;

  /// Bits in numerators and denominators; used as a pivot-size heuristic.
  std::size_t height() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Scalar = GaussianRational;
using Complex = std::complex<double>;

Scalar pow(const Scalar& x, int e);

/// y with y*y == x, choosing the canonically positive root; nullopt when x is not a square in Q(i).
std::optional<Scalar> sqrt_exact(const Scalar& x);

/// True exactly for the fourth roots of unity, the only roots of unity in Q(i).
bool is_root_of_unity(const Scalar& q);

/// re > 0, or re == 0 and im > 0.
bool canonically_positive(const Scalar& x);

/// Lexicographic (re, im) comparison.
bool lex_less(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Uniform vocabulary over the exact and floating backends, so the symbol and
// matrix templates can be shared.

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
inline Scalar inv(const Scalar& x) { return x.inverse(); }
inline Complex inv(const Complex& x) { return 1.0 / x; }
inline Complex pow(const Complex& x, int e) { return std::pow(x, e); }
inline double pivot_size(const Complex& x) { return std::abs(x); }

template <class T>
T from_int(long v) {
  return T(v);
}
template <>
inline Complex from_int<Complex>(long v) {
  return Complex(static_cast<double>(v), 0.0);
}

}  // namespace aw
