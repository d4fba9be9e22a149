#pragma once

#include <optional>
#include <string>

#include "aw/matrix.hpp"

namespace aw {

/// (Lambda, Q; X, Y, Z). When n is set, Lambda == Q^n.
template <class T>
struct SymbolArgs {
  T lambda;
  T q;
  T x = from_int<T>(1);
  T y = from_int<T>(1);
  T z = from_int<T>(1);
  std::optional<int> n;

  /// Lambda = Q^n.
  static SymbolArgs specialized(int n, const T& q, const T& x, const T& y, const T& z) {
    return {pow(q, n), q, x, y, z, n};
  }

  /// The "(Q^{-1}; ...)" reading: Q -> Q^{-1} throughout, so Lambda becomes Q^{-n}.
  SymbolArgs inverted_q() const {
    if (!n) throw PreconditionError("inverted_q needs a specialized Lambda = Q^n");
    return {inv(lambda), inv(q), x, y, z, n};
  }

  SymbolArgs with_xyz(const T& x2, const T& y2, const T& z2) const { return {lambda, q, x2, y2, z2, n}; }

  void check_nonzero() const {
    if (is_zero(lambda) || is_zero(q) || is_zero(x) || is_zero(y) || is_zero(z))
      throw PreconditionError("symbol arguments must be nonzero");
  }
};

template <class T>
T theta(int i, const T& lambda, const T& q, const T& x) {
  return lambda * pow(q, -2 * i) * inv(x) + inv(lambda) * pow(q, 2 * i) * x;
}

template <class T>
T phi(int i, const T& lambda, const T& q, const T& x, const T& y, const T& z) {
  const T li = inv(lambda);
  const T w = li * pow(q, i - 1) * x * y;
  return lambda * q * inv(x) * inv(y) * (pow(q, i) - pow(q, -i)) * (li * pow(q, i - 1) - lambda * pow(q, 1 - i)) *
         (pow(q, -i) - w * z) * (pow(q, -i) - w * inv(z));
}

template <class T>
T omega(const T& lambda, const T& q, const T& x, const T& y, const T& z) {
  return (lambda * q + inv(lambda) * inv(q)) * (z + inv(z)) + (x + inv(x)) * (y + inv(y));
}

template <class T>
T theta(int i, const SymbolArgs<T>& s) {
  return theta(i, s.lambda, s.q, s.x);
}
template <class T>
T phi(int i, const SymbolArgs<T>& s) {
  return phi(i, s.lambda, s.q, s.x, s.y, s.z);
}
template <class T>
T omega(const SymbolArgs<T>& s) {
  return omega(s.lambda, s.q, s.x, s.y, s.z);
}

/// [m]_Q = (Q^m - Q^{-m}) / (Q - Q^{-1}).
template <class T>
T qint(int m, const T& q) {
  const T d = q - inv(q);
  if (is_zero(d)) throw PreconditionError("q-integer undefined at Q = +-1");
  return (pow(q, m) - pow(q, -m)) / d;
}

/// Gaussian binomial prod_{h=1..i} [j-h+1]_Q / [h]_Q.
template <class T>
T qbinom(int j, int i, const T& q) {
  if (i < 0) throw PreconditionError("qbinom: lower index must be nonnegative");
  T acc = from_int<T>(1);
  for (int h = 1; h <= i; ++h) {
    const T den = qint(h, q);
    if (is_zero(den)) throw PreconditionError("qbinom: [h]_Q vanishes (Q a root of unity)");
    acc = acc * qint(j - h + 1, q) / den;
  }
  return acc;
}

template <class T>
struct RepMatrices {
  Matrix<T> L, U, T3;
};

/// Top-left size x size truncations of L(Lambda,Q;X), U(Lambda,Q;X,Y,Z), T(Lambda,Q;X,Y,Z).
template <class T>
RepMatrices<T> build_rep(std::size_t size, const SymbolArgs<T>& s) {
  if (size == 0) throw PreconditionError("build_rep: size must be positive");
  s.check_nonzero();
  const T q = s.q, qi = inv(q);
  const T d2 = q * q - qi * qi;
  const T d1 = q + qi;
  if (is_zero(d2) || is_zero(d1)) throw PreconditionError("build_rep: degenerate Q (Q^4 = 1)");
  const T w = omega(s);
  RepMatrices<T> r{Matrix<T>(size, size), Matrix<T>(size, size), Matrix<T>(size, size)};
  for (std::size_t k = 0; k < size; ++k) {
    const int i = static_cast<int>(k);
    const T tx = theta(i, s.lambda, q, s.x);
    const T ty = theta(i, s.lambda, q, s.y);
    r.L(k, k) = tx;
    r.U(k, k) = ty;
    r.T3(k, k) = (qi * phi(i + 1, s) - q * phi(i, s)) / d2 + (w - tx * ty) / d1;
    if (k > 0) {
      const T px = theta(i - 1, s.lambda, q, s.x);
      const T py = theta(i - 1, s.lambda, q, s.y);
      const T ph = phi(i, s);
      r.L(k, k - 1) = from_int<T>(1);
      r.U(k - 1, k) = ph;
      r.T3(k - 1, k) = (qi * tx - q * px) / d2 * ph;
      r.T3(k, k - 1) = (qi * ty - q * py) / d2;
    }
  }
  return r;
}

enum class TransitionKind { E, S, F, P };

inline TransitionKind parse_transition_kind(const std::string& s) {
  if (s == "E") return TransitionKind::E;
  if (s == "S") return TransitionKind::S;
  if (s == "F") return TransitionKind::F;
  if (s == "P") return TransitionKind::P;
  throw PreconditionError("unknown transition kind: " + s);
}

namespace detail {

template <class T>
Matrix<T> build_e(std::size_t size, const SymbolArgs<T>& s) {
  const T& L = s.lambda;
  const T& Q = s.q;
  const T Li = inv(L), Xi = inv(s.x);
  Matrix<T> m(size, size);
  for (int i = 0; i < static_cast<int>(size); ++i)
    for (int j = i; j < static_cast<int>(size); ++j) {
      T v = qbinom(j, i, Q);
      for (int h = 1; h <= j - i; ++h)
        v = v * (Li * pow(Q, h + i - 1) - L * pow(Q, 1 - i - h)) * (pow(Q, 1 - h) * s.x - pow(Q, h - 1) * Xi);
      m(i, j) = v;
    }
  return m;
}

template <class T>
Matrix<T> build_s(std::size_t size, const SymbolArgs<T>& s) {
  const T& L = s.lambda;
  const T& Q = s.q;
  const T Li = inv(L), Xi = inv(s.x);
  Matrix<T> m(size, size);
  for (int i = 0; i < static_cast<int>(size); ++i)
    for (int j = i; j < static_cast<int>(size); ++j) {
      T v = pow(L, i) * pow(Q, -i * j) * pow(s.y, -j) * qbinom(j, i, Q);
      if (i % 2 != 0) v = -v;
      for (int h = 1; h <= j - i; ++h)
        v = v * (L * pow(Q, h - j) - Li * pow(Q, j - h)) * (pow(Q, j - h) * s.y * s.z - L * pow(Q, h - j - 1) * Xi);
      m(i, j) = v;
    }
  return m;
}

template <class T>
Matrix<T> build_f(const SymbolArgs<T>& s) {
  const int n = *s.n;
  const T& Q = s.q;
  const SymbolArgs<T> sinv = s.inverted_q();
  const SymbolArgs<T> xinv = s.with_xyz(inv(s.x), s.y, s.z);
  const T t0y = theta(0, s.lambda, Q, s.y);
  Matrix<T> m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      T v = qbinom(i, j, Q);
      for (int h = 1; h <= i - j; ++h) v = v * (t0y - theta(h - 1, sinv.lambda, sinv.q, s.y));
      for (int h = 1; h <= j; ++h) v = v * qint(n - i + h, Q) / qint(n - h + 1, Q) * phi(h, s);
      for (int h = 1; h <= n - i; ++h) v = v * phi(h, xinv);
      m(i, j) = v;
    }
  return m;
}

template <class T>
Matrix<T> build_p(const SymbolArgs<T>& s) {
  const int n = *s.n;
  const T& Q = s.q;
  const SymbolArgs<T> sinv = s.inverted_q();
  const SymbolArgs<T> yinv = s.with_xyz(s.x, inv(s.y), s.z);
  const T t0x = theta(0, s.lambda, Q, s.x);
  Matrix<T> m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      T v = qbinom(i, j, Q);
      for (int h = 1; h <= i - j; ++h) v = v * (t0x - theta(h - 1, sinv.lambda, sinv.q, s.x));
      for (int h = 1; h <= j; ++h) v = v * qint(n - i + h, Q) / qint(n - h + 1, Q) * phi(h, yinv);
      m(n - i, j) = v;
    }
  return m;
}

}  // namespace detail

/// Closed-form transition matrices. F and P exist only for Lambda = Q^n with size n+1.
template <class T>
Matrix<T> build_transition(TransitionKind kind, std::size_t size, const SymbolArgs<T>& s) {
  if (size == 0) throw PreconditionError("build_transition: size must be positive");
  s.check_nonzero();
  switch (kind) {
    case TransitionKind::E:
      return detail::build_e(size, s);
    case TransitionKind::S:
      return detail::build_s(size, s);
    case TransitionKind::F:
    case TransitionKind::P:
      if (!s.n || static_cast<std::size_t>(*s.n) + 1 != size)
        throw PreconditionError("F and P need Lambda = Q^n and size n+1");
      return kind == TransitionKind::F ? detail::build_f(s) : detail::build_p(s);
  }
  throw PreconditionError("unknown transition kind");
}

}  // namespace aw
