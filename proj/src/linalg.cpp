#include "aw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>

namespace aw {

namespace {

struct Echelon {
  ExactMatrix reduced;              // Gauss-Jordan form, columns permuted
  std::vector<std::size_t> column;  // permuted position -> original column
  std::size_t rank = 0;
};

// Full pivoting; among nonzero candidates the smallest height wins to limit coefficient growth.
Echelon gauss_jordan(ExactMatrix a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  Echelon e;
  e.column.resize(c);
  std::iota(e.column.begin(), e.column.end(), std::size_t{0});
  std::size_t step = 0;
  for (; step < std::min(r, c); ++step) {
    std::size_t best_i = r, best_j = c, best_h = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = step; i < r; ++i)
      for (std::size_t j = step; j < c; ++j) {
        const Scalar& x = a(i, j);
        if (x.is_zero()) continue;
        std::size_t h = x.height();
        if (h < best_h) {
          best_h = h;
          best_i = i;
          best_j = j;
        }
      }
    if (best_i == r) break;
    if (best_i != step)
      for (std::size_t j = 0; j < c; ++j) std::swap(a(step, j), a(best_i, j));
    if (best_j != step) {
      for (std::size_t i = 0; i < r; ++i) std::swap(a(i, step), a(i, best_j));
      std::swap(e.column[step], e.column[best_j]);
    }
    Scalar pivot_inv = a(step, step).inverse();
    for (std::size_t j = step; j < c; ++j)
      if (!a(step, j).is_zero()) a(step, j) *= pivot_inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == step || a(i, step).is_zero()) continue;
      Scalar factor = a(i, step);
      for (std::size_t j = step; j < c; ++j)
        if (!a(step, j).is_zero()) a(i, j) -= factor * a(step, j);
    }
  }
  e.rank = step;
  e.reduced = std::move(a);
  return e;
}

}  // namespace

std::vector<ExactMatrix> kernel(const ExactMatrix& m) {
  Echelon e = gauss_jordan(m);
  const std::size_t c = m.cols();
  std::vector<std::pair<std::size_t, ExactMatrix>> basis;
  for (std::size_t f = e.rank; f < c; ++f) {
    ExactMatrix v(c, 1);
    v(e.column[f], 0) = Scalar(1);
    for (std::size_t p = 0; p < e.rank; ++p) v(e.column[p], 0) = -e.reduced(p, f);
    basis.emplace_back(e.column[f], std::move(v));
  }
  std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ExactMatrix> out;
  out.reserve(basis.size());
  for (auto& [col, v] : basis) out.push_back(std::move(v));
  return out;
}

std::size_t rank(const ExactMatrix& m) { return gauss_jordan(m).rank; }

Scalar determinant(const ExactMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (piv == n || a(i, k).height() < a(piv, k).height())) piv = i;
    if (piv == n) return Scalar(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    Scalar inv_p = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv_p;
      for (std::size_t j = k; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (piv == n || a(i, k).height() < a(piv, k).height())) piv = i;
    if (piv == n) return std::nullopt;
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Scalar p = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(k, j).is_zero()) a(k, j) *= p;
      if (!inv(k, j).is_zero()) inv(k, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Scalar f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::optional<FloatMatrix> inverse(const FloatMatrix& m, double tolerance) {
  if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FloatMatrix a = m;
  FloatMatrix inv = FloatMatrix::identity(n);
  const double scale = std::max(max_abs(m), 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= tolerance * scale) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    Complex p = 1.0 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= p;
      inv(k, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Complex f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Polynomial char_poly(const ExactMatrix& m) {
  if (!m.square()) throw PreconditionError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<Scalar> coeff(n + 1, Scalar(0));
  coeff[n] = Scalar(1);
  ExactMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t d = 0; d < n; ++d) mk(d, d) += coeff[n - k + 1];
    Scalar tr = (m * mk).trace();
    coeff[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(coeff));
}

namespace {

using Cld = std::complex<long double>;

Cld to_cld(const Scalar& x) {
  return {static_cast<long double>(x.re().get_d()), static_cast<long double>(x.im().get_d())};
}

// Aberth-Ehrlich simultaneous iteration on a squarefree polynomial.
std::vector<Cld> numeric_roots(const Polynomial& p) {
  const int deg = p.degree();
  std::vector<Cld> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = to_cld(p.coeff(k));
  std::vector<Cld> dc(deg);
  for (int k = 1; k <= deg; ++k) dc[k - 1] = c[k] * static_cast<long double>(k);
  auto eval = [](const std::vector<Cld>& poly, Cld x) {
    Cld acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  long double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k] / c[deg]));
  bound += 1;
  std::vector<Cld> z(deg);
  for (int k = 0; k < deg; ++k) z[k] = std::polar(bound * 0.5L, 2.0L * 3.14159265358979323846L * (k + 0.25L) / deg);
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0;
    for (int k = 0; k < deg; ++k) {
      Cld pv = eval(c, z[k]);
      Cld dv = eval(dc, z[k]);
      if (pv == Cld(0)) continue;
      Cld ratio = pv / dv;
      Cld sum = 0;
      for (int j = 0; j < deg; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      Cld step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

// Continued-fraction convergents of x that lie within a relative tolerance.
std::vector<mpq_class> rational_candidates(long double x) {
  std::vector<mpq_class> out;
  const long double tol = 1e-9L * std::max(1.0L, std::fabs(x));
  if (std::fabs(x) < tol) out.emplace_back(0);
  mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;  // convergent recursion seeds
  long double rest = x;
  for (int step = 0; step < 40; ++step) {
    long double a = std::floor(rest);
    mpz_class ai(static_cast<long>(a));
    mpz_class h_next = ai * h_prev + h;
    mpz_class k_next = ai * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    mpq_class approx(h_prev, k_prev);
    approx.canonicalize();
    if (std::fabs(static_cast<long double>(approx.get_d()) - x) <= tol) out.push_back(approx);
    if (out.size() >= 3 || k_prev > mpz_class("1000000000000")) break;
    long double frac = rest - a;
    if (frac < 1e-30L) break;
    rest = 1.0L / frac;
  }
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("roots_in_field: zero polynomial");
  Polynomial rest = p.monic();
  if (rest.degree() <= 0) return {};
  rest = rest.divmod(gcd(rest, rest.derivative())).first.monic();  // squarefree part
  std::vector<Scalar> found;
  for (const Cld& z : numeric_roots(rest)) {
    bool matched = false;
    for (const auto& re : rational_candidates(z.real())) {
      for (const auto& im : rational_candidates(z.imag())) {
        Scalar r(re, im);
        if (rest(r).is_zero()) {
          found.push_back(r);
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) throw FieldError("polynomial does not split over Q(i): " + p.str());
  }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (static_cast<int>(found.size()) != rest.degree())
    throw FieldError("polynomial does not split over Q(i): " + p.str());
  return found;
}

namespace {

ExactMatrix intertwining_system(std::span<const std::pair<ExactMatrix, ExactMatrix>> pairs, std::size_t n) {
  ExactMatrix sys(pairs.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& [first, second] : pairs) {
    if (first.rows() != n || first.cols() != n || second.rows() != n || second.cols() != n)
      throw PreconditionError("intertwiner: all matrices must be square of equal size");
    // (M second - first M)_{ij} = sum_l M_il second_lj - sum_l first_il M_lj
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row)
        for (std::size_t l = 0; l < n; ++l) {
          if (!second(l, j).is_zero()) sys(row, i * n + l) += second(l, j);
          if (!first(i, l).is_zero()) sys(row, l * n + j) -= first(i, l);
        }
  }
  return sys;
}

ExactMatrix unflatten(const ExactMatrix& v, std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = v(k, 0);
  return m;
}

}  // namespace

ExactMatrix normalize_first_nonzero(const ExactMatrix& m) {
  for (const auto& x : m.entries())
    if (!x.is_zero()) return m * x.inverse();
  return m;
}

std::size_t intertwiner_space_dim(std::span<const std::pair<ExactMatrix, ExactMatrix>> pairs) {
  if (pairs.empty()) throw PreconditionError("intertwiner: no equations");
  const std::size_t n = pairs.front().first.rows();
  return kernel(intertwining_system(pairs, n)).size();
}

std::optional<ExactMatrix> intertwiner(std::span<const std::pair<ExactMatrix, ExactMatrix>> pairs) {
  if (pairs.empty()) throw PreconditionError("intertwiner: no equations");
  const std::size_t n = pairs.front().first.rows();
  auto basis = kernel(intertwining_system(pairs, n));
  if (basis.empty()) return std::nullopt;
  for (const auto& v : basis) {
    ExactMatrix m = unflatten(v, n);
    if (!determinant(m).is_zero()) return normalize_first_nonzero(m);
  }
  if (basis.size() == 1) return std::nullopt;
  // Several solutions, none invertible alone: invertibility is Zariski-open, so
  // seeded integer combinations find an invertible one with high probability if any exists.
  std::mt19937 rng(20240607u);
  std::uniform_int_distribution<long> coeff(1, 997);
  for (int attempt = 0; attempt < 16; ++attempt) {
    ExactMatrix v(n * n, 1);
    for (const auto& b : basis) v += b * Scalar(coeff(rng));
    ExactMatrix m = unflatten(v, n);
    if (!determinant(m).is_zero()) return normalize_first_nonzero(m);
  }
  return std::nullopt;
}

std::optional<Scalar> proportionality(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const auto& be = b.entries();
  for (std::size_t k = 0; k < be.size(); ++k) {
    if (be[k].is_zero()) continue;
    Scalar s = a.entries()[k] / be[k];
    if (a == b * s) return s;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
  }
  return v;
}

bool SpanBuilder::insert(const ExactMatrix& v) {
  if (v.rows() != ambient_ || v.cols() != 1) throw PreconditionError("SpanBuilder: vector has wrong shape");
  auto w = reduce(v.entries());
  auto it = std::find_if(w.begin(), w.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == w.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - w.begin());
  Scalar inv_p = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv_p;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const ExactMatrix& v) const {
  auto w = reduce(v.entries());
  return std::all_of(w.begin(), w.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<ExactMatrix> SpanBuilder::basis() const {
  std::vector<ExactMatrix> out;
  for (const auto& r : rows_) out.push_back(ExactMatrix::column(r));
  return out;
}

}  // namespace aw
