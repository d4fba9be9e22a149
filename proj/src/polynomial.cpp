#include "aw/polynomial.hpp"

#include <sstream>

namespace aw {

Polynomial Polynomial::from_roots(const std::vector<Scalar>& roots) {
  Polynomial p = constant(Scalar(1));
  for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
  return p;
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial{}, rem};
  std::vector<Scalar> quot(rem.c_.size() - divisor.c_.size() + 1, Scalar(0));
  Scalar lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    Scalar factor = rem.leading() * lead_inv;
    quot[shift] = factor;
    for (std::size_t k = 0; k < divisor.c_.size(); ++k) rem.c_[k + shift] -= factor * divisor.c_[k];
    rem.c_.pop_back();  // cancelled exactly
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str() << ")";
    if (k >= 1) os << "*X";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace aw
