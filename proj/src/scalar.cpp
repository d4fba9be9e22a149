#include "aw/scalar.hpp"

#include <cctype>
#include <ostream>

namespace aw {

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '/') {
      if (slash || !digit) throw PreconditionError("malformed rational: " + std::string(text));
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digit = true;
    } else {
      throw PreconditionError("malformed rational: " + std::string(text));
    }
  }
  if (!digit) throw PreconditionError("malformed rational: " + std::string(text));
  std::string body(text[0] == '+' ? text.substr(1) : text);
  mpq_class value;
  if (value.set_str(body, 10) != 0) throw PreconditionError("malformed rational: " + body);
  if (value.get_den() == 0) throw PreconditionError("zero denominator: " + body);
  value.canonicalize();
  return value;
}

bool is_sign(char ch) { return ch == '+' || ch == '-'; }

}  // namespace

GaussianRational GaussianRational::parse(std::string_view raw) {
  std::string text;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    // U+2212 MINUS SIGN, as found in hand-written parameter files.
    if (k + 2 < raw.size() && static_cast<unsigned char>(raw[k]) == 0xE2 &&
        static_cast<unsigned char>(raw[k + 1]) == 0x88 && static_cast<unsigned char>(raw[k + 2]) == 0x92) {
      text.push_back('-');
      k += 2;
    } else if (!std::isspace(static_cast<unsigned char>(raw[k]))) {
      text.push_back(raw[k]);
    }
  }
  if (text.empty()) throw PreconditionError("empty scalar literal");
  if (text.back() != 'i') return {parse_rational(text)};

  std::string_view body(text);
  body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (is_sign(body[k]) && !is_sign(body[k - 1]) && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  if (imag_part.size() >= 2 && imag_part[0] == '+' && is_sign(imag_part[1])) imag_part.remove_prefix(1);

  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part);
  }
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part);
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (is_real()) return {1 / re_};
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  auto fraction = [](const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); };
  if (is_real()) return fraction(re_);
  std::string out = fraction(re_);
  if (sgn(im_) > 0) {
    out += "+" + fraction(im_);
  } else {
    out += fraction(im_);  // carries its own '-'
  }
  return out + "i";
}

std::size_t GaussianRational::height() const {
  auto bits = [](const mpz_class& z) { return sgn(z) == 0 ? std::size_t{0} : mpz_sizeinbase(z.get_mpz_t(), 2); };
  return bits(re_.get_num()) + bits(re_.get_den()) + bits(im_.get_num()) + bits(im_.get_den());
}

Scalar pow(const Scalar& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  Scalar result(1);
  Scalar base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
  if (sgn(x) < 0) return std::nullopt;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace

std::optional<Scalar> sqrt_exact(const Scalar& x) {
  if (x.is_zero()) return Scalar(0);
  // (s + t i)^2 = x forces s^2 + t^2 = |x|, s^2 - t^2 = re x, 2st = im x.
  auto modulus = rational_sqrt(x.norm());
  if (!modulus) return std::nullopt;
  auto s = rational_sqrt((*modulus + x.re()) / 2);
  auto t = rational_sqrt((*modulus - x.re()) / 2);
  if (!s || !t) return std::nullopt;
  mpq_class im = *t;
  if (sgn(x.im()) < 0) im = -im;
  Scalar root(*s, im);
  if (root * root != x) return std::nullopt;
  if (!canonically_positive(root)) root = -root;
  return root;
}

bool is_root_of_unity(const Scalar& q) {
  if (q.is_zero()) throw PreconditionError("is_root_of_unity: q must be nonzero");
  Scalar q2 = q * q;
  return q2 == Scalar(1) || q2 == Scalar(-1);
}

bool canonically_positive(const Scalar& x) { return sgn(x.re()) > 0 || (sgn(x.re()) == 0 && sgn(x.im()) > 0); }

bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace aw
