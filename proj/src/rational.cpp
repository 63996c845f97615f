#include "ghznl/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ghznl {

Rational::Rational(long long n) {
  mpz_class z;
  if (n >= 0) {
    z = static_cast<unsigned long>(n);
  } else {
    // avoid overflow on LLONG_MIN
    z = static_cast<unsigned long>(-(n + 1));
    z += 1;
    z = -z;
  }
  v_ = mpq_class(z);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::parse(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!is_int(den))
      throw std::invalid_argument("rational: bad denominator in '" + std::string(s) + "'");
  }
  if (!is_int(num))
    throw std::invalid_argument("rational: bad numerator in '" + std::string(s) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(s) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm2();
  if (n.is_zero()) throw std::domain_error("gaussian rational: division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = im.str() + "i";
  if (re.is_zero()) return imag;
  return im.sign() > 0 ? re.str() + "+" + imag : re.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace ghznl
