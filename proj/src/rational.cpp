#include "nssigma/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nssigma {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      Rational r;
      r.v_ = mpq_class(n);
      return r;
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational r;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  r.v_ = mpq_class(num) / mpq_class(den);
  return r;
}

Rational Rational::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  Rational r;
  r.v_ = mpq_class(f);
  return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  Rational r;
  r.v_ = mpq_class(b);
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nssigma
