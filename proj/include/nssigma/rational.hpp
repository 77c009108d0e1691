#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace nssigma {

// Exact rational on GMP. Kept canonical: lowest terms, positive denominator.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a" or "a/b" with optional sign; throws std::invalid_argument otherwise.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational pow(long e) const;  // e < 0 needs a nonzero base

  static Rational factorial(unsigned long n);
  static Rational binomial(unsigned long n, unsigned long k);

  std::string str() const;           // "a" or "a/b"
  std::string fraction_str() const;  // always "a/b"

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

}  // namespace nssigma
