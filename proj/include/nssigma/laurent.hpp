#pragma once

#include <limits>
#include <set>
#include <string>
#include <vector>

#include "nssigma/lambda_poly.hpp"

namespace nssigma {

// Cap used for "exact to all orders". Saturating adds keep it stable.
inline constexpr long kInfOrder = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
  if (a >= kInfOrder || b >= kInfOrder) return kInfOrder;
  return a + b;
}

// Truncated Laurent series in one variable z with LambdaPolynomial coefficients.
// Coefficients are exact for exponents <= trunc(); exponents below the stored
// window are exact zeros. Reading past trunc() throws: truncation is explicit
// state, never a silent zero.
class LaurentSeries {
public:
  LaurentSeries() = default;  // exact zero

  static LaurentSeries constant(const LambdaPolynomial& c);
  static LaurentSeries monomial(const LambdaPolynomial& c, long exponent);
  // Dense window [lo, lo + coeffs.size() - 1], exact through trunc.
  static LaurentSeries from_coeffs(long lo, std::vector<LambdaPolynomial> coeffs, long trunc);

  long trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kInfOrder; }
  // True when no nonzero coefficient is stored (zero through trunc()).
  bool stored_zero() const { return coef_.empty(); }
  // Lowest exponent carrying a nonzero coefficient; kInfOrder when stored_zero().
  long valuation() const;
  long window_lo() const { return lo_; }
  long window_hi() const { return lo_ + static_cast<long>(coef_.size()) - 1; }

  const LambdaPolynomial& coeff(long k) const;  // throws std::out_of_range past trunc

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  LaurentSeries operator-() const;
  LaurentSeries& scale(const LambdaPolynomial& c);
  LaurentSeries shifted(long k) const;  // multiply by z^k
  LaurentSeries pow(unsigned e) const;

  // Requires an invertible (nonzero constant) leading coefficient.
  LaurentSeries inverse() const;

  LaurentSeries derivative() const;  // d/dz
  // Antiderivative without constant term; throws std::domain_error("logarithmic term")
  // when the z^-1 coefficient is nonzero.
  LaurentSeries integral() const;
  const LambdaPolynomial& residue() const;  // z^-1 coefficient

  LaurentSeries truncated(long n) const;
  // Reinterprets the stored coefficients as exact through n (n >= trunc()).
  // Only for iteration schemes that certify the extension themselves.
  LaurentSeries assume_exact_through(long n) const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

  // Values exponent - lambda_degree over all stored terms; a graded-homogeneous
  // series yields a single value.
  std::set<long> homogeneity_offsets() const;

  std::string str(const std::string& var = "z") const;

private:
  void normalize();

  long lo_ = 0;
  long trunc_ = kInfOrder;
  std::vector<LambdaPolynomial> coef_;
};

LaurentSeries exp(const LaurentSeries& f);   // needs valuation >= 1
LaurentSeries log1(const LaurentSeries& f);  // needs leading term exactly 1 at z^0
LaurentSeries sqrt1(const LaurentSeries& f);  // needs leading term exactly 1 at z^0

}  // namespace nssigma
