#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nssigma/rational.hpp"

namespace nssigma {

// Admissible curve coefficients lambda_{i,j} for y^n = x^s + sum lambda_{i,j} x^i y^j:
// 0 <= j <= n-1 and n*i + s*j < n*s, listed in (i,j)-lexicographic order.
// deg lambda_{i,j} = n*s - n*i - s*j > 0.
class ParameterSpace {
public:
  static std::shared_ptr<const ParameterSpace> make(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  std::size_t size() const { return index_.size(); }
  std::pair<int, int> index(std::size_t k) const { return index_[k]; }
  long degree(std::size_t k) const { return degree_[k]; }
  // Position of (i,j) in the canonical order, or npos if not admissible.
  std::size_t find(int i, int j) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  int n_ = 0, s_ = 0;
  std::vector<std::pair<int, int>> index_;
  std::vector<long> degree_;
};

using Exponents = std::vector<std::uint16_t>;  // trailing zeros trimmed

// Sparse polynomial in the lambda_{i,j} with rational coefficients.
// A null space means the polynomial is a plain constant; constants mix freely
// with any space. Mixing two distinct (n,s) spaces is an error.
class LambdaPolynomial {
public:
  LambdaPolynomial() = default;
  LambdaPolynomial(const Rational& c);
  LambdaPolynomial(long c) : LambdaPolynomial(Rational(c)) {}
  static LambdaPolynomial generator(std::shared_ptr<const ParameterSpace> space, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Throws std::logic_error when the polynomial is not constant.
  Rational constant_value() const;
  const std::shared_ptr<const ParameterSpace>& space() const { return space_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  LambdaPolynomial& operator+=(const LambdaPolynomial& o);
  LambdaPolynomial& operator-=(const LambdaPolynomial& o);
  friend LambdaPolynomial operator+(LambdaPolynomial a, const LambdaPolynomial& b) { return a += b; }
  friend LambdaPolynomial operator-(LambdaPolynomial a, const LambdaPolynomial& b) { return a -= b; }
  friend LambdaPolynomial operator*(const LambdaPolynomial& a, const LambdaPolynomial& b);
  LambdaPolynomial& operator*=(const LambdaPolynomial& o) { return *this = *this * o; }
  LambdaPolynomial operator-() const;
  LambdaPolynomial& scale(const Rational& c);
  LambdaPolynomial pow(unsigned e) const;

  friend bool operator==(const LambdaPolynomial& a, const LambdaPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LambdaPolynomial& a, const LambdaPolynomial& b) {
    return !(a == b);
  }

  long lambda_degree(const Exponents& mono) const;
  // Set of lambda-degrees over the stored monomials; empty for the zero polynomial.
  std::set<long> degrees() const;
  // Degree when homogeneous (zero polynomial included as "homogeneous of any degree"
  // -> nullopt); non-homogeneous -> nullopt. Use degrees() to tell the cases apart.
  std::optional<long> homogeneous_degree() const;
  bool is_homogeneous_of(long deg) const;

  // Full evaluation; values aligned with the space's canonical order.
  Rational evaluate(const std::vector<Rational>& values) const;

  // Partial evaluation: positions with a value get substituted, the rest stay
  // symbolic. nullopt entries (and positions past the end) are kept.
  LambdaPolynomial specialize(const std::vector<std::optional<Rational>>& values) const;

  // Exact quotient; throws std::domain_error when the division is not exact.
  static LambdaPolynomial divide_exact(const LambdaPolynomial& a, const LambdaPolynomial& b);

  std::string str() const;

private:
  void insert_term(const Exponents& e, const Rational& c);
  void merge_space(const std::shared_ptr<const ParameterSpace>& other);

  std::shared_ptr<const ParameterSpace> space_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace nssigma
