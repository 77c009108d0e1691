#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "nssigma/lambda_poly.hpp"
#include "nssigma/laurent.hpp"
#include "nssigma/partition.hpp"

namespace nssigma {

// Plane curve y^n = x^s + sum lambda_{i,j} x^i y^j with gcd(n,s) = 1 and the
// admissibility bounds 0 <= j <= n-1, n*i + s*j < n*s. One point at infinity.
// Each coefficient is either symbolic (nullopt) or a fixed rational value.
struct CurveModel {
  int n = 0;
  int s = 0;
  std::shared_ptr<const ParameterSpace> space;
  std::vector<std::optional<Rational>> values;  // aligned with the space order

  static CurveModel make(int n, int s);  // all coefficients symbolic
  long genus() const { return static_cast<long>(n - 1) * (s - 1) / 2; }

  // lambda_{i,j} as configured: the generator symbol or its assigned constant.
  LambdaPolynomial coefficient(std::size_t k) const;
  CurveModel with_value(int i, int j, const std::optional<Rational>& val) const;
  CurveModel with_all_zero() const;
  bool fully_symbolic() const;
  bool fully_numeric() const;
  // True when every assigned value is zero, so coefficients stay homogeneous
  // under deg lambda_{i,j} = ns - ni - sj and weight-grading checks apply.
  bool graded() const;
  // Substitutes the assigned values into a fully symbolic result.
  LambdaPolynomial specialize(const LambdaPolynomial& p) const { return p.specialize(values); }

  std::string signature() const;  // canonical "n=..;s=..;l(i,j)=.." key
};

// Numerical semigroup <n, s> and its gap data.
class Semigroup {
public:
  Semigroup(int n, int s);

  long genus() const { return static_cast<long>(gaps_.size()); }
  const std::vector<long>& gaps() const { return gaps_; }  // increasing
  bool is_gap(long m) const;
  // j-th nongap, 1-based: nongap(1) = 0; for j > genus+1 this is genus-1+j.
  long nongap(std::size_t j) const;
  // Unique (i, j) with n*i + s*j = m and 0 <= j < n; throws for gaps.
  std::pair<int, int> exponents_for(long m) const;

  // (w_g, ..., w_1) - (g-1, ..., 0), the shape cut out by the gap sequence.
  Partition gap_partition() const;

private:
  int n_, s_;
  std::vector<long> gaps_;
  std::vector<long> small_nongaps_;  // nongaps < 2*genus, increasing
};

// Exact expansions at the point at infinity in the local parameter z:
// x = z^-n, y = z^-s v(z), v(0) = 1, v solving
//   v^n = 1 + sum lambda_{i,j} z^(ns-ni-sj) v^j.
// Every z-coefficient of v is homogeneous in the lambda's of degree equal to
// the exponent, so x^i y^j expands as z^-(ni+sj) * (1 + higher), each
// coefficient of z^e homogeneous of degree e + ni + sj.
class CurveExpansions {
public:
  CurveExpansions(CurveModel curve, long order);

  const CurveModel& curve() const { return curve_; }
  const Semigroup& semigroup() const { return semi_; }
  long order() const { return order_; }

  const LaurentSeries& v() const { return v_; }
  LaurentSeries x() const;  // exact monomial z^-n
  LaurentSeries y() const;
  const LaurentSeries& monomial(int i, int j);   // x^i y^j, memoized
  const LaurentSeries& basis_element(std::size_t k);  // f_k: ord f_k = nongap(k), f_1 = 1
  LaurentSeries fy();             // n y^(n-1) - sum_{j>=1} j lambda_{i,j} x^i y^(j-1)
  LaurentSeries dx_dz() const;    // -n z^(-n-1), exact
  LaurentSeries curve_residual();  // y^n - x^s - sum lambda_{i,j} x^i y^j

private:
  CurveModel curve_;
  Semigroup semi_;
  long order_;
  LaurentSeries v_;
  std::map<std::pair<int, int>, LaurentSeries> memo_;
};

}  // namespace nssigma
