#pragma once

#include <map>
#include <set>
#include <utility>

#include "nssigma/laurent.hpp"

namespace nssigma {

// Formal expansion sum c_{a,b} z1^a z2^b taken in the region |z1| < |z2|.
// Entries are exact for a <= n1() and b <= n2(); reading past either bound
// throws. Arbitrarily negative exponents are allowed and stored sparsely.
// In this region 1/(z1 - z2)^2 = sum_{k>=1} k z1^{k-1} z2^{-k-1}.
class BiSeries {
public:
  BiSeries() = default;
  BiSeries(long n1, long n2) : n1_(n1), n2_(n2) {}

  long n1() const { return n1_; }
  long n2() const { return n2_; }
  void restrict_window(long n1, long n2);

  // Declares z2-exponents below `floor` out of scope: stored terms there are
  // dropped and reading them throws. Used when a construction only sums
  // enough contributions to settle the columns at or above the floor.
  void drop_columns_below(long floor);
  long column_floor() const { return floor_; }

  const LambdaPolynomial& coeff(long a, long b) const;  // throws past the window
  const std::map<std::pair<long, long>, LambdaPolynomial>& terms() const { return terms_; }

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries operator-() const;
  BiSeries& scale(const LambdaPolynomial& c);

  // Adds A(z1) * B(z2); the window shrinks to the factors' truncations.
  void add_outer_product(const LaurentSeries& a, const LaurentSeries& b);

  BiSeries d_dz2() const;

  // The diagonal kernel sum_{k>=1} k z1^{k-1} z2^{-k-1} truncated to the window.
  static BiSeries diagonal_kernel(long n1, long n2);

  // Profile of z2^b as a series in z1 (exact through n1()).
  LaurentSeries z2_profile(long b) const;

  std::set<long> z2_exponents_below(long b) const;
  long min_z1_exponent() const;  // 1 when empty

  // Values lambda_degree(coefficient) - a - b over stored terms.
  std::set<long> homogeneity_offsets() const;

private:
  void insert_term(long a, long b, const LambdaPolynomial& c);
  void prune();

  long n1_ = kInfOrder;
  long n2_ = kInfOrder;
  long floor_ = -kInfOrder;
  std::map<std::pair<long, long>, LambdaPolynomial> terms_;
};

}  // namespace nssigma
