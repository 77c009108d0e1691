#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nssigma/rational.hpp"

namespace nssigma {

// Weakly decreasing positive parts. The empty partition is allowed.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  long weight() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  // Weight first; ties in lexicographic order with the larger first part
  // sorting earlier: (2) before (1,1), (3) before (2,1) before (1,1,1).
  // This is the enumeration order used for every listing we emit.
  bool operator<(const Partition& o) const;

  std::string str() const;  // "(3,1,1)" / "()"

  static Partition parse(const std::string& text);

private:
  std::vector<long> parts_;  // decreasing, no zeros
};

// Strictly decreasing exponents mu_i = lambda_i + l - i for ambient length
// l >= length(lambda); padding parts are zero, so the tail is l-1-i, ..., 0.
std::vector<long> strict_indices(const Partition& p, std::size_t ambient_length);
Partition partition_from_strict_indices(const std::vector<long>& decreasing);

// Characteristic sequence rho(-1) > rho(-2) > ... with rho(-i) = p_i - i,
// eventually rho(-i) = -i. Stored as the prefix of the first `count` values.
std::vector<long> rho_from_partition(const Partition& p, std::size_t count);
// Inverse: parts p_i = rho(-i) + i; the prefix must extend at least until the
// identity tail rho(-i) = -i is reached.
Partition partition_from_rho(const std::vector<long>& rho);

// all partitions of total weight w, in (weight, lex) order
std::vector<Partition> partitions_of_weight(long w);
// all partitions with weight <= w, in (weight, lex) order
std::vector<Partition> partitions_up_to_weight(long w);

// Partitions mu with mu >= lam containment-wise (mu_i >= lam_i) and
// weight(mu) - weight(lam) <= budget, in (weight, lex) order.
std::vector<Partition> partitions_containing(const Partition& lam, long budget);

// d_mu = prod_{i<j}(m_i - m_j) / prod_i m_i!  with  m_i = mu_i + l - i;
// this is the coefficient of t1^{|mu|} in s_mu(t1, 0, 0, ...). Always > 0.
Rational schur_t1_coefficient(const Partition& mu);

}  // namespace nssigma
