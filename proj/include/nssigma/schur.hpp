#pragma once

#include <map>
#include <memory>
#include <vector>

#include "nssigma/graded.hpp"
#include "nssigma/partition.hpp"

namespace nssigma {

// Polynomials p_j(t) defined by sum_j p_j z^j = exp(sum_{i>=1} t_i z^i),
// and Schur polynomials via s_mu = det(p_{mu_i - i + j})_{1<=i,j<=l}.
// Each p_j is homogeneous of weight j under wt(t_i) = i, so s_mu is
// homogeneous of weight |mu|. Results are cached per calculator.
class SchurCalculator {
public:
  SchurCalculator(std::shared_ptr<const VarFamily> fam, long trunc);

  const GradedSeries& p(long j);  // zero for j < 0 or j > trunc
  const GradedSeries& schur(const Partition& mu);

  std::shared_ptr<const VarFamily> family() const { return fam_; }
  long trunc() const { return trunc_; }

private:
  GradedSeries minor_det(const std::vector<long>& shift, unsigned mask,
                         std::map<unsigned, GradedSeries>& memo);

  std::shared_ptr<const VarFamily> fam_;
  long trunc_;
  GradedSeries zero_;
  std::vector<GradedSeries> pcache_;
  std::map<Partition, GradedSeries> scache_;
};

// Variables t_1..t_count of weights 1..count.
std::shared_ptr<const VarFamily> time_family(std::size_t count);

}  // namespace nssigma
