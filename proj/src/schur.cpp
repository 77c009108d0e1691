#include "nssigma/schur.hpp"

#include <bit>
#include <stdexcept>

namespace nssigma {

std::shared_ptr<const VarFamily> time_family(std::size_t count) {
  return VarFamily::consecutive("t", static_cast<int>(count));
}

SchurCalculator::SchurCalculator(std::shared_ptr<const VarFamily> fam, long trunc)
    : fam_(std::move(fam)), trunc_(trunc), zero_(fam_, trunc) {
  if (!fam_) throw std::invalid_argument("schur calculator needs a variable family");
  pcache_.push_back(GradedSeries::constant(fam_, Rational(1), trunc_));
}

const GradedSeries& SchurCalculator::p(long j) {
  if (j < 0 || j > trunc_) return zero_;
  const std::size_t count = fam_->weights.size();
  while (static_cast<long>(pcache_.size()) <= j) {
    const long k = static_cast<long>(pcache_.size());
    // k p_k = sum_{i=1..k} i t_i p_{k-i}
    GradedSeries acc(fam_, trunc_);
    for (long i = 1; i <= k; ++i) {
      if (static_cast<std::size_t>(i) > count || fam_->weights[static_cast<std::size_t>(i - 1)] != i)
        break;  // variables are t_1, t_2, ... with weight == index
      GradedSeries term = GradedSeries::variable(fam_, static_cast<std::size_t>(i - 1), trunc_);
      term = term * pcache_[static_cast<std::size_t>(k - i)];
      acc += term.scale(Rational(i));
    }
    acc.scale(Rational(1, k));
    pcache_.push_back(std::move(acc));
  }
  return pcache_[static_cast<std::size_t>(j)];
}

GradedSeries SchurCalculator::minor_det(const std::vector<long>& shift, unsigned mask,
                                        std::map<unsigned, GradedSeries>& memo) {
  if (mask == 0) return GradedSeries::constant(fam_, Rational(1), trunc_);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::size_t l = shift.size();
  const std::size_t row = l - static_cast<std::size_t>(std::popcount(mask));
  GradedSeries det(fam_, trunc_);
  int sign = 1;
  for (unsigned j = 0; j < l; ++j) {
    if (!(mask & (1u << j))) continue;
    const GradedSeries& entry = p(shift[row] + static_cast<long>(j));
    if (!entry.stored_zero()) {
      GradedSeries term = entry * minor_det(shift, mask & ~(1u << j), memo);
      if (sign < 0) term = -term;
      det += term;
    }
    sign = -sign;
  }
  memo.emplace(mask, det);
  return det;
}

const GradedSeries& SchurCalculator::schur(const Partition& mu) {
  auto it = scache_.find(mu);
  if (it != scache_.end()) return it->second;
  const std::size_t l = mu.length();
  if (l == 0)
    return scache_.emplace(mu, GradedSeries::constant(fam_, Rational(1), trunc_)).first->second;
  if (l >= 32) throw std::invalid_argument("partition too long");
  std::vector<long> shift(l);
  for (std::size_t i = 0; i < l; ++i) shift[i] = mu.part(i) - static_cast<long>(i);
  // Build every h_j the determinant can touch before taking references into
  // the cache: a later p() call would grow the vector under them.
  p(std::min(trunc_, shift[0] + static_cast<long>(l) - 1));
  std::map<unsigned, GradedSeries> memo;
  GradedSeries det = minor_det(shift, (1u << l) - 1u, memo);
  return scache_.emplace(mu, std::move(det)).first->second;
}

}  // namespace nssigma
