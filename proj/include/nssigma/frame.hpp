#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "nssigma/curve.hpp"
#include "nssigma/laurent.hpp"
#include "nssigma/partition.hpp"

namespace nssigma {

// Determinant of a square matrix of coefficient polynomials, computed exactly.
// Cofactor expansion for small sizes, fraction-free Bareiss elimination (with
// row pivoting) above that; every division in the elimination is exact.
LambdaPolynomial exact_determinant(std::vector<std::vector<LambdaPolynomial>> m);

// The affine coordinate ring of the curve, viewed as a point of the big cell:
// column j holds the z-expansion of z^(g-1) f_j, indexed so that the exponent
// of z is the row index.  Column j has valuation g-1-nongap(j) with leading
// coefficient 1; rows are trusted through g-1+weight_bound.
//
// Columns are reduced to echelon form by subtracting multiples of earlier
// columns, so the reduced column j vanishes at every other column's pivot row.
// This is a unipotent change of basis: any minor over columns 1..m has the
// same value raw or reduced, which plucker() exploits as a self-check.
class FrameMatrix {
public:
  FrameMatrix(CurveModel curve, long weight_bound);

  const CurveModel& curve() const { return curve_; }
  const Semigroup& semigroup() const { return semi_; }
  long weight_bound() const { return weight_; }
  long genus() const { return semi_.genus(); }

  // Valuation of column j (1-based): g-1-nongap(j).
  long pivot_row(std::size_t j) const;

  std::size_t built_columns() const { return reduced_.size(); }
  void ensure_columns(std::size_t m);

  const LaurentSeries& raw_column(std::size_t j);
  const LaurentSeries& reduced_column(std::size_t j);

  // Minor over rows mu_i - i (i = 1..m) and columns 1..m where
  // m = max(length(mu), g) + extra.  Independent of extra >= 0: the extra
  // rows/columns only extend the matrix by a unitriangular block.
  LambdaPolynomial minor(const Partition& mu, std::size_t extra = 0,
                         bool use_raw = false);

  // Memoized minor with extra = 0.  These are the expansion coefficients of
  // the point over the Schur basis.
  const LambdaPolynomial& plucker(const Partition& mu);

  // Computes all requested minors, fanned out over `jobs` threads.  Results
  // land in input order, so output is identical for every job count.
  std::vector<const LambdaPolynomial*> plucker_batch(
      const std::vector<Partition>& mus, unsigned jobs);

private:
  LambdaPolynomial minor_of_built(const Partition& mu, std::size_t extra,
                                  bool use_raw) const;
  void check_structure() const;

  CurveModel curve_;
  Semigroup semi_;
  long weight_;
  std::unique_ptr<CurveExpansions> exp_;
  std::vector<LaurentSeries> raw_;
  std::vector<LaurentSeries> reduced_;
  std::map<Partition, LambdaPolynomial> cache_;
};

}  // namespace nssigma
