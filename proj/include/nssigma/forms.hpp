#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nssigma/biseries.hpp"
#include "nssigma/curve.hpp"
#include "nssigma/laurent.hpp"

namespace nssigma {

// Residue pairing <omega, eta> = Res_z (int omega) * eta of two differentials
// given by the series of their dz-coefficients.  Integration throws when a
// z^-1 term would force a logarithmic antiderivative.
LambdaPolynomial residue_pairing(const LaurentSeries& omega, const LaurentSeries& eta);

// Differentials attached to the curve, all expanded at the point at infinity:
//
//  * first kind: du_{w_i} = -f_{g+1-i} dx / f_y for the gaps w_1 < .. < w_g,
//    with leading term z^(w_i - 1) dz and coefficient matrix b;
//  * the constants c_j read off from log(z^(1-g) sqrt(du_{w_g}/dz));
//  * second kind partners dr_i with principal part d(-z^(-w_i)) + lower-order
//    poles, normalized by <du_{w_i}, dr_j> = delta_ij and <dr_i, dr_j> = 0;
//  * the regular kernel qhat of the symmetrized fundamental form.
//
// The dr are produced from the ansatz dr_i = sum_k beta_ik f_k dx/f_y over
// the basis monomials of pole order 2g .. w_i + 2g - 1, plus a first-kind
// correction fixing the gap-row block of qhat to the requested gauge.  When
// the polar matching or the symmetry of qhat fails, the constructor throws
// "no symmetric fundamental form in ansatz".
class KleinianForms {
public:
  KleinianForms(CurveModel curve, long weight,
                std::vector<std::vector<LambdaPolynomial>> gauge = {});

  const CurveModel& curve() const { return curve_; }
  const Semigroup& semigroup() const { return semi_; }
  long weight() const { return weight_; }
  long genus() const { return semi_.genus(); }
  const std::vector<std::vector<LambdaPolynomial>>& gauge() const { return gauge_; }

  // 1-based gap index i <= g.
  const LaurentSeries& du(std::size_t i) const;
  const LaurentSeries& dr(std::size_t i) const;

  // b(i, j): z^(j-1) coefficient of du_{w_i}, 1 <= j <= weight.  Zero below
  // the leading index w_i and at every j divisible by n; b(i, w_i) = 1.
  const LambdaPolynomial& b(std::size_t i, std::size_t j) const;

  // c(j), 1 <= j <= weight; homogeneous of degree j, zero unless the curve
  // contributes in that degree.
  const LambdaPolynomial& c(std::size_t j) const;
  std::vector<LambdaPolynomial> c_vector() const;  // c(1) .. c(weight)

  // qhat(i, j), 1 <= i, j <= weight: z1^(i-1) z2^(j-1) coefficient of the
  // regularized fundamental form.  Symmetric; homogeneous of degree i + j.
  const LambdaPolynomial& qhat(std::size_t i, std::size_t j) const;

  // d/dz2 slice of the unsymmetrized fundamental form; exposed for tests.
  const BiSeries& d2omega() const { return d2omega_; }

  // First (i, j) with qhat(i, j) != 0 although n divides an index, if any.
  // Such entries must vanish: the flows t_{nk} act trivially on the form.
  std::optional<std::string> qhat_pattern_violation() const;

private:
  void build_first_kind(CurveExpansions& exp, const LaurentSeries& dxfy);
  void build_constants();
  void build_fundamental_form(CurveExpansions& exp, const LaurentSeries& dxfy);
  void solve_second_kind(CurveExpansions& exp, const LaurentSeries& dxfy);

  CurveModel curve_;
  Semigroup semi_;
  long weight_;
  std::vector<std::vector<LambdaPolynomial>> gauge_;

  std::vector<LaurentSeries> du_;
  std::vector<std::vector<LambdaPolynomial>> b_;  // g x weight
  std::vector<LambdaPolynomial> c_;               // weight entries, c_[j-1]
  BiSeries d2omega_;
  std::vector<LaurentSeries> dr_;
  std::vector<std::vector<LambdaPolynomial>> qhat_;  // weight x weight
};

}  // namespace nssigma
