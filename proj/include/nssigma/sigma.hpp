#pragma once

#include <memory>
#include <vector>

#include "nssigma/forms.hpp"
#include "nssigma/graded.hpp"
#include "nssigma/tau.hpp"

namespace nssigma {

// Variables u_{w_1}, ..., u_{w_g} with weights the gap values.
std::shared_ptr<const VarFamily> u_family(const Semigroup& semi);

// The quadratic-plus-linear exponent sum_j c(j) t_j - 1/2 sum_{jk} qhat(j,k) t_j t_k
// as a series over `fam` truncated at `trunc`.
GradedSeries gauge_exponent(const KleinianForms& forms,
                            const std::shared_ptr<const VarFamily>& fam, long trunc);

// Images of t_1..t_W under inverting u_{w_i} = sum_k b(i, w_k) t_{w_k} on the
// gap variables; every non-gap t_j maps to zero.
std::vector<GradedSeries> t_images_in_u(const KleinianForms& forms,
                                        const std::shared_ptr<const VarFamily>& tfam,
                                        const std::shared_ptr<const VarFamily>& ufam);

// sigma(u) = [exp(gauge_exponent) * tau](t(u)).  Leading term is the Schur
// polynomial of the gap partition in the u's with coefficient 1.
GradedSeries build_sigma(const GradedSeries& tau_t, const KleinianForms& forms);

// The defining factorization read backwards: substituting the full columns
// u_{w_i} = sum_{j=1}^W b(i, j) t_j into sigma must reproduce
// exp(gauge_exponent) * tau identically as a series in t_1..t_W.
CheckResult factorization_check(const GradedSeries& tau_t, const GradedSeries& sigma_u,
                                const KleinianForms& forms);

// Classical odd sigma of y^2 = 4x^3 - g2 x - g3 through total degree `weight`,
// over a single-variable family of weight 1:
//   sigma = u exp(-sum_{k>=2} a_k u^(2k) / (2k(2k-1))),
//   a_2 = g2/20, a_3 = g3/28, a_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} a_m a_{k-m}.
// Computed straight from this recursion, independent of the curve pipeline.
GradedSeries weierstrass_sigma(const std::shared_ptr<const VarFamily>& fam,
                               const LambdaPolynomial& g2, const LambdaPolynomial& g3,
                               long weight);

}  // namespace nssigma
