#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nssigma/frame.hpp"
#include "nssigma/hirota.hpp"
#include "nssigma/schur.hpp"

namespace nssigma {

// Schur expansion of the tau function of a curve point: coefficients xi_mu
// for every mu containing the gap partition with |mu| <= weight, each a
// polynomial in the curve coefficients, homogeneous of degree |mu| - |leading|.
// The leading coefficient xi_leading is 1.
struct TauFunction {
  CurveModel curve;
  Partition leading;
  long weight = 0;
  // Nonzero coefficients only, in enumeration order.
  std::vector<std::pair<Partition, LambdaPolynomial>> xi;

  const LambdaPolynomial* find(const Partition& mu) const;
};

TauFunction build_tau(FrameMatrix& frame, long weight, unsigned jobs = 1);

// tau as a series in t_1..t_weight, exact through total weight `weight`.
GradedSeries tau_series(const TauFunction& tau, SchurCalculator& calc);

// Outcome of one structural verification; detail carries the first offending
// monomial or value when the check fails.
struct CheckResult {
  std::string name;
  long weight_bound = 0;
  bool pass = false;
  std::string detail;
};

// First monomial (weight order, then lex) whose coefficient is nonzero, if any.
std::optional<std::string> first_nonzero_monomial(const GradedSeries& s);

// Every xi_mu is homogeneous of degree |mu| - |leading|, and tau itself has a
// single total weight |leading| once each t_i counts i and each lambda counts
// minus its own degree.
CheckResult homogeneity_check(const TauFunction& tau);

// The stored terms of s all sit in a single total weight (monomial weight
// minus coefficient degree) equal to `expected`.
CheckResult total_weight_check(const std::string& name, const GradedSeries& s,
                               long expected);

// tau(t1, 0, 0, ...) = d * t1^|leading| * (1 + higher), d the products-of-
// distances coefficient of s_leading.
CheckResult t1_restriction_check(const TauFunction& tau, SchurCalculator& calc);

// H tau.tau = 0 through total weight 2*weight + ... as bounded by the product
// truncation; reports the trusted bound weight + |leading| - weight(H).
CheckResult bilinear_check(const std::string& name, const HirotaOperator& h,
                           const GradedSeries& tau_t);

// The first `count` nontrivial coefficient equations of the bilinear residue
// identity, each applied to tau.tau.
std::vector<CheckResult> generating_check(const GradedSeries& tau_t, std::size_t count);

// d/dt_{nk} tau = -c_{nk} tau for every multiple nk <= weight, with the
// constants c supplied by the caller (c[i-1] pairs with t_i).  Verified
// through total weight `weight` - nk.
CheckResult reduction_check(const TauFunction& tau, const GradedSeries& tau_t,
                            const std::vector<LambdaPolynomial>& c);

// Bilinear form of the reduced hierarchy (KdV for n = 2, Boussinesq for
// n = 3) on exp(sum c_i t_i) tau with every t_{nk} set to zero.
CheckResult reduced_equation_check(const TauFunction& tau, const GradedSeries& tau_t,
                                   const std::vector<LambdaPolynomial>& c);

}  // namespace nssigma
