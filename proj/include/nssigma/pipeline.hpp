#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nssigma/forms.hpp"
#include "nssigma/frame.hpp"
#include "nssigma/sigma.hpp"
#include "nssigma/tau.hpp"

namespace nssigma {

struct RunConfig {
  CurveModel curve;
  long weight = 0;
  unsigned jobs = 1;
  std::vector<std::vector<LambdaPolynomial>> gauge;  // empty = zero block
};

// Everything the commands need, built once: the Schur expansion, the series
// over t, the differential data, and sigma over u.
struct SigmaBundle {
  TauFunction tau;
  std::shared_ptr<const VarFamily> tfam;
  GradedSeries tau_t;
  std::shared_ptr<KleinianForms> forms;
  std::shared_ptr<const VarFamily> ufam;
  GradedSeries sigma_u;
};

TauFunction run_tau(const RunConfig& cfg);
SigmaBundle run_bundle(const RunConfig& cfg);

// The full property suite: leading term and vanishing outside the cone,
// homogeneity, t1 restriction, KP and the residue family, reduction,
// differential/pairing structure, and the factorization.
std::vector<CheckResult> verify_suite(const RunConfig& cfg,
                                      std::size_t generating_count = 4);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace nssigma
