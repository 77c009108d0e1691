#include "nssigma/tau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nssigma {

const LambdaPolynomial* TauFunction::find(const Partition& mu) const {
  auto it = std::lower_bound(
      xi.begin(), xi.end(), mu,
      [](const auto& entry, const Partition& p) { return entry.first < p; });
  if (it != xi.end() && it->first == mu) return &it->second;
  return nullptr;
}

TauFunction build_tau(FrameMatrix& frame, long weight, unsigned jobs) {
  Partition lam = frame.semigroup().gap_partition();
  if (weight < lam.weight())
    throw std::invalid_argument("weight bound below the leading weight");
  if (weight > frame.weight_bound())
    throw std::invalid_argument("frame truncation below the requested weight");

  std::vector<Partition> mus = partitions_containing(lam, weight - lam.weight());
  std::vector<const LambdaPolynomial*> vals = frame.plucker_batch(mus, jobs);

  TauFunction tau;
  tau.curve = frame.curve();
  tau.leading = lam;
  tau.weight = weight;
  for (std::size_t i = 0; i < mus.size(); ++i)
    if (!vals[i]->is_zero()) tau.xi.emplace_back(mus[i], *vals[i]);

  const LambdaPolynomial* lead = tau.find(lam);
  if (lead == nullptr || !(*lead == LambdaPolynomial(Rational(1))))
    throw std::logic_error("leading Schur coefficient is not 1");
  return tau;
}

GradedSeries tau_series(const TauFunction& tau, SchurCalculator& calc) {
  if (calc.trunc() < tau.weight)
    throw std::invalid_argument("calculator truncation below tau weight");
  GradedSeries acc(calc.family(), tau.weight);
  for (const auto& [mu, xi] : tau.xi) {
    GradedSeries term = calc.schur(mu);
    term.scale(xi);
    acc += term;
  }
  return acc.truncated(tau.weight);
}

std::optional<std::string> first_nonzero_monomial(const GradedSeries& s) {
  for (const auto& [m, c] : s.sorted_terms()) {
    if (c->is_zero()) continue;
    std::ostringstream out;
    out << mono_str(m, *s.family()) << " with coefficient " << c->str();
    return out.str();
  }
  return std::nullopt;
}

CheckResult homogeneity_check(const TauFunction& tau) {
  CheckResult r{"xi homogeneity", tau.weight, true, ""};
  if (!tau.curve.graded()) {
    r.detail = "skipped: nonzero assigned coefficients void the parameter grading";
    return r;
  }
  for (const auto& [mu, xi] : tau.xi) {
    long want = mu.weight() - tau.leading.weight();
    if (!xi.is_homogeneous_of(want)) {
      r.pass = false;
      std::ostringstream out;
      out << "xi_" << mu.str() << " = " << xi.str() << " is not homogeneous of degree "
          << want;
      r.detail = out.str();
      return r;
    }
  }
  return r;
}

CheckResult total_weight_check(const std::string& name, const GradedSeries& s,
                               long expected) {
  CheckResult r{name, s.trunc(), true, ""};
  std::set<long> ws = s.total_weights();
  if (!(ws.empty() || (ws.size() == 1 && *ws.begin() == expected))) {
    r.pass = false;
    std::ostringstream out;
    out << "total weights {";
    for (long w : ws) out << w << ",";
    out << "} instead of {" << expected << "}";
    r.detail = out.str();
  }
  return r;
}

CheckResult t1_restriction_check(const TauFunction& tau, SchurCalculator& calc) {
  CheckResult r{"t1 restriction", tau.weight, true, ""};
  GradedSeries full = tau_series(tau, calc);
  GradedSeries restricted = full.zeroed_vars([](std::size_t v) { return v != 0; });
  Rational d = schur_t1_coefficient(tau.leading);
  long lw = tau.leading.weight();
  Mono lead;
  if (lw > 0) lead.push_back(static_cast<std::uint16_t>(lw));
  if (restricted.valuation() < lw) {
    r.pass = false;
    r.detail = "terms below the leading weight: " +
               first_nonzero_monomial(restricted).value_or("?");
    return r;
  }
  const LambdaPolynomial& c = restricted.coeff(lead);
  if (!(c == LambdaPolynomial(d))) {
    r.pass = false;
    r.detail = "t1^" + std::to_string(lw) + " coefficient is " + c.str() +
               ", expected " + d.str();
  }
  return r;
}

CheckResult bilinear_check(const std::string& name, const HirotaOperator& h,
                           const GradedSeries& tau_t) {
  GradedSeries res = h.apply(tau_t, tau_t);
  CheckResult r{name, res.trunc(), res.stored_zero(), ""};
  if (!r.pass) r.detail = first_nonzero_monomial(res).value_or("?");
  return r;
}

std::vector<CheckResult> generating_check(const GradedSeries& tau_t, std::size_t count) {
  std::vector<CheckResult> out;
  auto fam = tau_t.family();
  for (const auto& [alpha, h] : generating_equations(count)) {
    std::ostringstream name;
    name << "residue coefficient [";
    bool first = true;
    for (std::size_t l = 0; l < alpha.size(); ++l) {
      if (alpha[l] == 0) continue;
      if (!first) name << "*";
      first = false;
      name << "y" << (l + 1);
      if (alpha[l] > 1) name << "^" << alpha[l];
    }
    name << "]";
    if (h.weight() > static_cast<long>(fam->size())) {
      // The operator would differentiate along a variable outside the family.
      CheckResult r{name.str(), 0, false, "operator weight exceeds variable count"};
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(bilinear_check(name.str(), h, tau_t));
  }
  return out;
}

CheckResult reduction_check(const TauFunction& tau, const GradedSeries& tau_t,
                            const std::vector<LambdaPolynomial>& c) {
  const long n = tau.curve.n;
  CheckResult r{"reduction along t_n multiples", tau.weight - n, true, ""};
  if (static_cast<long>(c.size()) < tau.weight)
    throw std::invalid_argument("need one constant per variable");
  for (long m = n; m <= tau.weight; m += n) {
    GradedSeries lhs = tau_t.derivative(static_cast<std::size_t>(m - 1));
    GradedSeries shift = tau_t;
    shift.scale(c[static_cast<std::size_t>(m - 1)]);
    lhs += shift;
    GradedSeries res = lhs.truncated(tau.weight - m);
    if (!res.stored_zero()) {
      r.pass = false;
      std::ostringstream out;
      out << "(d/dt_" << m << " + c_" << m << ") tau != 0 at "
          << first_nonzero_monomial(res).value_or("?");
      r.detail = out.str();
      return r;
    }
  }
  return r;
}

CheckResult reduced_equation_check(const TauFunction& tau, const GradedSeries& tau_t,
                                   const std::vector<LambdaPolynomial>& c) {
  const long n = tau.curve.n;
  HirotaOperator h;
  std::string name;
  if (n == 2) {
    h = HirotaOperator::kdv();
    name = "KdV bilinear form on the gauged restriction";
  } else if (n == 3) {
    h = HirotaOperator::boussinesq();
    name = "Boussinesq bilinear form on the gauged restriction";
  } else {
    throw std::invalid_argument("no reduced bilinear form beyond n = 3");
  }
  if (static_cast<long>(c.size()) < tau.weight)
    throw std::invalid_argument("need one constant per variable");

  GradedSeries arg(tau_t.family(), tau.weight);
  for (long i = 1; i <= tau.weight; ++i) {
    if (c[static_cast<std::size_t>(i - 1)].is_zero()) continue;
    Mono m(static_cast<std::size_t>(i), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    arg.set_coeff(m, c[static_cast<std::size_t>(i - 1)]);
  }
  GradedSeries gauged = exp(arg) * tau_t;
  GradedSeries reduced = gauged.zeroed_vars(
      [n](std::size_t v) { return static_cast<long>(v + 1) % n == 0; });
  return bilinear_check(name, h, reduced);
}

}  // namespace nssigma
