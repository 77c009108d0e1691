#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nssigma/laurent.hpp"

namespace nssigma {

// Ordered variable list with positive integer weights, e.g. t_1..t_M with
// weight(t_i) = i, or the gap variables u_{w_1}..u_{w_g} with weight w_i.
struct VarFamily {
  std::string tag;
  std::vector<int> weights;
  std::vector<std::string> labels;

  std::size_t size() const { return weights.size(); }
  static std::shared_ptr<const VarFamily> consecutive(const std::string& tag, int count);
  static std::shared_ptr<const VarFamily> weighted(const std::string& tag,
                                                   const std::vector<int>& weights);
  bool same_as(const VarFamily& o) const { return tag == o.tag && weights == o.weights; }
};

using Mono = std::vector<std::uint16_t>;  // exponents, trailing zeros trimmed

long mono_weight(const Mono& m, const VarFamily& fam);
Mono mono_mul(const Mono& a, const Mono& b);
std::string mono_str(const Mono& m, const VarFamily& fam);

// Weight-graded series: finitely many monomials per weight, exact for weights
// <= trunc(). trunc() == kInfOrder marks an exact polynomial. Reading a
// coefficient past the truncation throws.
class GradedSeries {
public:
  GradedSeries() = default;  // exact zero with no family
  explicit GradedSeries(std::shared_ptr<const VarFamily> fam, long trunc = kInfOrder);

  static GradedSeries constant(std::shared_ptr<const VarFamily> fam, const LambdaPolynomial& c,
                               long trunc = kInfOrder);
  static GradedSeries variable(std::shared_ptr<const VarFamily> fam, std::size_t k,
                               long trunc = kInfOrder);

  const std::shared_ptr<const VarFamily>& family() const { return fam_; }
  long trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kInfOrder; }
  bool stored_zero() const { return terms_.empty(); }
  long valuation() const;  // lowest stored weight; kInfOrder when stored_zero()
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, LambdaPolynomial>& terms() const { return terms_; }

  const LambdaPolynomial& coeff(const Mono& m) const;  // throws past truncation
  void set_coeff(const Mono& m, LambdaPolynomial c);   // build helper, respects trunc

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }
  GradedSeries operator-() const;
  GradedSeries& scale(const LambdaPolynomial& c);
  GradedSeries pow(unsigned e) const;

  GradedSeries derivative(std::size_t var) const;  // d/d(var), trunc drops by its weight
  GradedSeries truncated(long w) const;

  // Substitute images[k] for variable k. Every image must be zero or have
  // valuation >= weight of the variable it replaces, which keeps the result
  // exact through min(trunc, image truncations as combined by the arithmetic).
  GradedSeries substitute(const std::vector<GradedSeries>& images,
                          const std::shared_ptr<const VarFamily>& target) const;

  // Zero out every term using a variable selected by the predicate.
  GradedSeries zeroed_vars(const std::function<bool(std::size_t)>& pred) const;

  GradedSeries map_coefficients(
      const std::function<LambdaPolynomial(const LambdaPolynomial&)>& fn) const;

  friend bool operator==(const GradedSeries& a, const GradedSeries& b);
  friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

  // Monomial weight minus coefficient lambda-degree, over all stored terms.
  std::set<long> total_weights() const;

  // Terms sorted by (weight, then exponent-lex); the canonical output order.
  std::vector<std::pair<Mono, const LambdaPolynomial*>> sorted_terms() const;

  std::string str() const;

private:
  void check_family(const GradedSeries& o) const;
  void insert_term(const Mono& m, const LambdaPolynomial& c);

  std::shared_ptr<const VarFamily> fam_;
  long trunc_ = kInfOrder;
  std::map<Mono, LambdaPolynomial> terms_;
};

GradedSeries exp(const GradedSeries& f);  // needs valuation >= 1 and finite trunc

}  // namespace nssigma
