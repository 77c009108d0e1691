#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nssigma/graded.hpp"
#include "nssigma/rational.hpp"

namespace nssigma {

// Polynomial in the bilinear derivative symbols D_1, D_2, ...; a monomial
// D^a acts on an ordered pair by
//   D^a f.g = sum_{b <= a} (-1)^|a-b| prod_i C(a_i, b_i) (d^b f)(d^(a-b) g).
// Exponent vectors reuse the Mono layout of GradedSeries (weight of D_i = i).
class HirotaOperator {
public:
  HirotaOperator() = default;

  static HirotaOperator kp();          // D1^4 + 3 D2^2 - 4 D1 D3
  static HirotaOperator kdv();         // D1^4 - 4 D1 D3
  static HirotaOperator boussinesq();  // D1^4 + 3 D2^2

  HirotaOperator& add_term(Mono a, const Rational& c);
  const std::map<Mono, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  long weight() const;  // max over monomials of sum i*a_i

  HirotaOperator& operator+=(const HirotaOperator& o);
  HirotaOperator& scale(const Rational& c);

  // Keeps only monomials of even total degree sum a_i.  Odd-degree monomials
  // kill every f.f by the antisymmetry of the defining shift, so dropping
  // them loses nothing when both arguments coincide.
  HirotaOperator even_part() const;

  GradedSeries apply(const GradedSeries& f, const GradedSeries& g) const;

  std::string str() const;

private:
  std::map<Mono, Rational> terms_;
};

// Coefficient operators of the bilinear residue identity
//   sum_j p_j(-2y) p_{j+1}(Dt) exp(sum_l y_l D_l) tau.tau = 0,
// Dt = (D_1, D_2/2, D_3/3, ...), one operator per y-monomial.  Returns the
// first `count` y-monomials (weight order, then the partition order used
// everywhere else) whose operator survives even_part(); each entry carries
// the y-exponent vector and the surviving operator.  The first nontrivial
// entry, at y_3, is -1/12 times the KP bilinear form.
std::vector<std::pair<Mono, HirotaOperator>> generating_equations(std::size_t count);

}  // namespace nssigma
