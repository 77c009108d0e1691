#include "nssigma/sigma.hpp"

#include <sstream>
#include <stdexcept>

namespace nssigma {

std::shared_ptr<const VarFamily> u_family(const Semigroup& semi) {
  std::vector<int> weights;
  for (long w : semi.gaps()) weights.push_back(static_cast<int>(w));
  return VarFamily::weighted("u", weights);
}

GradedSeries gauge_exponent(const KleinianForms& forms,
                            const std::shared_ptr<const VarFamily>& fam, long trunc) {
  const long W = forms.weight();
  if (trunc > W) throw std::invalid_argument("truncation beyond the form data");
  if (static_cast<long>(fam->size()) < trunc)
    throw std::invalid_argument("variable family too small for the truncation");
  GradedSeries arg(fam, trunc);
  for (long j = 1; j <= trunc; ++j) {
    const LambdaPolynomial& cj = forms.c(static_cast<std::size_t>(j));
    if (cj.is_zero()) continue;
    Mono m(static_cast<std::size_t>(j), 0);
    m[static_cast<std::size_t>(j - 1)] = 1;
    arg.set_coeff(m, cj);
  }
  for (long j = 1; j <= trunc; ++j)
    for (long k = j; k <= trunc && j + k <= trunc; ++k) {
      LambdaPolynomial q = forms.qhat(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
      if (q.is_zero()) continue;
      // Off-diagonal pairs appear twice in the symmetric double sum.
      q.scale(j == k ? Rational(-1, 2) : Rational(-1));
      Mono m(static_cast<std::size_t>(k), 0);
      m[static_cast<std::size_t>(j - 1)] += 1;
      m[static_cast<std::size_t>(k - 1)] += 1;
      arg.set_coeff(m, q);
    }
  return arg;
}

std::vector<GradedSeries> t_images_in_u(const KleinianForms& forms,
                                        const std::shared_ptr<const VarFamily>& tfam,
                                        const std::shared_ptr<const VarFamily>& ufam) {
  const long g = forms.genus();
  const std::vector<long>& gaps = forms.semigroup().gaps();
  std::vector<GradedSeries> images(tfam->size(), GradedSeries(ufam));

  // Back-substitution through the unitriangular gap block of b.
  std::vector<GradedSeries> texpr(static_cast<std::size_t>(g));
  for (long i = g; i >= 1; --i) {
    GradedSeries e = GradedSeries::variable(ufam, static_cast<std::size_t>(i - 1));
    for (long k = i + 1; k <= g; ++k) {
      LambdaPolynomial f = forms.b(static_cast<std::size_t>(i),
                                   static_cast<std::size_t>(gaps[static_cast<std::size_t>(k - 1)]));
      if (f.is_zero()) continue;
      GradedSeries t = texpr[static_cast<std::size_t>(k - 1)];
      f.scale(Rational(-1));
      t.scale(f);
      e += t;
    }
    texpr[static_cast<std::size_t>(i - 1)] = std::move(e);
  }
  for (long i = 1; i <= g; ++i) {
    std::size_t var = static_cast<std::size_t>(gaps[static_cast<std::size_t>(i - 1)] - 1);
    if (var < images.size()) images[var] = texpr[static_cast<std::size_t>(i - 1)];
  }
  return images;
}

GradedSeries build_sigma(const GradedSeries& tau_t, const KleinianForms& forms) {
  const long W = tau_t.trunc();
  if (W > forms.weight())
    throw std::invalid_argument("form data truncated below the tau series");
  GradedSeries prefactor = exp(gauge_exponent(forms, tau_t.family(), W));
  GradedSeries sigma_t = prefactor * tau_t;
  auto ufam = u_family(forms.semigroup());
  return sigma_t.substitute(t_images_in_u(forms, tau_t.family(), ufam), ufam);
}

CheckResult factorization_check(const GradedSeries& tau_t, const GradedSeries& sigma_u,
                                const KleinianForms& forms) {
  const long W = tau_t.trunc();
  CheckResult r{"tau-sigma factorization", W, true, ""};
  GradedSeries lhs = exp(gauge_exponent(forms, tau_t.family(), W)) * tau_t;

  const long g = forms.genus();
  std::vector<GradedSeries> uimages(sigma_u.family()->size(), GradedSeries(tau_t.family()));
  for (long i = 1; i <= g; ++i) {
    GradedSeries img(tau_t.family(), kInfOrder);
    for (long j = 1; j <= W; ++j) {
      LambdaPolynomial f = forms.b(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (f.is_zero()) continue;
      Mono m(static_cast<std::size_t>(j), 0);
      m[static_cast<std::size_t>(j - 1)] = 1;
      img.set_coeff(m, f);
    }
    uimages[static_cast<std::size_t>(i - 1)] = std::move(img);
  }
  GradedSeries rhs = sigma_u.substitute(uimages, tau_t.family());

  GradedSeries diff = lhs - rhs;
  if (!diff.stored_zero()) {
    r.pass = false;
    r.detail = first_nonzero_monomial(diff).value_or("?");
  }
  return r;
}

GradedSeries weierstrass_sigma(const std::shared_ptr<const VarFamily>& fam,
                               const LambdaPolynomial& g2, const LambdaPolynomial& g3,
                               long weight) {
  if (fam->size() != 1 || fam->weights[0] != 1)
    throw std::invalid_argument("expected a single variable of weight 1");
  std::vector<LambdaPolynomial> a(static_cast<std::size_t>(weight / 2) + 2);
  if (a.size() > 2) a[2] = g2 * LambdaPolynomial(Rational(1, 20));
  if (a.size() > 3) a[3] = g3 * LambdaPolynomial(Rational(1, 28));
  for (std::size_t k = 4; k < a.size(); ++k) {
    LambdaPolynomial sum;
    for (std::size_t m = 2; m + 2 <= k; ++m) sum += a[m] * a[k - m];
    sum.scale(Rational(3) / Rational(static_cast<long>((2 * k + 1) * (k - 3))));
    a[k] = sum;
  }
  GradedSeries arg(fam, weight);
  for (std::size_t k = 2; k < a.size(); ++k) {
    long e = static_cast<long>(2 * k);
    if (e > weight || a[k].is_zero()) continue;
    LambdaPolynomial c = a[k];
    c.scale(Rational(-1) / Rational(e * (e - 1)));
    Mono m{static_cast<std::uint16_t>(e)};
    arg.set_coeff(m, c);
  }
  GradedSeries u1 = GradedSeries::variable(fam, 0);
  return (exp(arg) * u1).truncated(weight);
}

}  // namespace nssigma
