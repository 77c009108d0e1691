#include "nssigma/forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nssigma {

namespace {
const char* kAnsatzError = "no symmetric fundamental form in ansatz";
}

LambdaPolynomial residue_pairing(const LaurentSeries& omega, const LaurentSeries& eta) {
  LaurentSeries anti = omega.integral();
  // Only the z^-1 coefficient of anti * eta matters; walking the matching
  // diagonal skips the rest of the product.
  long t = std::min(sat_add(anti.trunc(), eta.window_lo()),
                    sat_add(eta.trunc(), anti.window_lo()));
  if (t < -1) throw std::out_of_range("residue pairing beyond truncation");
  LambdaPolynomial r;
  long lo = std::max(anti.window_lo(), -1 - eta.window_hi());
  long hi = std::min(anti.window_hi(), -1 - eta.window_lo());
  for (long i = lo; i <= hi; ++i) r += anti.coeff(i) * eta.coeff(-1 - i);
  return r;
}

KleinianForms::KleinianForms(CurveModel curve, long weight,
                             std::vector<std::vector<LambdaPolynomial>> gauge)
    : curve_(std::move(curve)),
      semi_(curve_.n, curve_.s),
      weight_(weight),
      gauge_(std::move(gauge)) {
  const long g = semi_.genus();
  if (weight_ < 2 * g || weight_ < 2)
    throw std::invalid_argument("weight bound too small for the form data");

  if (gauge_.empty())
    gauge_.assign(static_cast<std::size_t>(g),
                  std::vector<LambdaPolynomial>(static_cast<std::size_t>(g)));
  if (gauge_.size() != static_cast<std::size_t>(g))
    throw std::invalid_argument("gauge block must be genus x genus");
  for (std::size_t p = 0; p < gauge_.size(); ++p) {
    if (gauge_[p].size() != static_cast<std::size_t>(g))
      throw std::invalid_argument("gauge block must be genus x genus");
    for (std::size_t q = 0; q < gauge_.size(); ++q) {
      if (!(gauge_[p][q] == gauge_[q][p]))
        throw std::invalid_argument("gauge block must be symmetric");
      long want = semi_.gaps()[p] + semi_.gaps()[q];
      // On a curve with nonzero assigned coefficients the grading is gone and
      // any symmetric block is admissible.
      if (curve_.graded() && !gauge_[p][q].is_homogeneous_of(want))
        throw std::invalid_argument(
            "gauge entry must be homogeneous of the sum of its gap weights");
    }
  }

  const int n = curve_.n;
  const int s = curve_.s;
  // Deepest consumer: the right factors of the fundamental form, which are
  // shifted down by n per step of the visibility loop and then differentiated.
  // Every truncation-sensitive step below checks its own input, so this bound
  // only needs to be generous enough to clear those checks.
  long order = 2 * weight_ + static_cast<long>(s) * (n - 1) + n + s + 4;
  CurveExpansions exp(curve_, order);
  // Only the fundamental-form right factors consume the full order; the shared
  // dx/f_y factor feeds products read to far shallower depth, and homogeneity
  // ties coefficient size to exponent, so truncating it first keeps every
  // later multiplication small.
  const long depth = weight_ + 6 * g + n + s + 2;
  LaurentSeries dxfy =
      exp.dx_dz().truncated(depth) * exp.fy().truncated(depth).inverse();

  build_first_kind(exp, dxfy);
  build_constants();
  build_fundamental_form(exp, dxfy);
  solve_second_kind(exp, dxfy);
}

void KleinianForms::build_first_kind(CurveExpansions& exp, const LaurentSeries& dxfy) {
  const long g = semi_.genus();
  du_.clear();
  b_.assign(static_cast<std::size_t>(g),
            std::vector<LambdaPolynomial>(static_cast<std::size_t>(weight_)));
  for (long i = 1; i <= g; ++i) {
    LaurentSeries d = exp.basis_element(static_cast<std::size_t>(g + 1 - i)) * dxfy;
    d.scale(LambdaPolynomial(Rational(-1)));
    long w = semi_.gaps()[static_cast<std::size_t>(i - 1)];
    if (d.valuation() != w - 1)
      throw std::logic_error("first kind differential has the wrong leading order");
    if (!(d.coeff(w - 1) == LambdaPolynomial(Rational(1))))
      throw std::logic_error("first kind differential is not monic");
    if (d.trunc() < weight_ - 1)
      throw std::logic_error("expansion order too small for the first kind basis");
    for (long j = 1; j <= weight_; ++j)
      if (j - 1 >= d.valuation())
        b_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
            d.coeff(j - 1);
    // Deepest later read is the constants series, which shifts du_{w_g} up by
    // 2g - 2 and needs weight_ coefficients.
    du_.push_back(d.truncated(weight_ + 2 * (g - 1)));
  }
}

// Sum of c_i z^i / i is the logarithm of the half-form normalizer
// z^{-(g-1)} sqrt(du_{w_g}/dz).  The division by i mirrors the Miwa shift
// [z] = (z, z^2/2, z^3/3, ...): exp(-sum c_i t_i) enters wave functions
// through t -> t + [z], turning into exp(-sum c_i z^i / i), and that unit is
// the normalizer.  Dropping the i factor breaks the reduction identity
// (d/dt_{nk} + c_{nk}) tau = 0; the (2,3) curve pins both factors down.
void KleinianForms::build_constants() {
  const long g = semi_.genus();
  LaurentSeries h = du_[static_cast<std::size_t>(g - 1)].shifted(-(2 * g - 2));
  LaurentSeries r = log1(sqrt1(h));
  if (r.trunc() < weight_)
    throw std::logic_error("expansion order too small for the constants");
  c_.assign(static_cast<std::size_t>(weight_), LambdaPolynomial());
  for (long j = 1; j <= weight_; ++j) {
    c_[static_cast<std::size_t>(j - 1)] = r.coeff(j);
    c_[static_cast<std::size_t>(j - 1)].scale(Rational(j));
  }
}

void KleinianForms::build_fundamental_form(CurveExpansions& exp,
                                           const LaurentSeries& dxfy) {
  const int n = curve_.n;
  const long N1 = weight_ - 1;
  const long N2 = weight_ - 1;
  const long bmin = -(N1 + 2);
  const auto& space = *curve_.space;

  d2omega_ = BiSeries(N1, N2);
  // Columns below the floor are homogeneous of negative weight, hence zero in
  // the sum; installing the floor up front lets the accumulation skip them.
  d2omega_.drop_columns_below(bmin);
  for (int i = 0; i < n; ++i) {
    LaurentSeries a = exp.monomial(0, i) * dxfy;
    if (a.trunc() < N1)
      throw std::logic_error("expansion order too small for the fundamental form");
    a = a.truncated(N1);
    // G_i(x, y) = y^(n-1-i) - sum over coefficients with second index > i of
    // lambda_{k,l} x^k y^(l-1-i): the part of the defining polynomial with
    // nonnegative powers of y after dividing by y^(i+1).
    LaurentSeries gi = exp.monomial(0, n - 1 - i);
    for (std::size_t k = 0; k < space.size(); ++k) {
      auto [ki, kj] = space.index(k);
      if (kj < i + 1) continue;
      LaurentSeries term = exp.monomial(ki, kj - 1 - i);
      LambdaPolynomial coeff = curve_.coefficient(k);
      coeff.scale(Rational(-1));
      term.scale(coeff);
      gi = gi + term;
    }
    for (long m = 0;; ++m) {
      if (a.valuation() + n * (m + 1) > N1) break;
      LaurentSeries right = gi.shifted(-n * m).derivative();
      if (right.trunc() < N2)
        throw std::logic_error("expansion order too small for the fundamental form");
      d2omega_.add_outer_product(a.shifted(n * (m + 1)), right);
    }
  }
  if (d2omega_.n1() != N1 || d2omega_.n2() != N2)
    throw std::logic_error("fundamental form window collapsed");
  if (d2omega_.min_z1_exponent() < 0)
    throw std::logic_error("fundamental form has negative z1 exponents");
}

void KleinianForms::solve_second_kind(CurveExpansions& exp, const LaurentSeries& dxfy) {
  const long g = semi_.genus();
  const long W = weight_;
  const long N1 = W - 1;
  const long N2 = W - 1;
  const long bmin = -(N1 + 2);
  const std::vector<long>& gaps = semi_.gaps();

  BiSeries S = BiSeries::diagonal_kernel(N1, N2);
  S -= d2omega_;

  // Match every polar z2-column against the span of the first kind basis.
  std::vector<std::map<long, LambdaPolynomial>> polar(static_cast<std::size_t>(g));
  for (long bcol : S.z2_exponents_below(0)) {
    LaurentSeries col = S.z2_profile(bcol);
    std::vector<LambdaPolynomial> rho(static_cast<std::size_t>(g));
    for (long k = 1; k <= g; ++k) {
      LambdaPolynomial v = col.coeff(gaps[static_cast<std::size_t>(k - 1)] - 1);
      for (long i = 1; i < k; ++i) {
        LambdaPolynomial t = b(static_cast<std::size_t>(i),
                               static_cast<std::size_t>(gaps[static_cast<std::size_t>(k - 1)]));
        t = t * rho[static_cast<std::size_t>(i - 1)];
        v -= t;
      }
      rho[static_cast<std::size_t>(k - 1)] = v;
    }
    LaurentSeries residual = col;
    for (long i = 1; i <= g; ++i) {
      if (rho[static_cast<std::size_t>(i - 1)].is_zero()) continue;
      LaurentSeries t = du_[static_cast<std::size_t>(i - 1)].truncated(col.trunc());
      LambdaPolynomial f = rho[static_cast<std::size_t>(i - 1)];
      f.scale(Rational(-1));
      t.scale(f);
      residual = residual + t;
    }
    if (!residual.stored_zero()) throw std::runtime_error(kAnsatzError);
    for (long i = 1; i <= g; ++i) {
      const LambdaPolynomial& r = rho[static_cast<std::size_t>(i - 1)];
      if (r.is_zero()) continue;
      if (bcol == -1) throw std::runtime_error(kAnsatzError);
      polar[static_cast<std::size_t>(i - 1)][bcol] = r;
    }
  }

  // Pole-by-pole triangular solve over the basis monomials of order >= 2g.
  const long wg = gaps[static_cast<std::size_t>(g - 1)];
  std::map<long, LaurentSeries> ek;  // keyed by basis index
  for (long k = g + 1; k <= g + wg; ++k) {
    LaurentSeries e = exp.basis_element(static_cast<std::size_t>(k)) * dxfy;
    long pole = semi_.nongap(static_cast<std::size_t>(k)) - 2 * g + 2;
    if (e.valuation() != -pole ||
        !(e.coeff(-pole) == LambdaPolynomial(Rational(-1))))
      throw std::logic_error("second kind ansatz element has the wrong leading term");
    if (e.trunc() < N2)
      throw std::logic_error("expansion order too small for the second kind basis");
    ek.emplace(k, e.truncated(N2));
  }

  dr_.assign(static_cast<std::size_t>(g), LaurentSeries());
  for (long i = 1; i <= g; ++i) {
    const long wi = gaps[static_cast<std::size_t>(i - 1)];
    const auto& pol = polar[static_cast<std::size_t>(i - 1)];
    for (const auto& [bb, v] : pol)
      if (bb < -(wi + 1)) throw std::runtime_error(kAnsatzError);
    LaurentSeries acc;
    for (long k = g + wi; k >= g + 1; --k) {
      long pole = semi_.nongap(static_cast<std::size_t>(k)) - 2 * g + 2;
      LambdaPolynomial target;
      auto it = pol.find(-pole);
      if (it != pol.end()) target = it->second;
      target -= acc.coeff(-pole);
      if (target.is_zero()) continue;
      target.scale(Rational(-1));
      LaurentSeries t = ek.at(k);
      t.scale(target);
      acc = acc + t;
    }
    for (long bb = bmin; bb <= -1; ++bb) {
      LambdaPolynomial want;
      auto it = pol.find(bb);
      if (it != pol.end()) want = it->second;
      if (!(acc.coeff(bb) == want)) throw std::runtime_error(kAnsatzError);
    }
    dr_[static_cast<std::size_t>(i - 1)] = std::move(acc);
  }

  // Regular part before the gauge correction.
  BiSeries Q = d2omega_;
  for (long i = 1; i <= g; ++i)
    Q.add_outer_product(du_[static_cast<std::size_t>(i - 1)],
                        dr_[static_cast<std::size_t>(i - 1)]);
  Q -= BiSeries::diagonal_kernel(N1, N2);
  if (Q.n1() != N1 || Q.n2() != N2)
    throw std::logic_error("regularized form window collapsed");
  for (long bcol : Q.z2_exponents_below(0))
    if (!Q.z2_profile(bcol).stored_zero()) throw std::runtime_error(kAnsatzError);

  std::vector<std::vector<LambdaPolynomial>> q0(
      static_cast<std::size_t>(W), std::vector<LambdaPolynomial>(static_cast<std::size_t>(W)));
  for (long a = 1; a <= W; ++a)
    for (long bb = 1; bb <= W; ++bb)
      q0[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(bb - 1)] =
          Q.coeff(a - 1, bb - 1);

  // Gauge: move the gap-row block to the requested target by a first kind
  // correction dr_i += sum_k gamma_ik du_k; the block transforms by
  // BG^T gamma BG with BG[i][p] = b(i, w_p), unitriangular.
  std::vector<std::vector<LambdaPolynomial>> M(
      static_cast<std::size_t>(g), std::vector<LambdaPolynomial>(static_cast<std::size_t>(g)));
  for (long p = 1; p <= g; ++p)
    for (long q = 1; q <= g; ++q)
      M[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] =
          gauge_[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] -
          q0[static_cast<std::size_t>(gaps[static_cast<std::size_t>(p - 1)] - 1)]
            [static_cast<std::size_t>(gaps[static_cast<std::size_t>(q - 1)] - 1)];

  std::vector<std::vector<LambdaPolynomial>> X(
      static_cast<std::size_t>(g), std::vector<LambdaPolynomial>(static_cast<std::size_t>(g)));
  for (long p = 1; p <= g; ++p)
    for (long q = 1; q <= g; ++q) {
      LambdaPolynomial v = M[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
      for (long i = 1; i < p; ++i)
        v -= b(static_cast<std::size_t>(i),
               static_cast<std::size_t>(gaps[static_cast<std::size_t>(p - 1)])) *
             X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q - 1)];
      X[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] = v;
    }
  std::vector<std::vector<LambdaPolynomial>> gamma(
      static_cast<std::size_t>(g), std::vector<LambdaPolynomial>(static_cast<std::size_t>(g)));
  for (long q = 1; q <= g; ++q)
    for (long i = 1; i <= g; ++i) {
      LambdaPolynomial v = X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q - 1)];
      for (long k = 1; k < q; ++k)
        v -= gamma[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] *
             b(static_cast<std::size_t>(k),
               static_cast<std::size_t>(gaps[static_cast<std::size_t>(q - 1)]));
      gamma[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q - 1)] = v;
    }

  for (long i = 1; i <= g; ++i)
    for (long k = 1; k <= g; ++k) {
      const LambdaPolynomial& f = gamma[static_cast<std::size_t>(i - 1)]
                                       [static_cast<std::size_t>(k - 1)];
      if (f.is_zero()) continue;
      LaurentSeries t = du_[static_cast<std::size_t>(k - 1)].truncated(
          dr_[static_cast<std::size_t>(i - 1)].trunc());
      t.scale(f);
      dr_[static_cast<std::size_t>(i - 1)] = dr_[static_cast<std::size_t>(i - 1)] + t;
    }

  qhat_.assign(static_cast<std::size_t>(W),
               std::vector<LambdaPolynomial>(static_cast<std::size_t>(W)));
  for (long a = 1; a <= W; ++a)
    for (long bb = 1; bb <= W; ++bb) {
      LambdaPolynomial v = q0[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(bb - 1)];
      for (long i = 1; i <= g; ++i)
        for (long k = 1; k <= g; ++k) {
          const LambdaPolynomial& f = gamma[static_cast<std::size_t>(i - 1)]
                                           [static_cast<std::size_t>(k - 1)];
          if (f.is_zero()) continue;
          v += f * b(static_cast<std::size_t>(i), static_cast<std::size_t>(a)) *
               b(static_cast<std::size_t>(k), static_cast<std::size_t>(bb));
        }
      qhat_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(bb - 1)] = v;
    }

  for (long a = 1; a <= W; ++a)
    for (long bb = a + 1; bb <= W; ++bb)
      if (!(qhat(static_cast<std::size_t>(a), static_cast<std::size_t>(bb)) ==
            qhat(static_cast<std::size_t>(bb), static_cast<std::size_t>(a))))
        throw std::runtime_error(kAnsatzError);

  for (long p = 1; p <= g; ++p)
    for (long q = 1; q <= g; ++q)
      if (!(qhat(static_cast<std::size_t>(gaps[static_cast<std::size_t>(p - 1)]),
                 static_cast<std::size_t>(gaps[static_cast<std::size_t>(q - 1)])) ==
            gauge_[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)]))
        throw std::logic_error("gauge block does not match its target");

  for (long i = 1; i <= g; ++i)
    for (long j = 1; j <= g; ++j) {
      LambdaPolynomial pij = residue_pairing(du_[static_cast<std::size_t>(i - 1)],
                                             dr_[static_cast<std::size_t>(j - 1)]);
      LambdaPolynomial want(Rational(i == j ? 1 : 0));
      if (!(pij == want))
        throw std::logic_error("first/second kind pairing is not the identity");
      if (!residue_pairing(du_[static_cast<std::size_t>(i - 1)],
                           du_[static_cast<std::size_t>(j - 1)])
               .is_zero())
        throw std::logic_error("first kind pairing is not zero");
      if (!residue_pairing(dr_[static_cast<std::size_t>(i - 1)],
                           dr_[static_cast<std::size_t>(j - 1)])
               .is_zero())
        throw std::logic_error("second kind pairing is not zero");
    }
}

const LaurentSeries& KleinianForms::du(std::size_t i) const {
  if (i == 0 || i > du_.size()) throw std::out_of_range("gap index out of range");
  return du_[i - 1];
}

const LaurentSeries& KleinianForms::dr(std::size_t i) const {
  if (i == 0 || i > dr_.size()) throw std::out_of_range("gap index out of range");
  return dr_[i - 1];
}

const LambdaPolynomial& KleinianForms::b(std::size_t i, std::size_t j) const {
  if (i == 0 || i > b_.size() || j == 0 || j > static_cast<std::size_t>(weight_))
    throw std::out_of_range("b index out of range");
  return b_[i - 1][j - 1];
}

const LambdaPolynomial& KleinianForms::c(std::size_t j) const {
  if (j == 0 || j > c_.size()) throw std::out_of_range("c index out of range");
  return c_[j - 1];
}

std::vector<LambdaPolynomial> KleinianForms::c_vector() const { return c_; }

const LambdaPolynomial& KleinianForms::qhat(std::size_t i, std::size_t j) const {
  if (i == 0 || i > qhat_.size() || j == 0 || j > qhat_.size())
    throw std::out_of_range("qhat index out of range");
  return qhat_[i - 1][j - 1];
}

std::optional<std::string> KleinianForms::qhat_pattern_violation() const {
  const int n = curve_.n;
  for (std::size_t i = 1; i <= qhat_.size(); ++i)
    for (std::size_t j = 1; j <= qhat_.size(); ++j) {
      if (qhat(i, j).is_zero()) continue;
      if (i % static_cast<std::size_t>(n) == 0 || j % static_cast<std::size_t>(n) == 0) {
        std::ostringstream out;
        out << "qhat(" << i << "," << j << ") = " << qhat(i, j).str()
            << " with an index divisible by " << n;
        return out.str();
      }
    }
  return std::nullopt;
}

}  // namespace nssigma
