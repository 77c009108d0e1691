#include "nssigma/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nssigma {

namespace {
const LambdaPolynomial kZeroPoly{};
}

LaurentSeries LaurentSeries::constant(const LambdaPolynomial& c) {
  return monomial(c, 0);
}

LaurentSeries LaurentSeries::monomial(const LambdaPolynomial& c, long exponent) {
  LaurentSeries s;
  if (!c.is_zero()) {
    s.lo_ = exponent;
    s.coef_.push_back(c);
  }
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(long lo, std::vector<LambdaPolynomial> coeffs,
                                         long trunc) {
  LaurentSeries s;
  s.lo_ = lo;
  s.coef_ = std::move(coeffs);
  s.trunc_ = trunc;
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  if (trunc_ < kInfOrder) {
    const long keep = trunc_ - lo_ + 1;
    if (keep < 0) {
      coef_.clear();
    } else if (static_cast<long>(coef_.size()) > keep) {
      coef_.resize(keep);
    }
  }
  std::size_t lead = 0;
  while (lead < coef_.size() && coef_[lead].is_zero()) ++lead;
  if (lead == coef_.size()) {
    coef_.clear();
    lo_ = 0;
    return;
  }
  if (lead > 0) {
    coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
  }
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

long LaurentSeries::valuation() const {
  return coef_.empty() ? kInfOrder : lo_;
}

const LambdaPolynomial& LaurentSeries::coeff(long k) const {
  if (k > trunc_) {
    throw std::out_of_range("coefficient of z^" + std::to_string(k) +
                            " beyond truncation order " + std::to_string(trunc_));
  }
  if (k < lo_ || k > window_hi()) return kZeroPoly;
  return coef_[k - lo_];
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const long trunc = std::min(trunc_, o.trunc_);
  if (o.coef_.empty()) {
    trunc_ = trunc;
    normalize();
    return *this;
  }
  const long lo = coef_.empty() ? o.lo_ : std::min(lo_, o.lo_);
  const long hi = std::min(trunc, std::max(window_hi(), o.window_hi()));
  std::vector<LambdaPolynomial> out(hi >= lo ? hi - lo + 1 : 0);
  for (long k = lo; k <= hi; ++k) {
    if (k >= lo_ && k <= window_hi()) out[k - lo] += coef_[k - lo_];
    if (k >= o.lo_ && k <= o.window_hi()) out[k - lo] += o.coef_[k - o.lo_];
  }
  lo_ = lo;
  coef_ = std::move(out);
  trunc_ = trunc;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  return *this += -o;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.trunc_ = std::min(sat_add(a.trunc_, b.valuation()), sat_add(b.trunc_, a.valuation()));
  if (a.coef_.empty() || b.coef_.empty()) {
    r.normalize();
    return r;
  }
  const long lo = a.lo_ + b.lo_;
  const long hi = std::min(r.trunc_, a.window_hi() + b.window_hi());
  if (hi < lo) {
    r.normalize();
    return r;
  }
  std::vector<LambdaPolynomial> out(hi - lo + 1);
  for (long i = a.lo_; i <= a.window_hi(); ++i) {
    const auto& ca = a.coef_[i - a.lo_];
    if (ca.is_zero()) continue;
    const long jmax = std::min(b.window_hi(), hi - i);
    for (long j = b.lo_; j <= jmax; ++j) {
      const auto& cb = b.coef_[j - b.lo_];
      if (cb.is_zero()) continue;
      out[i + j - lo] += ca * cb;
    }
  }
  r.lo_ = lo;
  r.coef_ = std::move(out);
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::scale(const LambdaPolynomial& c) {
  if (c.is_zero()) {
    coef_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& v : coef_) v *= c;
  normalize();
  return *this;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries r = *this;
  r.lo_ += k;
  r.trunc_ = sat_add(r.trunc_, k);
  return r;
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
  LaurentSeries r = constant(LambdaPolynomial(1));
  LaurentSeries base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (coef_.empty()) throw std::domain_error("inverse of zero series");
  const LambdaPolynomial& lead = coef_.front();
  if (!lead.is_constant()) {
    throw std::domain_error("series inverse requires a constant leading coefficient");
  }
  const Rational c0 = lead.constant_value().inverse();
  const long v = lo_;
  if (trunc_ >= kInfOrder) {
    if (coef_.size() == 1) return monomial(LambdaPolynomial(c0), -v);
    throw std::domain_error("inverse of an untruncated non-monomial series");
  }
  // 1/a has valuation -v and is exact through trunc - 2v.
  LaurentSeries r;
  r.lo_ = -v;
  r.trunc_ = sat_add(trunc_, -2 * v);
  const long terms = r.trunc_ - r.lo_ + 1;
  if (terms <= 0) return LaurentSeries().truncated(r.trunc_);
  r.coef_.resize(terms);
  r.coef_[0] = LambdaPolynomial(c0);
  for (long m = 1; m < terms; ++m) {
    // coefficient of z^{-v+m}: sum_{i=1..m} a_{v+i} * r_{-v+m-i} = -a_v * r_{-v+m}
    LambdaPolynomial acc;
    for (long i = 1; i <= m; ++i) {
      if (v + i > window_hi()) break;
      const auto& ai = coef_[i];
      if (ai.is_zero()) continue;
      acc += ai * r.coef_[m - i];
    }
    acc.scale(-c0);
    r.coef_[m] = std::move(acc);
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries r;
  r.trunc_ = sat_add(trunc_, -1);
  r.lo_ = lo_ - 1;
  r.coef_.resize(coef_.size());
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    r.coef_[k] = coef_[k];
    r.coef_[k].scale(Rational(lo_ + static_cast<long>(k)));
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::integral() const {
  if (trunc_ < -1) throw std::out_of_range("truncation excludes exponent -1");
  if (!residue().is_zero()) throw std::domain_error("logarithmic term");
  LaurentSeries r;
  r.trunc_ = sat_add(trunc_, 1);
  r.lo_ = lo_ + 1;
  r.coef_.resize(coef_.size());
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    const long e = lo_ + static_cast<long>(k);
    if (e == -1) continue;
    r.coef_[k] = coef_[k];
    r.coef_[k].scale(Rational(1, e + 1));
  }
  r.normalize();
  return r;
}

const LambdaPolynomial& LaurentSeries::residue() const { return coeff(-1); }

LaurentSeries LaurentSeries::truncated(long n) const {
  LaurentSeries r = *this;
  r.trunc_ = std::min(trunc_, n);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::assume_exact_through(long n) const {
  LaurentSeries r = *this;
  r.trunc_ = std::max(trunc_, n);
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.trunc_ != b.trunc_) return false;
  return a.lo_ == b.lo_ && a.coef_ == b.coef_;
}

std::set<long> LaurentSeries::homogeneity_offsets() const {
  std::set<long> offs;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    const long e = lo_ + static_cast<long>(k);
    for (long d : coef_[k].degrees()) offs.insert(e - d);
  }
  return offs;
}

std::string LaurentSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    if (coef_[k].is_zero()) continue;
    const long e = lo_ + static_cast<long>(k);
    if (!first) os << " + ";
    first = false;
    os << "(" << coef_[k].str() << ")";
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  if (trunc_ < kInfOrder) os << " + O(" << var << "^" << trunc_ + 1 << ")";
  return os.str();
}

LaurentSeries exp(const LaurentSeries& f) {
  if (f.valuation() < 1) throw std::domain_error("exp requires zero constant term");
  if (f.stored_zero()) {
    return LaurentSeries::from_coeffs(0, {LambdaPolynomial(1)}, f.trunc());
  }
  const long n = f.trunc();
  if (n >= kInfOrder) throw std::domain_error("exp of an untruncated series");
  // E' = f' E, solved degree by degree from E_0 = 1.
  std::vector<LambdaPolynomial> e(static_cast<std::size_t>(n) + 1);
  e[0] = LambdaPolynomial(1);
  for (long k = 1; k <= n; ++k) {
    LambdaPolynomial acc;
    for (long i = 1; i <= k; ++i) {
      if (i > f.trunc()) break;
      const auto& fi = f.coeff(i);
      if (fi.is_zero()) continue;
      LambdaPolynomial t = fi;
      t.scale(Rational(i));
      acc += t * e[k - i];
    }
    acc.scale(Rational(1, k));
    e[k] = std::move(acc);
  }
  return LaurentSeries::from_coeffs(0, std::move(e), n);
}

LaurentSeries log1(const LaurentSeries& f) {
  if (f.valuation() != 0 || !f.coeff(0).is_constant() || !f.coeff(0).constant_value().is_one()) {
    throw std::domain_error("log requires leading term 1");
  }
  if (f.trunc() >= kInfOrder) throw std::domain_error("log of an untruncated series");
  return (f.derivative() * f.inverse()).integral().truncated(f.trunc());
}

LaurentSeries sqrt1(const LaurentSeries& f) {
  if (f.valuation() != 0 || !f.coeff(0).is_constant() || !f.coeff(0).constant_value().is_one()) {
    throw std::domain_error("sqrt requires leading term 1");
  }
  const long n = f.trunc();
  if (n >= kInfOrder) throw std::domain_error("sqrt of an untruncated series");
  std::vector<LambdaPolynomial> w(static_cast<std::size_t>(n) + 1);
  w[0] = LambdaPolynomial(1);
  for (long k = 1; k <= n; ++k) {
    LambdaPolynomial acc = f.coeff(k);
    for (long i = 1; i < k; ++i) acc -= w[i] * w[k - i];
    acc.scale(Rational(1, 2));
    w[k] = std::move(acc);
  }
  return LaurentSeries::from_coeffs(0, std::move(w), n);
}

}  // namespace nssigma
