#include "nssigma/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nssigma {

namespace {
const LambdaPolynomial kZeroPoly{};
}

std::shared_ptr<const VarFamily> VarFamily::consecutive(const std::string& tag, int count) {
  auto fam = std::make_shared<VarFamily>();
  fam->tag = tag;
  for (int i = 1; i <= count; ++i) {
    fam->weights.push_back(i);
    fam->labels.push_back(tag + std::to_string(i));
  }
  return fam;
}

std::shared_ptr<const VarFamily> VarFamily::weighted(const std::string& tag,
                                                     const std::vector<int>& weights) {
  auto fam = std::make_shared<VarFamily>();
  fam->tag = tag;
  fam->weights = weights;
  for (int w : weights) fam->labels.push_back(tag + std::to_string(w));
  return fam;
}

long mono_weight(const Mono& m, const VarFamily& fam) {
  long w = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    w += static_cast<long>(m[k]) * fam.weights.at(k);
  }
  return w;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

std::string mono_str(const Mono& m, const VarFamily& fam) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << fam.labels.at(k);
    if (m[k] > 1) os << "^" << m[k];
  }
  if (first) os << "1";
  return os.str();
}

GradedSeries::GradedSeries(std::shared_ptr<const VarFamily> fam, long trunc)
    : fam_(std::move(fam)), trunc_(trunc) {}

GradedSeries GradedSeries::constant(std::shared_ptr<const VarFamily> fam,
                                    const LambdaPolynomial& c, long trunc) {
  GradedSeries s(std::move(fam), trunc);
  if (!c.is_zero() && trunc >= 0) s.terms_.emplace(Mono{}, c);
  return s;
}

GradedSeries GradedSeries::variable(std::shared_ptr<const VarFamily> fam, std::size_t k,
                                    long trunc) {
  if (k >= fam->size()) throw std::out_of_range("variable index outside family");
  GradedSeries s(fam, trunc);
  if (fam->weights[k] <= trunc) {
    Mono m(k + 1, 0);
    m[k] = 1;
    s.terms_.emplace(std::move(m), LambdaPolynomial(1));
  }
  return s;
}

long GradedSeries::valuation() const {
  if (terms_.empty()) return kInfOrder;
  long v = kInfOrder;
  for (const auto& [m, c] : terms_) v = std::min(v, mono_weight(m, *fam_));
  return v;
}

const LambdaPolynomial& GradedSeries::coeff(const Mono& m) const {
  if (!fam_) return kZeroPoly;
  if (mono_weight(m, *fam_) > trunc_) {
    throw std::out_of_range("coefficient of weight " +
                            std::to_string(mono_weight(m, *fam_)) +
                            " beyond truncation " + std::to_string(trunc_));
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? kZeroPoly : it->second;
}

void GradedSeries::set_coeff(const Mono& m, LambdaPolynomial c) {
  Mono key = m;
  while (!key.empty() && key.back() == 0) key.pop_back();
  if (mono_weight(key, *fam_) > trunc_) return;
  if (c.is_zero()) {
    terms_.erase(key);
  } else {
    terms_[key] = std::move(c);
  }
}

void GradedSeries::check_family(const GradedSeries& o) const {
  if (!fam_ || !o.fam_) return;
  if (fam_ != o.fam_ && !fam_->same_as(*o.fam_)) {
    throw std::logic_error("mixing series over different variable families");
  }
}

void GradedSeries::insert_term(const Mono& m, const LambdaPolynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  check_family(o);
  if (!fam_) fam_ = o.fam_;
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  // prune terms that fell past the (possibly lowered) truncation
  if (trunc_ < kInfOrder) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (mono_weight(it->first, *fam_) > trunc_) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) { return *this += -o; }

GradedSeries GradedSeries::operator-() const {
  GradedSeries r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_family(b);
  GradedSeries r(a.fam_ ? a.fam_ : b.fam_,
                 std::min(sat_add(a.trunc_, b.valuation()), sat_add(b.trunc_, a.valuation())));
  if (a.terms_.empty() || b.terms_.empty()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    const long wa = mono_weight(ma, *r.fam_);
    for (const auto& [mb, cb] : b.terms_) {
      if (r.trunc_ < kInfOrder && wa + mono_weight(mb, *r.fam_) > r.trunc_) continue;
      r.insert_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

GradedSeries& GradedSeries::scale(const LambdaPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  std::map<Mono, LambdaPolynomial> out;
  for (auto& [m, v] : terms_) {
    LambdaPolynomial p = v * c;
    if (!p.is_zero()) out.emplace(m, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

GradedSeries GradedSeries::pow(unsigned e) const {
  GradedSeries r = constant(fam_, LambdaPolynomial(1), trunc_);
  if (e == 0) return r;
  GradedSeries base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

GradedSeries GradedSeries::derivative(std::size_t var) const {
  if (!fam_ || var >= fam_->size()) throw std::out_of_range("variable index outside family");
  GradedSeries r(fam_, sat_add(trunc_, -fam_->weights[var]));
  for (const auto& [m, c] : terms_) {
    if (var >= m.size() || m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    while (!d.empty() && d.back() == 0) d.pop_back();
    LambdaPolynomial cd = c;
    cd.scale(Rational(m[var]));
    r.insert_term(d, cd);
  }
  return r;
}

GradedSeries GradedSeries::truncated(long w) const {
  GradedSeries r(fam_, std::min(trunc_, w));
  for (const auto& [m, c] : terms_) {
    if (mono_weight(m, *fam_) <= r.trunc_) r.terms_.emplace(m, c);
  }
  return r;
}

GradedSeries GradedSeries::substitute(const std::vector<GradedSeries>& images,
                                      const std::shared_ptr<const VarFamily>& target) const {
  if (!fam_) return GradedSeries(target, trunc_);
  if (images.size() != fam_->size()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k].stored_zero() && images[k].valuation() < fam_->weights[k]) {
      throw std::invalid_argument("substitution image drops below the variable weight");
    }
  }
  // Memoized image powers. Monomial weights are nonnegative, so anything past
  // the source truncation can never fall back below it in a later product;
  // capping the intermediates there keeps the powers small.
  std::vector<std::vector<GradedSeries>> powers(images.size());
  const auto power = [&](std::size_t k, unsigned e) -> const GradedSeries& {
    auto& cache = powers[k];
    if (cache.empty()) {
      cache.push_back(GradedSeries::constant(target, LambdaPolynomial(1), trunc_));
    }
    while (cache.size() <= e)
      cache.push_back((cache.back() * images[k]).truncated(trunc_));
    return cache[e];
  };
  GradedSeries acc(target, trunc_);
  for (const auto& [m, c] : terms_) {
    GradedSeries prod = GradedSeries::constant(target, c, kInfOrder);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] > 0) prod *= power(k, m[k]);
    }
    const long keep = std::min(trunc_, prod.trunc());
    acc.trunc_ = std::min(acc.trunc_, keep);
    for (const auto& [mm, cc] : prod.terms_) acc.insert_term(mm, cc);
  }
  return acc.truncated(acc.trunc_);
}

GradedSeries GradedSeries::zeroed_vars(const std::function<bool(std::size_t)>& pred) const {
  GradedSeries r(fam_, trunc_);
  for (const auto& [m, c] : terms_) {
    bool drop = false;
    for (std::size_t k = 0; k < m.size() && !drop; ++k) {
      if (m[k] > 0 && pred(k)) drop = true;
    }
    if (!drop) r.terms_.emplace(m, c);
  }
  return r;
}

GradedSeries GradedSeries::map_coefficients(
    const std::function<LambdaPolynomial(const LambdaPolynomial&)>& fn) const {
  GradedSeries r(fam_, trunc_);
  for (const auto& [m, c] : terms_) {
    LambdaPolynomial p = fn(c);
    if (!p.is_zero()) r.terms_.emplace(m, std::move(p));
  }
  return r;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

std::set<long> GradedSeries::total_weights() const {
  std::set<long> ws;
  for (const auto& [m, c] : terms_) {
    const long w = mono_weight(m, *fam_);
    for (long d : c.degrees()) ws.insert(w - d);
  }
  return ws;
}

std::vector<std::pair<Mono, const LambdaPolynomial*>> GradedSeries::sorted_terms() const {
  std::vector<std::pair<Mono, const LambdaPolynomial*>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m, &c);
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    const long wx = mono_weight(x.first, *fam_);
    const long wy = mono_weight(y.first, *fam_);
    if (wx != wy) return wx < wy;
    return x.first < y.first;
  });
  return out;
}

std::string GradedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c->str() << ")*" << mono_str(m, *fam_);
  }
  if (first) os << "0";
  if (trunc_ < kInfOrder) os << " + O(weight " << trunc_ + 1 << ")";
  return os.str();
}

GradedSeries exp(const GradedSeries& f) {
  if (f.valuation() < 1) throw std::domain_error("exp requires zero constant term");
  if (f.stored_zero()) {
    return GradedSeries::constant(f.family(), LambdaPolynomial(1), f.trunc());
  }
  if (f.is_exact()) throw std::domain_error("exp of an untruncated series");
  GradedSeries acc = GradedSeries::constant(f.family(), LambdaPolynomial(1), f.trunc());
  GradedSeries pw = GradedSeries::constant(f.family(), LambdaPolynomial(1), kInfOrder);
  const long v = f.valuation();
  Rational fact(1);
  for (long k = 1; k * v <= f.trunc(); ++k) {
    pw *= f;
    fact *= Rational(k);
    GradedSeries term = pw;
    term.scale(LambdaPolynomial(fact.inverse()));
    acc += term;
  }
  return acc.truncated(f.trunc());
}

}  // namespace nssigma
