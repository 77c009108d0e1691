#include "nssigma/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace nssigma {

namespace {
const LambdaPolynomial& zero_poly() {
  static const LambdaPolynomial z;
  return z;
}
}  // namespace

void BiSeries::restrict_window(long n1, long n2) {
  if (n1 < n1_) n1_ = n1;
  if (n2 < n2_) n2_ = n2;
  prune();
}

void BiSeries::drop_columns_below(long floor) {
  if (floor > floor_) floor_ = floor;
  prune();
}

void BiSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.first > n1_ || it->first.second > n2_ ||
        it->first.second < floor_ || it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

const LambdaPolynomial& BiSeries::coeff(long a, long b) const {
  if (a > n1_ || b > n2_ || b < floor_)
    throw std::out_of_range("coefficient of z1^a z2^b beyond truncation window");
  auto it = terms_.find({a, b});
  return it == terms_.end() ? zero_poly() : it->second;
}

void BiSeries::insert_term(long a, long b, const LambdaPolynomial& c) {
  if (a > n1_ || b > n2_ || b < floor_ || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.n1_ < n1_) n1_ = o.n1_;
  if (o.n2_ < n2_) n2_ = o.n2_;
  if (o.floor_ > floor_) floor_ = o.floor_;
  prune();
  for (const auto& [ab, c] : o.terms_) insert_term(ab.first, ab.second, c);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  return *this += -o;
}

BiSeries BiSeries::operator-() const {
  BiSeries r(n1_, n2_);
  r.floor_ = floor_;
  for (const auto& [ab, c] : terms_) r.terms_.emplace(ab, -c);
  return r;
}

BiSeries& BiSeries::scale(const LambdaPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [ab, v] : terms_) v = v * c;
  prune();
  return *this;
}

void BiSeries::add_outer_product(const LaurentSeries& a, const LaurentSeries& b) {
  if (!a.is_exact()) restrict_window(a.trunc(), n2_);
  if (!b.is_exact()) restrict_window(n1_, b.trunc());
  if (a.stored_zero() || b.stored_zero()) return;
  for (long i = a.window_lo(); i <= std::min(a.window_hi(), n1_); ++i) {
    const LambdaPolynomial& ca = a.coeff(i);
    if (ca.is_zero()) continue;
    for (long j = std::max(b.window_lo(), floor_); j <= std::min(b.window_hi(), n2_); ++j) {
      const LambdaPolynomial& cb = b.coeff(j);
      if (cb.is_zero()) continue;
      insert_term(i, j, ca * cb);
    }
  }
}

BiSeries BiSeries::d_dz2() const {
  BiSeries r(n1_, sat_add(n2_, -1));
  if (floor_ > -kInfOrder) r.floor_ = floor_ - 1;
  for (const auto& [ab, c] : terms_) {
    if (ab.second == 0) continue;
    LambdaPolynomial scaled = c;
    scaled.scale(Rational(ab.second));
    r.insert_term(ab.first, ab.second - 1, scaled);
  }
  return r;
}

BiSeries BiSeries::diagonal_kernel(long n1, long n2) {
  BiSeries r(n1, n2);
  for (long k = 1; k - 1 <= n1; ++k)
    r.insert_term(k - 1, -k - 1, LambdaPolynomial(Rational(k)));
  return r;
}

LaurentSeries BiSeries::z2_profile(long b) const {
  if (b > n2_ || b < floor_)
    throw std::out_of_range("z2 exponent beyond truncation window");
  long lo = 0;
  std::vector<LambdaPolynomial> coef;
  bool seeded = false;
  for (const auto& [ab, c] : terms_) {
    if (ab.second != b) continue;
    if (!seeded) {
      lo = ab.first;
      seeded = true;
    }
    while (static_cast<long>(coef.size()) <= ab.first - lo) coef.emplace_back();
    coef[static_cast<std::size_t>(ab.first - lo)] = c;
  }
  return LaurentSeries::from_coeffs(lo, std::move(coef), n1_);
}

std::set<long> BiSeries::z2_exponents_below(long b) const {
  std::set<long> out;
  for (const auto& [ab, c] : terms_)
    if (ab.second < b) out.insert(ab.second);
  return out;
}

long BiSeries::min_z1_exponent() const {
  long m = 1;
  bool seeded = false;
  for (const auto& [ab, c] : terms_) {
    if (!seeded || ab.first < m) m = ab.first;
    seeded = true;
  }
  return seeded ? m : 1;
}

std::set<long> BiSeries::homogeneity_offsets() const {
  std::set<long> out;
  for (const auto& [ab, c] : terms_)
    for (long d : c.degrees()) out.insert(d - ab.first - ab.second);
  return out;
}

}  // namespace nssigma
