#include "nssigma/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nssigma {

CurveModel CurveModel::make(int n, int s) {
  if (n < 2 || s <= n) throw std::invalid_argument("curve requires 2 <= n < s");
  if (std::gcd(n, s) != 1) throw std::invalid_argument("curve requires gcd(n, s) = 1");
  CurveModel c;
  c.n = n;
  c.s = s;
  c.space = ParameterSpace::make(n, s);
  c.values.assign(c.space->size(), std::nullopt);
  return c;
}

LambdaPolynomial CurveModel::coefficient(std::size_t k) const {
  if (k >= space->size()) throw std::out_of_range("coefficient index out of range");
  if (k < values.size() && values[k].has_value()) return LambdaPolynomial(*values[k]);
  const auto [i, j] = space->index(k);
  return LambdaPolynomial::generator(space, i, j);
}

CurveModel CurveModel::with_value(int i, int j, const std::optional<Rational>& val) const {
  const std::size_t k = space->find(i, j);
  if (k == ParameterSpace::npos) {
    throw std::invalid_argument("lambda_{" + std::to_string(i) + "," + std::to_string(j) +
                                "} is not admissible for this curve shape");
  }
  CurveModel c = *this;
  c.values[k] = val;
  return c;
}

CurveModel CurveModel::with_all_zero() const {
  CurveModel c = *this;
  c.values.assign(space->size(), Rational(0));
  return c;
}

bool CurveModel::fully_symbolic() const {
  for (const auto& v : values)
    if (v.has_value()) return false;
  return true;
}

bool CurveModel::fully_numeric() const {
  for (const auto& v : values)
    if (!v.has_value()) return false;
  return true;
}

bool CurveModel::graded() const {
  for (const auto& v : values)
    if (v.has_value() && !v->is_zero()) return false;
  return true;
}

std::string CurveModel::signature() const {
  std::string sig = "n=" + std::to_string(n) + ";s=" + std::to_string(s);
  for (std::size_t k = 0; k < space->size(); ++k) {
    const auto [i, j] = space->index(k);
    sig += ";l(" + std::to_string(i) + "," + std::to_string(j) + ")=";
    sig += values[k].has_value() ? values[k]->fraction_str() : "sym";
  }
  return sig;
}

Semigroup::Semigroup(int n, int s) : n_(n), s_(s) {
  if (n < 2 || s <= n || std::gcd(n, s) != 1)
    throw std::invalid_argument("semigroup requires coprime 2 <= n < s");
  const long g = static_cast<long>(n - 1) * (s - 1) / 2;
  for (long m = 0; m < 2 * g; ++m) {
    bool hit = false;
    for (int j = 0; j < n && !hit; ++j) {
      long r = m - static_cast<long>(s) * j;
      if (r >= 0 && r % n == 0) hit = true;
    }
    (hit ? small_nongaps_ : gaps_).push_back(m);
  }
  if (static_cast<long>(gaps_.size()) != g)
    throw std::logic_error("gap count does not match the genus");
}

bool Semigroup::is_gap(long m) const {
  return std::binary_search(gaps_.begin(), gaps_.end(), m);
}

long Semigroup::nongap(std::size_t j) const {
  if (j == 0) throw std::invalid_argument("nongap index is 1-based");
  if (j <= small_nongaps_.size()) return small_nongaps_[j - 1];
  // Beyond the conductor 2g every integer is a nongap.
  return genus() - 1 + static_cast<long>(j);
}

std::pair<int, int> Semigroup::exponents_for(long m) const {
  for (int j = 0; j < n_; ++j) {
    long r = m - static_cast<long>(s_) * j;
    if (r >= 0 && r % n_ == 0) return {static_cast<int>(r / n_), j};
  }
  throw std::invalid_argument("not a nongap of the semigroup");
}

Partition Semigroup::gap_partition() const {
  const long g = genus();
  std::vector<long> parts(static_cast<std::size_t>(g));
  for (long i = 0; i < g; ++i)
    parts[static_cast<std::size_t>(i)] = gaps_[static_cast<std::size_t>(g - 1 - i)] - (g - 1 - i);
  return Partition(std::move(parts));
}

CurveExpansions::CurveExpansions(CurveModel curve, long order)
    : curve_(std::move(curve)), semi_(curve_.n, curve_.s), order_(order) {
  if (order_ < 0) throw std::invalid_argument("expansion order must be nonnegative");
  const int n = curve_.n;
  const auto& space = curve_.space;

  // Newton iteration for v^n = 1 + sum lambda_{i,j} z^(ns-ni-sj) v^j; each
  // step doubles the trusted order. F(v) = v^n - 1 - sum(...), F'(0) = n != 0.
  auto F = [&](const LaurentSeries& w) {
    LaurentSeries r = w.pow(static_cast<unsigned>(n));
    r -= LaurentSeries::constant(LambdaPolynomial(1));
    for (std::size_t k = 0; k < space->size(); ++k) {
      const auto [i, j] = space->index(k);
      LaurentSeries t = w.pow(static_cast<unsigned>(j)).shifted(space->degree(k));
      t.scale(curve_.coefficient(k));
      r -= t;
    }
    return r;
  };
  auto Fprime = [&](const LaurentSeries& w) {
    LaurentSeries r = w.pow(static_cast<unsigned>(n - 1)).scale(LambdaPolynomial(n));
    for (std::size_t k = 0; k < space->size(); ++k) {
      const auto [i, j] = space->index(k);
      if (j == 0) continue;
      LaurentSeries t = w.pow(static_cast<unsigned>(j - 1)).shifted(space->degree(k));
      t.scale(curve_.coefficient(k).scale(Rational(j)));
      r -= t;
    }
    return r;
  };

  v_ = LaurentSeries::constant(LambdaPolynomial(1)).truncated(0);
  while (v_.trunc() < order_) {
    const long next = std::min(order_, 2 * v_.trunc() + 1);
    LaurentSeries lift = v_.assume_exact_through(next);
    v_ = lift - F(lift) * Fprime(lift).inverse();
    if (v_.trunc() < next) throw std::logic_error("newton step lost precision");
    v_ = v_.truncated(next);
  }
}

LaurentSeries CurveExpansions::x() const {
  return LaurentSeries::monomial(LambdaPolynomial(1), -curve_.n);
}

LaurentSeries CurveExpansions::y() const {
  return v_.shifted(-curve_.s);
}

const LaurentSeries& CurveExpansions::monomial(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  auto it = memo_.find({i, j});
  if (it != memo_.end()) return it->second;
  LaurentSeries r;
  if (i == 0 && j == 0) {
    r = LaurentSeries::constant(LambdaPolynomial(1));
  } else if (j > 0) {
    r = monomial(i, j - 1) * y();
  } else {
    r = monomial(i - 1, 0) * x();
  }
  return memo_.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

const LaurentSeries& CurveExpansions::basis_element(std::size_t k) {
  const auto [i, j] = semi_.exponents_for(semi_.nongap(k));
  return monomial(i, j);
}

LaurentSeries CurveExpansions::fy() {
  const auto& space = curve_.space;
  LaurentSeries r = monomial(0, curve_.n - 1);
  r.scale(LambdaPolynomial(curve_.n));
  for (std::size_t k = 0; k < space->size(); ++k) {
    const auto [i, j] = space->index(k);
    if (j == 0) continue;
    LaurentSeries t = monomial(i, j - 1);
    t.scale(curve_.coefficient(k).scale(Rational(j)));
    r -= t;
  }
  return r;
}

LaurentSeries CurveExpansions::dx_dz() const {
  return LaurentSeries::monomial(LambdaPolynomial(-curve_.n), -curve_.n - 1);
}

LaurentSeries CurveExpansions::curve_residual() {
  const auto& space = curve_.space;
  LaurentSeries r = monomial(0, curve_.n) - monomial(curve_.s, 0);
  for (std::size_t k = 0; k < space->size(); ++k) {
    const auto [i, j] = space->index(k);
    LaurentSeries t = monomial(i, j);
    t.scale(curve_.coefficient(k));
    r -= t;
  }
  return r;
}

}  // namespace nssigma
