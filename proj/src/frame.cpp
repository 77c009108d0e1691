#include "nssigma/frame.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace nssigma {

namespace {

LambdaPolynomial cofactor_det(const std::vector<std::vector<LambdaPolynomial>>& m,
                              std::size_t row, unsigned long col_mask) {
  const std::size_t n = m.size();
  if (row == n) return LambdaPolynomial(Rational(1));
  LambdaPolynomial acc;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(col_mask & (1ul << j))) continue;
    if (!m[row][j].is_zero()) {
      LambdaPolynomial sub = cofactor_det(m, row + 1, col_mask & ~(1ul << j));
      sub = m[row][j] * sub;
      if (sign < 0) sub.scale(Rational(-1));
      acc += sub;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

LambdaPolynomial exact_determinant(std::vector<std::vector<LambdaPolynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("determinant requires a square matrix");
  if (n == 0) return LambdaPolynomial(Rational(1));
  if (n <= 4) return cofactor_det(m, 0, (1ul << n) - 1);

  int sign = 1;
  LambdaPolynomial prev(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pick the sparsest nonzero pivot in the column to keep entries small.
    std::size_t best = n;
    std::size_t best_terms = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      std::size_t t = m[i][k].term_count();
      if (best == n || t < best_terms) {
        best = i;
        best_terms = t;
      }
    }
    if (best == n) return LambdaPolynomial();
    if (best != k) {
      std::swap(m[best], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LambdaPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? LambdaPolynomial()
                                : LambdaPolynomial::divide_exact(num, prev);
      }
      m[i][k] = LambdaPolynomial();
    }
    prev = m[k][k];
  }
  LambdaPolynomial det = m[n - 1][n - 1];
  if (sign < 0) det.scale(Rational(-1));
  return det;
}

FrameMatrix::FrameMatrix(CurveModel curve, long weight_bound)
    : curve_(std::move(curve)), semi_(curve_.n, curve_.s), weight_(weight_bound) {
  if (weight_ < 0) throw std::invalid_argument("weight bound must be nonnegative");
  ensure_columns(static_cast<std::size_t>(std::max<long>(semi_.genus(), 1)));
}

long FrameMatrix::pivot_row(std::size_t j) const {
  return semi_.genus() - 1 - semi_.nongap(j);
}

void FrameMatrix::ensure_columns(std::size_t m) {
  if (m <= reduced_.size()) return;
  std::size_t target = std::max<std::size_t>(m, 2 * reduced_.size());
  const long g = semi_.genus();
  // Row r of column j is the z^(r-(g-1)) coefficient of f_j; rows must be
  // exact through g-1+weight_, so f_target is needed through weight_+1 in z.
  long order = weight_ + 1 + semi_.nongap(target) + 2;
  exp_ = std::make_unique<CurveExpansions>(curve_, order);

  raw_.clear();
  raw_.reserve(target);
  for (std::size_t j = 1; j <= target; ++j) {
    LaurentSeries col = exp_->basis_element(j).shifted(g - 1);
    if (col.valuation() != pivot_row(j))
      throw std::logic_error("frame column valuation does not match its pivot");
    if (!(col.coeff(pivot_row(j)) == LambdaPolynomial(Rational(1))))
      throw std::logic_error("frame column is not monic at its pivot");
    raw_.push_back(std::move(col));
  }

  reduced_ = raw_;
  for (std::size_t j = 2; j <= target; ++j) {
    LaurentSeries& col = reduced_[j - 1];
    for (std::size_t k = 1; k < j; ++k) {
      long pk = pivot_row(k);
      if (pk > col.trunc()) continue;
      const LambdaPolynomial& e = col.coeff(pk);
      if (e.is_zero()) continue;
      LaurentSeries corr = reduced_[k - 1];
      LambdaPolynomial factor = e;
      factor.scale(Rational(-1));
      corr.scale(factor);
      col = col + corr;
    }
  }
  check_structure();
}

void FrameMatrix::check_structure() const {
  for (std::size_t j = 1; j <= reduced_.size(); ++j) {
    const LaurentSeries& col = reduced_[j - 1];
    if (col.valuation() != pivot_row(j))
      throw std::logic_error("reduced frame column lost its pivot");
    for (std::size_t k = 1; k <= reduced_.size(); ++k) {
      if (k == j) continue;
      long pk = pivot_row(k);
      if (pk < col.valuation() || pk > col.trunc()) continue;
      if (!col.coeff(pk).is_zero())
        throw std::logic_error("reduced frame column nonzero at foreign pivot");
    }
  }
}

const LaurentSeries& FrameMatrix::raw_column(std::size_t j) {
  if (j == 0) throw std::invalid_argument("columns are 1-based");
  ensure_columns(j);
  return raw_[j - 1];
}

const LaurentSeries& FrameMatrix::reduced_column(std::size_t j) {
  if (j == 0) throw std::invalid_argument("columns are 1-based");
  ensure_columns(j);
  return reduced_[j - 1];
}

LambdaPolynomial FrameMatrix::minor_of_built(const Partition& mu, std::size_t extra,
                                             bool use_raw) const {
  const long g = semi_.genus();
  const std::size_t m =
      std::max<std::size_t>(mu.length(), static_cast<std::size_t>(g)) + extra;
  const auto& cols = use_raw ? raw_ : reduced_;
  std::vector<std::vector<LambdaPolynomial>> mat(m, std::vector<LambdaPolynomial>(m));
  for (std::size_t i = 1; i <= m; ++i) {
    long row = (i <= mu.length() ? mu.part(i - 1) : 0) - static_cast<long>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const LaurentSeries& col = cols[j - 1];
      if (row < col.valuation()) continue;
      mat[i - 1][j - 1] = col.coeff(row);
    }
  }
  return exact_determinant(std::move(mat));
}

LambdaPolynomial FrameMatrix::minor(const Partition& mu, std::size_t extra,
                                    bool use_raw) {
  const std::size_t m =
      std::max<std::size_t>(mu.length(), static_cast<std::size_t>(semi_.genus())) + extra;
  ensure_columns(m);
  return minor_of_built(mu, extra, use_raw);
}

const LambdaPolynomial& FrameMatrix::plucker(const Partition& mu) {
  auto it = cache_.find(mu);
  if (it != cache_.end()) return it->second;
  LambdaPolynomial v = minor(mu);
  return cache_.emplace(mu, std::move(v)).first->second;
}

std::vector<const LambdaPolynomial*> FrameMatrix::plucker_batch(
    const std::vector<Partition>& mus, unsigned jobs) {
  std::size_t need = static_cast<std::size_t>(semi_.genus());
  for (const Partition& mu : mus) need = std::max(need, mu.length());
  ensure_columns(need);

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < mus.size(); ++i)
    if (cache_.find(mus[i]) == cache_.end()) todo.push_back(i);

  if (jobs < 1) jobs = 1;
  std::vector<LambdaPolynomial> slots(todo.size());
  if (jobs == 1 || todo.size() < 2) {
    for (std::size_t k = 0; k < todo.size(); ++k)
      slots[k] = minor_of_built(mus[todo[k]], 0, false);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= todo.size()) return;
        slots[k] = minor_of_built(mus[todo[k]], 0, false);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t k = 0; k < todo.size(); ++k)
    cache_.emplace(mus[todo[k]], std::move(slots[k]));

  std::vector<const LambdaPolynomial*> out;
  out.reserve(mus.size());
  for (const Partition& mu : mus) out.push_back(&cache_.at(mu));
  return out;
}

}  // namespace nssigma
