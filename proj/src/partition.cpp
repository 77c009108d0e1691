#include "nssigma/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nssigma {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("partition parts must be weakly decreasing and positive");
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
  std::vector<long> cols;
  if (!parts_.empty()) cols.assign(static_cast<std::size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

bool Partition::operator<(const Partition& o) const {
  long w = weight(), wo = o.weight();
  if (w != wo) return w < wo;
  return parts_ > o.parts_;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced partition literal");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<long> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stol(tok));
  }
  return Partition(std::move(parts));
}

std::vector<long> strict_indices(const Partition& p, std::size_t ambient_length) {
  if (ambient_length < p.length())
    throw std::invalid_argument("ambient length shorter than partition");
  std::vector<long> out(ambient_length);
  for (std::size_t i = 0; i < ambient_length; ++i)
    out[i] = p.part(i) + static_cast<long>(ambient_length) - static_cast<long>(i) - 1;
  return out;
}

Partition partition_from_strict_indices(const std::vector<long>& decreasing) {
  const long l = static_cast<long>(decreasing.size());
  std::vector<long> parts(decreasing.size());
  for (long i = 0; i < l; ++i) {
    if (i > 0 && decreasing[static_cast<std::size_t>(i)] >= decreasing[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("index sequence must be strictly decreasing");
    parts[static_cast<std::size_t>(i)] = decreasing[static_cast<std::size_t>(i)] - (l - i - 1);
    if (parts[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("index sequence below the vacuum tail");
  }
  return Partition(std::move(parts));
}

std::vector<long> rho_from_partition(const Partition& p, std::size_t count) {
  std::vector<long> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = p.part(i) - static_cast<long>(i) - 1;
  return out;
}

Partition partition_from_rho(const std::vector<long>& rho) {
  std::vector<long> parts(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i > 0 && rho[i] >= rho[i - 1])
      throw std::invalid_argument("rho values must strictly decrease");
    parts[i] = rho[i] + static_cast<long>(i) + 1;
    if (parts[i] < 0) throw std::invalid_argument("rho value below the identity tail");
  }
  if (!parts.empty() && parts.back() != 0)
    throw std::invalid_argument("rho prefix must reach its identity tail");
  return Partition(std::move(parts));
}

namespace {
void fill_partitions(long remaining, long cap, std::vector<long>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (long p = std::min(cap, remaining); p >= 1; --p) {
    acc.push_back(p);
    fill_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of_weight(long w) {
  std::vector<Partition> out;
  if (w < 0) return out;
  std::vector<long> acc;
  fill_partitions(w, w, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to_weight(long w) {
  std::vector<Partition> out;
  for (long k = 0; k <= w; ++k) {
    auto level = partitions_of_weight(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {
// Rows are built top-down; row i must satisfy lam_i <= mu_i <= previous row.
void fill_containing(const Partition& lam, std::size_t row, long prev, long budget,
                     std::vector<long>& acc, std::vector<Partition>& out) {
  if (row >= lam.length()) {
    out.emplace_back(acc);
    for (long p = 1; p <= std::min(prev, budget); ++p) {
      acc.push_back(p);
      fill_containing(lam, row + 1, p, budget - p, acc, out);
      acc.pop_back();
    }
    return;
  }
  const long base = lam.part(row);
  for (long p = base; p <= std::min(prev, base + budget); ++p) {
    acc.push_back(p);
    fill_containing(lam, row + 1, p, budget - (p - base), acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_containing(const Partition& lam, long budget) {
  std::vector<Partition> out;
  if (budget < 0) return out;
  std::vector<long> acc;
  const long top = lam.empty() ? budget : lam.part(0) + budget;
  fill_containing(lam, 0, top, budget, acc, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational schur_t1_coefficient(const Partition& mu) {
  const std::size_t l = mu.length();
  Rational num(1);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      long mi = mu.part(i) + static_cast<long>(l - i - 1);
      long mj = mu.part(j) + static_cast<long>(l - j - 1);
      num *= Rational(mi - mj);
    }
  Rational den(1);
  for (std::size_t i = 0; i < l; ++i)
    den *= Rational::factorial(static_cast<unsigned long>(mu.part(i) + static_cast<long>(l - i) - 1));
  return num / den;
}

}  // namespace nssigma
