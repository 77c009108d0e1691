#include "nssigma/hirota.hpp"

#include <sstream>
#include <stdexcept>

#include "nssigma/partition.hpp"

namespace nssigma {

namespace {

Mono d_mono(std::initializer_list<std::pair<int, int>> powers) {
  Mono m;
  for (auto [var, e] : powers) {
    if (m.size() < static_cast<std::size_t>(var))
      m.resize(static_cast<std::size_t>(var), 0);
    m[static_cast<std::size_t>(var - 1)] = static_cast<std::uint16_t>(e);
  }
  return m;
}

long mono_degree(const Mono& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

long d_weight(const Mono& m) {
  long w = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    w += static_cast<long>(i + 1) * m[i];
  return w;
}

}  // namespace

HirotaOperator HirotaOperator::kp() {
  HirotaOperator h;
  h.add_term(d_mono({{1, 4}}), Rational(1));
  h.add_term(d_mono({{2, 2}}), Rational(3));
  h.add_term(d_mono({{1, 1}, {3, 1}}), Rational(-4));
  return h;
}

HirotaOperator HirotaOperator::kdv() {
  HirotaOperator h;
  h.add_term(d_mono({{1, 4}}), Rational(1));
  h.add_term(d_mono({{1, 1}, {3, 1}}), Rational(-4));
  return h;
}

HirotaOperator HirotaOperator::boussinesq() {
  HirotaOperator h;
  h.add_term(d_mono({{1, 4}}), Rational(1));
  h.add_term(d_mono({{2, 2}}), Rational(3));
  return h;
}

HirotaOperator& HirotaOperator::add_term(Mono a, const Rational& c) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!(c == Rational(0))) terms_.emplace(std::move(a), c);
  } else {
    it->second = it->second + c;
    if (it->second == Rational(0)) terms_.erase(it);
  }
  return *this;
}

long HirotaOperator::weight() const {
  long w = 0;
  for (const auto& [a, c] : terms_) w = std::max(w, d_weight(a));
  return w;
}

HirotaOperator& HirotaOperator::operator+=(const HirotaOperator& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

HirotaOperator& HirotaOperator::scale(const Rational& c) {
  if (c == Rational(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v = v * c;
  return *this;
}

HirotaOperator HirotaOperator::even_part() const {
  HirotaOperator h;
  for (const auto& [a, c] : terms_)
    if (mono_degree(a) % 2 == 0) h.add_term(a, c);
  return h;
}

GradedSeries HirotaOperator::apply(const GradedSeries& f, const GradedSeries& g) const {
  if (!f.family() || !g.family() || !f.family()->same_as(*g.family()))
    throw std::invalid_argument("bilinear operands over different families");
  const bool same = (&f == &g) || f == g;

  std::map<Mono, GradedSeries> df, dg;
  df[Mono{}] = f;
  if (!same) dg[Mono{}] = g;
  auto deriv = [](std::map<Mono, GradedSeries>& memo, const Mono& b) {
    auto it = memo.find(b);
    if (it != memo.end()) return it;
    // Keys are built by incrementing the highest variable last, so the
    // predecessor with the last exponent lowered is already present.
    std::size_t v = b.size() - 1;
    Mono prev = b;
    prev[v] -= 1;
    while (!prev.empty() && prev.back() == 0) prev.pop_back();
    GradedSeries d = memo.at(prev).derivative(v);
    return memo.emplace(b, std::move(d)).first;
  };
  auto get = [&](std::map<Mono, GradedSeries>& memo, Mono b) -> const GradedSeries& {
    while (!b.empty() && b.back() == 0) b.pop_back();
    if (b.empty()) return memo.at(b);
    // Build up derivative orders one variable step at a time.
    Mono partial;
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (partial.size() < v + 1) partial.resize(v + 1, 0);
      for (std::uint16_t k = 0; k < b[v]; ++k) {
        partial[v] += 1;
        deriv(memo, partial);
      }
    }
    return memo.at(b);
  };

  GradedSeries acc;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    // Odometer over b <= a componentwise.
    Mono b(a.size(), 0);
    for (;;) {
      Rational coeff = c;
      long flips = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        coeff = coeff * Rational::binomial(a[i], b[i]);
        flips += a[i] - b[i];
      }
      if (flips % 2 != 0) coeff = coeff * Rational(-1);
      Mono rest(a.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        rest[i] = static_cast<std::uint16_t>(a[i] - b[i]);
      const GradedSeries& fb = get(df, b);
      const GradedSeries& grest = same ? get(df, rest) : get(dg, rest);
      GradedSeries prod = fb * grest;
      prod.scale(LambdaPolynomial(coeff));
      if (first) {
        acc = std::move(prod);
        first = false;
      } else {
        acc += prod;
      }
      std::size_t i = 0;
      while (i < a.size()) {
        if (b[i] < a[i]) {
          b[i] += 1;
          break;
        }
        b[i] = 0;
        ++i;
      }
      if (i == a.size()) break;
    }
  }
  if (first) {
    long t = std::min(sat_add(f.trunc(), g.valuation()),
                      sat_add(g.trunc(), f.valuation()));
    return GradedSeries::constant(f.family(), LambdaPolynomial(), t);
  }
  return acc;
}

std::string HirotaOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      out << "*D" << (i + 1);
      if (a[i] > 1) out << "^" << a[i];
    }
  }
  return out.str();
}

namespace {

// p_j evaluated at (D_1, D_2/2, D_3/3, ...), via j q_j = sum_i D_i q_(j-i).
std::vector<std::map<Mono, Rational>> shifted_power_sums(std::size_t jmax) {
  std::vector<std::map<Mono, Rational>> q(jmax + 1);
  q[0][Mono{}] = Rational(1);
  for (std::size_t j = 1; j <= jmax; ++j) {
    std::map<Mono, Rational> acc;
    for (std::size_t i = 1; i <= j; ++i) {
      Mono di(i, 0);
      di[i - 1] = 1;
      for (const auto& [m, c] : q[j - i]) {
        Mono prod = mono_mul(di, m);
        auto [it, fresh] = acc.emplace(prod, c);
        if (!fresh) it->second = it->second + c;
      }
    }
    for (auto& [m, c] : acc) {
      c = c / Rational(static_cast<long>(j));
      if (!(c == Rational(0))) q[j][m] = c;
    }
  }
  return q;
}

}  // namespace

std::vector<std::pair<Mono, HirotaOperator>> generating_equations(std::size_t count) {
  std::vector<std::pair<Mono, HirotaOperator>> out;
  if (count == 0) return out;
  for (long w = 1;; ++w) {
    auto q = shifted_power_sums(static_cast<std::size_t>(w) + 1);
    for (const Partition& p : partitions_of_weight(w)) {
      // y-exponent vector alpha of the monomial prod y_l^(alpha_l).
      Mono alpha;
      for (std::size_t i = 0; i < p.length(); ++i) {
        std::size_t l = static_cast<std::size_t>(p.part(i));
        if (alpha.size() < l) alpha.resize(l, 0);
        alpha[l - 1] += 1;
      }
      HirotaOperator h;
      // Split alpha = a' + a''; p_(|a'|)(−2y) contributes prod (−2)^(a'_l)/a'_l!,
      // exp picks up prod D_l^(a''_l)/a''_l!.
      Mono ap(alpha.size(), 0);
      for (;;) {
        Rational coeff(1);
        long wp = 0;
        Mono rest(alpha.size(), 0);
        for (std::size_t l = 0; l < alpha.size(); ++l) {
          rest[l] = static_cast<std::uint16_t>(alpha[l] - ap[l]);
          wp += static_cast<long>(l + 1) * ap[l];
          coeff = coeff * Rational(-2).pow(ap[l]) / Rational::factorial(ap[l]) /
                  Rational::factorial(rest[l]);
        }
        for (const auto& [m, c] : q[static_cast<std::size_t>(wp) + 1])
          h.add_term(mono_mul(m, rest), coeff * c);
        std::size_t i = 0;
        while (i < alpha.size()) {
          if (ap[i] < alpha[i]) {
            ap[i] += 1;
            break;
          }
          ap[i] = 0;
          ++i;
        }
        if (i == alpha.size()) break;
      }
      HirotaOperator even = h.even_part();
      if (even.empty()) continue;
      while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
      out.emplace_back(alpha, std::move(even));
      if (out.size() == count) return out;
    }
  }
}

}  // namespace nssigma
