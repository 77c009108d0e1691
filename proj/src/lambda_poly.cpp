#include "nssigma/lambda_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nssigma {

std::shared_ptr<const ParameterSpace> ParameterSpace::make(int n, int s) {
  if (n < 2 || s <= n) throw std::invalid_argument("parameter space requires 2 <= n < s");
  auto sp = std::make_shared<ParameterSpace>();
  sp->n_ = n;
  sp->s_ = s;
  for (int i = 0; n * i < n * s; ++i) {
    for (int j = 0; j < n; ++j) {
      if (n * i + s * j < n * s) {
        sp->index_.emplace_back(i, j);
        sp->degree_.push_back(static_cast<long>(n) * s - static_cast<long>(n) * i -
                              static_cast<long>(s) * j);
      }
    }
  }
  return sp;
}

std::size_t ParameterSpace::find(int i, int j) const {
  for (std::size_t k = 0; k < index_.size(); ++k) {
    if (index_[k].first == i && index_[k].second == j) return k;
  }
  return npos;
}

namespace {

Exponents trim(Exponents e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;  // no trailing zeros possible beyond max size inputs already trimmed
}

// Componentwise a - b, or nullopt when some exponent would go negative.
std::optional<Exponents> mono_div(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponents r = a;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (a[k] < b[k]) return std::nullopt;
    r[k] = static_cast<std::uint16_t>(a[k] - b[k]);
  }
  return trim(r);
}

}  // namespace

LambdaPolynomial::LambdaPolynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

LambdaPolynomial LambdaPolynomial::generator(std::shared_ptr<const ParameterSpace> space, int i,
                                             int j) {
  if (!space) throw std::invalid_argument("generator requires a parameter space");
  const std::size_t k = space->find(i, j);
  if (k == ParameterSpace::npos) {
    throw std::invalid_argument("lambda_{" + std::to_string(i) + "," + std::to_string(j) +
                                "} is not admissible for this curve shape");
  }
  LambdaPolynomial p;
  p.space_ = std::move(space);
  Exponents e(k + 1, 0);
  e[k] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool LambdaPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational LambdaPolynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

void LambdaPolynomial::merge_space(const std::shared_ptr<const ParameterSpace>& other) {
  if (!other) return;
  if (!space_) {
    space_ = other;
    return;
  }
  if (space_ != other && (space_->n() != other->n() || space_->s() != other->s())) {
    throw std::logic_error("mixing polynomials over different curve shapes");
  }
}

void LambdaPolynomial::insert_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& o) {
  merge_space(o.space_);
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(const LambdaPolynomial& o) {
  merge_space(o.space_);
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

LambdaPolynomial operator*(const LambdaPolynomial& a, const LambdaPolynomial& b) {
  LambdaPolynomial r;
  r.space_ = a.space_;
  r.merge_space(b.space_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.insert_term(mono_mul(ea, eb), ca * cb);
    }
  }
  return r;
}

LambdaPolynomial LambdaPolynomial::operator-() const {
  LambdaPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LambdaPolynomial& LambdaPolynomial::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LambdaPolynomial LambdaPolynomial::pow(unsigned e) const {
  LambdaPolynomial r(Rational(1));
  LambdaPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

long LambdaPolynomial::lambda_degree(const Exponents& mono) const {
  if (mono.empty()) return 0;
  if (!space_) throw std::logic_error("non-constant monomial without a parameter space");
  long d = 0;
  for (std::size_t k = 0; k < mono.size(); ++k) {
    d += static_cast<long>(mono[k]) * space_->degree(k);
  }
  return d;
}

std::set<long> LambdaPolynomial::degrees() const {
  std::set<long> ds;
  for (const auto& [e, c] : terms_) ds.insert(lambda_degree(e));
  return ds;
}

std::optional<long> LambdaPolynomial::homogeneous_degree() const {
  const auto ds = degrees();
  if (ds.size() == 1) return *ds.begin();
  return std::nullopt;
}

bool LambdaPolynomial::is_homogeneous_of(long deg) const {
  if (is_zero()) return true;
  const auto d = homogeneous_degree();
  return d.has_value() && *d == deg;
}

Rational LambdaPolynomial::evaluate(const std::vector<Rational>& values) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (k >= values.size()) throw std::invalid_argument("evaluation vector too short");
      t *= values[k].pow(e[k]);
    }
    sum += t;
  }
  return sum;
}

LambdaPolynomial LambdaPolynomial::specialize(
    const std::vector<std::optional<Rational>>& values) const {
  LambdaPolynomial out;
  for (const auto& [e, c] : terms_) {
    Rational factor = c;
    Exponents kept;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (k < values.size() && values[k].has_value()) {
        factor *= values[k]->pow(e[k]);
      } else {
        if (kept.size() < k + 1) kept.resize(k + 1, 0);
        kept[k] = e[k];
      }
    }
    LambdaPolynomial term;
    term.space_ = kept.empty() ? nullptr : space_;
    if (!factor.is_zero()) term.terms_.emplace(trim(kept), factor);
    out += term;
  }
  return out;
}

LambdaPolynomial LambdaPolynomial::divide_exact(const LambdaPolynomial& a,
                                                const LambdaPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  LambdaPolynomial q;
  q.space_ = a.space_;
  q.merge_space(b.space_);
  LambdaPolynomial r = a;
  const auto blead = std::prev(b.terms_.end());  // largest monomial in lex order
  while (!r.terms_.empty()) {
    const auto rlead = std::prev(r.terms_.end());
    const auto quot = mono_div(rlead->first, blead->first);
    if (!quot) throw std::domain_error("polynomial division is not exact");
    LambdaPolynomial t;
    t.space_ = q.space_;
    t.terms_.emplace(*quot, rlead->second / blead->second);
    q += t;
    r -= t * b;
  }
  return q;
}

std::string LambdaPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      const auto [i, j] = space_->index(k);
      os << "*l(" << i << "," << j << ")";
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace nssigma
