#include "nssigma/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace nssigma {

namespace {

using json = nlohmann::ordered_json;

std::string mono_label(const Exponents& e, const std::shared_ptr<const ParameterSpace>& space) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    auto [i, j] = space->index(k);
    if (!first) out << "*";
    first = false;
    out << "l(" << i << "," << j << ")";
    if (e[k] > 1) out << "^" << e[k];
  }
  return first ? "1" : out.str();
}

json poly_json(const LambdaPolynomial& p) {
  json obj = json::object();
  for (const auto& [e, c] : p.terms()) obj[mono_label(e, p.space())] = c.fraction_str();
  return obj;
}

json exponents_json(const Mono& m) {
  json arr = json::array();
  for (auto e : m) arr.push_back(static_cast<int>(e));
  return arr;
}

json curve_json(const CurveModel& curve) {
  Semigroup semi(curve.n, curve.s);
  json obj = json::object();
  obj["n"] = curve.n;
  obj["s"] = curve.s;
  obj["genus"] = semi.genus();
  json gaps = json::array();
  for (long w : semi.gaps()) gaps.push_back(w);
  obj["gaps"] = gaps;
  json nongaps = json::array();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(semi.genus()) + 3; ++k)
    nongaps.push_back(semi.nongap(k));
  obj["nongaps"] = nongaps;
  obj["gap_partition"] = semi.gap_partition().str();
  json coeffs = json::array();
  for (std::size_t k = 0; k < curve.space->size(); ++k) {
    auto [i, j] = curve.space->index(k);
    json entry = json::object();
    entry["i"] = i;
    entry["j"] = j;
    entry["degree"] = curve.space->degree(k);
    entry["value"] = curve.values[k] ? curve.values[k]->fraction_str() : "sym";
    coeffs.push_back(entry);
  }
  obj["coefficients"] = coeffs;
  return obj;
}

json series_json(const GradedSeries& s) {
  json arr = json::array();
  for (const auto& [m, c] : s.sorted_terms()) {
    json entry = json::object();
    entry["monomial"] = mono_str(m, *s.family());
    entry["exponents"] = exponents_json(m);
    entry["weight"] = mono_weight(m, *s.family());
    entry["coefficient"] = poly_json(*c);
    arr.push_back(entry);
  }
  return arr;
}

json matrix_json(const std::function<const LambdaPolynomial&(std::size_t, std::size_t)>& get,
                 std::size_t rows, std::size_t cols) {
  json mat = json::array();
  for (std::size_t i = 1; i <= rows; ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= cols; ++j) row.push_back(poly_json(get(i, j)));
    mat.push_back(row);
  }
  return mat;
}

std::string render(const json& obj) { return obj.dump(2) + "\n"; }

void text_series(std::ostringstream& out, const GradedSeries& s) {
  for (const auto& [m, c] : s.sorted_terms())
    out << "  " << mono_str(m, *s.family()) << " : " << c->str() << "\n";
}

}  // namespace

std::string curve_report_json(const CurveModel& curve) {
  json obj = json::object();
  obj["schema"] = "nssigma.curve.v1";
  obj["curve"] = curve_json(curve);
  return render(obj);
}

std::string curve_report_text(const CurveModel& curve) {
  Semigroup semi(curve.n, curve.s);
  std::ostringstream out;
  out << "curve y^" << curve.n << " = x^" << curve.s << " + lower terms\n";
  out << "genus " << semi.genus() << "\n";
  out << "gaps";
  for (long w : semi.gaps()) out << " " << w;
  out << "\nnongaps";
  for (std::size_t k = 1; k <= static_cast<std::size_t>(semi.genus()) + 3; ++k)
    out << " " << semi.nongap(k);
  out << "\ngap partition " << semi.gap_partition().str() << "\n";
  out << "coefficients\n";
  for (std::size_t k = 0; k < curve.space->size(); ++k) {
    auto [i, j] = curve.space->index(k);
    out << "  l(" << i << "," << j << ") degree " << curve.space->degree(k) << " = "
        << (curve.values[k] ? curve.values[k]->fraction_str() : "sym") << "\n";
  }
  return out.str();
}

std::string tau_report_json(const TauFunction& tau, const GradedSeries& tau_t) {
  json obj = json::object();
  obj["schema"] = "nssigma.tau.v1";
  obj["curve"] = curve_json(tau.curve);
  obj["weight"] = tau.weight;
  obj["leading"] = tau.leading.str();
  json schur = json::array();
  for (const auto& [mu, xi] : tau.xi) {
    json entry = json::object();
    entry["partition"] = mu.str();
    entry["xi"] = poly_json(xi);
    schur.push_back(entry);
  }
  obj["schur_coefficients"] = schur;
  obj["series"] = series_json(tau_t);
  return render(obj);
}

std::string tau_report_text(const TauFunction& tau, const GradedSeries& tau_t) {
  std::ostringstream out;
  out << "tau for y^" << tau.curve.n << " = x^" << tau.curve.s
      << " + lower terms, weight " << tau.weight << "\n";
  out << "leading " << tau.leading.str() << "\n";
  out << "schur coefficients\n";
  for (const auto& [mu, xi] : tau.xi)
    out << "  " << mu.str() << " : " << xi.str() << "\n";
  out << "series\n";
  text_series(out, tau_t);
  return out.str();
}

std::string forms_report_json(const KleinianForms& forms) {
  const std::size_t W = static_cast<std::size_t>(forms.weight());
  const std::size_t g = static_cast<std::size_t>(forms.genus());
  json obj = json::object();
  obj["schema"] = "nssigma.forms.v1";
  obj["curve"] = curve_json(forms.curve());
  obj["weight"] = forms.weight();
  obj["b"] = matrix_json(
      [&forms](std::size_t i, std::size_t j) -> const LambdaPolynomial& {
        return forms.b(i, j);
      },
      g, W);
  json cs = json::array();
  for (std::size_t j = 1; j <= W; ++j) cs.push_back(poly_json(forms.c(j)));
  obj["c"] = cs;
  obj["qhat"] = matrix_json(
      [&forms](std::size_t i, std::size_t j) -> const LambdaPolynomial& {
        return forms.qhat(i, j);
      },
      W, W);
  return render(obj);
}

std::string forms_report_text(const KleinianForms& forms) {
  const std::size_t W = static_cast<std::size_t>(forms.weight());
  const std::size_t g = static_cast<std::size_t>(forms.genus());
  std::ostringstream out;
  out << "differentials for y^" << forms.curve().n << " = x^" << forms.curve().s
      << " + lower terms, weight " << forms.weight() << "\n";
  out << "b matrix\n";
  for (std::size_t i = 1; i <= g; ++i) {
    out << "  du_" << forms.semigroup().gaps()[i - 1] << ":";
    for (std::size_t j = 1; j <= W; ++j) out << " [" << forms.b(i, j).str() << "]";
    out << "\n";
  }
  out << "c constants\n";
  for (std::size_t j = 1; j <= W; ++j)
    out << "  c(" << j << ") = " << forms.c(j).str() << "\n";
  out << "qhat\n";
  for (std::size_t i = 1; i <= W; ++i) {
    out << " ";
    for (std::size_t j = 1; j <= W; ++j) out << " [" << forms.qhat(i, j).str() << "]";
    out << "\n";
  }
  return out.str();
}

std::string sigma_report_json(const SigmaBundle& bundle) {
  const std::size_t g = static_cast<std::size_t>(bundle.forms->genus());
  json obj = json::object();
  obj["schema"] = "nssigma.sigma.v1";
  obj["curve"] = curve_json(bundle.tau.curve);
  obj["weight"] = bundle.tau.weight;
  obj["leading"] = bundle.tau.leading.str();
  json uvars = json::array();
  for (const std::string& lbl : bundle.ufam->labels) uvars.push_back(lbl);
  obj["variables"] = uvars;
  obj["gauge"] = matrix_json(
      [&bundle](std::size_t i, std::size_t j) -> const LambdaPolynomial& {
        return bundle.forms->gauge()[i - 1][j - 1];
      },
      g, g);
  obj["series"] = series_json(bundle.sigma_u);
  return render(obj);
}

std::string sigma_report_text(const SigmaBundle& bundle) {
  std::ostringstream out;
  out << "sigma for y^" << bundle.tau.curve.n << " = x^" << bundle.tau.curve.s
      << " + lower terms, weight " << bundle.tau.weight << "\n";
  out << "gauge block\n";
  const std::size_t g = static_cast<std::size_t>(bundle.forms->genus());
  for (std::size_t i = 1; i <= g; ++i) {
    out << " ";
    for (std::size_t j = 1; j <= g; ++j)
      out << " [" << bundle.forms->gauge()[i - 1][j - 1].str() << "]";
    out << "\n";
  }
  out << "series\n";
  text_series(out, bundle.sigma_u);
  return out.str();
}

std::string verify_report_json(const RunConfig& cfg,
                               const std::vector<CheckResult>& results) {
  json obj = json::object();
  obj["schema"] = "nssigma.verify.v1";
  obj["curve"] = curve_json(cfg.curve);
  obj["weight"] = cfg.weight;
  json checks = json::array();
  for (const CheckResult& r : results) {
    json entry = json::object();
    entry["name"] = r.name;
    entry["weight_bound"] = r.weight_bound;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    checks.push_back(entry);
  }
  obj["checks"] = checks;
  obj["all_pass"] = all_pass(results);
  return render(obj);
}

std::string verify_report_text(const RunConfig& cfg,
                               const std::vector<CheckResult>& results) {
  std::ostringstream out;
  out << "verify y^" << cfg.curve.n << " = x^" << cfg.curve.s
      << " + lower terms, weight " << cfg.weight << "\n";
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (through weight "
        << r.weight_bound << ")";
    if (!r.pass) out << "  " << r.detail;
    out << "\n";
  }
  out << (all_pass(results) ? "all checks passed" : "checks failed") << "\n";
  return out.str();
}

}  // namespace nssigma
