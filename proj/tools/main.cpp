// Command-line driver: builds a curve model from flags, runs the requested
// stage (curve | tau | sigma | forms | verify), and emits a canonical report.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or internal error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nssigma/cache.hpp"
#include "nssigma/pipeline.hpp"
#include "nssigma/serialize.hpp"

namespace {

using nssigma::CurveModel;
using nssigma::LambdaPolynomial;
using nssigma::Rational;
using nssigma::RunConfig;

struct Options {
  int n = 2;
  int s = 3;
  std::vector<std::string> lambda_specs;
  long weight = 8;
  std::string format = "json";
  std::string cache_dir;
  unsigned jobs = 1;
  std::string gauge_file;
  std::string output_file;
};

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty()) throw std::invalid_argument("bad rational '" + text + "'");
  return Rational(mpz_class(num), mpz_class(den));
}

// "--lambda i,j=VAL" pins one coefficient; "--lambda all=VAL" pins every one.
// VAL is a rational ("3", "-1/2") or "sym" to leave the coefficient symbolic.
CurveModel apply_lambda_specs(CurveModel curve, const std::vector<std::string>& specs) {
  for (const std::string& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("lambda spec '" + spec + "' needs '='");
    const std::string lhs = spec.substr(0, eq);
    const std::string rhs = spec.substr(eq + 1);
    std::optional<Rational> value;
    if (rhs != "sym") value = parse_rational(rhs);
    if (lhs == "all") {
      for (std::size_t k = 0; k < curve.space->size(); ++k) {
        const auto [i, j] = curve.space->index(k);
        curve = curve.with_value(i, j, value);
      }
      continue;
    }
    const auto comma = lhs.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("lambda spec '" + spec + "' needs 'i,j=' or 'all='");
    const int i = std::stoi(lhs.substr(0, comma));
    const int j = std::stoi(lhs.substr(comma + 1));
    curve = curve.with_value(i, j, value);
  }
  return curve;
}

// The gauge file pins the gap-block of the symmetric bilinear correction.
// Entries are 1-based over the gap indices; omitted entries stay zero and the
// matrix is symmetrized from whichever triangle is present.
std::vector<std::vector<LambdaPolynomial>> load_gauge(const std::string& path,
                                                      const CurveModel& curve) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open gauge file '" + path + "'");
  nlohmann::json doc = nlohmann::json::parse(in);

  const long g = curve.genus();
  std::vector<std::vector<LambdaPolynomial>> gauge(g, std::vector<LambdaPolynomial>(g));
  std::vector<std::vector<bool>> given(g, std::vector<bool>(g, false));

  for (const auto& entry : doc.at("entries")) {
    const long row = entry.at("row").get<long>();
    const long col = entry.at("col").get<long>();
    if (row < 1 || row > g || col < 1 || col > g)
      throw std::invalid_argument("gauge entry index out of range");
    LambdaPolynomial value;
    for (const auto& term : entry.at("terms")) {
      LambdaPolynomial mono(parse_rational(term.at("coefficient").get<std::string>()));
      if (term.contains("powers")) {
        for (const auto& [key, exp] : term.at("powers").items()) {
          int i = 0, j = 0;
          if (std::sscanf(key.c_str(), "l(%d,%d)", &i, &j) != 2)
            throw std::invalid_argument("bad gauge power key '" + key + "'");
          if (curve.space->find(i, j) == nssigma::ParameterSpace::npos)
            throw std::invalid_argument("gauge power '" + key + "' is not a curve coefficient");
          LambdaPolynomial gen = LambdaPolynomial::generator(curve.space, i, j);
          for (long e = 0; e < exp.get<long>(); ++e) mono = mono * gen;
        }
      }
      value = value + mono;
    }
    if (given[row - 1][col - 1] && !(gauge[row - 1][col - 1] == value))
      throw std::invalid_argument("gauge entries conflict at (" + std::to_string(row) +
                                  "," + std::to_string(col) + ")");
    gauge[row - 1][col - 1] = value;
    given[row - 1][col - 1] = true;
  }
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      if (given[i][j] && given[j][i] && !(gauge[i][j] == gauge[j][i]))
        throw std::invalid_argument("gauge matrix is not symmetric");
      if (given[i][j] && !given[j][i]) gauge[j][i] = gauge[i][j];
    }
  return gauge;
}

std::string gauge_fingerprint(const std::vector<std::vector<LambdaPolynomial>>& gauge) {
  std::ostringstream out;
  for (const auto& row : gauge)
    for (const auto& entry : row) out << entry.str() << ';';
  return out.str();
}

void emit(const Options& opt, const std::string& bytes) {
  if (opt.output_file.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(opt.output_file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + opt.output_file + "'");
  out << bytes;
}

int run_command(const std::string& command, const Options& opt) {
  CurveModel curve = apply_lambda_specs(CurveModel::make(opt.n, opt.s), opt.lambda_specs);
  if (opt.format != "json" && opt.format != "text")
    throw std::invalid_argument("format must be 'json' or 'text'");
  if (opt.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");

  RunConfig cfg;
  cfg.curve = curve;
  cfg.weight = opt.weight;
  cfg.jobs = opt.jobs;
  if (!opt.gauge_file.empty()) cfg.gauge = load_gauge(opt.gauge_file, curve);

  if (command == "curve") {
    emit(opt, opt.format == "json" ? nssigma::curve_report_json(curve)
                                   : nssigma::curve_report_text(curve));
    return 0;
  }

  const long lead_weight = nssigma::Semigroup(opt.n, opt.s).gap_partition().weight();
  if (cfg.weight < lead_weight)
    throw std::invalid_argument("--weight must be at least the leading partition weight " +
                                std::to_string(lead_weight));
  if (command != "tau" && cfg.weight < 2 * curve.genus())
    throw std::invalid_argument("this command needs --weight >= 2*genus = " +
                                std::to_string(2 * curve.genus()));

  // Cache key covers everything that influences the bytes we would emit.
  std::string cache_dir = opt.cache_dir;
  if (const char* env = std::getenv("NS_SIGMA_CACHE")) cache_dir = env;
  std::uint64_t key = 0;
  if (!cache_dir.empty()) {
    std::ostringstream desc;
    desc << "nssigma.v1|" << command << '|' << curve.signature() << "|W=" << cfg.weight
         << "|gauge=" << gauge_fingerprint(cfg.gauge) << "|format=" << opt.format;
    key = nssigma::fnv1a64(desc.str());
    if (auto hit = nssigma::cache_load(cache_dir, key)) {
      emit(opt, *hit);
      return 0;
    }
  }

  std::string bytes;
  int code = 0;
  if (command == "tau") {
    nssigma::TauFunction tau = nssigma::run_tau(cfg);
    auto tfam = nssigma::time_family(static_cast<std::size_t>(cfg.weight));
    nssigma::SchurCalculator calc(tfam, cfg.weight);
    nssigma::GradedSeries tau_t = nssigma::tau_series(tau, calc);
    bytes = opt.format == "json" ? nssigma::tau_report_json(tau, tau_t)
                                 : nssigma::tau_report_text(tau, tau_t);
  } else if (command == "forms") {
    nssigma::KleinianForms forms(cfg.curve, cfg.weight, cfg.gauge);
    bytes = opt.format == "json" ? nssigma::forms_report_json(forms)
                                 : nssigma::forms_report_text(forms);
  } else if (command == "sigma") {
    nssigma::SigmaBundle bundle = nssigma::run_bundle(cfg);
    bytes = opt.format == "json" ? nssigma::sigma_report_json(bundle)
                                 : nssigma::sigma_report_text(bundle);
  } else if (command == "verify") {
    std::vector<nssigma::CheckResult> results = nssigma::verify_suite(cfg);
    bytes = opt.format == "json" ? nssigma::verify_report_json(cfg, results)
                                 : nssigma::verify_report_text(cfg, results);
    code = nssigma::all_pass(results) ? 0 : 1;
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }

  // Verification failures are still deterministic reports; cache them too.
  if (!cache_dir.empty()) nssigma::cache_store(cache_dir, key, bytes);
  emit(opt, bytes);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur expansions of tau and sigma functions for (n,s) plane curves"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> commands;
  for (const char* name : {"curve", "tau", "sigma", "forms", "verify"}) {
    CLI::App* cmd = app.add_subcommand(name);
    cmd->add_option("--n", opt.n, "Degree in y (at least 2)");
    cmd->add_option("--s", opt.s, "Degree in x (coprime to n, larger)");
    cmd->add_option("--lambda", opt.lambda_specs,
                    "Coefficient pin 'i,j=VAL' or 'all=VAL'; VAL rational or 'sym'");
    cmd->add_option("--weight", opt.weight, "Weight cutoff for all series");
    cmd->add_option("--format", opt.format, "Output format: json or text");
    cmd->add_option("--cache", opt.cache_dir, "Result cache directory");
    cmd->add_option("--jobs", opt.jobs, "Worker threads for minor expansion");
    cmd->add_option("--gauge", opt.gauge_file, "JSON file pinning the gap-block gauge");
    cmd->add_option("--output", opt.output_file, "Write the report here instead of stdout");
    commands.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    for (CLI::App* cmd : commands)
      if (cmd->parsed()) return run_command(cmd->get_name(), opt);
    std::cerr << "error: no command given\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
