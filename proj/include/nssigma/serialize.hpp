#pragma once

#include <string>

#include "nssigma/pipeline.hpp"

namespace nssigma {

// Canonical renderings: key order and rational formatting are fixed, so equal
// inputs always produce identical bytes.  Rationals print as "num/den".

std::string curve_report_json(const CurveModel& curve);
std::string curve_report_text(const CurveModel& curve);

std::string tau_report_json(const TauFunction& tau, const GradedSeries& tau_t);
std::string tau_report_text(const TauFunction& tau, const GradedSeries& tau_t);

std::string forms_report_json(const KleinianForms& forms);
std::string forms_report_text(const KleinianForms& forms);

std::string sigma_report_json(const SigmaBundle& bundle);
std::string sigma_report_text(const SigmaBundle& bundle);

std::string verify_report_json(const RunConfig& cfg,
                               const std::vector<CheckResult>& results);
std::string verify_report_text(const RunConfig& cfg,
                               const std::vector<CheckResult>& results);

}  // namespace nssigma
