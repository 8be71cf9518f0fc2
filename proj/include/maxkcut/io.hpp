#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "maxkcut/closed_form.hpp"
#include "maxkcut/rounding.hpp"
#include "maxkcut/sdp.hpp"

namespace maxkcut {

// Solution JSON: {n, d, k, objective, vectors, violations, iterations, seed, converged}
nlohmann::json to_json(const SdpSolution& s);
SdpSolution solution_from_json(const nlohmann::json& j);

// Partition JSON: {k, scheme, seed, trial, labels, value}
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// Per-trial CSV with header "trial,value".
void write_trials_csv(std::ostream& out, const TrialStatistics& stats);

/// CSV "k,phi_k,fj_ref,dkpw_ref,uniform_baseline"; reference cells left
/// empty when omitted or not tabulated.
void write_ratio_csv(std::ostream& out, std::span<const RatioReport> reports, bool with_refs);
nlohmann::json to_json(std::span<const RatioReport> reports, bool with_refs);

/// Per-r curve CSV "k,r,cut_probability,ratio[,mc_estimate,mc_stderr]".
void write_curve_csv(std::ostream& out, std::span<const RatioReport> reports);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace maxkcut
