#include "maxkcut/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace maxkcut {

using nlohmann::json;

json to_json(const SdpSolution& s) {
  json vectors = json::array();
  for (Eigen::Index i = 0; i < s.vectors.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) row.push_back(s.vectors(i, j));
    vectors.push_back(std::move(row));
  }
  return {
      {"n", s.num_vertices()},
      {"d", s.dimension()},
      {"k", s.k},
      {"objective", s.objective},
      {"vectors", std::move(vectors)},
      {"violations", {{"norm", s.max_norm_violation}, {"edge_dot", s.max_dot_violation}}},
      {"iterations", s.iterations},
      {"seed", s.seed},
      {"converged", s.converged},
  };
}

SdpSolution solution_from_json(const json& j) {
  SdpSolution s;
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t d = j.at("d").get<std::size_t>();
    s.k = j.at("k").get<int>();
    s.objective = j.at("objective").get<double>();
    const json& rows = j.at("vectors");
    if (rows.size() != n) throw std::invalid_argument("'vectors' has " + std::to_string(rows.size()) + " rows, expected n");
    s.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != d) throw std::invalid_argument("row " + std::to_string(i) + " of 'vectors' is not of length d");
      for (std::size_t c = 0; c < d; ++c) s.vectors(i, c) = rows[i][c].get<double>();
    }
    if (j.contains("violations")) {
      s.max_norm_violation = j["violations"].value("norm", 0.0);
      s.max_dot_violation = j["violations"].value("edge_dot", 0.0);
    }
    s.iterations = j.value("iterations", std::size_t{0});
    s.seed = j.value("seed", std::uint64_t{0});
    s.converged = j.value("converged", true);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution JSON: ") + e.what());
  }
  return s;
}

json to_json(const Partition& p) {
  return {
      {"k", p.k},
      {"scheme", scheme_name(p.scheme)},
      {"seed", p.seed},
      {"trial", p.trial},
      {"labels", p.labels},
      {"value", p.value},
  };
}

Partition partition_from_json(const json& j) {
  Partition p;
  try {
    p.k = j.at("k").get<int>();
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (!scheme) throw std::invalid_argument("unknown scheme in partition JSON");
    p.scheme = *scheme;
    p.seed = j.at("seed").get<std::uint64_t>();
    p.trial = j.value("trial", std::uint64_t{0});
    p.labels = j.at("labels").get<std::vector<Label>>();
    p.value = j.at("value").get<double>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed partition JSON: ") + e.what());
  }
  return p;
}

void write_trials_csv(std::ostream& out, const TrialStatistics& stats) {
  out << "trial,value\n" << std::setprecision(17);
  for (std::size_t t = 0; t < stats.values.size(); ++t) out << t << ',' << stats.values[t] << '\n';
}

namespace {

std::string cell(const std::optional<double>& v, bool show) {
  if (!show || !v) return "";
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << *v;
  return s.str();
}

json nullable(const std::optional<double>& v, bool show) {
  if (!show || !v) return nullptr;
  return *v;
}

}  // namespace

void write_ratio_csv(std::ostream& out, std::span<const RatioReport> reports, bool with_refs) {
  out << "k,phi_k,fj_ref,dkpw_ref,uniform_baseline\n";
  for (const RatioReport& r : reports) {
    std::ostringstream line;
    line << std::fixed << std::setprecision(6) << r.k << ',' << r.phi_k << ',' << cell(r.fj_ref, with_refs) << ','
         << cell(r.dkpw_ref, with_refs) << ',' << r.uniform_baseline << '\n';
    out << line.str();
  }
}

json to_json(std::span<const RatioReport> reports, bool with_refs) {
  json rows = json::array();
  for (const RatioReport& r : reports) {
    rows.push_back({
        {"k", r.k},
        {"phi_k", r.phi_k},
        {"fj_ref", nullable(r.fj_ref, with_refs)},
        {"dkpw_ref", nullable(r.dkpw_ref, with_refs)},
        {"uniform_baseline", r.uniform_baseline},
        {"worst_case", {{"ratio", r.worst_case.ratio}, {"argmin_r", r.worst_case.argmin_r},
                        {"grid_step", r.worst_case.grid_step}}},
    });
  }
  return rows;
}

void write_curve_csv(std::ostream& out, std::span<const RatioReport> reports) {
  bool with_mc = false;
  for (const RatioReport& r : reports) with_mc = with_mc || !r.monte_carlo.empty();
  out << "k,r,cut_probability,ratio" << (with_mc ? ",mc_estimate,mc_stderr" : "") << '\n';
  out << std::setprecision(10);
  for (const RatioReport& r : reports) {
    for (std::size_t i = 0; i < r.curve.size(); ++i) {
      const CurvePoint& c = r.curve[i];
      out << r.k << ',' << c.r << ',' << c.cut_probability << ',' << c.ratio;
      if (with_mc) {
        if (i < r.monte_carlo.size()) out << ',' << r.monte_carlo[i].value << ',' << r.monte_carlo[i].standard_error;
        else out << ",,";
      }
      out << '\n';
    }
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace maxkcut
