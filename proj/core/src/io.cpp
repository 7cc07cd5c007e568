#include "fstef/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fstef::io {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  return json::parse(in);
}

void dump_json(const std::filesystem::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << csv_number(row[i]);
    out << '\n';
  }
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path.string());
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_profile_csv(const std::filesystem::path& path, const WaveProfile& profile) {
  CsvTable t;
  t.header = {"z", "u", "v"};
  for (const auto& s : profile.samples) t.rows.push_back({s.z, s.u, s.v});
  write_csv(path, t);
}

void write_profile_json(const std::filesystem::path& path, const WaveProfile& profile) {
  json j;
  j["c"] = profile.c;
  auto &z = j["z"], &u = j["u"], &v = j["v"];
  for (const auto& s : profile.samples) {
    z.push_back(s.z);
    u.push_back(s.u);
    v.push_back(s.v);
  }
  dump_json(path, j);
}

WaveProfile load_profile_csv(const std::filesystem::path& path, double c) {
  const CsvTable t = read_csv(path);
  WaveProfile p;
  p.c = c;
  for (const auto& row : t.rows) p.samples.push_back({row.at(0), row.at(1), row.at(2)});
  return p;
}

WaveProfile load_profile_json(const std::filesystem::path& path) {
  const json j = read_json(path);
  WaveProfile p;
  p.c = j.at("c").get<double>();
  const auto &z = j.at("z"), &u = j.at("u"), &v = j.at("v");
  for (std::size_t i = 0; i < z.size(); ++i)
    p.samples.push_back({z[i].get<double>(), u[i].get<double>(), v[i].get<double>()});
  return p;
}

void write_series_csv(const std::filesystem::path& path, const ManifoldSeries& series) {
  CsvTable t;
  t.header = {"j", "a_j"};
  for (int j = 2; j <= series.order; ++j)
    t.rows.push_back({static_cast<double>(j), series.a(j)});
  write_csv(path, t);
}

void write_series_json(const std::filesystem::path& path, const ManifoldSeries& series) {
  json j;
  j["nu"] = series.nu;
  j["order"] = series.order;
  j["coeffs"] = series.coeffs;
  dump_json(path, j);
}

ManifoldSeries load_series_json(const std::filesystem::path& path) {
  const json j = read_json(path);
  ManifoldSeries s;
  s.nu = j.at("nu").get<double>();
  s.order = j.at("order").get<int>();
  s.coeffs = j.at("coeffs").get<std::vector<double>>();
  return s;
}

void write_spectrum_csv(const std::filesystem::path& path, const VanishingSpectrum& spectrum) {
  CsvTable t;
  t.header = {"n", "lambda"};
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    t.rows.push_back({static_cast<double>(i + 1), spectrum.eigenvalues[i]});
  write_csv(path, t);
}

void write_trajectory_csv(const std::filesystem::path& path, const PruferTrajectory& traj) {
  CsvTable t;
  t.header = {"z", "theta", "r"};
  for (const auto& s : traj.samples) t.rows.push_back({s.z, s.theta, s.r});
  write_csv(path, t);
}

void write_oscillation_json(const std::filesystem::path& path, const OscillationReport& rep) {
  json j;
  j["c"] = rep.c;
  j["lambda_inf"] = rep.lambda_inf;
  j["lambda_grid"] = rep.lambda_grid;
  j["theta_at_origin"] = rep.theta_at_origin;
  j["crossing_free"] = rep.crossing_free;
  j["monotone_pairs"] = rep.monotone_pairs;
  j["squeeze_ok"] = rep.squeeze_ok;
  j["no_point_spectrum"] = rep.no_point_spectrum;
  j["verdict"] =
      rep.no_point_spectrum ? "no point spectrum, lambda >= 0" : "candidate eigenvalue locus";
  dump_json(path, j);
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<StefanTracePoint>& trace) {
  CsvTable t;
  t.header = {"t", "h", "hp", "umax"};
  for (const auto& p : trace) t.rows.push_back({p.t, p.h, p.hp, p.umax});
  write_csv(path, t);
}

void write_outcome_json(const std::filesystem::path& path, const RunOutcome& outcome) {
  json j;
  j["kind"] = to_string(outcome.kind);
  if (outcome.kind == OutcomeKind::Vanishing) j["h_inf_est"] = outcome.h_inf_est;
  if (outcome.kind == OutcomeKind::Spreading) j["c_est"] = outcome.c_est;
  dump_json(path, j);
}

}  // namespace fstef::io
