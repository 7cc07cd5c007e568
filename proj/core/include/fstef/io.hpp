#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fstef/prufer.hpp"
#include "fstef/profile.hpp"
#include "fstef/stefan.hpp"
#include "fstef/vanishing.hpp"

namespace fstef::io {

// CSV numbers are written with 12 significant digits, JSON artifacts keep
// full double round-trip precision.

std::string csv_number(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

void write_profile_csv(const std::filesystem::path& path, const WaveProfile& profile);
void write_profile_json(const std::filesystem::path& path, const WaveProfile& profile);
WaveProfile load_profile_csv(const std::filesystem::path& path, double c);
WaveProfile load_profile_json(const std::filesystem::path& path);

void write_series_csv(const std::filesystem::path& path, const ManifoldSeries& series);
void write_series_json(const std::filesystem::path& path, const ManifoldSeries& series);
ManifoldSeries load_series_json(const std::filesystem::path& path);

void write_spectrum_csv(const std::filesystem::path& path, const VanishingSpectrum& spectrum);

void write_trajectory_csv(const std::filesystem::path& path, const PruferTrajectory& traj);
void write_oscillation_json(const std::filesystem::path& path, const OscillationReport& rep);

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<StefanTracePoint>& trace);
void write_outcome_json(const std::filesystem::path& path, const RunOutcome& outcome);

}  // namespace fstef::io
