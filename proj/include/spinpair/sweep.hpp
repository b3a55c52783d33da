#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinpair/measures.hpp"
#include "spinpair/parallel.hpp"

namespace spinpair {

inline constexpr const char* kVersion = "1.0.0";

enum class Units { Nats, Ln2 };

struct SweepConfig {
  ModelParams model;
  std::vector<double> deltas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  int r_max = 250;
  /// Separation used by the chemical-potential sweep and the point report.
  int r_fixed = 0;
  std::vector<double> b_grid;
  std::vector<double> lambda_grid;
  std::vector<int> heatmap_r{0, 2, 10};
  Units units = Units::Nats;
  ShellPolicy shell = ShellPolicy::Strict;
  int threads = 0;
  Execution execution = Execution::Parallel;

  /// Model and filling checks; each sweep also checks the separations it
  /// uses lie in [0, M/2]. Throws InvalidParameter.
  void validate() const;
};

/// Parses "0.1,0.2,0.5" or the inclusive range "start:stop:count".
std::vector<double> parse_grid(const std::string& text);

enum class PointErrorKind { None, MidShell, TooFewElectrons, VanishingTrace, Validation, Other };

const char* to_string(PointErrorKind kind) noexcept;

/// One (occupied set, r1, r2) evaluation. Matrices are validated before
/// their measures are taken.
struct PointOutcome {
  PointErrorKind error = PointErrorKind::None;
  std::string message;
  MeasureSet measures;

  bool ok() const noexcept { return error == PointErrorKind::None; }
};

PointOutcome evaluate_point(const OccupiedSet& occ, int r1, int r2) noexcept;

struct GridError {
  std::string location;  ///< e.g. "delta=0.2 R=0"
  PointErrorKind kind = PointErrorKind::Other;
  std::string message;
};

struct DistanceRow {
  double delta = 0.0;  ///< realized filling n_electrons / M
  int n_electrons = 0;
  int R = 0;
  MeasureSet measures;
};

struct MuRow {
  double mu_midgap = 0.0;
  double delta = 0.0;
  int n_electrons = 0;
  MeasureSet measures;
};

struct HeatmapRow {
  double B = 0.0;
  double lambda = 0.0;
  int R = 0;
  double delta = 0.0;
  double S_a = 0.0;
};

template <class Row>
struct SweepTable {
  std::vector<Row> rows;
  std::vector<GridError> errors;
  /// Extra "# key = value" lines for the CSV header.
  std::vector<std::pair<std::string, std::string>> metadata;

  bool has_validation_failure() const noexcept {
    for (const auto& e : errors)
      if (e.kind == PointErrorKind::Validation) return true;
    return false;
  }
};

SweepTable<DistanceRow> sweep_distance(const SweepConfig& config);

/// One row per valid electron count 2..2M at separation config.r_fixed.
SweepTable<MuRow> sweep_chemical_potential(const SweepConfig& config);

/// S_a over config.b_grid x config.lambda_grid x config.heatmap_r at
/// config.deltas.front().
SweepTable<HeatmapRow> heatmap_b_lambda(const SweepConfig& config);

/// Everything known about a single (B, lambda, delta, R) point.
struct PointReport {
  int n_electrons = 0;
  double delta = 0.0;
  double mu_midgap = 0.0;
  CorrelatorSet correlators;
  SpinDensityMatrix tsdm;
  SpinDensityMatrix ssdm1;
  SpinDensityMatrix ssdm2;
  ValidationReport tsdm_check;
  ValidationReport ssdm_check;
  MeasureSet measures;
  XStateCheck x_state;
  double dual_path_deviation = 0.0;  ///< determinant form vs closed form
  double marginal_deviation = 0.0;   ///< partial trace vs closed-form marginal
};

/// Throws the library errors of the underlying steps.
PointReport point_report(const SweepConfig& config, double delta, int R);

void write_point_text(std::ostream& os, const PointReport& report, Units units);
void write_point_csv(std::ostream& os, const SweepConfig& config, const PointReport& report);

void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<DistanceRow>& table);
void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<MuRow>& table);
void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<HeatmapRow>& table);
void write_errors(std::ostream& os, const std::vector<GridError>& errors);

/// 17 significant digits, '.' decimal point.
std::string format_number(double value);

}  // namespace spinpair
