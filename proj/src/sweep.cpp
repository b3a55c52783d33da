#include "spinpair/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

double to_ln2(double nats) { return nats / std::numbers::ln2; }

double parse_double(const std::string& token) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidParameter("cannot parse number '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

const char* shell_name(ShellPolicy policy) {
  return policy == ShellPolicy::Strict ? "strict" : "nearest";
}

void check_separation(int R, int M, const char* what) {
  if (R < 0 || 2 * R > M) {
    throw InvalidParameter(std::string(what) + " must lie in [0, M/2], got " + std::to_string(R));
  }
}

struct ResolvedFilling {
  double requested = 0.0;
  std::optional<OccupiedSet> occ;
  GridError error;
};

ResolvedFilling resolve_filling(const Spectrum& spectrum, double delta, ShellPolicy policy,
                                const std::string& location) {
  ResolvedFilling out;
  out.requested = delta;
  try {
    out.occ = spectrum.occupy_filling(delta, policy);
  } catch (const MidShellError& e) {
    out.error = GridError{location, PointErrorKind::MidShell, e.what()};
  } catch (const TooFewElectrons& e) {
    out.error = GridError{location, PointErrorKind::TooFewElectrons, e.what()};
  }
  return out;
}

void header(std::ostream& os, const SweepConfig& config, const std::string& command,
            const std::vector<std::pair<std::string, std::string>>& extra) {
  const ModelParams& p = config.model;
  os << "# spinpair " << kVersion << '\n'
     << "# command = " << command << '\n'
     << "# t = " << format_number(p.t) << '\n'
     << "# B = " << format_number(p.B) << '\n'
     << "# lambda = " << format_number(p.lambda) << '\n'
     << "# M = " << p.M << '\n'
     << "# a = " << format_number(p.a) << '\n'
     << "# delta = " << join_numbers(config.deltas) << '\n'
     << "# shell = " << shell_name(config.shell) << '\n';
  for (const auto& [key, value] : extra) os << "# " << key << " = " << value << '\n';
}

void measure_columns(std::ostream& os, const MeasureSet& m) {
  os << ',' << format_number(m.F.singlet) << ',' << format_number(m.F.triplet1) << ','
     << format_number(m.F.triplet2) << ',' << format_number(m.F.triplet3);
}

}  // namespace

void SweepConfig::validate() const {
  model.validate();
  if (deltas.empty()) throw InvalidParameter("delta list is empty");
  for (double d : deltas) {
    if (!(d > 0.0 && d <= 2.0)) {
      throw InvalidParameter("filling delta must lie in (0, 2], got " + format_number(d));
    }
  }
  for (double b : b_grid)
    if (!(b >= 0.0)) throw InvalidParameter("B grid values must be non-negative");
  for (double l : lambda_grid)
    if (!(l >= 0.0)) throw InvalidParameter("lambda grid values must be non-negative");
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InvalidParameter("range grid must be start:stop:count");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double count_value = parse_double(parts[2]);
    const int count = static_cast<int>(count_value);
    if (count < 1 || count != count_value) {
      throw InvalidParameter("range grid count must be a positive integer");
    }
    if (count == 1) return {start};
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& token : split(text, ',')) out.push_back(parse_double(token));
  if (out.empty()) throw InvalidParameter("empty grid");
  return out;
}

const char* to_string(PointErrorKind kind) noexcept {
  switch (kind) {
    case PointErrorKind::None: return "none";
    case PointErrorKind::MidShell: return "mid-shell";
    case PointErrorKind::TooFewElectrons: return "too-few-electrons";
    case PointErrorKind::VanishingTrace: return "vanishing-trace";
    case PointErrorKind::Validation: return "validation";
    case PointErrorKind::Other: return "error";
  }
  return "error";
}

PointOutcome evaluate_point(const OccupiedSet& occ, int r1, int r2) noexcept {
  PointOutcome out;
  try {
    const SpinDensityMatrix tsdm = tsdm_wick(occ, r1, r2);
    ensure_valid(tsdm);
    ensure_valid(ssdm(tsdm, WhichSpin::Spin1));
    out.measures = measure_set(tsdm);
  } catch (const VanishingTrace& e) {
    out.error = PointErrorKind::VanishingTrace;
    out.message = e.what();
  } catch (const ValidationError& e) {
    out.error = PointErrorKind::Validation;
    out.message = e.what();
  } catch (const TooFewElectrons& e) {
    out.error = PointErrorKind::TooFewElectrons;
    out.message = e.what();
  } catch (const std::exception& e) {
    out.error = PointErrorKind::Other;
    out.message = e.what();
  }
  return out;
}

SweepTable<DistanceRow> sweep_distance(const SweepConfig& config) {
  config.validate();
  check_separation(config.r_max, config.model.M, "r-max");
  SweepTable<DistanceRow> table;
  const Spectrum spectrum(config.model);

  std::vector<ResolvedFilling> fillings;
  for (double d : config.deltas) {
    fillings.push_back(resolve_filling(spectrum, d, config.shell, "delta=" + format_number(d)));
    const auto& f = fillings.back();
    if (f.occ) {
      table.metadata.emplace_back("resolved delta " + format_number(d),
                                  std::to_string(f.occ->n_electrons()) + " electrons, delta " +
                                      format_number(f.occ->delta()));
    } else {
      table.errors.push_back(f.error);
    }
  }

  struct Task {
    const OccupiedSet* occ;
    double requested;
    int R;
  };
  std::vector<Task> tasks;
  for (const auto& f : fillings) {
    if (!f.occ) continue;
    for (int R = 0; R <= config.r_max; ++R) tasks.push_back({&*f.occ, f.requested, R});
  }

  const auto outcomes = parallel_map<PointOutcome>(
      tasks.size(), [&](std::size_t i) { return evaluate_point(*tasks[i].occ, tasks[i].R, 0); },
      config.execution, config.threads);

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    if (outcomes[i].ok()) {
      table.rows.push_back(
          {task.occ->delta(), task.occ->n_electrons(), task.R, outcomes[i].measures});
    } else {
      table.errors.push_back({"delta=" + format_number(task.requested) +
                                  " R=" + std::to_string(task.R),
                              outcomes[i].error, outcomes[i].message});
    }
  }
  return table;
}

SweepTable<MuRow> sweep_chemical_potential(const SweepConfig& config) {
  config.validate();
  check_separation(config.r_fixed, config.model.M, "r-fixed");
  SweepTable<MuRow> table;
  const Spectrum spectrum(config.model);
  table.metadata.emplace_back("r_fixed", std::to_string(config.r_fixed));
  table.metadata.emplace_back("band_onset_mu", format_number(band_onset_mu(config.model)));

  std::vector<int> counts;
  for (int c : spectrum.valid_counts())
    if (c >= 2) counts.push_back(c);

  struct MuOutcome {
    double mu = 0.0;
    double delta = 0.0;
    PointOutcome point;
  };
  const auto outcomes = parallel_map<MuOutcome>(
      counts.size(),
      [&](std::size_t i) {
        const OccupiedSet occ = spectrum.occupy_count(counts[i]);
        return MuOutcome{occ.mu_midgap(), occ.delta(), evaluate_point(occ, config.r_fixed, 0)};
      },
      config.execution, config.threads);

  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.point.ok()) {
      table.rows.push_back({o.mu, o.delta, counts[i], o.point.measures});
    } else {
      table.errors.push_back({"n_electrons=" + std::to_string(counts[i]) +
                                  " mu_midgap=" + format_number(o.mu),
                              o.point.error, o.point.message});
    }
  }
  return table;
}

SweepTable<HeatmapRow> heatmap_b_lambda(const SweepConfig& config) {
  config.validate();
  if (config.b_grid.empty() || config.lambda_grid.empty()) {
    throw InvalidParameter("heatmap needs non-empty B and lambda grids");
  }
  for (int R : config.heatmap_r) check_separation(R, config.model.M, "heatmap R");
  SweepTable<HeatmapRow> table;
  const double delta = config.deltas.front();
  table.metadata.emplace_back("heatmap delta", format_number(delta));
  table.metadata.emplace_back("b_grid", join_numbers(config.b_grid));
  table.metadata.emplace_back("lambda_grid", join_numbers(config.lambda_grid));
  table.metadata.emplace_back("heatmap R", join_ints(config.heatmap_r));

  struct Cell {
    double B, lambda;
  };
  std::vector<Cell> cells;
  for (double B : config.b_grid)
    for (double lambda : config.lambda_grid) cells.push_back({B, lambda});

  struct CellOutcome {
    std::optional<GridError> filling_error;
    double delta = 0.0;
    std::vector<PointOutcome> points;
  };
  const auto outcomes = parallel_map<CellOutcome>(
      cells.size(),
      [&](std::size_t i) {
        CellOutcome out;
        ModelParams params = config.model;
        params.B = cells[i].B;
        params.lambda = cells[i].lambda;
        const std::string where =
            "B=" + format_number(params.B) + " lambda=" + format_number(params.lambda);
        try {
          const Spectrum spectrum(params);
          ResolvedFilling f = resolve_filling(spectrum, delta, config.shell, where);
          if (!f.occ) {
            out.filling_error = f.error;
            return out;
          }
          out.delta = f.occ->delta();
          for (int R : config.heatmap_r) out.points.push_back(evaluate_point(*f.occ, R, 0));
        } catch (const std::exception& e) {
          out.filling_error = GridError{where, PointErrorKind::Other, e.what()};
        }
        return out;
      },
      config.execution, config.threads);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.filling_error) {
      table.errors.push_back(*o.filling_error);
      continue;
    }
    for (std::size_t j = 0; j < config.heatmap_r.size(); ++j) {
      const int R = config.heatmap_r[j];
      if (o.points[j].ok()) {
        table.rows.push_back({cells[i].B, cells[i].lambda, R, o.delta, o.points[j].measures.S_a});
      } else {
        table.errors.push_back({"B=" + format_number(cells[i].B) + " lambda=" +
                                    format_number(cells[i].lambda) + " R=" + std::to_string(R),
                                o.points[j].error, o.points[j].message});
      }
    }
  }
  return table;
}

PointReport point_report(const SweepConfig& config, double delta, int R) {
  config.validate();
  check_separation(R, config.model.M, "R");
  const OccupiedSet occ = Spectrum(config.model).occupy_filling(delta, config.shell);
  PointReport r;
  r.n_electrons = occ.n_electrons();
  r.delta = occ.delta();
  r.mu_midgap = occ.mu_midgap();
  r.correlators = correlator_set(occ, R);
  r.tsdm = tsdm_wick(occ, R, 0);
  r.ssdm1 = ssdm(r.tsdm, WhichSpin::Spin1);
  r.ssdm2 = ssdm(r.tsdm, WhichSpin::Spin2);
  r.tsdm_check = validate(r.tsdm);
  r.ssdm_check = validate(r.ssdm1);
  if (r.tsdm_check.passed() && r.ssdm_check.passed()) r.measures = measure_set(r.tsdm);
  r.x_state = x_state_check(r.tsdm, 1e-10);
  r.dual_path_deviation =
      max_abs_difference(r.tsdm.entries, tsdm_closed_form(r.correlators).entries);
  r.marginal_deviation =
      max_abs_difference(r.ssdm1.entries, ssdm_closed_form(r.correlators).entries);
  return r;
}

namespace {

void print_matrix(std::ostream& os, const Eigen::MatrixXcd& m) {
  char buf[64];
  for (int i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, " (%+.10f, %+.10f)", m(i, j).real(), m(i, j).imag());
      os << buf;
    }
    os << '\n';
  }
}

std::string complex_text(Complex z) {
  return format_number(z.real()) + " + " + format_number(z.imag()) + "i";
}

}  // namespace

void write_point_text(std::ostream& os, const PointReport& r, Units units) {
  const bool ln2 = units == Units::Ln2;
  const auto entropy = [&](double s) { return format_number(ln2 ? to_ln2(s) : s); };
  const char* unit = ln2 ? " ln2" : " nats";
  os << "electrons " << r.n_electrons << ", delta " << format_number(r.delta) << ", mu_midgap "
     << format_number(r.mu_midgap) << ", R " << r.correlators.R << '\n';
  os << "correlators:\n"
     << "  m = " << r.correlators.m << '\n'
     << "  A = " << complex_text(r.correlators.A) << '\n'
     << "  G = " << complex_text(r.correlators.G) << '\n'
     << "  H = " << complex_text(r.correlators.H) << '\n'
     << "  K = " << complex_text(r.correlators.K) << '\n';
  os << "TSDM (basis uu, ud, du, dd; raw trace " << format_number(r.tsdm.norm_raw) << "):\n";
  print_matrix(os, r.tsdm.entries);
  os << "SSDM spin 1 (basis u, d):\n";
  print_matrix(os, r.ssdm1.entries);
  os << "SSDM spin 2:\n";
  print_matrix(os, r.ssdm2.entries);
  os << "validate TSDM: " << r.tsdm_check.describe() << '\n'
     << "validate SSDM: " << r.ssdm_check.describe() << '\n';
  os << "measures:\n"
     << "  S_ab = " << entropy(r.measures.S_ab) << unit << '\n'
     << "  S_a  = " << entropy(r.measures.S_a) << unit << '\n'
     << "  MI   = " << entropy(r.measures.MI) << unit << '\n'
     << "  F_s  = " << format_number(r.measures.F.singlet) << '\n'
     << "  F_t1 = " << format_number(r.measures.F.triplet1) << '\n'
     << "  F_t2 = " << format_number(r.measures.F.triplet2) << '\n'
     << "  F_t3 = " << format_number(r.measures.F.triplet3) << '\n';
  os << "X-state: " << (r.x_state.is_x_state ? "yes" : "no") << " (defect "
     << format_number(r.x_state.defect) << ")\n";
  os << "dual-path deviation (determinant vs closed form): "
     << format_number(r.dual_path_deviation) << '\n'
     << "marginal deviation (partial trace vs closed form): "
     << format_number(r.marginal_deviation) << '\n';
}

void write_point_csv(std::ostream& os, const SweepConfig& config, const PointReport& r) {
  header(os, config, "point",
         {{"R", std::to_string(r.correlators.R)},
          {"n_electrons", std::to_string(r.n_electrons)}});
  os << "quantity,row,col,real,imag\n";
  const auto matrix = [&](const char* name, const Eigen::MatrixXcd& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        os << name << ',' << i << ',' << j << ',' << format_number(m(i, j).real()) << ','
           << format_number(m(i, j).imag()) << '\n';
  };
  const auto scalar = [&](const char* name, Complex z) {
    os << name << ",0,0," << format_number(z.real()) << ',' << format_number(z.imag()) << '\n';
  };
  matrix("tsdm", r.tsdm.entries);
  matrix("ssdm", r.ssdm1.entries);
  scalar("m", Complex(r.correlators.m, 0.0));
  scalar("A", r.correlators.A);
  scalar("G", r.correlators.G);
  scalar("H", r.correlators.H);
  scalar("K", r.correlators.K);
  scalar("S_ab_nats", r.measures.S_ab);
  scalar("S_a_nats", r.measures.S_a);
  scalar("MI_nats", r.measures.MI);
  scalar("F_s", r.measures.F.singlet);
  scalar("F_t1", r.measures.F.triplet1);
  scalar("F_t2", r.measures.F.triplet2);
  scalar("F_t3", r.measures.F.triplet3);
  scalar("dual_path_deviation", r.dual_path_deviation);
}

void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<DistanceRow>& table) {
  auto extra = table.metadata;
  extra.insert(extra.begin(), {"r_max", std::to_string(config.r_max)});
  header(os, config, command, extra);
  os << "delta,R,S_ab_nats,S_ab_ln2,S_a_nats,S_a_ln2,MI_nats,F_s,F_t1,F_t2,F_t3\n";
  for (const auto& row : table.rows) {
    const MeasureSet& m = row.measures;
    os << format_number(row.delta) << ',' << row.R << ',' << format_number(m.S_ab) << ','
       << format_number(to_ln2(m.S_ab)) << ',' << format_number(m.S_a) << ','
       << format_number(to_ln2(m.S_a)) << ',' << format_number(m.MI);
    measure_columns(os, m);
    os << '\n';
  }
}

void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<MuRow>& table) {
  header(os, config, command, table.metadata);
  os << "mu_midgap,delta,F_s,F_t1,F_t2,F_t3,S_ab_nats,S_a_nats\n";
  for (const auto& row : table.rows) {
    os << format_number(row.mu_midgap) << ',' << format_number(row.delta);
    measure_columns(os, row.measures);
    os << ',' << format_number(row.measures.S_ab) << ',' << format_number(row.measures.S_a)
       << '\n';
  }
}

void write_csv(std::ostream& os, const SweepConfig& config, const std::string& command,
               const SweepTable<HeatmapRow>& table) {
  header(os, config, command, table.metadata);
  os << "B,lambda,R,delta,S_a_nats,S_a_ln2\n";
  for (const auto& row : table.rows) {
    os << format_number(row.B) << ',' << format_number(row.lambda) << ',' << row.R << ','
       << format_number(row.delta) << ',' << format_number(row.S_a) << ','
       << format_number(to_ln2(row.S_a)) << '\n';
  }
}

void write_errors(std::ostream& os, const std::vector<GridError>& errors) {
  os << "# location,kind,message\n";
  for (const auto& e : errors) {
    os << e.location << ',' << to_string(e.kind) << ",\"" << e.message << "\"\n";
  }
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace spinpair
