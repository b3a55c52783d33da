// spinpair: two-spin and single-spin density matrices of a Rashba-Zeeman
// Fermi sea, swept over separation, filling and field strengths.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "spinpair/spinpair.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct Options {
  std::string delta;
  std::string b_grid = "0:2:21";
  std::string lambda_grid = "0:2:21";
  std::string units = "nats";
  std::string shell = "strict";
  std::string out;
  bool serial = false;
};

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw spinpair::InvalidParameter("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void errors(const std::vector<spinpair::GridError>& errors) {
    if (errors.empty()) return;
    if (path_.empty()) {
      spinpair::write_errors(std::cerr, errors);
      return;
    }
    std::ofstream sidecar(path_ + ".errors");
    spinpair::write_errors(sidecar, errors);
    std::cerr << errors.size() << " grid point(s) failed; see " << path_ << ".errors\n";
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

template <class Table>
int emit(const spinpair::SweepConfig& config, const Options& opts, const std::string& command,
         const Table& table) {
  Output out(opts.out);
  spinpair::write_csv(out.stream(), config, command, table);
  out.errors(table.errors);
  return table.has_validation_failure() ? kExitValidation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spinpair;

  CLI::App app{"Spin-pair entanglement in a one-dimensional Rashba-Zeeman Fermi sea"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; command-line flags take precedence");

  SweepConfig config;
  Options opts;

  app.add_option("--t", config.model.t, "hopping energy")->capture_default_str();
  app.add_option("--B", config.model.B, "Zeeman strength (units of t)")->capture_default_str();
  app.add_option("--lambda", config.model.lambda, "Rashba strength (units of t)")
      ->capture_default_str();
  app.add_option("--M", config.model.M, "number of sites")->capture_default_str();
  app.add_option("--a", config.model.a, "lattice constant")->capture_default_str();
  app.add_option("--delta", opts.delta,
                 "filling list '0.1,0.3' or range 'start:stop:count' (default 0.1:0.6:6; "
                 "0.3 for heatmap)");
  app.add_option("--r-max", config.r_max, "largest separation of sweep-r")->capture_default_str();
  app.add_option("--r-fixed", config.r_fixed, "separation for sweep-mu and point")
      ->capture_default_str();
  app.add_option("--b-grid", opts.b_grid, "heatmap B grid")->capture_default_str();
  app.add_option("--lambda-grid", opts.lambda_grid, "heatmap lambda grid")->capture_default_str();
  app.add_option("--heatmap-r", config.heatmap_r, "heatmap separations")->capture_default_str();
  app.add_option("--units", opts.units, "entropy units of the point report")
      ->check(CLI::IsMember({"nats", "ln2"}))
      ->capture_default_str();
  app.add_option("--shell", opts.shell,
                 "mid-shell fillings: 'strict' reports them, 'nearest' uses the nearest "
                 "valid electron count")
      ->check(CLI::IsMember({"strict", "nearest"}))
      ->capture_default_str();
  app.add_option("--threads", config.threads, "OpenMP threads (0 = default)")
      ->capture_default_str();
  app.add_flag("--serial", opts.serial, "use the serial reference loop");
  app.add_option("--out", opts.out, "output CSV path (default stdout)");

  auto* sweep_r = app.add_subcommand("sweep-r", "measures versus separation R for each filling");
  auto* sweep_mu = app.add_subcommand("sweep-mu", "fidelities versus chemical potential");
  auto* heatmap = app.add_subcommand("heatmap", "S_a over the B x lambda plane");
  auto* point = app.add_subcommand("point", "full diagnostics at one (B, lambda, delta, R)");
  auto* oracle = app.add_subcommand("oracle", "brute-force Slater-determinant cross-check");
  oracle->group("");
  for (auto* sub : {sweep_r, sweep_mu, heatmap, point, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (!opts.delta.empty()) {
      config.deltas = parse_grid(opts.delta);
    } else if (heatmap->parsed() || point->parsed()) {
      config.deltas = {0.3};
    }
    config.b_grid = parse_grid(opts.b_grid);
    config.lambda_grid = parse_grid(opts.lambda_grid);
    config.units = opts.units == "ln2" ? Units::Ln2 : Units::Nats;
    config.shell = opts.shell == "nearest" ? ShellPolicy::Nearest : ShellPolicy::Strict;
    config.execution = opts.serial ? Execution::Serial : Execution::Parallel;

    if (sweep_r->parsed()) return emit(config, opts, "sweep-r", sweep_distance(config));
    if (sweep_mu->parsed()) return emit(config, opts, "sweep-mu", sweep_chemical_potential(config));
    if (heatmap->parsed()) return emit(config, opts, "heatmap", heatmap_b_lambda(config));

    if (point->parsed()) {
      const PointReport report = point_report(config, config.deltas.front(), config.r_fixed);
      write_point_text(std::cout, report, config.units);
      if (!opts.out.empty()) {
        Output out(opts.out);
        write_point_csv(out.stream(), config, report);
      }
      return report.tsdm_check.passed() && report.ssdm_check.passed() ? 0 : kExitValidation;
    }

    if (oracle->parsed()) {
      std::vector<OracleCase> grid;
      if (app.count("--B") || app.count("--lambda") || app.count("--M")) {
        const Spectrum spectrum(config.model);
        const int M = config.model.M;
        for (int N : {2, 3, 4}) {
          if (!spectrum.is_valid_count(N)) continue;
          for (auto [r1, r2] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, M / 2 + 1}}) {
            grid.push_back({config.model, N, r1, r2 % M});
          }
        }
      } else {
        grid = default_oracle_grid();
      }
      const OracleReport report = oracle_report(grid);
      std::cout << report.table();
      return report.passed() ? 0 : kExitValidation;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
