#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace spinpair;
using testing::chain;

namespace {

constexpr double kLn2 = std::numbers::ln2;

SweepConfig base_config(double B, double lambda, int M = 500) {
  SweepConfig c;
  c.model = chain(B, lambda, M);
  c.shell = ShellPolicy::Nearest;
  return c;
}

template <class Table>
std::string csv_of(const SweepConfig& config, const std::string& command, const Table& table) {
  std::ostringstream os;
  write_csv(os, config, command, table);
  return os.str();
}

bool has_error(const std::vector<GridError>& errors, const std::string& location, PointErrorKind kind) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const GridError& e) { return e.location == location && e.kind == kind; });
}

}  // namespace

TEST_CASE("grid parsing") {
  CHECK(parse_grid("0.1,0.2, 0.5") == std::vector<double>{0.1, 0.2, 0.5});
  CHECK(parse_grid("3") == std::vector<double>{3.0});
  const auto range = parse_grid("0:2:21");
  REQUIRE(range.size() == 21);
  CHECK(range.front() == 0.0);
  CHECK(range[5] == doctest::Approx(0.5));
  CHECK(range.back() == 2.0);
  CHECK(parse_grid("1:1:1") == std::vector<double>{1.0});
  CHECK_THROWS_AS(parse_grid(""), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("0.1,abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("0:1"), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("0:1:0"), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("0:1:2.5"), InvalidParameter);
}

TEST_CASE("config validation") {
  SweepConfig c = base_config(0.4, 0);
  CHECK_NOTHROW(c.validate());
  c.deltas = {};
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c.deltas = {0.0};
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c.deltas = {2.5};
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
  c.deltas = {0.3};
  c.r_max = 251;
  CHECK_THROWS_AS(sweep_distance(c), InvalidParameter);
  c.r_max = 10;
  c.model.M = 1;
  CHECK_THROWS_AS(sweep_distance(c), InvalidParameter);
  SweepConfig h = base_config(0, 0);
  h.b_grid = {-0.1};
  h.lambda_grid = {0};
  CHECK_THROWS_AS(heatmap_b_lambda(h), InvalidParameter);
}

TEST_CASE("strict shell policy reports mid-shell fillings as grid errors") {
  SweepConfig c = base_config(0, 0);
  c.shell = ShellPolicy::Strict;
  c.deltas = {0.1, 0.2};  // 50 is a shell, 100 is not
  c.r_max = 5;
  const auto table = sweep_distance(c);
  CHECK(table.rows.size() == 6);
  REQUIRE(table.errors.size() == 1);
  CHECK(table.errors[0].kind == PointErrorKind::MidShell);
  CHECK(table.errors[0].message.find("nearest valid counts: 98, 102") != std::string::npos);
}

TEST_CASE("sweep output does not depend on the execution mode") {
  SweepConfig c = base_config(0.4, 1.0, 120);
  c.deltas = {0.2, 0.7, 1.4};
  c.r_max = 60;
  c.execution = Execution::Serial;
  const std::string serial = csv_of(c, "sweep-r", sweep_distance(c));
  const std::string serial_mu = csv_of(c, "sweep-mu", sweep_chemical_potential(c));
  c.b_grid = {0, 0.5, 1.5};
  c.lambda_grid = {0, 0.8};
  const std::string serial_map = csv_of(c, "heatmap", heatmap_b_lambda(c));
  for (int threads : {1, 3}) {
    c.execution = Execution::Parallel;
    c.threads = threads;
    CHECK(csv_of(c, "sweep-r", sweep_distance(c)) == serial);
    CHECK(csv_of(c, "sweep-mu", sweep_chemical_potential(c)) == serial_mu);
    CHECK(csv_of(c, "heatmap", heatmap_b_lambda(c)) == serial_map);
  }
}

TEST_CASE("distance sweep with both fields: oscillating marginal") {
  SweepConfig c = base_config(0.4, 1.0);
  c.deltas = {0.3};
  c.r_max = 50;
  const auto table = sweep_distance(c);
  REQUIRE(table.rows.size() == 51);
  int extrema = 0;
  for (std::size_t i = 1; i + 1 < table.rows.size(); ++i) {
    const double prev = table.rows[i - 1].measures.S_a, here = table.rows[i].measures.S_a,
                 next = table.rows[i + 1].measures.S_a;
    extrema += (here - prev) * (next - here) < 0;
  }
  CHECK(extrema >= 3);
}

TEST_CASE("distance sweep rows and metadata") {
  SweepConfig c = base_config(0, 0);
  c.deltas = {0.2, 0.6};
  c.r_max = 20;
  const auto table = sweep_distance(c);
  CHECK(table.errors.empty());
  REQUIRE(table.rows.size() == 42);
  CHECK(table.rows.front().n_electrons == 98);  // tie between 98 and 102 goes down
  CHECK(table.rows.front().delta == doctest::Approx(0.196));
  CHECK(table.rows.back().n_electrons == 298);
  CHECK(std::abs(table.rows.front().measures.S_ab) <= 1e-12);
  const std::string csv = csv_of(c, "sweep-r", table);
  CHECK(csv.rfind("# ", 0) == 0);
  CHECK(csv.find("# resolved delta 0.20000000000000001 = 98 electrons, delta 0.19600000000000001") !=
        std::string::npos);
  CHECK(csv.find("\ndelta,R,S_ab_nats,S_ab_ln2,S_a_nats,S_a_ln2,MI_nats,F_s,F_t1,F_t2,F_t3\n") !=
        std::string::npos);
  CHECK(csv.find("threads") == std::string::npos);
}

TEST_CASE("chemical-potential sweep across the Zeeman band onset") {
  SweepConfig c = base_config(0.4, 0);
  c.r_fixed = 0;
  const auto contact = sweep_chemical_potential(c);
  const double onset = band_onset_mu(c.model);
  CHECK(onset == doctest::Approx(-1.6).epsilon(1e-12));
  const std::string csv = csv_of(c, "sweep-mu", contact);
  CHECK(csv.find("# band_onset_mu = -1.6000000000000001\n") != std::string::npos);
  CHECK(csv.find("\nmu_midgap,delta,F_s,F_t1,F_t2,F_t3,S_ab_nats,S_a_nats\n") != std::string::npos);
  // Below the onset every pair at one site is Pauli-blocked.
  CHECK(!contact.errors.empty());
  for (const auto& e : contact.errors) CHECK(e.kind == PointErrorKind::VanishingTrace);
  for (const auto& row : contact.rows) {
    CHECK(row.mu_midgap >= onset - 1e-12);
    CHECK(row.measures.F.singlet == doctest::Approx(1.0).epsilon(1e-10));
  }

  c.r_fixed = 1;
  const auto neighbour = sweep_chemical_potential(c);
  CHECK(neighbour.errors.empty());
  int below = 0;
  for (const auto& row : neighbour.rows) {
    CHECK(row.delta == doctest::Approx(row.n_electrons / 500.0));
    if (row.mu_midgap < onset - 1e-9) {
      ++below;
      CHECK(row.measures.F.triplet1 == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  CHECK(below > 50);
  const MuRow& full = neighbour.rows.back();
  CHECK(full.delta == 2.0);
  for (double f : {full.measures.F.singlet, full.measures.F.triplet1, full.measures.F.triplet2,
                   full.measures.F.triplet3})
    CHECK(f == doctest::Approx(0.25).epsilon(1e-12));
  // At contact the filled band still pairs into a singlet.
  CHECK(contact.rows.back().measures.F.singlet == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < neighbour.rows.size(); ++i)
    CHECK(neighbour.rows[i].mu_midgap >= neighbour.rows[i - 1].mu_midgap);
}

TEST_CASE("heatmap") {
  SweepConfig c = base_config(0, 0);
  c.deltas = {0.3};
  c.b_grid = {0, 0.4, 3.0};
  c.lambda_grid = {0, 1.0};
  const auto table = heatmap_b_lambda(c);
  const auto find = [&](double B, double lambda, int R) -> const HeatmapRow* {
    for (const auto& row : table.rows)
      if (row.B == B && row.lambda == lambda && row.R == R) return &row;
    return nullptr;
  };
  for (double lambda : {0.0, 1.0})
    for (int R : {0, 2, 10}) {
      const auto* row = find(0, lambda, R);
      REQUIRE(row != nullptr);
      CHECK(row->S_a == doctest::Approx(kLn2).epsilon(1e-10));
    }
  REQUIRE(find(0.4, 0, 0) != nullptr);
  CHECK(find(0.4, 0, 0)->S_a == doctest::Approx(kLn2).epsilon(1e-10));
  for (int R : {2, 10}) {
    REQUIRE(find(3.0, 0, R) != nullptr);
    CHECK(std::abs(find(3.0, 0, R)->S_a) <= 1e-10);
  }
  CHECK(find(3.0, 0, 0) == nullptr);
  CHECK(has_error(table.errors, "B=3 lambda=0 R=0", PointErrorKind::VanishingTrace));
  const std::string csv = csv_of(c, "heatmap", table);
  CHECK(csv.find("\nB,lambda,R,delta,S_a_nats,S_a_ln2\n") != std::string::npos);
}

TEST_CASE("point report") {
  SweepConfig c = base_config(0, 0, 4);
  const auto r = point_report(c, 0.5, 0);
  CHECK(r.n_electrons == 2);
  CHECK(r.measures.F.singlet == doctest::Approx(1.0));
  CHECK(r.measures.MI == doctest::Approx(2 * kLn2));
  CHECK(r.tsdm_check.passed());
  CHECK(r.ssdm_check.passed());
  CHECK(r.x_state.is_x_state);
  CHECK(r.dual_path_deviation <= 1e-12);
  CHECK(r.marginal_deviation <= 1e-12);

  std::ostringstream text;
  write_point_text(text, r, Units::Ln2);
  CHECK(text.str().find("S_a  = 1 ln2\n") != std::string::npos);
  std::ostringstream csv;
  write_point_csv(csv, c, r);
  CHECK(csv.str().find("\nquantity,row,col,real,imag\n") != std::string::npos);
  CHECK(csv.str().find("\ntsdm,1,2,-0.5,0\n") != std::string::npos);

  CHECK_THROWS_AS(point_report(c, 0.5, 3), InvalidParameter);
  const auto zeeman = point_report(base_config(0.4, 0), 0.2, 7);
  CHECK(zeeman.n_electrons == 99);
  CHECK(zeeman.measures.F.triplet1 == doctest::Approx(1.0).epsilon(1e-12));
  c.shell = ShellPolicy::Strict;
  try {
    point_report(c, 0.75, 1);
    FAIL("expected a mid-shell error");
  } catch (const MidShellError& e) {
    CHECK(std::string(e.what()).find("nearest valid counts: 2, 6") != std::string::npos);
  }
}

TEST_CASE("number and error formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-1.6) == "-1.6000000000000001");
  CHECK(format_number(2) == "2");
  std::ostringstream os;
  write_errors(os, {{"delta=0.3 R=0", PointErrorKind::VanishingTrace, "no weight"}});
  CHECK(os.str() == "# location,kind,message\ndelta=0.3 R=0,vanishing-trace,\"no weight\"\n");
  CHECK(std::string(to_string(PointErrorKind::MidShell)) == "mid-shell");
}

TEST_CASE("evaluate_point maps failures to kinds") {
  const auto occ = occupy_by_filling(chain(0.4, 0), 0.098);
  CHECK(evaluate_point(occ, 0, 0).error == PointErrorKind::VanishingTrace);
  CHECK(evaluate_point(occ, 1, 0).ok());
  CHECK(evaluate_point(occ, 600, 0).error == PointErrorKind::Other);
}
