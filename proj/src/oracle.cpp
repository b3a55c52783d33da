#include "spinpair/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

void check_size(int M, int N) {
  if (M > kOracleMaxSites || N < 2 || N > kOracleMaxElectrons) throw IntractableSize(M, N);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

FirstQuantizedState first_quantized_from_bloch(const OccupiedSet& occ) {
  const int M = occ.params().M;
  const int N = occ.n_electrons();
  check_size(M, N);
  FirstQuantizedState state{M, N, Eigen::MatrixXcd(2 * M, N)};
  const double norm = 1.0 / std::sqrt(static_cast<double>(M));
  int col = 0;
  for (const BlochState& st : occ.states()) {
    for (int r = 0; r < M; ++r) {
      const Complex plane = std::polar(norm, -2.0 * std::numbers::pi * st.n * r / M);
      state.orbitals(2 * r, col) = plane * st.spinor(0);
      state.orbitals(2 * r + 1, col) = plane * st.spinor(1);
    }
    ++col;
  }
  return state;
}

Eigen::MatrixXcd real_space_hamiltonian(const ModelParams& params) {
  params.validate();
  const int M = params.M;
  Eigen::Matrix2cd sx, sy, id;
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  id.setIdentity();
  // Bond block c_i^dag (-t + i lambda sigma_y) c_{i+1}, plus its conjugate.
  const Eigen::Matrix2cd forward = -params.t * id + Complex(0, params.lambda) * sy;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * M, 2 * M);
  for (int i = 0; i < M; ++i) {
    const int j = (i + 1) % M;
    h.block<2, 2>(2 * i, 2 * i) += params.B * sx;
    h.block<2, 2>(2 * i, 2 * j) += forward;
    h.block<2, 2>(2 * j, 2 * i) += forward.adjoint();
  }
  return h;
}

FirstQuantizedState first_quantized_from_real_space(const ModelParams& params, int N) {
  check_size(params.M, N);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(real_space_hamiltonian(params));
  const Eigen::VectorXd& e = solver.eigenvalues();
  if (N < e.size() && e(N) - e(N - 1) <= 1e-9 * params.t) {
    int below = N - 1, above = N + 1;
    while (below > 0 && e(below) - e(below - 1) <= 1e-9 * params.t) --below;
    while (above < e.size() && e(above) - e(above - 1) <= 1e-9 * params.t) ++above;
    throw MidShellError(N, below, above);
  }
  return FirstQuantizedState{params.M, N, solver.eigenvectors().leftCols(N)};
}

SpinDensityMatrix oracle_tsdm(const FirstQuantizedState& state, int r1, int r2) {
  check_size(state.M, state.N);
  if (r1 < 0 || r1 >= state.M) throw SiteOutOfRange(r1, state.M);
  if (r2 < 0 || r2 >= state.M) throw SiteOutOfRange(r2, state.M);
  const int N = state.N;
  const int dim = 2 * state.M;
  const int spectators = N - 2;
  const double inv_norm = 1.0 / std::sqrt(factorial(N));

  std::vector<int> coords(static_cast<std::size_t>(spectators), 0);
  Eigen::MatrixXcd slater(N, N);
  Eigen::Matrix4cd raw = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd psi;

  // Odometer over every spectator assignment x3..xN in [0, 2M)^{N-2}.
  while (true) {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int i = 0; i < N; ++i) {
          slater(i, 0) = state.orbitals(2 * r1 + s1, i);
          slater(i, 1) = state.orbitals(2 * r2 + s2, i);
          for (int j = 0; j < spectators; ++j) {
            slater(i, j + 2) = state.orbitals(coords[static_cast<std::size_t>(j)], i);
          }
        }
        psi(2 * s1 + s2) = slater.determinant() * inv_norm;
      }
    raw += psi * psi.adjoint();

    int pos = 0;
    while (pos < spectators && ++coords[static_cast<std::size_t>(pos)] == dim) {
      coords[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == spectators) break;
  }

  const double scale = static_cast<double>(N) / (2.0 * state.M);
  const double threshold = 1e-12 * scale * scale;
  const double trace = raw.trace().real();
  if (!(trace > threshold)) throw VanishingTrace(trace, threshold);

  SpinDensityMatrix dm;
  dm.entries = raw / trace;
  dm.basis = SpinBasis::TwoSpin;
  dm.r1 = r1;
  dm.r2 = r2;
  dm.norm_raw = trace;
  return dm;
}

double OracleReport::max_deviation() const noexcept {
  double worst = 0.0;
  for (const auto& row : rows) {
    worst = std::max({worst, row.deviation_bloch, row.deviation_real_space});
  }
  return worst;
}

bool OracleReport::passed() const noexcept {
  return std::none_of(rows.begin(), rows.end(), [](const OracleComparison& r) {
           return r.outcome == OracleOutcome::Inconsistent;
         }) &&
         max_deviation() <= tolerance;
}

std::string OracleReport::table() const {
  std::ostringstream os;
  os << "     B  lambda  M  N  r1  r2   dev(bloch)   dev(real-space)  outcome\n";
  for (const auto& row : rows) {
    const auto& p = row.point;
    os << std::fixed << std::setprecision(2) << std::setw(6) << p.params.B << std::setw(8)
       << p.params.lambda << std::setw(3) << p.params.M << std::setw(3) << p.n_electrons
       << std::setw(4) << p.r1 << std::setw(4) << p.r2 << std::scientific << std::setprecision(3)
       << std::setw(13) << row.deviation_bloch << std::setw(16) << row.deviation_real_space
       << "  ";
    switch (row.outcome) {
      case OracleOutcome::Compared: os << "compared"; break;
      case OracleOutcome::BothVanishing: os << "both vanishing"; break;
      case OracleOutcome::Inconsistent: os << "INCONSISTENT"; break;
    }
    os << '\n';
  }
  os << "max deviation " << std::scientific << std::setprecision(3) << max_deviation()
     << " (tolerance " << tolerance << "): " << (passed() ? "pass" : "FAIL") << '\n';
  return os.str();
}

std::vector<OracleCase> default_oracle_grid() {
  std::vector<OracleCase> grid;
  for (double B : {0.0, 0.4})
    for (double lambda : {0.0, 1.0})
      for (int M : {4, 6}) {
        ModelParams params;
        params.B = B;
        params.lambda = lambda;
        params.M = M;
        const Spectrum spectrum(params);
        for (int N : {2, 3, 4}) {
          if (!spectrum.is_valid_count(N)) continue;
          for (auto [r1, r2] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, M / 2 + 1}}) {
            grid.push_back(OracleCase{params, N, r1, r2});
          }
        }
      }
  return grid;
}

OracleReport oracle_report(std::span<const OracleCase> grid, double tolerance) {
  OracleReport report;
  report.tolerance = tolerance;
  for (const OracleCase& point : grid) {
    const OccupiedSet occ = Spectrum(point.params).occupy_count(point.n_electrons);
    const FirstQuantizedState bloch = first_quantized_from_bloch(occ);
    const FirstQuantizedState real_space =
        first_quantized_from_real_space(point.params, point.n_electrons);

    OracleComparison row;
    row.point = point;
    int vanished = 0;
    SpinDensityMatrix wick, from_bloch, from_real;
    try { wick = tsdm_wick(occ, point.r1, point.r2); } catch (const VanishingTrace&) { ++vanished; }
    try { from_bloch = oracle_tsdm(bloch, point.r1, point.r2); } catch (const VanishingTrace&) { ++vanished; }
    try { from_real = oracle_tsdm(real_space, point.r1, point.r2); } catch (const VanishingTrace&) { ++vanished; }

    if (vanished == 3) {
      row.outcome = OracleOutcome::BothVanishing;
    } else if (vanished > 0) {
      row.outcome = OracleOutcome::Inconsistent;
    } else {
      row.deviation_bloch = max_abs_difference(from_bloch.entries, wick.entries);
      row.deviation_real_space = max_abs_difference(from_real.entries, wick.entries);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace spinpair
