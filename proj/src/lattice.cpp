#include "spinpair/lattice.hpp"

#include <cmath>
#include <numbers>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

// sin(ka) with the lattice zeros at k = 0 and k = -pi/a made exact, so the
// degenerate points of Z are detected reliably.
double lattice_sine(double ka) {
  const double s = std::sin(ka);
  return std::abs(s) < 1e-14 ? 0.0 : s;
}

}  // namespace

void ModelParams::validate() const {
  if (M < 2) throw InvalidParameter("M must be at least 2");
  if (!(t > 0.0)) throw InvalidParameter("hopping t must be positive");
  if (!(B >= 0.0)) throw InvalidParameter("Zeeman B must be non-negative");
  if (!(lambda >= 0.0)) throw InvalidParameter("Rashba lambda must be non-negative");
  if (!(a > 0.0)) throw InvalidParameter("lattice constant a must be positive");
}

const char* to_string(Band band) noexcept {
  return band == Band::Lower ? "lower" : "upper";
}

int first_grid_index(const ModelParams& params) noexcept { return -(params.M / 2); }

std::vector<double> momentum_grid(const ModelParams& params) {
  params.validate();
  std::vector<double> ks;
  ks.reserve(params.M);
  const int first = first_grid_index(params);
  for (int i = 0; i < params.M; ++i) {
    ks.push_back(2.0 * std::numbers::pi * (first + i) / params.length());
  }
  return ks;
}

double dispersion(const ModelParams& params, double k, Band band) {
  const double ka = k * params.a;
  const double s = lattice_sine(ka);
  const double gap =
      std::sqrt(params.B * params.B + 4.0 * params.lambda * params.lambda * s * s);
  const double kinetic = -2.0 * params.t * std::cos(ka);
  return band == Band::Lower ? kinetic - gap : kinetic + gap;
}

SpinorPhase spinor_phase(const ModelParams& params, double k) {
  const double s = lattice_sine(k * params.a);
  SpinorPhase out;
  out.z = Complex(params.B, 2.0 * params.lambda * s);
  if (out.z == Complex(0.0, 0.0)) {
    out.degenerate = true;
    out.theta = 0.0;
  } else {
    out.theta = std::arg(out.z);
  }
  return out;
}

Spinor bloch_spinor(const ModelParams& params, double k, Band band) {
  const SpinorPhase phase = spinor_phase(params, k);
  const Complex e = std::polar(1.0, -phase.theta);
  const double sign = band == Band::Lower ? -1.0 : 1.0;
  Spinor v;
  v << sign * e, Complex(1.0, 0.0);
  return v * (1.0 / std::numbers::sqrt2);
}

Eigen::Matrix2cd bloch_hamiltonian(const ModelParams& params, double k) {
  const double ka = k * params.a;
  const double s = lattice_sine(ka);
  const double diag = -2.0 * params.t * std::cos(ka);
  const double y = 2.0 * params.lambda * s;
  Eigen::Matrix2cd h;
  // B sigma_x + y sigma_y has off-diagonal (up, down) = B - i y = conj(Z).
  h << Complex(diag, 0.0), Complex(params.B, -y),
       Complex(params.B, y), Complex(diag, 0.0);
  return h;
}

BlochState bloch_state(const ModelParams& params, int n, Band band) {
  BlochState st;
  st.n = n;
  st.k = 2.0 * std::numbers::pi * n / params.length();
  st.band = band;
  st.energy = dispersion(params, st.k, band);
  const SpinorPhase phase = spinor_phase(params, st.k);
  st.theta = phase.theta;
  st.z = phase.z;
  st.degenerate = phase.degenerate;
  st.spinor = bloch_spinor(params, st.k, band);
  return st;
}

std::vector<BlochState> all_bloch_states(const ModelParams& params) {
  params.validate();
  std::vector<BlochState> states;
  states.reserve(2 * static_cast<std::size_t>(params.M));
  const int first = first_grid_index(params);
  for (int i = 0; i < params.M; ++i) {
    states.push_back(bloch_state(params, first + i, Band::Lower));
    states.push_back(bloch_state(params, first + i, Band::Upper));
  }
  return states;
}

}  // namespace spinpair
