#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Core>

namespace spinpair {

using Complex = std::complex<double>;
using Spinor = Eigen::Vector2cd;

/// Periodic Rashba-Zeeman chain. Energies are in units of t, lengths in
/// units of a.
struct ModelParams {
  double t = 1.0;
  double B = 0.0;
  double lambda = 0.0;
  int M = 500;
  double a = 1.0;

  double length() const noexcept { return M * a; }

  /// Throws InvalidParameter unless M >= 2, t > 0, B >= 0, lambda >= 0, a > 0.
  void validate() const;
};

enum class Band { Lower, Upper };

const char* to_string(Band band) noexcept;

struct SpinorPhase {
  double theta = 0.0;
  Complex z;
  /// Z == 0: the two bands are degenerate and theta is fixed to 0.
  bool degenerate = false;
};

struct BlochState {
  int n = 0;  ///< grid index, k = 2 pi n / (M a)
  double k = 0.0;
  Band band = Band::Lower;
  double energy = 0.0;
  double theta = 0.0;
  Spinor spinor;
  Complex z;
  bool degenerate = false;
};

/// k_n = 2 pi n / (M a) for n = -floor(M/2) .. ceil(M/2) - 1, ascending.
std::vector<double> momentum_grid(const ModelParams& params);

/// Smallest grid index, -floor(M/2).
int first_grid_index(const ModelParams& params) noexcept;

double dispersion(const ModelParams& params, double k, Band band);

/// theta = arg Z with Z = B + 2 i lambda sin(ka).
SpinorPhase spinor_phase(const ModelParams& params, double k);

/// Normalized (-+ e^{-i theta}, 1) / sqrt 2 in the sigma_z basis, without the
/// plane-wave factor.
Spinor bloch_spinor(const ModelParams& params, double k, Band band);

/// 2x2 Bloch Hamiltonian -2t cos(ka) + B sigma_x + 2 lambda sin(ka) sigma_y.
Eigen::Matrix2cd bloch_hamiltonian(const ModelParams& params, double k);

BlochState bloch_state(const ModelParams& params, int n, Band band);

/// All 2M Bloch states ordered by grid index, lower band before upper.
std::vector<BlochState> all_bloch_states(const ModelParams& params);

}  // namespace spinpair
