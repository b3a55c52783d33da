#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spinpair/spin_rdm.hpp"

namespace spinpair {

inline constexpr int kOracleMaxSites = 8;
inline constexpr int kOracleMaxElectrons = 4;

/// N orbitals tabulated on the 2M lattice spin-orbitals x = (r, s), row index
/// 2 r + s. Columns are orthonormal.
struct FirstQuantizedState {
  int M = 0;
  int N = 0;
  Eigen::MatrixXcd orbitals;  ///< 2M x N
};

/// Bloch orbitals e^{-ikr} (-+e^{-i theta}, 1) / sqrt(2M) of an occupied set.
/// Throws IntractableSize.
FirstQuantizedState first_quantized_from_bloch(const OccupiedSet& occ);

/// Lowest N eigenvectors of the 2M x 2M real-space chain Hamiltonian.
/// Throws MidShellError when level N-1 and N are degenerate, IntractableSize.
FirstQuantizedState first_quantized_from_real_space(const ModelParams& params, int N);

/// 2M x 2M real-space Hamiltonian, basis index 2 r + s.
Eigen::MatrixXcd real_space_hamiltonian(const ModelParams& params);

/// Two-spin matrix rho[s1 s2; s1' s2'] ~ sum_{x3..xN} Psi(r1 s1, r2 s2, ...)
/// Psi*(r1 s1', r2 s2', ...) with Psi the normalized Slater determinant,
/// normalized by its trace. Throws IntractableSize, VanishingTrace.
SpinDensityMatrix oracle_tsdm(const FirstQuantizedState& state, int r1, int r2);

struct OracleCase {
  ModelParams params;
  int n_electrons = 2;
  int r1 = 0;
  int r2 = 0;
};

enum class OracleOutcome {
  Compared,        ///< both constructions produced a matrix
  BothVanishing,   ///< both report a vanishing two-particle trace
  Inconsistent,    ///< one construction vanished and the other did not
};

struct OracleComparison {
  OracleCase point;
  OracleOutcome outcome = OracleOutcome::Compared;
  double deviation_bloch = 0.0;       ///< oracle on Bloch orbitals vs Wick
  double deviation_real_space = 0.0;  ///< oracle on real-space eigenvectors vs Wick
};

struct OracleReport {
  std::vector<OracleComparison> rows;
  double tolerance = 1e-9;

  double max_deviation() const noexcept;
  bool passed() const noexcept;
  std::string table() const;
};

/// {B in {0, 0.4}} x {lambda in {0, 1}} x {M in {4, 6}} x valid N in {2, 3, 4}
/// x three site pairs.
std::vector<OracleCase> default_oracle_grid();

/// Per-point comparison of oracle_tsdm against tsdm_wick. Errors other than
/// a vanishing trace propagate.
OracleReport oracle_report(std::span<const OracleCase> grid, double tolerance = 1e-9);

}  // namespace spinpair
