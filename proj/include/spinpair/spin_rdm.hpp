#pragma once

#include <string>

#include <Eigen/Core>

#include "spinpair/correlators.hpp"

namespace spinpair {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;

/// Row/column ordering of a SpinDensityMatrix.
/// TwoSpin: |up up>, |up dn>, |dn up>, |dn dn> (index 2 s1 + s2).
/// OneSpin: |up>, |dn>.
enum class SpinBasis { OneSpin, TwoSpin };

struct SpinDensityMatrix {
  Eigen::MatrixXcd entries;
  SpinBasis basis = SpinBasis::TwoSpin;
  int r1 = 0;
  int r2 = 0;
  /// Trace before normalization.
  double norm_raw = 1.0;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
  Complex operator()(int i, int j) const { return entries(i, j); }
};

enum class WhichSpin { Spin1, Spin2 };

/// Two-spin density matrix from the determinant (Wick) form
///   rho2[s1 s2; s1' s2'] = 1/2 [rho1(r1 s1, r1 s1') rho1(r2 s2, r2 s2')
///                               - rho1(r1 s1, r2 s2') rho1(r2 s2, r1 s1')]
/// normalized by its trace. Throws TooFewElectrons, VanishingTrace.
SpinDensityMatrix tsdm_wick(const OccupiedSet& occ, int r1, int r2);

/// The same matrix written directly in m, A, G, H, K. The positions of the
/// conjugates follow the printed closed form, so the result is Hermitian only
/// for real correlators. Throws VanishingTrace.
SpinDensityMatrix tsdm_closed_form(const CorrelatorSet& corr);

/// Partial trace of a two-spin matrix, keeping `which`.
SpinDensityMatrix ssdm(const SpinDensityMatrix& tsdm, WhichSpin which);

/// Normalized single-spin marginal of spin 1 written in m, A, G, H, K:
///   [[2m^2 - G^2 - H^2, -2mA + G(K + H)], [same, 2m^2 - G^2 - K^2]].
SpinDensityMatrix ssdm_closed_form(const CorrelatorSet& corr);

enum class ValidationStatus { Ok, NotHermitian, TraceNotOne, NotPSD };

struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  ValidationStatus status = ValidationStatus::Ok;

  bool passed() const noexcept { return status == ValidationStatus::Ok; }
  std::string describe() const;
};

ValidationReport validate(const SpinDensityMatrix& dm);

/// validate() and throw the matching ValidationError on failure.
void ensure_valid(const SpinDensityMatrix& dm);

/// Exchange the two tensor factors of a 4x4 matrix.
Eigen::Matrix4cd swap_spins(const Eigen::Matrix4cd& m);

double max_abs_difference(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y);

}  // namespace spinpair
