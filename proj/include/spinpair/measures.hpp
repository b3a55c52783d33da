#pragma once

#include <array>

#include "spinpair/spin_rdm.hpp"

namespace spinpair {

/// Singlet and triplets built on the sigma_x eigenbasis
/// |0> = (|up> - |dn>)/sqrt 2 (eigenvalue -1), |1> = (|up> + |dn>)/sqrt 2,
/// expressed in the sigma_z product basis.
struct ReferenceStates {
  Eigen::Vector4cd singlet;   ///< (|10> - |01>)/sqrt 2
  Eigen::Vector4cd triplet1;  ///< |00>
  Eigen::Vector4cd triplet2;  ///< (|10> + |01>)/sqrt 2
  Eigen::Vector4cd triplet3;  ///< |11>
};

const ReferenceStates& reference_states();

struct Fidelities {
  double singlet = 0.0;
  double triplet1 = 0.0;
  double triplet2 = 0.0;
  double triplet3 = 0.0;

  double sum() const noexcept { return singlet + triplet1 + triplet2 + triplet3; }
};

/// All entropies in nats.
struct MeasureSet {
  double S_ab = 0.0;
  double S_a = 0.0;
  double MI = 0.0;
  Fidelities F;
};

inline constexpr double kEigenClampFloor = -1e-8;

/// -sum lambda ln lambda. Negative eigenvalues down to -1e-8 are treated as
/// zero; anything lower throws NotPSD.
double von_neumann_entropy(const SpinDensityMatrix& dm);

Fidelities fidelities(const SpinDensityMatrix& tsdm);

/// 2 S(rho_1) - S(rho_12) with the spin-1 marginal.
double mutual_information(const SpinDensityMatrix& tsdm);

struct XStateCheck {
  bool is_x_state = false;
  double defect = 0.0;  ///< largest entry outside the X pattern
};

XStateCheck x_state_check(const SpinDensityMatrix& tsdm, double tol);

MeasureSet measure_set(const SpinDensityMatrix& tsdm);

}  // namespace spinpair
