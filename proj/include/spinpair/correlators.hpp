#pragma once

#include <Eigen/Core>

#include "spinpair/fermi_sea.hpp"

namespace spinpair {

enum class Spin { Up = 0, Down = 1 };

struct SiteSpin {
  int site = 0;
  Spin spin = Spin::Up;
};

/// Band-resolved momentum sums at separation R = r1 - r2 (in units of a):
///   m = |occ|
///   A = sum_lower e^{i theta} - sum_upper e^{i theta}
///   G = sum_all e^{i k R a}
///   H = sum_lower e^{i theta} e^{i k R a} - sum_upper (same)
///   K = H evaluated at -R
struct CorrelatorSet {
  int R = 0;
  int m = 0;
  Complex A;
  Complex G;
  Complex H;
  Complex K;
};

CorrelatorSet correlator_set(const OccupiedSet& occ, int R);

/// rho1(x, x') = sum_occ phi*(r, sigma) phi(r', sigma') with lattice
/// normalized orbitals phi = e^{-ikr} (-+e^{-i theta}, 1) / sqrt(2L).
/// Throws SiteOutOfRange.
Complex single_particle_dm(const OccupiedSet& occ, SiteSpin x, SiteSpin xp);

/// The 2x2 spin block rho1((r, s), (rp, s')) indexed [s][s'], evaluated in a
/// single pass over the occupied states.
Eigen::Matrix2cd spin_block(const OccupiedSet& occ, int r, int rp);

}  // namespace spinpair
