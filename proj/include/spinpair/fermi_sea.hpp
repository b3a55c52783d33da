#pragma once

#include <memory>
#include <span>
#include <vector>

#include "spinpair/lattice.hpp"

namespace spinpair {

/// Energy window, in units of t, inside which single-particle levels count
/// as one degenerate shell.
inline constexpr double kShellTolerance = 1e-9;

/// What occupy_by_filling does when round(delta M) lands inside a shell.
enum class ShellPolicy {
  Strict,   ///< throw MidShellError
  Nearest,  ///< use the nearest valid count (ties go to the smaller count)
};

/// Zero-temperature Fermi sea. Immutable once built.
class OccupiedSet {
 public:
  const ModelParams& params() const noexcept { return params_; }
  /// Occupied orbitals, ascending grid index with lower band first.
  std::span<const BlochState> states() const noexcept { return states_; }
  int n_electrons() const noexcept { return static_cast<int>(states_.size()); }
  double delta() const noexcept { return static_cast<double>(n_electrons()) / params_.M; }
  double mu_highest_occupied() const noexcept { return mu_highest_; }
  /// Midpoint between the highest occupied and lowest empty level; equals
  /// mu_highest_occupied() when every state is filled.
  double mu_midgap() const noexcept { return mu_midgap_; }
  int count_lower() const noexcept { return count_lower_; }
  int count_upper() const noexcept { return count_upper_; }

  /// exp(2 pi i j / M) for any integer j; exact conjugate symmetry j <-> -j.
  Complex unit_root(long long j) const noexcept;

  bool contains(int n, Band band) const noexcept;

 private:
  friend class Spectrum;
  OccupiedSet(ModelParams params, std::vector<BlochState> states, double mu_highest,
              double mu_midgap);

  ModelParams params_;
  std::vector<BlochState> states_;
  double mu_highest_ = 0.0;
  double mu_midgap_ = 0.0;
  int count_lower_ = 0;
  int count_upper_ = 0;
  std::shared_ptr<const std::vector<Complex>> roots_;
};

/// The 2M single-particle levels sorted by energy and grouped into
/// degenerate shells. Build once per ModelParams and draw many fillings.
class Spectrum {
 public:
  explicit Spectrum(const ModelParams& params);

  const ModelParams& params() const noexcept { return params_; }
  /// All states in ascending energy (ties in grid order).
  std::span<const BlochState> sorted_states() const noexcept { return sorted_; }
  /// Cumulative electron counts at shell boundaries, ascending, ending at 2M.
  std::span<const int> valid_counts() const noexcept { return boundaries_; }

  bool is_valid_count(int n_electrons) const noexcept;
  /// Nearest valid counts strictly-or-equal below/above; -1 when absent.
  int valid_count_below(int n_electrons) const noexcept;
  int valid_count_above(int n_electrons) const noexcept;

  /// Fills the lowest n_electrons levels. Throws MidShellError or
  /// TooFewElectrons.
  OccupiedSet occupy_count(int n_electrons) const;

  /// round-half-even(delta M) electrons, resolved according to `policy`.
  OccupiedSet occupy_filling(double delta, ShellPolicy policy = ShellPolicy::Strict) const;

  /// Every level with energy <= mu (whole shells).
  OccupiedSet occupy_mu(double mu) const;

  /// Electron count that occupy_filling would use, after applying `policy`.
  int resolve_count(double delta, ShellPolicy policy) const;

 private:
  ModelParams params_;
  std::vector<BlochState> sorted_;
  std::vector<int> boundaries_;
  std::shared_ptr<const std::vector<Complex>> roots_;
};

OccupiedSet occupy_by_filling(const ModelParams& params, double delta,
                              ShellPolicy policy = ShellPolicy::Strict);

OccupiedSet occupy_by_mu(const ModelParams& params, double mu);

/// Bottom of the upper band on the momentum grid.
double band_onset_mu(const ModelParams& params);

}  // namespace spinpair
