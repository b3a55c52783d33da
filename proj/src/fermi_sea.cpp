#include "spinpair/fermi_sea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

std::shared_ptr<const std::vector<Complex>> make_roots(int M) {
  auto roots = std::make_shared<std::vector<Complex>>(M);
  (*roots)[0] = Complex(1.0, 0.0);
  for (int j = 1; 2 * j <= M; ++j) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * j / M);
    (*roots)[j] = w;
    (*roots)[M - j] = std::conj(w);
  }
  if (M % 2 == 0) (*roots)[M / 2] = Complex(-1.0, 0.0);
  return roots;
}

bool grid_order(const BlochState& x, const BlochState& y) {
  if (x.n != y.n) return x.n < y.n;
  return x.band == Band::Lower && y.band == Band::Upper;
}

}  // namespace

OccupiedSet::OccupiedSet(ModelParams params, std::vector<BlochState> states,
                         double mu_highest, double mu_midgap)
    : params_(params),
      states_(std::move(states)),
      mu_highest_(mu_highest),
      mu_midgap_(mu_midgap) {
  std::sort(states_.begin(), states_.end(), grid_order);
  for (const auto& st : states_) {
    (st.band == Band::Lower ? count_lower_ : count_upper_) += 1;
  }
}

Complex OccupiedSet::unit_root(long long j) const noexcept {
  const long long M = params_.M;
  long long r = j % M;
  if (r < 0) r += M;
  return (*roots_)[static_cast<std::size_t>(r)];
}

bool OccupiedSet::contains(int n, Band band) const noexcept {
  return std::any_of(states_.begin(), states_.end(),
                     [&](const BlochState& s) { return s.n == n && s.band == band; });
}

Spectrum::Spectrum(const ModelParams& params) : params_(params) {
  params_.validate();
  sorted_ = all_bloch_states(params_);
  std::stable_sort(sorted_.begin(), sorted_.end(),
                   [](const BlochState& x, const BlochState& y) { return x.energy < y.energy; });
  // Chain grouping: a level joins the current shell when it lies within the
  // tolerance of its predecessor.
  const double tol = kShellTolerance * params_.t;
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (sorted_[i].energy - sorted_[i - 1].energy > tol) {
      boundaries_.push_back(static_cast<int>(i));
    }
  }
  boundaries_.push_back(static_cast<int>(sorted_.size()));
  roots_ = make_roots(params_.M);
}

bool Spectrum::is_valid_count(int n_electrons) const noexcept {
  return std::binary_search(boundaries_.begin(), boundaries_.end(), n_electrons);
}

int Spectrum::valid_count_below(int n_electrons) const noexcept {
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), n_electrons);
  if (it == boundaries_.begin()) return -1;
  return *std::prev(it);
}

int Spectrum::valid_count_above(int n_electrons) const noexcept {
  auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), n_electrons);
  if (it == boundaries_.end()) return -1;
  return *it;
}

OccupiedSet Spectrum::occupy_count(int n_electrons) const {
  if (n_electrons < 2) throw TooFewElectrons(n_electrons);
  if (!is_valid_count(n_electrons)) {
    throw MidShellError(n_electrons, valid_count_below(n_electrons - 1),
                        valid_count_above(n_electrons + 1));
  }
  const auto count = static_cast<std::size_t>(n_electrons);
  std::vector<BlochState> states(sorted_.begin(), sorted_.begin() + count);
  const double mu_highest = states.back().energy;
  const double mu_midgap =
      count < sorted_.size() ? 0.5 * (mu_highest + sorted_[count].energy) : mu_highest;
  OccupiedSet occ(params_, std::move(states), mu_highest, mu_midgap);
  occ.roots_ = roots_;
  return occ;
}

int Spectrum::resolve_count(double delta, ShellPolicy policy) const {
  if (!(delta > 0.0 && delta <= 2.0)) {
    throw InvalidParameter("filling delta must lie in (0, 2]");
  }
  // nearbyint honours the default round-half-to-even mode.
  const int requested = static_cast<int>(std::nearbyint(delta * params_.M));
  if (policy == ShellPolicy::Strict || is_valid_count(requested)) return requested;
  int below = valid_count_below(requested);
  const int above = valid_count_above(requested);
  if (below < 2) below = -1;
  if (below < 0) return above;
  if (above < 0) return below;
  return (requested - below <= above - requested) ? below : above;
}

OccupiedSet Spectrum::occupy_filling(double delta, ShellPolicy policy) const {
  return occupy_count(resolve_count(delta, policy));
}

OccupiedSet Spectrum::occupy_mu(double mu) const {
  int count = 0;
  for (int boundary : boundaries_) {
    // A shell is taken whole when its lowest level is at or below mu.
    if (sorted_[static_cast<std::size_t>(count)].energy <= mu) {
      count = boundary;
    } else {
      break;
    }
  }
  return occupy_count(count);
}

OccupiedSet occupy_by_filling(const ModelParams& params, double delta, ShellPolicy policy) {
  return Spectrum(params).occupy_filling(delta, policy);
}

OccupiedSet occupy_by_mu(const ModelParams& params, double mu) {
  return Spectrum(params).occupy_mu(mu);
}

double band_onset_mu(const ModelParams& params) {
  double best = std::numeric_limits<double>::infinity();
  for (double k : momentum_grid(params)) {
    best = std::min(best, dispersion(params, k, Band::Upper));
  }
  return best;
}

}  // namespace spinpair
