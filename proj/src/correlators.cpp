#include "spinpair/correlators.hpp"

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

constexpr int kCompensatedThreshold = 10000;

// Neumaier compensated accumulator; plain accumulation when disabled.
class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(Complex x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    add_part(re_, cre_, x.real());
    add_part(im_, cim_, x.imag());
  }

  Complex value() const {
    return compensated_ ? Complex(re_ + cre_, im_ + cim_) : sum_;
  }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  bool compensated_;
  Complex sum_;
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

void check_site(const OccupiedSet& occ, int site) {
  if (site < 0 || site >= occ.params().M) throw SiteOutOfRange(site, occ.params().M);
}

// Lower band enters the A, H, K sums with +, upper with -.
double band_weight(Band band) { return band == Band::Lower ? 1.0 : -1.0; }

}  // namespace

CorrelatorSet correlator_set(const OccupiedSet& occ, int R) {
  const bool compensated = occ.params().M >= kCompensatedThreshold;
  Accumulator A(compensated), G(compensated), H(compensated), K(compensated);
  for (const BlochState& st : occ.states()) {
    const Complex forward = occ.unit_root(static_cast<long long>(st.n) * R);
    const Complex backward = occ.unit_root(-static_cast<long long>(st.n) * R);
    const Complex phase = std::polar(band_weight(st.band), st.theta);
    A.add(phase);
    G.add(forward);
    H.add(phase * forward);
    K.add(phase * backward);
  }
  CorrelatorSet out;
  out.R = R;
  out.m = occ.n_electrons();
  out.A = A.value();
  out.G = G.value();
  out.H = H.value();
  out.K = K.value();
  return out;
}

Complex single_particle_dm(const OccupiedSet& occ, SiteSpin x, SiteSpin xp) {
  check_site(occ, x.site);
  check_site(occ, xp.site);
  const int s = static_cast<int>(x.spin);
  const int sp = static_cast<int>(xp.spin);
  const bool compensated = occ.params().M >= kCompensatedThreshold;
  Accumulator sum(compensated);
  for (const BlochState& st : occ.states()) {
    // phi*(r) phi(r') carries e^{+ikr} e^{-ikr'}.
    const Complex plane = occ.unit_root(static_cast<long long>(st.n) * (x.site - xp.site));
    sum.add(plane * std::conj(st.spinor(s)) * st.spinor(sp));
  }
  // spinor already holds 1/sqrt 2, leaving 1/L from 1/(2L).
  return sum.value() / occ.params().length();
}

Eigen::Matrix2cd spin_block(const OccupiedSet& occ, int r, int rp) {
  check_site(occ, r);
  check_site(occ, rp);
  const bool compensated = occ.params().M >= kCompensatedThreshold;
  Accumulator b00(compensated), b01(compensated), b10(compensated), b11(compensated);
  for (const BlochState& st : occ.states()) {
    const Complex plane = occ.unit_root(static_cast<long long>(st.n) * (r - rp));
    const Complex up = st.spinor(0);
    const Complex dn = st.spinor(1);
    b00.add(plane * std::conj(up) * up);
    b01.add(plane * std::conj(up) * dn);
    b10.add(plane * std::conj(dn) * up);
    b11.add(plane * std::conj(dn) * dn);
  }
  Eigen::Matrix2cd block;
  block << b00.value(), b01.value(), b10.value(), b11.value();
  return block / occ.params().length();
}

}  // namespace spinpair
