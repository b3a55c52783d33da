#include "spinpair/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

Eigen::Vector4cd product(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
  Eigen::Vector4cd out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

ReferenceStates build_reference_states() {
  const double h = (1.0 / std::numbers::sqrt2);
  Eigen::Vector2cd zero, one;
  zero << h, -h;
  one << h, h;
  ReferenceStates s;
  s.singlet = h * (product(one, zero) - product(zero, one));
  s.triplet1 = product(zero, zero);
  s.triplet2 = h * (product(one, zero) + product(zero, one));
  s.triplet3 = product(one, one);
  return s;
}

double expectation(const Eigen::MatrixXcd& rho, const Eigen::Vector4cd& psi) {
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

}  // namespace

const ReferenceStates& reference_states() {
  static const ReferenceStates states = build_reference_states();
  return states;
}

double von_neumann_entropy(const SpinDensityMatrix& dm) {
  const Eigen::MatrixXcd hermitian_part = 0.5 * (dm.entries + dm.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part,
                                                          Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double ev : solver.eigenvalues()) {
    if (ev < kEigenClampFloor) throw NotPSD(ev);
    if (ev > 0.0) entropy -= ev * std::log(ev);
  }
  return std::max(entropy, 0.0);
}

Fidelities fidelities(const SpinDensityMatrix& tsdm) {
  const ReferenceStates& ref = reference_states();
  Fidelities f;
  f.singlet = expectation(tsdm.entries, ref.singlet);
  f.triplet1 = expectation(tsdm.entries, ref.triplet1);
  f.triplet2 = expectation(tsdm.entries, ref.triplet2);
  f.triplet3 = expectation(tsdm.entries, ref.triplet3);
  return f;
}

double mutual_information(const SpinDensityMatrix& tsdm) {
  return 2.0 * von_neumann_entropy(ssdm(tsdm, WhichSpin::Spin1)) - von_neumann_entropy(tsdm);
}

XStateCheck x_state_check(const SpinDensityMatrix& tsdm, double tol) {
  XStateCheck out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_pattern = i == j || i + j == 3;
      if (!on_pattern) out.defect = std::max(out.defect, std::abs(tsdm.entries(i, j)));
    }
  out.is_x_state = out.defect <= tol;
  return out;
}

MeasureSet measure_set(const SpinDensityMatrix& tsdm) {
  MeasureSet out;
  out.S_ab = von_neumann_entropy(tsdm);
  out.S_a = von_neumann_entropy(ssdm(tsdm, WhichSpin::Spin1));
  out.MI = 2.0 * out.S_a - out.S_ab;
  out.F = fidelities(tsdm);
  return out;
}

}  // namespace spinpair
