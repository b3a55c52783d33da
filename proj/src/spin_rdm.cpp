#include "spinpair/spin_rdm.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

constexpr double kVanishingFraction = 1e-12;

SpinDensityMatrix normalized(Eigen::MatrixXcd raw, SpinBasis basis, int r1, int r2) {
  SpinDensityMatrix dm;
  dm.norm_raw = raw.trace().real();
  dm.entries = raw / dm.norm_raw;
  dm.basis = basis;
  dm.r1 = r1;
  dm.r2 = r2;
  return dm;
}

}  // namespace

SpinDensityMatrix tsdm_wick(const OccupiedSet& occ, int r1, int r2) {
  if (occ.n_electrons() < 2) throw TooFewElectrons(occ.n_electrons());
  const Eigen::Matrix2cd local1 = spin_block(occ, r1, r1);
  const Eigen::Matrix2cd local2 = spin_block(occ, r2, r2);
  const Eigen::Matrix2cd cross12 = spin_block(occ, r1, r2);
  const Eigen::Matrix2cd cross21 = spin_block(occ, r2, r1);

  Eigen::MatrixXcd raw(4, 4);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2) {
          raw(2 * s1 + s2, 2 * t1 + t2) =
              0.5 * (local1(s1, t1) * local2(s2, t2) - cross12(s1, t2) * cross21(s2, t1));
        }

  const double density = occ.n_electrons() / (2.0 * occ.params().length());
  const double threshold = kVanishingFraction * density * density;
  const double trace = raw.trace().real();
  if (!(trace > threshold)) throw VanishingTrace(trace, threshold);
  return normalized(std::move(raw), SpinBasis::TwoSpin, r1, r2);
}

SpinDensityMatrix tsdm_closed_form(const CorrelatorSet& c) {
  const double m = c.m;
  const Complex A = c.A, G = c.G, H = c.H, K = c.K;
  const Complex Hs = std::conj(H), Ks = std::conj(K);
  const Complex m2(m * m, 0.0);

  Eigen::MatrixXcd raw(4, 4);
  raw << m2 - G * G, -m * A + G * H, -m * A + G * K, A * A - H * K,
         -m * A + G * Hs, m2 - H * Hs, A * A - G * G, -m * A + G * H,
         -m * A + G * Ks, A * A - G * G, m2 - K * Ks, -m * A + G * K,
         A * A - Hs * Ks, -m * A + G * H, -m * A + G * Ks, m2 - G * G;

  const double threshold = kVanishingFraction * m * m;
  const double trace = raw.trace().real();
  if (!(trace > threshold)) throw VanishingTrace(trace, threshold);
  return normalized(std::move(raw), SpinBasis::TwoSpin, c.R, 0);
}

SpinDensityMatrix ssdm(const SpinDensityMatrix& tsdm, WhichSpin which) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp)
      for (int other = 0; other < 2; ++other) {
        out(s, sp) += which == WhichSpin::Spin1 ? tsdm.entries(2 * s + other, 2 * sp + other)
                                                 : tsdm.entries(2 * other + s, 2 * other + sp);
      }
  SpinDensityMatrix dm = normalized(std::move(out), SpinBasis::OneSpin, tsdm.r1, tsdm.r2);
  dm.norm_raw = tsdm.norm_raw;
  return dm;
}

SpinDensityMatrix ssdm_closed_form(const CorrelatorSet& c) {
  const double m = c.m;
  const Complex A = c.A, G = c.G, H = c.H, K = c.K;
  const Complex off = -2.0 * m * A + G * (K + H);
  Eigen::MatrixXcd raw(2, 2);
  raw << 2.0 * m * m - G * G - H * H, off, off, 2.0 * m * m - G * G - K * K;
  const double threshold = kVanishingFraction * m * m;
  const double trace = raw.trace().real();
  if (!(trace > threshold)) throw VanishingTrace(trace, threshold);
  return normalized(std::move(raw), SpinBasis::OneSpin, c.R, 0);
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "hermiticity " << hermiticity_defect << ", trace " << trace_defect
     << ", min eigenvalue " << min_eigenvalue << " -> ";
  switch (status) {
    case ValidationStatus::Ok: os << "ok"; break;
    case ValidationStatus::NotHermitian: os << "not Hermitian"; break;
    case ValidationStatus::TraceNotOne: os << "trace not one"; break;
    case ValidationStatus::NotPSD: os << "not PSD"; break;
  }
  return os.str();
}

ValidationReport validate(const SpinDensityMatrix& dm) {
  ValidationReport report;
  const Eigen::MatrixXcd& e = dm.entries;
  report.hermiticity_defect = (e - e.adjoint()).cwiseAbs().maxCoeff();
  report.trace_defect = std::abs(e.trace() - Complex(1.0, 0.0));
  const Eigen::MatrixXcd hermitian_part = 0.5 * (e + e.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part,
                                                          Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();

  if (report.hermiticity_defect > kHermitianTolerance) {
    report.status = ValidationStatus::NotHermitian;
  } else if (report.trace_defect > kTraceTolerance) {
    report.status = ValidationStatus::TraceNotOne;
  } else if (report.min_eigenvalue < -kPsdTolerance) {
    report.status = ValidationStatus::NotPSD;
  }
  return report;
}

void ensure_valid(const SpinDensityMatrix& dm) {
  const ValidationReport r = validate(dm);
  switch (r.status) {
    case ValidationStatus::Ok: return;
    case ValidationStatus::NotHermitian: throw NotHermitian(r.hermiticity_defect);
    case ValidationStatus::TraceNotOne: throw TraceNotOne(r.trace_defect);
    case ValidationStatus::NotPSD: throw NotPSD(r.min_eigenvalue);
  }
}

Eigen::Matrix4cd swap_spins(const Eigen::Matrix4cd& m) {
  auto swap = [](int i) { return 2 * (i % 2) + i / 2; };
  Eigen::Matrix4cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(swap(i), swap(j)) = m(i, j);
  return out;
}

double max_abs_difference(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace spinpair
