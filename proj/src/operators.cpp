#include "gatesynth/operators.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <string>

namespace gatesynth {

namespace {
const cplx kI{0.0, 1.0};
}

Mat2c pauli_x() {
  Mat2c m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2c pauli_y() {
  Mat2c m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2c pauli_z() {
  Mat2c m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2c sigma_plus() {
  Mat2c m;
  m << 0, 0, 1, 0;
  return m;
}

Mat2c sigma_minus() {
  Mat2c m;
  m << 0, 1, 0, 0;
  return m;
}

Mat2c identity2() { return Mat2c::Identity(); }
Mat4c identity4() { return Mat4c::Identity(); }
Mat4c ones4() { return Mat4c::Ones(); }

double hermiticity_defect(const Mat4c& rho) { return hs_norm(rho - rho.adjoint()); }

double trace_defect(const Mat4c& rho) { return std::abs(rho.trace() - cplx{1.0}); }

double min_eigenvalue(const Mat4c& rho) {
  Mat4c herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4c> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityDefects density_defects(const DensityMatrix& rho) {
  return {hermiticity_defect(rho), trace_defect(rho), min_eigenvalue(rho)};
}

bool is_valid_density(const DensityMatrix& rho, const DensityTolerances& tol) {
  DensityDefects d = density_defects(rho);
  return d.hermiticity <= tol.hermiticity && d.trace <= tol.trace &&
         d.min_eig >= -tol.psd;
}

void require_valid_density(const DensityMatrix& rho, const DensityTolerances& tol) {
  DensityDefects d = density_defects(rho);
  if (d.hermiticity > tol.hermiticity)
    throw std::invalid_argument("density matrix not Hermitian: defect " +
                                std::to_string(d.hermiticity));
  if (d.trace > tol.trace)
    throw std::invalid_argument("density matrix trace off unity by " +
                                std::to_string(d.trace));
  if (d.min_eig < -tol.psd)
    throw std::invalid_argument("density matrix not positive semidefinite: min eig " +
                                std::to_string(d.min_eig));
}

Mat4c gate_matrix(GateKind kind) {
  Mat4c m = Mat4c::Zero();
  switch (kind) {
    case GateKind::Cnot:
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      break;
    case GateKind::Swap:
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      break;
    case GateKind::Cz:
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 2) = 1;
      m(3, 3) = -1;
      break;
  }
  return m;
}

GateTarget gate_target(GateKind kind) { return {kind, gate_matrix(kind)}; }

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot:
      return "cnot";
    case GateKind::Swap:
      return "swap";
    case GateKind::Cz:
      return "cz";
  }
  return "?";
}

GateKind parse_gate(std::string_view name) {
  if (name == "cnot") return GateKind::Cnot;
  if (name == "swap") return GateKind::Swap;
  if (name == "cz") return GateKind::Cz;
  throw std::invalid_argument("unknown gate '" + std::string(name) +
                              "' (expected cnot, swap or cz)");
}

double unitarity_defect(const Mat4c& u) {
  return (u.adjoint() * u - Mat4c::Identity()).cwiseAbs().maxCoeff();
}

std::array<DensityMatrix, 3> grk_initial_states() {
  DensityMatrix r1 = DensityMatrix::Zero();
  r1(0, 0) = 2.0 / 5.0;
  r1(1, 1) = 3.0 / 10.0;
  r1(2, 2) = 1.0 / 5.0;
  r1(3, 3) = 1.0 / 10.0;
  DensityMatrix r2 = 0.25 * ones4();
  DensityMatrix r3 = 0.25 * identity4();
  return {r1, r2, r3};
}

DensityMatrix apply_gate(const GateTarget& gate, const DensityMatrix& rho) {
  return gate.matrix * rho * gate.matrix.adjoint();
}

double hs_dist_sq(const Mat4c& a, const Mat4c& b) { return (a - b).squaredNorm(); }

}  // namespace gatesynth
