#pragma once

#include "gatesynth/matrix.hpp"

#include <array>
#include <string_view>

namespace gatesynth {

// Single-qubit operator algebra in the computational basis; two-qubit
// operators are built with kron() below, first factor = qubit 1.

Mat2c pauli_x();
Mat2c pauli_y();
Mat2c pauli_z();

// Ladder pair as used by the dissipation channels: sigma_plus has its unit
// entry in the lower-left corner (sigma_plus e1 = e2), sigma_minus is its
// adjoint. The decay channel (rate proportional to n+1) uses sigma_minus.
Mat2c sigma_plus();
Mat2c sigma_minus();

Mat2c identity2();
Mat4c identity4();
Mat4c ones4();  // all entries equal to one

namespace detail {
constexpr int kron_dim(int a, int b) {
  return (a == Eigen::Dynamic || b == Eigen::Dynamic) ? Eigen::Dynamic : a * b;
}
}  // namespace detail

/// Kronecker product; output dimensions (ra*rb) x (ca*cb).
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = decltype(typename DA::Scalar{} * typename DB::Scalar{});
  constexpr int R = detail::kron_dim(DA::RowsAtCompileTime, DB::RowsAtCompileTime);
  constexpr int C = detail::kron_dim(DA::ColsAtCompileTime, DB::ColsAtCompileTime);
  Eigen::Matrix<Scalar, R, C> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

enum class GateKind { Cnot, Swap, Cz };

struct GateTarget {
  GateKind kind;
  Mat4c matrix;
};

Mat4c gate_matrix(GateKind kind);
GateTarget gate_target(GateKind kind);

std::string_view gate_name(GateKind kind);            // "cnot" | "swap" | "cz"
GateKind parse_gate(std::string_view name);           // throws on unknown name
double unitarity_defect(const Mat4c& u);              // max |(U^dag U - I)_ij|

/// The three initial states of the reduced gate-synthesis objective:
/// diag(2/5, 3/10, 1/5, 1/10), J4/4 and I4/4.
std::array<DensityMatrix, 3> grk_initial_states();

/// U rho U^dag.
DensityMatrix apply_gate(const GateTarget& gate, const DensityMatrix& rho);

/// Squared Hilbert-Schmidt distance ||a - b||^2.
double hs_dist_sq(const Mat4c& a, const Mat4c& b);

}  // namespace gatesynth
