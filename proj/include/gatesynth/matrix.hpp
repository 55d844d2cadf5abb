#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace gatesynth {

using cplx = std::complex<double>;

using Mat2c = Eigen::Matrix<cplx, 2, 2>;
using Mat4c = Eigen::Matrix<cplx, 4, 4>;
using Mat16c = Eigen::Matrix<cplx, 16, 16>;
using Vec16c = Eigen::Matrix<cplx, 16, 1>;

/// A two-qubit density matrix. Validity (Hermitian, unit trace, positive
/// semidefinite) is checked where a contract requires it, not enforced by
/// the type itself.
using DensityMatrix = Mat4c;

/// Linear map on column-stacked vec(rho).
using Superoperator = Mat16c;

struct DensityTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double psd = 1e-8;
};

template <typename DA, typename DB>
bool approx_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                  double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.derived() - b.derived()).cwiseAbs().maxCoeff() <= tol;
}

/// Hilbert-Schmidt (Frobenius) norm.
template <typename D>
double hs_norm(const Eigen::MatrixBase<D>& a) {
  return std::sqrt(a.derived().cwiseAbs2().sum());
}

double hermiticity_defect(const Mat4c& rho);  // ||rho - rho^dag||_HS
double trace_defect(const Mat4c& rho);        // |tr(rho) - 1|
double min_eigenvalue(const Mat4c& rho);      // of the Hermitian part

struct DensityDefects {
  double hermiticity;
  double trace;
  double min_eig;
};

DensityDefects density_defects(const DensityMatrix& rho);
bool is_valid_density(const DensityMatrix& rho, const DensityTolerances& tol = {});

/// Throws std::invalid_argument naming the violated property.
void require_valid_density(const DensityMatrix& rho, const DensityTolerances& tol = {});

}  // namespace gatesynth
