#pragma once

#include "gatesynth/controls.hpp"
#include "gatesynth/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gatesynth {

/// Raised when propagation produces non-finite values or an output that
/// fails the density-matrix checks.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SystemVariant { Sys1 = 1, Sys2 = 2, Sys3 = 3 };

SystemVariant parse_system(int id);  // throws on id outside 1..3

/// Physical constants of one two-qubit system plus the environment-coupling
/// strength eps. rate1/rate2 are the relaxation rate constants, lamb1/lamb2
/// the Lamb-shift constants; alpha is the qubit-qubit coupling used only by
/// system 3.
struct SystemSpec {
  SystemVariant variant = SystemVariant::Sys1;
  double omega1 = 1.0;
  double omega2 = 1.1;
  double rate1 = 0.5;
  double rate2 = 0.5;
  double lamb1 = 0.5;
  double lamb2 = 0.5;
  std::optional<double> alpha;  // required for Sys3
  double eps = 0.0;
};

void validate_spec(const SystemSpec& spec);

/// Constant operator blocks assembled from a SystemSpec. h_eff_1/h_eff_2 are
/// the Hermitian generators multiplying n1(t) and n2(t) in the Hamiltonian;
/// sigma_minus_j / sigma_plus_j are the per-qubit jump operators of the decay
/// and excitation channels.
struct SystemOperators {
  Mat4c h_free;
  Mat4c v;
  Mat4c h_eff_1;
  Mat4c h_eff_2;
  Mat4c sigma_minus_1;
  Mat4c sigma_minus_2;
  Mat4c sigma_plus_1;
  Mat4c sigma_plus_2;
  double rate1 = 0.0;
  double rate2 = 0.0;
};

SystemOperators build_system(const SystemSpec& spec);

/// H(u, n) = h_free + eps * (n1 h_eff_1 + n2 h_eff_2) + u * v.
Mat4c hamiltonian(const SystemOperators& ops, const SystemSpec& spec, double u,
                  double n1, double n2);

/// Dissipator of the master equation (without the global eps factor):
/// sum_j rate_j (n_j + 1)(2 s-_j rho s+_j - s+_j s-_j rho - rho s+_j s-_j)
///     + rate_j n_j     (2 s+_j rho s-_j - s-_j s+_j rho - rho s-_j s+_j).
Mat4c dissipator_apply(const SystemOperators& ops, double n1, double n2,
                       const DensityMatrix& rho);

/// Right-hand side -i[H, rho] + eps * D(rho), evaluated directly from the
/// 4x4 operators. Independent of the superoperator construction below.
Mat4c master_rhs(const SystemOperators& ops, const SystemSpec& spec, double u,
                 double n1, double n2, const Mat4c& rho);

/// vec(rho) by column stacking; vec(A rho B) = (B^T kron A) vec(rho).
Vec16c vec(const Mat4c& rho);
Mat4c unvec(const Vec16c& v);

/// Superoperator of rho -> -i [h, rho].
Superoperator commutator_superop(const Mat4c& h);
/// Superoperator of rho -> 2 c rho c^dag - c^dag c rho - rho c^dag c.
Superoperator lindblad_superop(const Mat4c& c);

/// Affine split of the controlled generator: L(u, n1, n2) =
/// l0 + u l_u + n1 l_n1 + n2 l_n2.
struct LiouvillianParts {
  Superoperator l0;
  Superoperator l_u;
  Superoperator l_n1;
  Superoperator l_n2;

  Superoperator assemble(double u, double n1, double n2) const {
    return l0 + u * l_u + n1 * l_n1 + n2 * l_n2;
  }
};

LiouvillianParts liouvillian_parts(const SystemOperators& ops, const SystemSpec& spec);

/// Real 16-coordinate layout of a Hermitian 4x4 matrix: row-wise upper
/// triangle, real part before imaginary part, diagonal entries real:
/// (r11, Re r12, Im r12, Re r13, Im r13, Re r14, Im r14, r22, Re r23,
///  Im r23, Re r24, Im r24, r33, Re r34, Im r34, r44).
std::array<double, 16> realify(const Mat4c& rho);
Mat4c unrealify(const std::array<double, 16>& x);

/// Final state after the K segment propagators exp(dt L_i) with dt = T/K.
DensityMatrix propagate(const DensityMatrix& rho0, const ControlSchedule& schedule,
                        const LiouvillianParts& parts);

/// States after each of the K segments.
std::vector<DensityMatrix> propagate_states(const DensityMatrix& rho0,
                                            const ControlSchedule& schedule,
                                            const LiouvillianParts& parts);

/// Same propagator chain applied to several initial states; each segment
/// exponential is computed once.
std::vector<DensityMatrix> propagate_batch(const std::vector<DensityMatrix>& rhos,
                                           const ControlSchedule& schedule,
                                           const LiouvillianParts& parts);

/// Fixed-step classical RK4 on dvec(rho)/dt = L vec(rho), `substeps` steps per
/// control segment. Verification oracle for the exponential path.
DensityMatrix rk4_reference(const DensityMatrix& rho0, const ControlSchedule& schedule,
                            const LiouvillianParts& parts, int substeps);

}  // namespace gatesynth
