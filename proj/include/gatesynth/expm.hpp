#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace gatesynth {

namespace detail {

// Pade numerator/denominator split: U collects the odd powers and V the even
// ones, so that (V + U)(V - U)^{-1} approximates exp(A) around A = 0. U and V
// are polynomials in A and therefore commute with each other, so the solve may
// be done from either side.

template <typename M>
void exp_pade3(const M& a, M& u, M& v) {
  const double b[] = {120., 60., 12., 1.};
  const M a2 = a * a;
  const M id = M::Identity(a.rows(), a.cols());
  u = a * (b[3] * a2 + b[1] * id);
  v = b[2] * a2 + b[0] * id;
}

template <typename M>
void exp_pade5(const M& a, M& u, M& v) {
  const double b[] = {30240., 15120., 3360., 420., 30., 1.};
  const M a2 = a * a;
  const M a4 = a2 * a2;
  const M id = M::Identity(a.rows(), a.cols());
  u = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
  v = b[4] * a4 + b[2] * a2 + b[0] * id;
}

template <typename M>
void exp_pade7(const M& a, M& u, M& v) {
  const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
  const M a2 = a * a;
  const M a4 = a2 * a2;
  const M a6 = a4 * a2;
  const M id = M::Identity(a.rows(), a.cols());
  u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

template <typename M>
void exp_pade9(const M& a, M& u, M& v) {
  const double b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                      2162160.,     110880.,     3960.,       90.,        1.};
  const M a2 = a * a;
  const M a4 = a2 * a2;
  const M a6 = a4 * a2;
  const M a8 = a6 * a2;
  const M id = M::Identity(a.rows(), a.cols());
  u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

template <typename M>
void exp_pade13(const M& a, M& u, M& v) {
  const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                      1187353796428800.,  129060195264000.,   10559470521600.,
                      670442572800.,      33522128640.,       1323241920.,
                      40840800.,          960960.,            16380.,
                      182.,               1.};
  const M a2 = a * a;
  const M a4 = a2 * a2;
  const M a6 = a4 * a2;
  const M id = M::Identity(a.rows(), a.cols());
  M w = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * w + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  w = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * w + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

template <typename M>
double l1_norm(const M& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace detail

/// Matrix exponential by scaling-and-squaring with Pade approximants, degree
/// chosen from the 1-norm (thresholds for double precision).
template <typename M>
M expm(const M& a) {
  const double norm = detail::l1_norm(a);
  M u(a.rows(), a.cols()), v(a.rows(), a.cols());
  int squarings = 0;
  if (norm < 1.495585217958292e-2) {
    detail::exp_pade3(a, u, v);
  } else if (norm < 2.539398330063230e-1) {
    detail::exp_pade5(a, u, v);
  } else if (norm < 9.504178996162932e-1) {
    detail::exp_pade7(a, u, v);
  } else if (norm < 2.097847961257068e0) {
    detail::exp_pade9(a, u, v);
  } else {
    const double max_norm = 5.371920351148152;
    std::frexp(norm / max_norm, &squarings);
    if (squarings < 0) squarings = 0;
    const M scaled = a * std::ldexp(1.0, -squarings);
    detail::exp_pade13(scaled, u, v);
  }
  M num = v + u;
  M den = v - u;
  M result = den.partialPivLu().solve(num);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace gatesynth
