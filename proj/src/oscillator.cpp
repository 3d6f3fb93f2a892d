#include "kravchuk/oscillator.hpp"

namespace kravchuk {

template <typename Scalar>
OscillatorSystem<Scalar> build_oscillator(int two_j)
{
  int const d = two_j + 1;
  Su2Generators<Scalar> const g = build_generators<Scalar>(two_j);
  CMatrix<Scalar> const Q = g.Jz_matrix();
  Scalar const j = Scalar(two_j) / 2;

  OscillatorSystem<Scalar> s;
  s.two_j = two_j;
  s.P_tilde = g.Jx;
  s.H_tilde = (s.P_tilde * s.P_tilde + Q * Q) / Scalar(2);
  s.H_tilde_casimir = (j * (j + 1) * CMatrix<Scalar>::Identity(d, d) - g.Jy * g.Jy) / Scalar(2);
  s.Jy = g.Jy;
  return s;
}

template <typename Scalar>
RVector<Scalar> oscillator_energies(int two_j)
{
  Scalar const j = Scalar(two_j) / 2;
  RVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j);
  return ((j * (j + 1)) - q.array().square()) / Scalar(2);
}

template <typename Scalar>
OscillatorEigenstate<Scalar> oscillator_eigenstate(int two_j, TwiceInt m)
{
  int const mi = LabelSet{two_j}.index(m);
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  return {K.col(mi), oscillator_energies<Scalar>(two_j)[mi]};
}

template <typename Scalar>
Report check_oscillator(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  OscillatorSystem<Scalar> const s = build_oscillator<Scalar>(two_j);
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  RVector<Scalar> const energies = oscillator_energies<Scalar>(two_j);
  CMatrix<Scalar> const Q = coordinate_diagonal<Scalar>(two_j).template cast<Cx<Scalar>>().asDiagonal();
  Cx<Scalar> const iu{0, 1};

  double eigen_res = 0.0;
  for (int mi = 0; mi < d; ++mi) {
    StateVector<Scalar> const psi = K.col(mi);
    eigen_res = std::max(eigen_res, static_cast<double>((s.H_tilde * psi - energies[mi] * psi).norm()));
  }
  double const forms = static_cast<double>((s.H_tilde - s.H_tilde_casimir).norm());
  double const comm = static_cast<double>((Q * s.P_tilde - s.P_tilde * Q - iu * s.Jy).norm());

  double const eigen_tol = tolerance.value_or(eigenresidual_tolerance(d));
  double const float_tol = tolerance_or_default(tolerance, d);

  Report r;
  r.identity = "oscillator";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = eigen_tol;
  r.max_residual = std::max({eigen_res, forms, comm});
  r.pass = eigen_res < eigen_tol && forms < float_tol && comm < float_tol;
  r.detail = "eigenresidual: " + format_residual(eigen_res) + " (tol " + format_residual(eigen_tol) +
             "), hamiltonian forms: " + format_residual(forms) + ", [Q,P~]-iJy: " + format_residual(comm) + " (tol " +
             format_residual(float_tol) + ")";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

#define KRAVCHUK_INSTANTIATE(Scalar)                                                                 \
  template OscillatorSystem<Scalar> build_oscillator<Scalar>(int);                                   \
  template RVector<Scalar> oscillator_energies<Scalar>(int);                                         \
  template OscillatorEigenstate<Scalar> oscillator_eigenstate<Scalar>(int, TwiceInt);                \
  template Report check_oscillator<Scalar>(int, std::optional<double>);

KRAVCHUK_INSTANTIATE(double)
KRAVCHUK_INSTANTIATE(long double)

} // namespace kravchuk
