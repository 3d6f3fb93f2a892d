// Reference group elements built without Kravchuk functions.

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "kravchuk/su2.hpp"

namespace kravchuk {

template <typename Scalar>
Su2Generators<Scalar> standard_generators(int two_j)
{
  if (two_j < 0) { throw std::domain_error("standard_generators: two_j must be nonnegative"); }
  int const d = two_j + 1;
  CMatrix<Scalar> plus = CMatrix<Scalar>::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    int const two_m = 2 * i - two_j;
    // sqrt((j - m)(j + m + 1))
    plus(i + 1, i) = std::sqrt(Scalar(two_j - two_m) * Scalar(two_j + two_m + 2)) / Scalar(2);
  }
  CMatrix<Scalar> const minus = plus.adjoint();
  Cx<Scalar> const two_i{0, 2};
  Su2Generators<Scalar> g;
  g.two_j = two_j;
  g.Jz = coordinate_diagonal<Scalar>(two_j);
  g.Jx = (plus + minus) / Scalar(2);
  g.Jy = (plus - minus) / two_i;
  return g;
}

template <typename Scalar>
CMatrix<Scalar> expm_hermitian(CMatrix<Scalar> const &H, Scalar t)
{
  Eigen::SelfAdjointEigenSolver<CMatrix<Scalar>> solver(H);
  if (solver.info() != Eigen::Success) { throw std::runtime_error("expm_hermitian: eigensolver did not converge"); }
  auto const &lambda = solver.eigenvalues();
  CVector<Scalar> phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases[i] = std::polar(Scalar(1), -t * lambda[i]);
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

template <typename Scalar>
UnitaryMatrix<Scalar> exp_oracle(int two_j, EulerAngles<Scalar> const &angles)
{
  Su2Generators<Scalar> const g = standard_generators<Scalar>(two_j);
  CMatrix<Scalar> const Jz = g.Jz_matrix();
  return expm_hermitian<Scalar>(Jz, angles.alpha) * expm_hermitian<Scalar>(g.Jx, angles.beta) *
         expm_hermitian<Scalar>(Jz, angles.gamma);
}

template Su2Generators<double> standard_generators<double>(int);
template Su2Generators<long double> standard_generators<long double>(int);
template CMatrix<double> expm_hermitian<double>(CMatrix<double> const &, double);
template CMatrix<long double> expm_hermitian<long double>(CMatrix<long double> const &, long double);
template UnitaryMatrix<double> exp_oracle<double>(int, EulerAngles<double> const &);
template UnitaryMatrix<long double> exp_oracle<long double>(int, EulerAngles<long double> const &);

} // namespace kravchuk
