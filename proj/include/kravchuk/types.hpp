#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace kravchuk {

template <typename Scalar>
using Cx = std::complex<Scalar>;

template <typename Scalar>
using RMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using CMatrix = Eigen::Matrix<Cx<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<Cx<Scalar>, Eigen::Dynamic, 1>;

/// Operators on the spin-j space. Row and column i hold label m = i - j, so
/// the spin is implied by the size: two_j = rows() - 1.
template <typename Scalar>
using UnitaryMatrix = CMatrix<Scalar>;
/// psi[i] = psi(i - j).
template <typename Scalar>
using StateVector = CVector<Scalar>;

inline int two_j_of(Eigen::Index dim) { return static_cast<int>(dim) - 1; }

/// Float tolerance for identity residuals at dimension d: 1e-12 d^2.
inline double default_tolerance(int dim) { return 1e-12 * static_cast<double>(dim) * dim; }

inline double tolerance_or_default(std::optional<double> tol, int dim) { return tol ? *tol : default_tolerance(dim); }

/// The coordinate operator Q as its diagonal (-j, ..., j).
template <typename Scalar>
RVector<Scalar> coordinate_diagonal(int two_j)
{
  RVector<Scalar> q(two_j + 1);
  for (int i = 0; i <= two_j; ++i) {
    q[i] = Scalar(2 * i - two_j) / Scalar(2);
  }
  return q;
}

/// |j; m>.
template <typename Scalar>
StateVector<Scalar> basis_state(int two_j, int index)
{
  StateVector<Scalar> e = StateVector<Scalar>::Zero(two_j + 1);
  e[index] = Scalar(1);
  return e;
}

} // namespace kravchuk
