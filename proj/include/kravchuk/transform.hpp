#pragma once

#include <array>
#include <optional>

#include "kravchuk/functions.hpp"
#include "kravchuk/types.hpp"

namespace kravchuk {

/// K(n, m) = (-1)^{2j} i^n K_{-n}(m), the Kravchuk transform. Unitary, with
/// K^3 = I and K^2 = K^+.
template <typename Scalar>
UnitaryMatrix<Scalar> kravchuk_transform_matrix(int two_j);

/// U psi, or U^+ psi when inverse is set. Throws std::invalid_argument on a
/// size mismatch.
template <typename Scalar>
StateVector<Scalar> apply(UnitaryMatrix<Scalar> const &U, StateVector<Scalar> const &psi, bool inverse = false);

/// K psi (or K^+ psi) evaluated term by term from the Kravchuk functions
/// rather than the assembled matrix:
///   K[psi](n)   = (-1)^{2j} sum_m i^n (-1)^{j+m} K_n(m) psi(m)
///   K^+[psi](n) = (-1)^{2j} sum_m (-i)^m (-1)^{j+n} K_n(m) psi(m)
template <typename Scalar>
StateVector<Scalar> kravchuk_apply_sum_form(StateVector<Scalar> const &psi, bool inverse = false);

/// F(k, n) = e^{-2 pi i k n / d} / sqrt(d) over the labels -j..j, which may be
/// half-integers. F^4 = I.
template <typename Scalar>
UnitaryMatrix<Scalar> fourier_matrix(int two_j);

/// P = F^+ Q F.
template <typename Scalar>
CMatrix<Scalar> fourier_momentum(int two_j);

/// Residuals of K^3 = I, K^+QK^+QK^+ - KQKQK = iQ, and the equivalent
/// QK^+QK - K^+QKQ = iKQK^+, all in Frobenius norm.
template <typename Scalar>
Report check_theorem3(int two_j, std::optional<double> tolerance = std::nullopt);

/// ||K^2 - K^+||_F.
template <typename Scalar>
Report check_square_is_adjoint(int two_j, std::optional<double> tolerance = std::nullopt);

/// ||F^4 - I||_F.
template <typename Scalar>
Report check_fourier_order4(int two_j, std::optional<double> tolerance = std::nullopt);

/// Eigenvalues of K sorted onto the cube roots of unity 1, e^{2 pi i/3},
/// e^{-2 pi i/3}. The multiplicities are observed, not predicted.
struct CubeRootSpectrum
{
  std::array<int, 3> multiplicity{};
  /// max |lambda^3 - 1| over the computed eigenvalues.
  double max_cube_residual = 0.0;
};

template <typename Scalar>
CubeRootSpectrum kravchuk_spectrum(int two_j);

/// Every eigenvalue of K is a cube root of unity to tolerance.
template <typename Scalar>
Report check_kravchuk_spectrum(int two_j, std::optional<double> tolerance = std::nullopt);

} // namespace kravchuk
