#pragma once

#include <optional>

#include "kravchuk/su2.hpp"

namespace kravchuk {

/// Finite oscillator with momentum P~ = K^+ Q K.
///
/// The Hamiltonian is stored in both of its forms, P~^2/2 + Q^2/2 and
/// j(j+1)/2 - Jy^2/2; they agree to rounding.
template <typename Scalar>
struct OscillatorSystem
{
  int two_j = 0;
  CMatrix<Scalar> P_tilde;
  CMatrix<Scalar> H_tilde;
  CMatrix<Scalar> H_tilde_casimir;
  /// Jy = K Q K^+, kept for the [Q, P~] = i Jy check.
  CMatrix<Scalar> Jy;
};

template <typename Scalar>
struct OscillatorEigenstate
{
  StateVector<Scalar> state;
  Scalar energy = 0;
};

template <typename Scalar>
OscillatorSystem<Scalar> build_oscillator(int two_j);

/// K|j; m> with energy (j(j+1) - m^2)/2.
///
/// Jy K|j;m> = K Q K^+ K|j;m> = m K|j;m>, and H~ = (j(j+1) - Jy^2)/2, so
/// K|j;m> is an eigenstate with that energy. Levels +-m are degenerate.
template <typename Scalar>
OscillatorEigenstate<Scalar> oscillator_eigenstate(int two_j, TwiceInt m);

/// (j(j+1) - m^2)/2 for every label, in label order.
template <typename Scalar>
RVector<Scalar> oscillator_energies(int two_j);

/// Eigenresiduals ||H~ psi_m - E_m psi_m|| against 1e-11 d, the two
/// Hamiltonian forms against 1e-12 d^2, and [Q, P~] = i Jy against 1e-12 d^2.
/// An override tolerance replaces all three bounds.
template <typename Scalar>
Report check_oscillator(int two_j, std::optional<double> tolerance = std::nullopt);

inline double eigenresidual_tolerance(int dim) { return 1e-11 * dim; }

} // namespace kravchuk
