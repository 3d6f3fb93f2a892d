#pragma once

#include <cstdint>
#include <optional>

#include "kravchuk/transform.hpp"
#include "kravchuk/types.hpp"

namespace kravchuk {

/// Jz = Q, Jx = K^+ Q K, Jy = K Q K^+.
template <typename Scalar>
struct Su2Generators
{
  int two_j = 0;
  RVector<Scalar> Jz;
  CMatrix<Scalar> Jx;
  CMatrix<Scalar> Jy;

  CMatrix<Scalar> Jz_matrix() const { return Jz.template cast<Cx<Scalar>>().asDiagonal(); }
};

template <typename Scalar>
struct LadderOps
{
  CMatrix<Scalar> plus;
  CMatrix<Scalar> minus;
};

/// Euler angles in radians for the z-x-z product
/// e^{-i alpha Jz} e^{-i beta Jx} e^{-i gamma Jz}. Note the middle rotation is
/// about x, not the y axis of the usual Wigner-D convention.
template <typename Scalar>
struct EulerAngles
{
  Scalar alpha = 0;
  Scalar beta = 0;
  Scalar gamma = 0;
};

template <typename Scalar>
Su2Generators<Scalar> build_generators(int two_j);

/// J+- = Jx +- i Jy.
template <typename Scalar>
LadderOps<Scalar> ladder_ops(Su2Generators<Scalar> const &g);

/// sqrt((j - m)(j + m + 1)), the J+ matrix element <j; m+1|J+|j; m>.
double raising_coefficient(int two_j, TwiceInt m);
/// sqrt((j + m)(j - m + 1)), the J- matrix element <j; m-1|J-|j; m>.
double lowering_coefficient(int two_j, TwiceInt m);

/// e^{-i beta Jx} = sum_k e^{i beta k} |K_k><K_k| over Kravchuk functions.
/// beta is used as given; beta = 2 pi yields (-1)^{2j} I.
template <typename Scalar>
UnitaryMatrix<Scalar> x_rotation(int two_j, Scalar beta);

/// Entry (m, n) = e^{-i(alpha m + gamma n)} sum_k e^{i beta k} K_m(k) K_n(k).
template <typename Scalar>
UnitaryMatrix<Scalar> euler_matrix(int two_j, EulerAngles<Scalar> const &angles);

/// e^{-i alpha Jz} e^{-i beta Jx} |j; -j> with the global phase e^{i j gamma}
/// dropped:
///   psi(m) = 2^{-j} e^{-i alpha m} sum_k e^{i beta k} sqrt(C(2j, j+k)) K_m(k).
template <typename Scalar>
StateVector<Scalar> spin_coherent_state(int two_j, Scalar alpha, Scalar beta);

// Independent route to the same group elements. Nothing below uses Kravchuk
// functions: the generators come from the standard ladder matrix elements and
// the exponentials from a Hermitian eigendecomposition.

/// Jz, Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i) from the ladder matrix elements.
template <typename Scalar>
Su2Generators<Scalar> standard_generators(int two_j);

/// e^{-i t H} for Hermitian H via H = V diag(lambda) V^+. Throws
/// std::runtime_error if the eigensolver does not converge.
template <typename Scalar>
CMatrix<Scalar> expm_hermitian(CMatrix<Scalar> const &H, Scalar t);

/// e^{-i alpha Jz} e^{-i beta Jx} e^{-i gamma Jz} from standard_generators
/// and expm_hermitian.
template <typename Scalar>
UnitaryMatrix<Scalar> exp_oracle(int two_j, EulerAngles<Scalar> const &angles);

/// Commutators [Jx,Jy] = iJz and cyclic, Casimir Jx^2 + Jy^2 + Jz^2 =
/// j(j+1) I, Hermiticity of Jx and Jy.
template <typename Scalar>
Report check_commutators(int two_j, std::optional<double> tolerance = std::nullopt);

/// J+- against the ladder matrix elements entry by entry, plus
/// [Jz, J+-] = +-J+- and [J-, J+] = -2 Jz.
template <typename Scalar>
Report check_ladder(int two_j, std::optional<double> tolerance = std::nullopt);

/// euler_matrix against exp_oracle for `samples` pseudo-random angle triples.
/// Default tolerance 1e-9.
template <typename Scalar>
Report check_euler_vs_oracle(int two_j, int samples = 10, std::uint64_t seed = 2024,
                             std::optional<double> tolerance = std::nullopt);

/// x_rotation(2 pi) = (-1)^{2j} I. Default tolerance 1e-10.
template <typename Scalar>
Report check_double_cover(int two_j, std::optional<double> tolerance = std::nullopt);

/// Unit norm (default 1e-12) and agreement with euler_matrix(alpha, beta, 0)
/// applied to |j; -j> (default 1e-10) over `samples` pseudo-random (alpha,
/// beta). An override tolerance replaces both bounds.
template <typename Scalar>
Report check_coherent_states(int two_j, int samples = 20, std::uint64_t seed = 7,
                             std::optional<double> tolerance = std::nullopt);

inline constexpr double euler_oracle_tolerance = 1e-9;
inline constexpr double double_cover_tolerance = 1e-10;
inline constexpr double coherent_norm_tolerance = 1e-12;
inline constexpr double coherent_match_tolerance = 1e-10;

} // namespace kravchuk
