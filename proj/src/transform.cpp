#include "kravchuk/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace kravchuk {

namespace {

template <typename Scalar>
Cx<Scalar> phase(QuarterBase base, int two_k)
{
  return quarter_phase_power(base, two_k).to_complex<Scalar>();
}

template <typename Scalar>
Scalar sign_power(int exponent)
{
  return exponent % 2 == 0 ? Scalar(1) : Scalar(-1);
}

} // namespace

template <typename Scalar>
UnitaryMatrix<Scalar> kravchuk_transform_matrix(int two_j)
{
  RMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j);
  int const d = two_j + 1;
  Scalar const overall = sign_power<Scalar>(two_j);
  UnitaryMatrix<Scalar> K(d, d);
  for (int ni = 0; ni < d; ++ni) {
    Cx<Scalar> const row_phase = overall * phase<Scalar>(QuarterBase::PlusI, 2 * ni - two_j);
    // label -n sits at index d - 1 - ni
    K.row(ni) = row_phase * M.row(d - 1 - ni).template cast<Cx<Scalar>>();
  }
  return K;
}

template <typename Scalar>
StateVector<Scalar> apply(UnitaryMatrix<Scalar> const &U, StateVector<Scalar> const &psi, bool inverse)
{
  if (U.rows() != U.cols() || U.cols() != psi.size()) {
    throw std::invalid_argument("apply: operator is " + std::to_string(U.rows()) + "x" + std::to_string(U.cols()) +
                                " but state has length " + std::to_string(psi.size()));
  }
  if (inverse) { return U.adjoint() * psi; }
  return U * psi;
}

template <typename Scalar>
StateVector<Scalar> kravchuk_apply_sum_form(StateVector<Scalar> const &psi, bool inverse)
{
  int const two_j = two_j_of(psi.size());
  int const d = two_j + 1;
  RMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j);
  Scalar const overall = sign_power<Scalar>(two_j);
  StateVector<Scalar> out(d);
  for (int ni = 0; ni < d; ++ni) {
    int const two_n = 2 * ni - two_j;
    Cx<Scalar> acc{0};
    for (int mi = 0; mi < d; ++mi) {
      int const two_m = 2 * mi - two_j;
      if (inverse) {
        // (-1)^{j+n} with j + n = ni
        acc += phase<Scalar>(QuarterBase::MinusI, two_m) * sign_power<Scalar>(ni) * M(ni, mi) * psi[mi];
      } else {
        acc += phase<Scalar>(QuarterBase::PlusI, two_n) * sign_power<Scalar>(mi) * M(ni, mi) * psi[mi];
      }
    }
    out[ni] = overall * acc;
  }
  return out;
}

template <typename Scalar>
UnitaryMatrix<Scalar> fourier_matrix(int two_j)
{
  if (two_j < 0) { throw std::domain_error("fourier_matrix: two_j must be nonnegative"); }
  int const d = two_j + 1;
  long long const period = 4LL * d;
  Scalar const norm = Scalar(1) / std::sqrt(Scalar(d));
  UnitaryMatrix<Scalar> F(d, d);
  for (int ki = 0; ki < d; ++ki) {
    long long const two_k = 2 * ki - two_j;
    for (int ni = 0; ni < d; ++ni) {
      long long const two_n = 2 * ni - two_j;
      // k n = two_k two_n / 4; reduce the phase exactly before rounding.
      long long const p = ((two_k * two_n) % period + period) % period;
      Scalar const angle = -Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(p) / Scalar(period);
      F(ki, ni) = std::polar(norm, angle);
    }
  }
  return F;
}

template <typename Scalar>
CMatrix<Scalar> fourier_momentum(int two_j)
{
  UnitaryMatrix<Scalar> const F = fourier_matrix<Scalar>(two_j);
  RVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j);
  return F.adjoint() * q.template cast<Cx<Scalar>>().asDiagonal() * F;
}

template <typename Scalar>
Report check_theorem3(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  CMatrix<Scalar> const Kd = K.adjoint();
  CVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j).template cast<Cx<Scalar>>();
  auto const Q = q.asDiagonal();
  Cx<Scalar> const iu{0, 1};
  CMatrix<Scalar> const I = CMatrix<Scalar>::Identity(d, d);

  double const cube = static_cast<double>((K * K * K - I).norm());
  CMatrix<Scalar> const QK = Q * K;
  CMatrix<Scalar> const QKd = Q * Kd;
  CMatrix<Scalar> iQ = CMatrix<Scalar>::Zero(d, d);
  iQ.diagonal() = iu * q;
  double const cubic = static_cast<double>((Kd * QKd * QKd - K * QK * QK - iQ).norm());
  double const equivalent = static_cast<double>((QKd * QK - Kd * QK * Q - iu * (K * QKd)).norm());

  Report r;
  r.identity = "theorem3";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, d);
  r.max_residual = std::max({cube, cubic, equivalent});
  r.pass = cube < r.tolerance && cubic < r.tolerance && equivalent < r.tolerance;
  r.detail = "K^3-I: " + format_residual(cube) + ", cubic commutator: " + format_residual(cubic) +
             ", equivalent form: " + format_residual(equivalent);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_square_is_adjoint(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  Report r;
  r.identity = "kravchuk_square_is_adjoint";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, two_j + 1);
  r.max_residual = static_cast<double>((K * K - K.adjoint()).norm());
  r.pass = r.max_residual < r.tolerance;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_fourier_order4(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  UnitaryMatrix<Scalar> const F = fourier_matrix<Scalar>(two_j);
  CMatrix<Scalar> const F2 = F * F;
  Report r;
  r.identity = "fourier_order4";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, d);
  r.max_residual = static_cast<double>((F2 * F2 - CMatrix<Scalar>::Identity(d, d)).norm());
  r.pass = r.max_residual < r.tolerance;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
CubeRootSpectrum kravchuk_spectrum(int two_j)
{
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  Eigen::ComplexEigenSolver<CMatrix<Scalar>> solver(K, false);
  if (solver.info() != Eigen::Success) { throw std::runtime_error("kravchuk_spectrum: eigensolver failed"); }
  Scalar const third = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(3);
  CubeRootSpectrum s;
  for (auto const &lambda : solver.eigenvalues()) {
    s.max_cube_residual = std::max(s.max_cube_residual, static_cast<double>(std::abs(lambda * lambda * lambda - Scalar(1))));
    // 0 -> 1, 1 -> e^{2 pi i/3}, 2 -> e^{-2 pi i/3}
    long const sector = std::lround(std::arg(lambda) / third);
    s.multiplicity[static_cast<std::size_t>((sector % 3 + 3) % 3)] += 1;
  }
  return s;
}

template <typename Scalar>
Report check_kravchuk_spectrum(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  CubeRootSpectrum const s = kravchuk_spectrum<Scalar>(two_j);
  Report r;
  r.identity = "kravchuk_spectrum";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, two_j + 1);
  r.max_residual = s.max_cube_residual;
  r.pass = r.max_residual < r.tolerance;
  r.detail = "multiplicities 1: " + std::to_string(s.multiplicity[0]) +
             ", exp(2 pi i/3): " + std::to_string(s.multiplicity[1]) +
             ", exp(-2 pi i/3): " + std::to_string(s.multiplicity[2]);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

#define KRAVCHUK_INSTANTIATE(Scalar)                                                                 \
  template UnitaryMatrix<Scalar> kravchuk_transform_matrix<Scalar>(int);                             \
  template StateVector<Scalar> apply<Scalar>(UnitaryMatrix<Scalar> const &, StateVector<Scalar> const &, bool); \
  template StateVector<Scalar> kravchuk_apply_sum_form<Scalar>(StateVector<Scalar> const &, bool);  \
  template UnitaryMatrix<Scalar> fourier_matrix<Scalar>(int);                                        \
  template CMatrix<Scalar> fourier_momentum<Scalar>(int);                                            \
  template Report check_theorem3<Scalar>(int, std::optional<double>);                                \
  template Report check_square_is_adjoint<Scalar>(int, std::optional<double>);                       \
  template Report check_fourier_order4<Scalar>(int, std::optional<double>);                          \
  template CubeRootSpectrum kravchuk_spectrum<Scalar>(int);                                          \
  template Report check_kravchuk_spectrum<Scalar>(int, std::optional<double>);

KRAVCHUK_INSTANTIATE(double)
KRAVCHUK_INSTANTIATE(long double)

} // namespace kravchuk
