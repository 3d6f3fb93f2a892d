#include "kravchuk/su2.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace kravchuk {

namespace {

// e^{i t k} for each label k.
template <typename Scalar>
CVector<Scalar> label_phases(int two_j, Scalar t)
{
  RVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j);
  CVector<Scalar> p(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    p[i] = std::polar(Scalar(1), t * q[i]);
  }
  return p;
}

template <typename Scalar>
Scalar commutator_norm(CMatrix<Scalar> const &A, CMatrix<Scalar> const &B, CMatrix<Scalar> const &expected)
{
  return (A * B - B * A - expected).norm();
}

} // namespace

double raising_coefficient(int two_j, TwiceInt m)
{
  LabelSet{two_j}.check(m);
  return 0.5 * std::sqrt(static_cast<double>(two_j - m.doubled) * (two_j + m.doubled + 2));
}

double lowering_coefficient(int two_j, TwiceInt m)
{
  LabelSet{two_j}.check(m);
  return 0.5 * std::sqrt(static_cast<double>(two_j + m.doubled) * (two_j - m.doubled + 2));
}

template <typename Scalar>
Su2Generators<Scalar> build_generators(int two_j)
{
  UnitaryMatrix<Scalar> const K = kravchuk_transform_matrix<Scalar>(two_j);
  RVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j);
  auto const Q = q.template cast<Cx<Scalar>>().asDiagonal();
  Su2Generators<Scalar> g;
  g.two_j = two_j;
  g.Jz = q;
  g.Jx = K.adjoint() * Q * K;
  g.Jy = K * Q * K.adjoint();
  return g;
}

template <typename Scalar>
LadderOps<Scalar> ladder_ops(Su2Generators<Scalar> const &g)
{
  Cx<Scalar> const iu{0, 1};
  return {g.Jx + iu * g.Jy, g.Jx - iu * g.Jy};
}

template <typename Scalar>
UnitaryMatrix<Scalar> x_rotation(int two_j, Scalar beta)
{
  CMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j).template cast<Cx<Scalar>>();
  return M.transpose() * label_phases<Scalar>(two_j, beta).asDiagonal() * M;
}

template <typename Scalar>
UnitaryMatrix<Scalar> euler_matrix(int two_j, EulerAngles<Scalar> const &angles)
{
  return label_phases<Scalar>(two_j, -angles.alpha).asDiagonal() * x_rotation<Scalar>(two_j, angles.beta) *
         label_phases<Scalar>(two_j, -angles.gamma).asDiagonal();
}

template <typename Scalar>
StateVector<Scalar> spin_coherent_state(int two_j, Scalar alpha, Scalar beta)
{
  int const d = two_j + 1;
  RMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j);
  auto const binomials = binomial_row(two_j);
  BigInt const four_j = BigInt(1) << two_j;
  // weight_k e^{i beta k} with weight_k = 2^{-j} sqrt(C(2j, j+k))
  CVector<Scalar> const beta_phases = label_phases<Scalar>(two_j, beta);
  CVector<Scalar> weighted(d);
  for (int ki = 0; ki < d; ++ki) {
    weighted[ki] = std::sqrt(ratio_to_scalar<Scalar>(binomials[ki], four_j)) * beta_phases[ki];
  }
  StateVector<Scalar> psi = label_phases<Scalar>(two_j, -alpha).asDiagonal() * (M.template cast<Cx<Scalar>>() * weighted);
  return psi;
}

template <typename Scalar>
Report check_commutators(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  Su2Generators<Scalar> const g = build_generators<Scalar>(two_j);
  CMatrix<Scalar> const Jz = g.Jz_matrix();
  Cx<Scalar> const iu{0, 1};
  Scalar const j = Scalar(two_j) / 2;
  CMatrix<Scalar> const casimir = g.Jx * g.Jx + g.Jy * g.Jy + Jz * Jz - j * (j + 1) * CMatrix<Scalar>::Identity(d, d);

  double const xy = static_cast<double>(commutator_norm<Scalar>(g.Jx, g.Jy, iu * Jz));
  double const yz = static_cast<double>(commutator_norm<Scalar>(g.Jy, Jz, iu * g.Jx));
  double const zx = static_cast<double>(commutator_norm<Scalar>(Jz, g.Jx, iu * g.Jy));
  double const cas = static_cast<double>(casimir.norm());
  double const herm = static_cast<double>(std::max((g.Jx - g.Jx.adjoint()).norm(), (g.Jy - g.Jy.adjoint()).norm()));

  Report r;
  r.identity = "su2_commutators";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, d);
  r.max_residual = std::max({xy, yz, zx, cas, herm});
  r.pass = r.max_residual < r.tolerance;
  r.detail = "[Jx,Jy]: " + format_residual(xy) + ", [Jy,Jz]: " + format_residual(yz) + ", [Jz,Jx]: " +
             format_residual(zx) + ", casimir: " + format_residual(cas) + ", hermiticity: " + format_residual(herm);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_ladder(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  Su2Generators<Scalar> const g = build_generators<Scalar>(two_j);
  LadderOps<Scalar> const ops = ladder_ops(g);
  CMatrix<Scalar> const Jz = g.Jz_matrix();

  CMatrix<Scalar> plus = CMatrix<Scalar>::Zero(d, d);
  CMatrix<Scalar> minus = CMatrix<Scalar>::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    TwiceInt const m{2 * i - two_j};
    plus(i + 1, i) = Scalar(raising_coefficient(two_j, m));
    minus(i, i + 1) = Scalar(lowering_coefficient(two_j, m + TwiceInt{2}));
  }
  double const entries = static_cast<double>(std::max((ops.plus - plus).norm(), (ops.minus - minus).norm()));
  double const zplus = static_cast<double>(commutator_norm<Scalar>(Jz, ops.plus, ops.plus));
  double const zminus = static_cast<double>(commutator_norm<Scalar>(Jz, ops.minus, -ops.minus));
  double const mp = static_cast<double>(commutator_norm<Scalar>(ops.minus, ops.plus, Scalar(-2) * Jz));

  Report r;
  r.identity = "ladder_structure";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, d);
  r.max_residual = std::max({entries, zplus, zminus, mp});
  r.pass = r.max_residual < r.tolerance;
  r.detail = "matrix elements: " + format_residual(entries) + ", [Jz,J+]: " + format_residual(zplus) +
             ", [Jz,J-]: " + format_residual(zminus) + ", [J-,J+]: " + format_residual(mp);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_euler_vs_oracle(int two_j, int samples, std::uint64_t seed, std::optional<double> tolerance)
{
  Stopwatch clock;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(two_j));
  // Angles up to 4 pi so both sheets of the double cover are visited.
  std::uniform_real_distribution<double> angle(-4.0 * std::numbers::pi, 4.0 * std::numbers::pi);
  Report r;
  r.identity = "euler_vs_exp_oracle";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance.value_or(euler_oracle_tolerance);
  for (int s = 0; s < samples; ++s) {
    EulerAngles<Scalar> const a{Scalar(angle(rng)), Scalar(angle(rng)), Scalar(angle(rng))};
    double const res = static_cast<double>((euler_matrix<Scalar>(two_j, a) - exp_oracle<Scalar>(two_j, a)).norm());
    r.max_residual = std::max(r.max_residual, res);
  }
  r.pass = r.max_residual < r.tolerance;
  r.detail = std::to_string(samples) + " angle triples";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_double_cover(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  Scalar const sign = two_j % 2 == 0 ? Scalar(1) : Scalar(-1);
  CMatrix<Scalar> const expected = sign * CMatrix<Scalar>::Identity(d, d);
  Report r;
  r.identity = "x_rotation_double_cover";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance.value_or(double_cover_tolerance);
  r.max_residual =
    static_cast<double>((x_rotation<Scalar>(two_j, Scalar(2) * std::numbers::pi_v<Scalar>) - expected).norm());
  r.pass = r.max_residual < r.tolerance;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

template <typename Scalar>
Report check_coherent_states(int two_j, int samples, std::uint64_t seed, std::optional<double> tolerance)
{
  Stopwatch clock;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(two_j));
  std::uniform_real_distribution<double> angle(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  StateVector<Scalar> const lowest = basis_state<Scalar>(two_j, 0);
  double norm_res = 0.0;
  double match_res = 0.0;
  for (int s = 0; s < samples; ++s) {
    Scalar const alpha = Scalar(angle(rng));
    Scalar const beta = Scalar(angle(rng));
    StateVector<Scalar> const psi = spin_coherent_state<Scalar>(two_j, alpha, beta);
    StateVector<Scalar> const orbit = euler_matrix<Scalar>(two_j, {alpha, beta, Scalar(0)}) * lowest;
    norm_res = std::max(norm_res, static_cast<double>(std::abs(psi.norm() - Scalar(1))));
    match_res = std::max(match_res, static_cast<double>((psi - orbit).norm()));
  }
  Report r;
  r.identity = "spin_coherent_states";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  double const norm_tol = tolerance.value_or(coherent_norm_tolerance);
  double const match_tol = tolerance.value_or(coherent_match_tolerance);
  r.tolerance = match_tol;
  r.max_residual = std::max(norm_res, match_res);
  r.pass = norm_res < norm_tol && match_res < match_tol;
  r.detail = "norm: " + format_residual(norm_res) + " (tol " + format_residual(norm_tol) + "), orbit: " +
             format_residual(match_res) + " (tol " + format_residual(match_tol) + ")";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

#define KRAVCHUK_INSTANTIATE(Scalar)                                                                 \
  template Su2Generators<Scalar> build_generators<Scalar>(int);                                      \
  template LadderOps<Scalar> ladder_ops<Scalar>(Su2Generators<Scalar> const &);                      \
  template UnitaryMatrix<Scalar> x_rotation<Scalar>(int, Scalar);                                    \
  template UnitaryMatrix<Scalar> euler_matrix<Scalar>(int, EulerAngles<Scalar> const &);             \
  template StateVector<Scalar> spin_coherent_state<Scalar>(int, Scalar, Scalar);                     \
  template Report check_commutators<Scalar>(int, std::optional<double>);                             \
  template Report check_ladder<Scalar>(int, std::optional<double>);                                  \
  template Report check_euler_vs_oracle<Scalar>(int, int, std::uint64_t, std::optional<double>);     \
  template Report check_double_cover<Scalar>(int, std::optional<double>);                            \
  template Report check_coherent_states<Scalar>(int, int, std::uint64_t, std::optional<double>);

KRAVCHUK_INSTANTIATE(double)
KRAVCHUK_INSTANTIATE(long double)

} // namespace kravchuk
