#include "kravchuk/functions.hpp"

namespace kravchuk {

namespace {

template <typename Scalar>
Scalar kravchuk_func_value(BigInt const &poly, BigInt const &weight_k, BigInt const &weight_m, int two_j)
{
  if (poly == 0) { return Scalar(0); }
  // value^2 = C(2j, j+k) K^2 / (C(2j, j+m) 4^j)
  BigInt const num = weight_k * poly * poly;
  BigInt const den = weight_m << two_j;
  Scalar const magnitude = std::sqrt(ratio_to_scalar<Scalar>(num, den));
  return poly < 0 ? -magnitude : magnitude;
}

} // namespace

template <typename Scalar>
Scalar kravchuk_func(int two_j, TwiceInt m, TwiceInt k)
{
  LabelSet const labels{two_j};
  labels.check(m);
  labels.check(k);
  BigInt const poly = kravchuk_poly(two_j, m, k);
  return kravchuk_func_value<Scalar>(poly, binomial(two_j, labels.index(k)), binomial(two_j, labels.index(m)), two_j);
}

template <typename Scalar>
RMatrix<Scalar> kravchuk_basis_matrix(KravchukTable const &table)
{
  int const d = table.dim();
  auto const weights = binomial_row(table.two_j());
  RMatrix<Scalar> M(d, d);
  for (int mi = 0; mi < d; ++mi) {
    for (int ki = 0; ki < d; ++ki) {
      M(mi, ki) = kravchuk_func_value<Scalar>(table.at(mi, ki), weights[ki], weights[mi], table.two_j());
    }
  }
  return M;
}

template <typename Scalar>
RMatrix<Scalar> kravchuk_basis_matrix(int two_j)
{
  return kravchuk_basis_matrix<Scalar>(KravchukTable{two_j});
}

template <typename Scalar>
Scalar tridiagonal_moment(int two_j, TwiceInt m, TwiceInt n)
{
  LabelSet const labels{two_j};
  int const mi = labels.index(m);
  int const ni = labels.index(n);
  RMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j);
  RVector<Scalar> const q = coordinate_diagonal<Scalar>(two_j);
  return Scalar(-2) * (M.row(mi).array() * q.transpose().array() * M.row(ni).array()).sum();
}

template <typename Scalar>
Report check_theorem2(int two_j, std::optional<double> tolerance)
{
  Stopwatch clock;
  int const d = two_j + 1;
  LabelSet const labels{two_j};
  RMatrix<Scalar> const M = kravchuk_basis_matrix<Scalar>(two_j);

  CVector<Scalar> minus_i_pow(d);
  CVector<Scalar> i_pow_j_plus(d);
  for (int ki = 0; ki < d; ++ki) {
    int const two_k = labels.label(ki).doubled;
    minus_i_pow[ki] = quarter_phase_power(QuarterBase::MinusI, two_k).to_complex<Scalar>();
    i_pow_j_plus[ki] = quarter_phase_power(QuarterBase::PlusI, two_j + two_k).to_complex<Scalar>();
  }
  // lhs(m, n) = sum_k M(m, k) (-i)^k M(k, n)
  CMatrix<Scalar> const lhs = M.template cast<Cx<Scalar>>() * minus_i_pow.asDiagonal() * M.template cast<Cx<Scalar>>();
  CMatrix<Scalar> const rhs =
    i_pow_j_plus.asDiagonal() * M.template cast<Cx<Scalar>>() * i_pow_j_plus.asDiagonal();

  Report r;
  r.identity = "theorem2";
  r.two_j = two_j;
  r.mode = CheckMode::Float;
  r.tolerance = tolerance_or_default(tolerance, d);
  r.max_residual = static_cast<double>((lhs - rhs).norm());
  r.pass = r.max_residual < r.tolerance;
  r.detail = "Frobenius norm of the residual matrix";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

#define KRAVCHUK_INSTANTIATE(Scalar)                                                                 \
  template Scalar kravchuk_func<Scalar>(int, TwiceInt, TwiceInt);                                    \
  template RMatrix<Scalar> kravchuk_basis_matrix<Scalar>(int);                                       \
  template RMatrix<Scalar> kravchuk_basis_matrix<Scalar>(KravchukTable const &);                     \
  template Scalar tridiagonal_moment<Scalar>(int, TwiceInt, TwiceInt);                               \
  template Report check_theorem2<Scalar>(int, std::optional<double>);

KRAVCHUK_INSTANTIATE(double)
KRAVCHUK_INSTANTIATE(long double)

} // namespace kravchuk
