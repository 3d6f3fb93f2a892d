#pragma once

#include <optional>

#include "kravchuk/exact.hpp"
#include "kravchuk/report.hpp"
#include "kravchuk/types.hpp"

namespace kravchuk {

/// Kravchuk function 2^{-j} sqrt(C(2j, j+k) / C(2j, j+m)) K_m(k).
///
/// The square of the value is formed as an exact rational and only the final
/// quotient is rounded, so the result is accurate for any j whose values are
/// in the Scalar range.
template <typename Scalar>
Scalar kravchuk_func(int two_j, TwiceInt m, TwiceInt k);

/// M(i(m), i(k)) = Kravchuk function m at k. Symmetric and orthogonal.
template <typename Scalar>
RMatrix<Scalar> kravchuk_basis_matrix(int two_j);

template <typename Scalar>
RMatrix<Scalar> kravchuk_basis_matrix(KravchukTable const &table);

/// -2 sum_k k K_m(k) K_n(k) over Kravchuk functions; nonzero only for
/// n = m -+ 1.
template <typename Scalar>
Scalar tridiagonal_moment(int two_j, TwiceInt m, TwiceInt n);

/// sum_k (-i)^k K_m(k) K_k(n) == i^{j+m} i^{j+n} K_m(n) on Kravchuk functions.
template <typename Scalar>
Report check_theorem2(int two_j, std::optional<double> tolerance = std::nullopt);

} // namespace kravchuk
