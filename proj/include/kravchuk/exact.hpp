#pragma once

#include <vector>

#include "kravchuk/halfint.hpp"
#include "kravchuk/phase.hpp"
#include "kravchuk/report.hpp"

namespace kravchuk {

/// Exact Kravchuk polynomial values K_m(k) for one spin, indexed by label.
class KravchukTable
{
public:
  explicit KravchukTable(int two_j);

  int two_j() const { return labels_.two_j(); }
  int dim() const { return labels_.dim(); }
  LabelSet const &labels() const { return labels_; }

  /// K_m(k).
  BigInt const &operator()(TwiceInt m, TwiceInt k) const
  {
    return values_[static_cast<std::size_t>(labels_.index(m)) * dim() + labels_.index(k)];
  }
  /// By zero-based index (i(m), i(k)).
  BigInt const &at(int mi, int ki) const { return values_[static_cast<std::size_t>(mi) * dim() + ki]; }

private:
  LabelSet labels_;
  std::vector<BigInt> values_;
};

/// K_m(k) = sum_n (-1)^n C(j+k, n) C(j-k, j+m-n).
///
/// m outside [-j, j] (with the right parity) gives 0. Labels of the wrong
/// parity, or k outside [-j, j], throw std::domain_error.
BigInt kravchuk_poly(int two_j, TwiceInt m, TwiceInt k);

/// Coefficients of (1 - X)^{j+k} (1 + X)^{j-k}, lowest power first, by
/// repeated convolution. Entry j+m is K_m(k).
std::vector<BigInt> kravchuk_row_gf_oracle(int two_j, TwiceInt k);

/// Terminating 2F1(a, b; c | z) = sum_n (a)_n (b)_n / (c)_n z^n / n!.
///
/// At least one of a, b must be a nonpositive integer; the sum stops at
/// n = min of their negatives, where the upper Pochhammer first vanishes.
/// Throws std::domain_error if the series does not terminate or (c)_n
/// vanishes before the cutoff.
BigRational hyp2f1_terminating(int a, int b, int c, BigRational const &z);

/// C(2j, j+m) 2F1(-j-m, -j-k; -2j | 2).
BigRational kravchuk_via_hyp2f1(int two_j, TwiceInt m, TwiceInt k);

/// 4^{-j} sum_k C(2j, j+k) K_m(k) K_n(k) == C(2j, j+m) delta_mn for all m, n.
Report check_orthogonality_exact(int two_j);

/// (j+m+1) K_{m+1}(k) + (j-m+1) K_{m-1}(k) == -2k K_m(k), with
/// K_{+-(j+1)} = 0.
Report check_recurrence_exact(int two_j);

/// sum_k (-i)^k K_m(k) K_k(n) == 2^j i^{j+m} i^{j+n} K_m(n) for all m, n.
///
/// Integer j works in the Gaussian integers; half-integer j in the ring of
/// PhaseExact values.
Report check_theorem1(int two_j);

} // namespace kravchuk
