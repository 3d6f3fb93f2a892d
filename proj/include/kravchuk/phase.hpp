#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "kravchuk/halfint.hpp"

namespace kravchuk {

/// Exact value (re + i im) * sqrt(2)^sqrt2_exp with Gaussian-integer part.
///
/// Every half-integer power of -1, i and -i lives here: e^{i pi/4} is
/// (1 + i) * sqrt(2)^-1. Products are always representable. Sums are
/// representable when the two sqrt(2) exponents share parity, which is the
/// case for every sum arising in the Kravchuk identities; mixing parities
/// throws std::domain_error. Values are kept canonical (Gaussian part not
/// divisible by 2, zero stored as 0 * sqrt(2)^0), so == is exact equality.
class PhaseExact
{
public:
  PhaseExact() = default;
  PhaseExact(BigInt re, BigInt im = 0, int sqrt2_exp = 0);

  static PhaseExact sqrt2_power(int e) { return PhaseExact{1, 0, e}; }

  BigInt const &re() const { return re_; }
  BigInt const &im() const { return im_; }
  int sqrt2_exp() const { return exp_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  PhaseExact operator*(PhaseExact const &o) const;
  PhaseExact operator+(PhaseExact const &o) const;
  PhaseExact operator-() const { return PhaseExact{-re_, -im_, exp_}; }
  PhaseExact operator-(PhaseExact const &o) const { return *this + (-o); }
  PhaseExact &operator*=(PhaseExact const &o) { return *this = *this * o; }
  PhaseExact &operator+=(PhaseExact const &o) { return *this = *this + o; }
  PhaseExact conj() const { return PhaseExact{re_, -im_, exp_}; }

  bool operator==(PhaseExact const &o) const = default;

  template <typename Scalar>
  std::complex<Scalar> to_complex() const;

  std::string str() const;

private:
  void canonicalize();

  BigInt re_ = 0;
  BigInt im_ = 0;
  int exp_ = 0;
};

/// Bases for which half-integer powers are supported.
enum class QuarterBase
{
  MinusOne, ///< arg = pi
  PlusI,    ///< arg = pi/2
  MinusI    ///< arg = -pi/2
};

/// base^k = e^{i k arg(base)} with the principal argument in (-pi, pi], for
/// k = two_k / 2.
PhaseExact quarter_phase_power(QuarterBase base, int two_k);

/// Same, for a base given as a Gaussian integer; throws std::domain_error
/// unless base is -1, i or -i.
PhaseExact quarter_phase_power(std::complex<int> base, int two_k);

/// Nearest Scalar to a big integer, without overflowing intermediate steps
/// below the Scalar range.
template <typename Scalar>
Scalar to_scalar(BigInt const &x);

/// Correctly scaled p/q for big integers of any size, accurate to the
/// precision of Scalar as long as the quotient is in range.
template <typename Scalar>
Scalar ratio_to_scalar(BigInt const &p, BigInt const &q);

template <typename Scalar>
std::complex<Scalar> PhaseExact::to_complex() const
{
  int const half = exp_ >= 0 ? exp_ / 2 : -((-exp_ + 1) / 2);
  Scalar scale = std::ldexp(Scalar(1), half);
  if (exp_ - 2 * half == 1) { scale *= std::sqrt(Scalar(2)); }
  return {to_scalar<Scalar>(re_) * scale, to_scalar<Scalar>(im_) * scale};
}

} // namespace kravchuk
