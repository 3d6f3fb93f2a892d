#include "kravchuk/phase.hpp"

#include <stdexcept>

namespace kravchuk {

PhaseExact::PhaseExact(BigInt re, BigInt im, int sqrt2_exp)
  : re_(std::move(re)), im_(std::move(im)), exp_(sqrt2_exp)
{
  canonicalize();
}

void PhaseExact::canonicalize()
{
  if (is_zero()) {
    exp_ = 0;
    return;
  }
  while (boost::multiprecision::bit_test(re_, 0) == false && boost::multiprecision::bit_test(im_, 0) == false) {
    re_ >>= 1;
    im_ >>= 1;
    exp_ += 2;
  }
}

PhaseExact PhaseExact::operator*(PhaseExact const &o) const
{
  return PhaseExact{re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, exp_ + o.exp_};
}

PhaseExact PhaseExact::operator+(PhaseExact const &o) const
{
  if (is_zero()) { return o; }
  if (o.is_zero()) { return *this; }
  int const diff = exp_ - o.exp_;
  if (diff % 2 != 0) {
    throw std::domain_error("PhaseExact: sum of terms with sqrt(2) exponents of different parity");
  }
  // Shift the operand with the larger exponent down to the smaller one.
  if (diff >= 0) {
    int const shift = diff / 2;
    return PhaseExact{(re_ << shift) + o.re_, (im_ << shift) + o.im_, o.exp_};
  }
  int const shift = -diff / 2;
  return PhaseExact{re_ + (o.re_ << shift), im_ + (o.im_ << shift), exp_};
}

std::string PhaseExact::str() const
{
  std::string s = "(" + re_.str() + (im_ < 0 ? " - " : " + ") + BigInt(abs(im_)).str() + "i)";
  if (exp_ != 0) { s += "*sqrt2^" + std::to_string(exp_); }
  return s;
}

PhaseExact quarter_phase_power(QuarterBase base, int two_k)
{
  // base^k = e^{i pi u / 4}; u counts eighth-turns.
  long long u = 0;
  switch (base) {
  case QuarterBase::MinusOne: u = 2LL * two_k; break;
  case QuarterBase::PlusI: u = two_k; break;
  case QuarterBase::MinusI: u = -static_cast<long long>(two_k); break;
  }
  long long const r = ((u % 8) + 8) % 8;
  // i^q for the even part, times (1 + i)/sqrt(2) for an odd eighth-turn.
  static constexpr int ire[4] = {1, 0, -1, 0};
  static constexpr int iim[4] = {0, 1, 0, -1};
  int const q = static_cast<int>(r / 2);
  PhaseExact p{ire[q], iim[q], 0};
  if (r % 2 == 1) { p *= PhaseExact{1, 1, -1}; }
  return p;
}

PhaseExact quarter_phase_power(std::complex<int> base, int two_k)
{
  if (base == std::complex<int>{-1, 0}) { return quarter_phase_power(QuarterBase::MinusOne, two_k); }
  if (base == std::complex<int>{0, 1}) { return quarter_phase_power(QuarterBase::PlusI, two_k); }
  if (base == std::complex<int>{0, -1}) { return quarter_phase_power(QuarterBase::MinusI, two_k); }
  throw std::domain_error("quarter_phase_power: base must be -1, i or -i");
}

template <typename Scalar>
Scalar to_scalar(BigInt const &x)
{
  return x.convert_to<Scalar>();
}

template <typename Scalar>
Scalar ratio_to_scalar(BigInt const &p, BigInt const &q)
{
  if (q == 0) { throw std::domain_error("ratio_to_scalar: zero denominator"); }
  if (p == 0) { return Scalar(0); }
  bool const negative = (p < 0) != (q < 0);
  BigInt const ap = abs(p);
  BigInt const aq = abs(q);
  long long const mp = static_cast<long long>(msb(ap));
  long long const mq = static_cast<long long>(msb(aq));
  // Keep at least 128 significant bits in the integer quotient.
  long long shift = mq - mp + 128;
  if (shift < 0) { shift = 0; }
  BigInt const quotient = (ap << static_cast<unsigned>(shift)) / aq;
  Scalar const v = std::ldexp(quotient.convert_to<Scalar>(), static_cast<int>(-shift));
  return negative ? -v : v;
}

template float to_scalar<float>(BigInt const &);
template double to_scalar<double>(BigInt const &);
template long double to_scalar<long double>(BigInt const &);
template float ratio_to_scalar<float>(BigInt const &, BigInt const &);
template double ratio_to_scalar<double>(BigInt const &, BigInt const &);
template long double ratio_to_scalar<long double>(BigInt const &, BigInt const &);

} // namespace kravchuk
