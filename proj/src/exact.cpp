#include "kravchuk/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace kravchuk {

namespace {

// sum_n (-1)^n A[n] B[s - n] over the valid range of n.
BigInt alternating_convolution(std::vector<BigInt> const &a, std::vector<BigInt> const &b, int s)
{
  int const na = static_cast<int>(a.size()) - 1;
  int const nb = static_cast<int>(b.size()) - 1;
  BigInt sum = 0;
  for (int n = std::max(0, s - nb); n <= std::min(na, s); ++n) {
    if (n % 2 == 0) {
      sum += a[n] * b[s - n];
    } else {
      sum -= a[n] * b[s - n];
    }
  }
  return sum;
}

void check_parity(int two_j, TwiceInt m)
{
  if ((m.doubled + two_j) % 2 != 0) {
    throw std::domain_error("label " + m.str() + " has the wrong parity for two_j = " + std::to_string(two_j));
  }
}

} // namespace

KravchukTable::KravchukTable(int two_j)
  : labels_(two_j)
{
  int const d = dim();
  std::vector<std::vector<BigInt>> pascal;
  pascal.reserve(d);
  for (int n = 0; n < d; ++n) {
    pascal.push_back(binomial_row(n));
  }
  values_.resize(static_cast<std::size_t>(d) * d);
  for (int ki = 0; ki < d; ++ki) {
    // j + k = ki, j - k = 2j - ki
    auto const &a = pascal[ki];
    auto const &b = pascal[two_j - ki];
    for (int mi = 0; mi < d; ++mi) {
      values_[static_cast<std::size_t>(mi) * d + ki] = alternating_convolution(a, b, mi);
    }
  }
}

BigInt kravchuk_poly(int two_j, TwiceInt m, TwiceInt k)
{
  LabelSet const labels{two_j};
  check_parity(two_j, m);
  labels.check(k);
  if (!labels.contains(m)) { return 0; }
  int const jpm = (two_j + m.doubled) / 2;
  int const jpk = (two_j + k.doubled) / 2;
  int const jmk = (two_j - k.doubled) / 2;
  BigInt sum = 0;
  for (int n = 0; n <= jpm; ++n) {
    BigInt term = binomial(jpk, n) * binomial(jmk, jpm - n);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<BigInt> kravchuk_row_gf_oracle(int two_j, TwiceInt k)
{
  LabelSet const labels{two_j};
  labels.check(k);
  int const minus_power = (two_j + k.doubled) / 2;
  int const plus_power = (two_j - k.doubled) / 2;

  std::vector<BigInt> poly{1};
  auto multiply_by = [&poly](int sign) {
    // poly *= (1 + sign X)
    poly.push_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
      poly[i] += sign * poly[i - 1];
    }
  };
  for (int i = 0; i < minus_power; ++i) {
    multiply_by(-1);
  }
  for (int i = 0; i < plus_power; ++i) {
    multiply_by(+1);
  }
  return poly;
}

BigRational hyp2f1_terminating(int a, int b, int c, BigRational const &z)
{
  if (a > 0 && b > 0) { throw std::domain_error("hyp2f1_terminating: no nonpositive upper parameter"); }
  int cutoff = 0;
  if (a <= 0 && b <= 0) {
    cutoff = std::min(-a, -b);
  } else {
    cutoff = a <= 0 ? -a : -b;
  }
  BigRational term = 1;
  BigRational sum = 1;
  for (int n = 0; n < cutoff; ++n) {
    if (c + n == 0) {
      throw std::domain_error("hyp2f1_terminating: lower Pochhammer vanishes before the series terminates");
    }
    term *= BigRational(BigInt(a + n) * (b + n)) / BigRational(BigInt(c + n) * (n + 1));
    term *= z;
    sum += term;
  }
  return sum;
}

BigRational kravchuk_via_hyp2f1(int two_j, TwiceInt m, TwiceInt k)
{
  LabelSet const labels{two_j};
  labels.check(m);
  labels.check(k);
  int const jpm = (two_j + m.doubled) / 2;
  int const jpk = (two_j + k.doubled) / 2;
  return BigRational(binomial(two_j, jpm)) * hyp2f1_terminating(-jpm, -jpk, -two_j, BigRational(2));
}

Report check_orthogonality_exact(int two_j)
{
  Stopwatch clock;
  KravchukTable const table{two_j};
  int const d = table.dim();
  auto const weights = binomial_row(two_j);

  Report r;
  r.identity = "orthogonality_exact";
  r.two_j = two_j;
  r.mode = CheckMode::Exact;
  // Both sides scaled by 4^j, so the comparison stays in the integers.
  BigInt const four_j = BigInt(1) << two_j;
  for (int mi = 0; mi < d; ++mi) {
    for (int ni = 0; ni < d; ++ni) {
      BigInt lhs = 0;
      for (int ki = 0; ki < d; ++ki) {
        lhs += weights[ki] * table.at(mi, ki) * table.at(ni, ki);
      }
      BigInt const rhs = mi == ni ? four_j * weights[mi] : BigInt(0);
      if (lhs != rhs) {
        r.pass = false;
        r.failures.emplace_back(table.labels().label(mi), table.labels().label(ni));
      }
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report check_recurrence_exact(int two_j)
{
  Stopwatch clock;
  KravchukTable const table{two_j};
  int const d = table.dim();

  Report r;
  r.identity = "recurrence_exact";
  r.two_j = two_j;
  r.mode = CheckMode::Exact;
  auto value = [&](int mi, int ki) -> BigInt { return mi < 0 || mi >= d ? BigInt(0) : table.at(mi, ki); };
  for (int mi = 0; mi < d; ++mi) {
    // j + m + 1 = mi + 1, j - m + 1 = 2j - mi + 1
    for (int ki = 0; ki < d; ++ki) {
      int const two_k = table.labels().label(ki).doubled;
      BigInt const lhs = BigInt(mi + 1) * value(mi + 1, ki) + BigInt(two_j - mi + 1) * value(mi - 1, ki);
      BigInt const rhs = -BigInt(two_k) * table.at(mi, ki);
      if (lhs != rhs) {
        r.pass = false;
        r.failures.emplace_back(table.labels().label(mi), table.labels().label(ki));
      }
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report check_theorem1(int two_j)
{
  Stopwatch clock;
  KravchukTable const table{two_j};
  LabelSet const &labels = table.labels();
  int const d = table.dim();

  std::vector<PhaseExact> minus_i_pow(d);
  std::vector<PhaseExact> i_pow_j_plus(d);
  for (int ki = 0; ki < d; ++ki) {
    int const two_k = labels.label(ki).doubled;
    minus_i_pow[ki] = quarter_phase_power(QuarterBase::MinusI, two_k);
    i_pow_j_plus[ki] = quarter_phase_power(QuarterBase::PlusI, two_j + two_k);
  }
  PhaseExact const two_pow_j = PhaseExact::sqrt2_power(two_j);

  Report r;
  r.identity = "theorem1_exact";
  r.two_j = two_j;
  r.mode = CheckMode::Exact;
  r.detail = two_j % 2 == 0 ? "gaussian integers" : "Z[exp(i pi/4)]";
  for (int mi = 0; mi < d; ++mi) {
    for (int ni = 0; ni < d; ++ni) {
      PhaseExact lhs;
      for (int ki = 0; ki < d; ++ki) {
        lhs += minus_i_pow[ki] * PhaseExact{table.at(mi, ki) * table.at(ki, ni)};
      }
      PhaseExact const rhs = two_pow_j * i_pow_j_plus[mi] * i_pow_j_plus[ni] * PhaseExact{table.at(mi, ni)};
      if (!(lhs == rhs)) {
        r.pass = false;
        r.failures.emplace_back(labels.label(mi), labels.label(ni));
      }
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

} // namespace kravchuk
