#include "kravchuk/halfint.hpp"

#include <stdexcept>

namespace kravchuk {

std::string TwiceInt::str() const
{
  if (is_integer()) { return std::to_string(doubled / 2); }
  return std::to_string(doubled) + "/2";
}

int integer_sum(TwiceInt a, TwiceInt b)
{
  int const s = a.doubled + b.doubled;
  if (s % 2 != 0) { throw std::domain_error("half-integer sum " + a.str() + " + " + b.str() + " is not an integer"); }
  return s / 2;
}

LabelSet::LabelSet(int two_j)
  : two_j_(two_j)
{
  if (two_j < 0) { throw std::domain_error("two_j must be nonnegative, got " + std::to_string(two_j)); }
}

bool LabelSet::contains(TwiceInt m) const
{
  return (m.doubled + two_j_) % 2 == 0 && m.doubled >= -two_j_ && m.doubled <= two_j_;
}

void LabelSet::check(TwiceInt m) const
{
  if ((m.doubled + two_j_) % 2 != 0) {
    throw std::domain_error("label " + m.str() + " has the wrong parity for j = " + j().str());
  }
  if (m.doubled < -two_j_ || m.doubled > two_j_) {
    throw std::domain_error("label " + m.str() + " is outside [-j, j] for j = " + j().str());
  }
}

int LabelSet::index(TwiceInt m) const
{
  check(m);
  return (m.doubled + two_j_) / 2;
}

LabelSet make_label_set(int two_j) { return LabelSet{two_j}; }

BigInt binomial(int n, int r)
{
  if (n < 0) { throw std::domain_error("binomial: upper argument must be nonnegative"); }
  if (r < 0 || r > n) { return 0; }
  if (r > n - r) { r = n - r; }
  BigInt c = 1;
  // c stays integral: after step i it equals binomial(n - r + i, i).
  for (int i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

std::vector<BigInt> binomial_row(int n)
{
  if (n < 0) { throw std::domain_error("binomial_row: n must be nonnegative"); }
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (int r = 1; r <= n; ++r) {
    row[r] = row[r - 1] * (n - r + 1) / r;
  }
  return row;
}

} // namespace kravchuk
