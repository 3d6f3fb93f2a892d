#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kravchuk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A half-integer stored as twice its value, so 1/2 is TwiceInt{1}.
struct TwiceInt
{
  int doubled = 0;

  constexpr TwiceInt() = default;
  constexpr explicit TwiceInt(int twice) : doubled(twice) {}

  static constexpr TwiceInt from_int(int n) { return TwiceInt{2 * n}; }

  constexpr bool is_integer() const { return doubled % 2 == 0; }
  constexpr double value() const { return 0.5 * doubled; }

  constexpr TwiceInt operator-() const { return TwiceInt{-doubled}; }
  constexpr TwiceInt operator+(TwiceInt o) const { return TwiceInt{doubled + o.doubled}; }
  constexpr TwiceInt operator-(TwiceInt o) const { return TwiceInt{doubled - o.doubled}; }

  constexpr auto operator<=>(TwiceInt const &) const = default;

  /// "3/2", "-1", "0".
  std::string str() const;
};

/// Integer value of a sum of two half-integers whose doubled sum is even.
/// Throws std::domain_error otherwise.
int integer_sum(TwiceInt a, TwiceInt b);

/// The labels -j, -j+1, ..., j of an irreducible spin-j space, d = 2j+1.
class LabelSet
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = TwiceInt;
    using difference_type = std::ptrdiff_t;
    using pointer = TwiceInt const *;
    using reference = TwiceInt;

    iterator() = default;
    explicit iterator(int doubled) : doubled_(doubled) {}
    TwiceInt operator*() const { return TwiceInt{doubled_}; }
    iterator &operator++()
    {
      doubled_ += 2;
      return *this;
    }
    iterator operator++(int)
    {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(iterator const &) const = default;

  private:
    int doubled_ = 0;
  };

  explicit LabelSet(int two_j);

  int two_j() const { return two_j_; }
  TwiceInt j() const { return TwiceInt{two_j_}; }
  int dim() const { return two_j_ + 1; }

  bool contains(TwiceInt m) const;
  /// Throws std::domain_error for labels of the wrong parity or out of range.
  void check(TwiceInt m) const;
  /// (2m + 2j)/2, in [0, 2j].
  int index(TwiceInt m) const;
  TwiceInt label(int index) const { return TwiceInt{2 * index - two_j_}; }

  iterator begin() const { return iterator{-two_j_}; }
  iterator end() const { return iterator{two_j_ + 2}; }

private:
  int two_j_;
};

LabelSet make_label_set(int two_j);

/// n choose r with the 1/Gamma(nonpositive) = 0 extension: zero whenever r is
/// outside [0, n]. Throws std::domain_error for n < 0.
BigInt binomial(int n, int r);

/// Row n of Pascal's triangle, binomial(n, 0..n).
std::vector<BigInt> binomial_row(int n);

} // namespace kravchuk
