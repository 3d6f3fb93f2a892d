#include <doctest.h>

#include <cmath>

#include "kravchuk/functions.hpp"

using namespace kravchuk;

namespace {

double const inv_sqrt2 = 0.7071067811865476;

// Kravchuk function values for two_j = 2 and 3 from a 30-digit evaluation of
// the defining formula over a symbolic polynomial expansion.
double const expected_two_j_2[3][3] = {
  {0.5, 0.7071067811865475244, 0.5},
  {0.7071067811865475244, 0.0, -0.7071067811865475244},
  {0.5, -0.7071067811865475244, 0.5}};
double const expected_two_j_3[4][4] = {
  {0.3535533905932737622, 0.61237243569579452455, 0.61237243569579452455, 0.3535533905932737622},
  {0.61237243569579452455, 0.3535533905932737622, -0.3535533905932737622, -0.61237243569579452455},
  {0.61237243569579452455, -0.3535533905932737622, -0.3535533905932737622, 0.61237243569579452455},
  {0.3535533905932737622, -0.61237243569579452455, 0.61237243569579452455, -0.3535533905932737622}};

} // namespace

TEST_SUITE("functions")
{
  TEST_CASE("small spins")
  {
    CHECK(kravchuk_func<double>(1, TwiceInt{-1}, TwiceInt{-1}) == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(kravchuk_func<double>(1, TwiceInt{-1}, TwiceInt{1}) == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(kravchuk_func<double>(1, TwiceInt{1}, TwiceInt{1}) == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
    CHECK(kravchuk_func<double>(0, TwiceInt{0}, TwiceInt{0}) == 1.0);
    CHECK_THROWS_AS(kravchuk_func<double>(2, TwiceInt{1}, TwiceInt{0}), std::domain_error);

    RMatrix<double> const m0 = kravchuk_basis_matrix<double>(0);
    CHECK(m0.rows() == 1);
    CHECK(m0(0, 0) == 1.0);

    RMatrix<double> expected(2, 2);
    expected << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    CHECK((kravchuk_basis_matrix<double>(1) - expected).norm() < 1e-15);
  }

  TEST_CASE("frozen values")
  {
    RMatrix<double> const m2 = kravchuk_basis_matrix<double>(2);
    RMatrix<double> const m3 = kravchuk_basis_matrix<double>(3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CHECK(std::abs(m2(a, b) - expected_two_j_2[a][b]) < 1e-15);
      }
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        CHECK(std::abs(m3(a, b) - expected_two_j_3[a][b]) < 1e-15);
        CHECK(kravchuk_func<double>(3, TwiceInt{2 * a - 3}, TwiceInt{2 * b - 3}) == m3(a, b));
      }
    }
  }

  TEST_CASE("symmetry, orthogonality, parity and completeness for 2j <= 40")
  {
    for (int two_j = 0; two_j <= 40; ++two_j) {
      int const d = two_j + 1;
      double const eps = default_tolerance(d);
      RMatrix<double> const M = kravchuk_basis_matrix<double>(two_j);
      RMatrix<double> const I = RMatrix<double>::Identity(d, d);
      CHECK((M - M.transpose()).norm() < eps);
      CHECK((M.transpose() * M - I).norm() < eps);
      CHECK((M * M.transpose() - I).norm() < eps);
      for (int mi = 0; mi < d; ++mi) {
        // K_m(-n) = (-1)^{j+m} K_m(n), with j + m = mi
        double const sign = mi % 2 == 0 ? 1.0 : -1.0;
        for (int ni = 0; ni < d; ++ni) {
          CHECK(std::abs(M(mi, d - 1 - ni) - sign * M(mi, ni)) < eps);
        }
      }
    }
  }

  TEST_CASE("three-term recurrence in m and its dual in k")
  {
    for (int two_j = 0; two_j <= 40; ++two_j) {
      int const d = two_j + 1;
      RMatrix<double> const M = kravchuk_basis_matrix<double>(two_j);
      auto value = [&](int mi, int ki) { return mi < 0 || mi >= d ? 0.0 : M(mi, ki); };
      auto dual = [&](int ki, int mi) { return mi < 0 || mi >= d ? 0.0 : M(ki, mi); };
      double worst = 0.0;
      double worst_dual = 0.0;
      for (int mi = 0; mi < d; ++mi) {
        double const two_m = 2 * mi - two_j;
        double const up = 0.5 * std::sqrt((two_j - two_m) * (two_j + two_m + 2));
        double const down = 0.5 * std::sqrt((two_j + two_m) * (two_j - two_m + 2));
        for (int ki = 0; ki < d; ++ki) {
          double const k = 0.5 * (2 * ki - two_j);
          worst = std::max(worst, std::abs(up * value(mi + 1, ki) + down * value(mi - 1, ki) + 2 * k * M(mi, ki)));
          worst_dual = std::max(worst_dual, std::abs(up * dual(ki, mi + 1) + down * dual(ki, mi - 1) + 2 * k * M(ki, mi)));
        }
      }
      CHECK(worst < default_tolerance(d));
      CHECK(worst_dual < default_tolerance(d));
    }
  }

  TEST_CASE("tridiagonal moments")
  {
    CHECK(tridiagonal_moment<double>(1, TwiceInt{1}, TwiceInt{-1}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(tridiagonal_moment<double>(2, TwiceInt{0}, TwiceInt{0})) < 1e-15);
    CHECK(tridiagonal_moment<double>(2, TwiceInt{-2}, TwiceInt{0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    for (int two_j = 0; two_j <= 20; ++two_j) {
      LabelSet const l{two_j};
      for (TwiceInt m : l) {
        for (TwiceInt n : l) {
          double expected = 0.0;
          if (n == m - TwiceInt{2}) { expected = 0.5 * std::sqrt(double(two_j + m.doubled) * (two_j - m.doubled + 2)); }
          if (n == m + TwiceInt{2}) { expected = 0.5 * std::sqrt(double(two_j - m.doubled) * (two_j + m.doubled + 2)); }
          CHECK(std::abs(tridiagonal_moment<double>(two_j, m, n) - expected) < default_tolerance(l.dim()));
        }
      }
    }
  }

  TEST_CASE("theorem 2")
  {
    Report const r0 = check_theorem2<double>(0);
    CHECK(r0.pass);
    CHECK(r0.max_residual == 0.0);
    CHECK(check_theorem2<double>(2).pass);
    Report const r20 = check_theorem2<double>(20);
    CHECK(r20.pass);
    CHECK(r20.max_residual < 1e-10);
    CHECK_FALSE(check_theorem2<double>(20, 1e-300).pass);
  }

  TEST_CASE("large spins stay finite and accurate")
  {
    // K_{-j}(k) = 1, so the function value is 2^{-j} sqrt(C(2j, j+k)).
    int const two_j = 1024;
    for (int k : {0, 100, -300, 511}) {
      double const j = two_j / 2.0;
      double const log_value = 0.5 * (std::lgamma(two_j + 1.0) - std::lgamma(j + k + 1.0) - std::lgamma(j - k + 1.0)) -
                               j * std::log(2.0);
      double const got = kravchuk_func<double>(two_j, TwiceInt{-two_j}, TwiceInt::from_int(k));
      CHECK(std::isfinite(got));
      CHECK(got == doctest::Approx(std::exp(log_value)).epsilon(1e-10));
    }

    RMatrix<double> const M = kravchuk_basis_matrix<double>(128);
    CHECK(M.allFinite());
    CHECK((M.transpose() * M - RMatrix<double>::Identity(129, 129)).norm() < default_tolerance(129));
  }

  TEST_CASE("long double instantiation")
  {
    RMatrix<long double> const M = kravchuk_basis_matrix<long double>(20);
    long double const residual = (M.transpose() * M - RMatrix<long double>::Identity(21, 21)).norm();
    CHECK(residual < 1e-15L * 21 * 21);
    CHECK(check_theorem2<long double>(15).pass);
  }
}
