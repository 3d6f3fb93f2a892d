// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: acceptance <path-to-kravchuk-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kravchuk/exact.hpp"
#include "kravchuk/functions.hpp"
#include "kravchuk/oscillator.hpp"
#include "kravchuk/su2.hpp"
#include "kravchuk/transform.hpp"

using namespace kravchuk;

namespace {

struct Outcome
{
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void absorb(Report const &r)
  {
    if (r.max_residual > worst) { worst = r.max_residual; }
    if (!r.pass && pass) {
      pass = false;
      note = r.identity + " failed at two_j=" + std::to_string(r.two_j) + ": " + r.detail;
    }
  }
  void require(bool ok, std::string const &why)
  {
    if (!ok && pass) {
      pass = false;
      note = why;
    }
  }
};

struct Criterion
{
  std::string name;
  double time_limit_s; // 0 means no limit
  std::function<Outcome()> body;
};

Outcome exact_orthogonality()
{
  Outcome o;
  for (int two_j = 0; two_j <= 24; ++two_j) { o.absorb(check_orthogonality_exact(two_j)); }
  return o;
}

Outcome theorem1()
{
  Outcome o;
  for (int two_j = 0; two_j <= 20; ++two_j) { o.absorb(check_theorem1(two_j)); }
  return o;
}

Outcome oracle_equivalence()
{
  Outcome o;
  for (int two_j = 0; two_j <= 24; ++two_j) {
    LabelSet const labels(two_j);
    for (TwiceInt k : labels) {
      std::vector<BigInt> const row = kravchuk_row_gf_oracle(two_j, k);
      for (TwiceInt m : labels) {
        BigInt const direct = kravchuk_poly(two_j, m, k);
        o.require(direct == row[labels.index(m)],
                  "generating function mismatch at two_j=" + std::to_string(two_j));
        if (two_j <= 16) {
          o.require(kravchuk_via_hyp2f1(two_j, m, k) == BigRational(direct),
                    "hypergeometric mismatch at two_j=" + std::to_string(two_j));
        }
      }
    }
  }
  return o;
}

template <typename F>
Outcome sweep(int lo, int hi, F check)
{
  Outcome o;
  for (int two_j = lo; two_j <= hi; ++two_j) { check(o, two_j); }
  return o;
}

Outcome cube_root()
{
  return sweep(0, 40, [](Outcome &o, int two_j) {
    o.absorb(check_theorem3<double>(two_j));
    o.absorb(check_square_is_adjoint<double>(two_j));
  });
}

Outcome commutators()
{
  return sweep(0, 40, [](Outcome &o, int two_j) { o.absorb(check_commutators<double>(two_j)); });
}

Outcome ladder()
{
  return sweep(0, 40, [](Outcome &o, int two_j) { o.absorb(check_ladder<double>(two_j)); });
}

Outcome euler()
{
  return sweep(0, 10, [](Outcome &o, int two_j) {
    o.absorb(check_euler_vs_oracle<double>(two_j, 10));
    o.absorb(check_double_cover<double>(two_j));
  });
}

Outcome fourier()
{
  return sweep(0, 40, [](Outcome &o, int two_j) { o.absorb(check_fourier_order4<double>(two_j)); });
}

Outcome oscillator()
{
  return sweep(0, 20, [](Outcome &o, int two_j) { o.absorb(check_oscillator<double>(two_j)); });
}

Outcome coherent()
{
  return sweep(0, 10, [](Outcome &o, int two_j) { o.absorb(check_coherent_states<double>(two_j, 20)); });
}

Outcome end_to_end(std::string const &cli)
{
  Outcome o;
  std::string const command = cli + " verify --two-j-range 0..16 > /dev/null 2>&1";
  int const status = std::system(command.c_str());
  o.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "verify exited with status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
  return o;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <kravchuk-cli>\n", argv[0]);
    return 2;
  }
  std::string const cli = argv[1];

  std::vector<Criterion> const criteria = {
    {"AC1  exact orthogonality, two_j 0..24", 10.0, exact_orthogonality},
    {"AC2  Kravchuk transform of Kravchuk functions, exact, two_j 0..20", 30.0, theorem1},
    {"AC3  generating-function and 2F1 oracles, exact", 0.0, oracle_equivalence},
    {"AC4  K^3 = I, cubic commutator, K^2 = K^dagger, two_j 0..40", 20.0, cube_root},
    {"AC5  su(2) commutators and Casimir, two_j 0..40", 0.0, commutators},
    {"AC6  ladder operator structure, two_j 0..40", 0.0, ladder},
    {"AC7  Euler matrices vs exponential oracle, double cover, two_j 0..10", 0.0, euler},
    {"AC8  F^4 = I, two_j 0..40", 0.0, fourier},
    {"AC9  oscillator eigenstates and Hamiltonian forms, two_j 0..20", 0.0, oscillator},
    {"AC10 spin coherent states, two_j 0..10", 0.0, coherent},
    {"AC11 CLI verify --two-j-range 0..16", 60.0, [&cli] { return end_to_end(cli); }},
  };

  int failures = 0;
  for (auto const &c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o = c.body();
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0) {
      o.require(seconds < c.time_limit_s, "exceeded time limit of " + std::to_string(c.time_limit_s) + " s");
    }
    if (!o.pass) { ++failures; }
    std::printf("[%s] %-70s %8.3f s  max residual %s%s%s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                format_residual(o.worst).c_str(), o.note.empty() ? "" : "  -- ", o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
