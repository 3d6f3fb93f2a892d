#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kravchuk/io.hpp"
#include "kravchuk/report.hpp"
#include "kravchuk/su2.hpp"

namespace kravchuk {

enum class Command
{
  Gen,
  Verify,
  Info
};

enum class ObjectKind
{
  K,
  F,
  Jx,
  Jy,
  Jz,
  D,
  Coherent,
  Oscillator
};

enum class OutputFormat
{
  Json,
  Csv
};

/// Throws std::invalid_argument for unknown names.
ObjectKind parse_object(std::string const &name);
std::string object_name(ObjectKind kind);

struct RunConfig
{
  Command command = Command::Info;
  int two_j_lo = 0;
  int two_j_hi = 0;
  std::optional<ObjectKind> object;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  bool degrees = false;
  OutputFormat format = OutputFormat::Json;
  /// Empty means standard output.
  std::string output;
  std::optional<double> tolerance;
  int threads = 1;

  /// Throws std::invalid_argument if the configuration is inconsistent.
  void validate() const;
};

/// "0..8" or "5". Throws std::invalid_argument.
std::pair<int, int> parse_two_j_range(std::string const &text);

/// KRAVCHUK_TOL as a positive double, if set. Throws std::invalid_argument on
/// a malformed or nonpositive value.
std::optional<double> tolerance_from_env();

/// The selected object for config.two_j_lo. D needs alpha, beta and gamma;
/// coherent needs alpha and beta. Angles are converted from degrees when
/// config.degrees is set.
io::MatrixDocument generate_object(RunConfig const &config);

/// Every identity check at one spin, sorted by identity name.
std::vector<Report> run_verification(int two_j, std::optional<double> tolerance = std::nullopt);

/// run_verification for every two_j in [lo, hi], distributed over up to
/// `threads` workers. The result is ordered by (two_j, identity) regardless of
/// completion order.
std::vector<Report> run_verification_range(int lo, int hi, std::optional<double> tolerance = std::nullopt,
                                           int threads = 1);

bool all_pass(std::vector<Report> const &reports);

/// Dimension, labels, tolerance and the observed eigenvalue multiplicities of K.
std::string info_text(int two_j, std::optional<double> tolerance = std::nullopt);

/// Wall-clock comparison of the two rotation-matrix constructions: euler_matrix
/// (one real d x d basis product per x-rotation) against exp_oracle (Hermitian
/// eigendecompositions of the standard generators). Informational only.
std::string euler_timing_text(int two_j, int repeats = 200);

} // namespace kravchuk
