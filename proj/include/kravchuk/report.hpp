#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kravchuk/halfint.hpp"

namespace kravchuk {

enum class CheckMode
{
  Exact,
  Float
};

/// Outcome of one identity check at one spin.
///
/// pass holds iff every instance holds exactly (Exact mode) or
/// max_residual < tolerance (Float mode).
struct Report
{
  std::string identity;
  int two_j = 0;
  CheckMode mode = CheckMode::Float;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  double elapsed_ms = 0.0;
  /// Free-form note, e.g. which exact ring was used.
  std::string detail;
  /// Label pairs (m, n) at which an exact identity failed.
  std::vector<std::pair<TwiceInt, TwiceInt>> failures;
};

void to_json(nlohmann::json &j, Report const &r);
void from_json(nlohmann::json const &j, Report &r);
std::string mode_name(CheckMode mode);

/// Residual in short scientific notation, e.g. "3.2e-15".
std::string format_residual(double value);

/// Wall-clock stopwatch for Report::elapsed_ms.
class Stopwatch
{
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const
  {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace kravchuk
