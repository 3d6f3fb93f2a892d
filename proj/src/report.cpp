#include "kravchuk/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace kravchuk {

std::string mode_name(CheckMode mode) { return mode == CheckMode::Exact ? "exact" : "float"; }

std::string format_residual(double value)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

void to_json(nlohmann::json &j, Report const &r)
{
  j = nlohmann::json{{"identity", r.identity},
                     {"two_j", r.two_j},
                     {"mode", mode_name(r.mode)},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"elapsed_ms", r.elapsed_ms}};
  if (!r.detail.empty()) { j["detail"] = r.detail; }
  if (!r.failures.empty()) {
    auto &f = j["failures"] = nlohmann::json::array();
    for (auto const &[m, n] : r.failures) {
      f.push_back({m.str(), n.str()});
    }
  }
}

void from_json(nlohmann::json const &j, Report &r)
{
  r.identity = j.at("identity").get<std::string>();
  r.two_j = j.at("two_j").get<int>();
  auto const mode = j.at("mode").get<std::string>();
  if (mode == "exact") {
    r.mode = CheckMode::Exact;
  } else if (mode == "float") {
    r.mode = CheckMode::Float;
  } else {
    throw std::invalid_argument("unknown report mode: " + mode);
  }
  r.max_residual = j.at("max_residual").get<double>();
  r.tolerance = j.value("tolerance", 0.0);
  r.pass = j.at("pass").get<bool>();
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  r.detail = j.value("detail", std::string{});
}

} // namespace kravchuk
