// kravchuk: generate Kravchuk-transform objects and run the identity checks.
//
// Exit codes: 0 success / all identities hold, 1 an identity failed,
// 2 usage or configuration error (including I/O failures).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kravchuk/verify.hpp"

namespace {

constexpr int exit_usage = 2;

int run_gen(kravchuk::RunConfig const &config)
{
  auto const doc = kravchuk::generate_object(config);
  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) { throw std::runtime_error("cannot open " + config.output + " for writing"); }
  }
  std::ostream &out = config.output.empty() ? std::cout : file;
  if (config.format == kravchuk::OutputFormat::Json) {
    kravchuk::io::write_json(out, doc);
  } else {
    kravchuk::io::write_csv(out, doc.rows);
  }
  out.flush();
  if (!out) { throw std::runtime_error("write failed"); }
  return 0;
}

int run_verify(kravchuk::RunConfig const &config)
{
  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) { throw std::runtime_error("cannot open " + config.output + " for writing"); }
  }
  std::ostream &out = config.output.empty() ? std::cout : file;
  auto const reports = kravchuk::run_verification_range(config.two_j_lo, config.two_j_hi, config.tolerance, config.threads);
  for (auto const &r : reports) {
    out << nlohmann::json(r).dump() << '\n';
  }
  out.flush();
  int failed = 0;
  for (auto const &r : reports) {
    if (!r.pass) { ++failed; }
  }
  std::cerr << reports.size() - failed << "/" << reports.size() << " checks passed for two_j " << config.two_j_lo
            << ".." << config.two_j_hi << '\n';
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Kravchuk transform, su(2) representations and identity checks"};
  app.require_subcommand(1);

  kravchuk::RunConfig config;
  int two_j = -1;
  std::string range;
  std::string object;
  std::string format = "json";
  std::optional<double> tol_flag;

  auto *gen = app.add_subcommand("gen", "Write a matrix or state to a file");
  gen->add_option("--two-j", two_j, "Twice the spin, 2j >= 0")->required();
  gen->add_option("--object", object, "K, F, Jx, Jy, Jz, D, coherent or oscillator")->required();
  gen->add_option("--alpha", config.alpha, "Euler angle alpha");
  gen->add_option("--beta", config.beta, "Euler angle beta");
  gen->add_option("--gamma", config.gamma, "Euler angle gamma");
  gen->add_flag("--degrees", config.degrees, "Angles are in degrees (default radians)");
  gen->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("-o,--output", config.output, "Output path (default stdout)");

  auto *verify = app.add_subcommand("verify", "Run every identity check, one JSON report per line");
  auto *single = verify->add_option("--two-j", two_j, "Twice the spin");
  auto *ranged = verify->add_option("--two-j-range", range, "Inclusive range lo..hi of 2j");
  single->excludes(ranged);
  verify->add_option("--tol", tol_flag, "Tolerance for every float check (overrides KRAVCHUK_TOL)");
  verify->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("-o,--output", config.output, "Output path (default stdout)");

  auto *info = app.add_subcommand("info", "Describe the spin-j space and the spectrum of K");
  info->add_option("--two-j", two_j, "Twice the spin")->required();
  info->add_option("--tol", tol_flag, "Tolerance override");
  bool timing = false;
  info->add_flag("--timing", timing, "Also time euler_matrix against the exponential oracle");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    config.tolerance = tol_flag ? tol_flag : kravchuk::tolerance_from_env();
    config.format = format == "csv" ? kravchuk::OutputFormat::Csv : kravchuk::OutputFormat::Json;
    if (!range.empty()) {
      std::tie(config.two_j_lo, config.two_j_hi) = kravchuk::parse_two_j_range(range);
    } else if (two_j >= 0) {
      config.two_j_lo = config.two_j_hi = two_j;
    } else if (*verify) {
      throw std::invalid_argument("verify needs --two-j or --two-j-range");
    } else {
      throw std::invalid_argument("two_j must be nonnegative");
    }

    if (*gen) {
      config.command = kravchuk::Command::Gen;
      config.object = kravchuk::parse_object(object);
      config.validate();
      return run_gen(config);
    }
    if (*verify) {
      config.command = kravchuk::Command::Verify;
      config.validate();
      return run_verify(config);
    }
    config.command = kravchuk::Command::Info;
    config.validate();
    std::cout << kravchuk::info_text(config.two_j_lo, config.tolerance);
    if (timing) { std::cout << kravchuk::euler_timing_text(config.two_j_lo); }
    return 0;
  } catch (std::exception const &e) {
    std::cerr << "kravchuk: " << e.what() << '\n';
    return exit_usage;
  }
}
