#include "kravchuk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kravchuk/exact.hpp"
#include "kravchuk/oscillator.hpp"

namespace kravchuk {

namespace {

struct ObjectName
{
  ObjectKind kind;
  char const *name;
};

constexpr ObjectName object_names[] = {
  {ObjectKind::K, "K"},   {ObjectKind::F, "F"}, {ObjectKind::Jx, "Jx"},
  {ObjectKind::Jy, "Jy"}, {ObjectKind::Jz, "Jz"}, {ObjectKind::D, "D"},
  {ObjectKind::Coherent, "coherent"}, {ObjectKind::Oscillator, "oscillator"},
};

int parse_nonnegative(std::string const &text)
{
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (std::exception const &) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) { throw std::invalid_argument("not an integer: '" + text + "'"); }
  if (value < 0) { throw std::invalid_argument("two_j must be nonnegative, got " + text); }
  return value;
}

} // namespace

ObjectKind parse_object(std::string const &name)
{
  for (auto const &[kind, n] : object_names) {
    if (name == n) { return kind; }
  }
  throw std::invalid_argument("unknown object '" + name + "' (expected K, F, Jx, Jy, Jz, D, coherent or oscillator)");
}

std::string object_name(ObjectKind kind)
{
  for (auto const &[k, n] : object_names) {
    if (k == kind) { return n; }
  }
  return "?";
}

void RunConfig::validate() const
{
  if (two_j_lo < 0 || two_j_hi < 0) { throw std::invalid_argument("two_j must be nonnegative"); }
  if (two_j_lo > two_j_hi) { throw std::invalid_argument("two_j range lower bound exceeds upper bound"); }
  if (tolerance && !(*tolerance > 0.0)) { throw std::invalid_argument("tolerance override must be positive"); }
  if (threads < 1) { throw std::invalid_argument("thread count must be at least 1"); }
  if (command == Command::Gen) {
    if (two_j_lo != two_j_hi) { throw std::invalid_argument("gen takes a single two_j"); }
    if (!object) { throw std::invalid_argument("gen requires --object"); }
    if (*object == ObjectKind::D && !(alpha && beta && gamma)) {
      throw std::invalid_argument("object D requires --alpha, --beta and --gamma");
    }
    if (*object == ObjectKind::Coherent && !(alpha && beta)) {
      throw std::invalid_argument("object coherent requires --alpha and --beta");
    }
  }
}

std::pair<int, int> parse_two_j_range(std::string const &text)
{
  auto const dots = text.find("..");
  if (dots == std::string::npos) {
    int const v = parse_nonnegative(text);
    return {v, v};
  }
  int const lo = parse_nonnegative(text.substr(0, dots));
  int const hi = parse_nonnegative(text.substr(dots + 2));
  if (lo > hi) { throw std::invalid_argument("empty two_j range " + text); }
  return {lo, hi};
}

std::optional<double> tolerance_from_env()
{
  char const *raw = std::getenv("KRAVCHUK_TOL");
  if (raw == nullptr || *raw == '\0') { return std::nullopt; }
  std::string const text{raw};
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (std::exception const &) {
    throw std::invalid_argument("KRAVCHUK_TOL is not a number: '" + text + "'");
  }
  if (used != text.size() || !(value > 0.0)) {
    throw std::invalid_argument("KRAVCHUK_TOL must be a positive number, got '" + text + "'");
  }
  return value;
}

io::MatrixDocument generate_object(RunConfig const &config)
{
  config.validate();
  if (config.command != Command::Gen) { throw std::invalid_argument("generate_object needs a gen configuration"); }
  int const two_j = config.two_j_lo;
  double const scale = config.degrees ? std::numbers::pi / 180.0 : 1.0;
  auto angle = [scale](std::optional<double> a) { return a.value_or(0.0) * scale; };

  io::MatrixDocument doc;
  doc.two_j = two_j;
  doc.object = object_name(*config.object);
  switch (*config.object) {
  case ObjectKind::K: doc.rows = kravchuk_transform_matrix<double>(two_j); break;
  case ObjectKind::F: doc.rows = fourier_matrix<double>(two_j); break;
  case ObjectKind::Jx: doc.rows = build_generators<double>(two_j).Jx; break;
  case ObjectKind::Jy: doc.rows = build_generators<double>(two_j).Jy; break;
  case ObjectKind::Jz: doc.rows = coordinate_diagonal<double>(two_j).cast<Cx<double>>().asDiagonal(); break;
  case ObjectKind::D: {
    EulerAngles<double> const a{angle(config.alpha), angle(config.beta), angle(config.gamma)};
    doc.params = {{"alpha", a.alpha}, {"beta", a.beta}, {"gamma", a.gamma}};
    doc.rows = euler_matrix<double>(two_j, a);
    break;
  }
  case ObjectKind::Coherent: {
    double const a = angle(config.alpha);
    double const b = angle(config.beta);
    doc.params = {{"alpha", a}, {"beta", b}};
    doc.rows = spin_coherent_state<double>(two_j, a, b);
    break;
  }
  case ObjectKind::Oscillator: doc.rows = build_oscillator<double>(two_j).H_tilde; break;
  }
  return doc;
}

std::vector<Report> run_verification(int two_j, std::optional<double> tolerance)
{
  std::vector<Report> reports{
    check_orthogonality_exact(two_j),
    check_recurrence_exact(two_j),
    check_theorem1(two_j),
    check_theorem2<double>(two_j, tolerance),
    check_theorem3<double>(two_j, tolerance),
    check_square_is_adjoint<double>(two_j, tolerance),
    check_kravchuk_spectrum<double>(two_j, tolerance),
    check_commutators<double>(two_j, tolerance),
    check_ladder<double>(two_j, tolerance),
    check_fourier_order4<double>(two_j, tolerance),
    check_euler_vs_oracle<double>(two_j, 10, 2024, tolerance),
    check_double_cover<double>(two_j, tolerance),
    check_coherent_states<double>(two_j, 20, 7, tolerance),
    check_oscillator<double>(two_j, tolerance),
  };
  if (tolerance) {
    for (auto &r : reports) {
      if (r.mode == CheckMode::Float) { r.detail += r.detail.empty() ? "tolerance override" : "; tolerance override"; }
    }
  }
  std::sort(reports.begin(), reports.end(), [](Report const &a, Report const &b) { return a.identity < b.identity; });
  return reports;
}

std::vector<Report> run_verification_range(int lo, int hi, std::optional<double> tolerance, int threads)
{
  if (lo < 0 || lo > hi) { throw std::invalid_argument("invalid two_j range"); }
  int const count = hi - lo + 1;
  std::vector<std::vector<Report>> per_spin(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < count; i = next++) {
      per_spin[static_cast<std::size_t>(i)] = run_verification(lo + i, tolerance);
    }
  };
  int const workers = std::clamp(threads, 1, count);
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  pool.clear();

  std::vector<Report> all;
  for (auto &reports : per_spin) {
    std::move(reports.begin(), reports.end(), std::back_inserter(all));
  }
  return all;
}

bool all_pass(std::vector<Report> const &reports)
{
  return std::all_of(reports.begin(), reports.end(), [](Report const &r) { return r.pass; });
}

std::string info_text(int two_j, std::optional<double> tolerance)
{
  LabelSet const labels{two_j};
  CubeRootSpectrum const s = kravchuk_spectrum<double>(two_j);
  std::ostringstream out;
  out << "d=" << labels.dim() << ", labels " << (-labels.j()).str() << ".." << labels.j().str() << '\n';
  out << "j=" << labels.j().str() << (two_j % 2 == 0 ? " (integer)" : " (half-integer)") << '\n';
  out << "tolerance=" << tolerance_or_default(tolerance, labels.dim()) << (tolerance ? " (override)" : " (1e-12 d^2)")
      << '\n';
  out << "K eigenvalue multiplicities: 1: " << s.multiplicity[0] << ", exp(2 pi i/3): " << s.multiplicity[1]
      << ", exp(-2 pi i/3): " << s.multiplicity[2] << " (total " << s.multiplicity[0] + s.multiplicity[1] + s.multiplicity[2]
      << ", max |lambda^3 - 1| = " << s.max_cube_residual << ")\n";
  return out.str();
}

std::string euler_timing_text(int two_j, int repeats)
{
  if (repeats <= 0) { throw std::invalid_argument("timing repeats must be positive"); }
  EulerAngles<double> const angles{0.7, 1.9, -2.3};
  double sink = 0.0;
  Stopwatch euler_clock;
  for (int i = 0; i < repeats; ++i) { sink += std::abs(euler_matrix<double>(two_j, angles)(0, 0)); }
  double const euler_ms = euler_clock.elapsed_ms();
  Stopwatch oracle_clock;
  for (int i = 0; i < repeats; ++i) { sink += std::abs(exp_oracle<double>(two_j, angles)(0, 0)); }
  double const oracle_ms = oracle_clock.elapsed_ms();

  std::ostringstream out;
  out << "rotation matrix timing over " << repeats << " builds (checksum " << sink << "):\n";
  out << "  euler_matrix (Kravchuk basis): " << euler_ms << " ms\n";
  out << "  exp_oracle (eigendecomposition): " << oracle_ms << " ms\n";
  return out.str();
}

} // namespace kravchuk
