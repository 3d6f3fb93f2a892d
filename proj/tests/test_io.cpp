#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <sstream>

#include "kravchuk/verify.hpp"

using namespace kravchuk;

namespace {

bool bit_equal(CMatrix<double> const &a, CMatrix<double> const &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols()) { return false; }
  return std::memcmp(a.data(), b.data(), sizeof(std::complex<double>) * static_cast<std::size_t>(a.size())) == 0;
}

RunConfig gen_config(int two_j, ObjectKind kind)
{
  RunConfig c;
  c.command = Command::Gen;
  c.two_j_lo = c.two_j_hi = two_j;
  c.object = kind;
  return c;
}

} // namespace

TEST_SUITE("io")
{
  TEST_CASE("generated objects round-trip bit for bit")
  {
    for (int two_j : {0, 1, 2, 5, 12}) {
      for (ObjectKind kind : {ObjectKind::K, ObjectKind::F, ObjectKind::Jx, ObjectKind::Jy, ObjectKind::Jz,
                              ObjectKind::D, ObjectKind::Coherent, ObjectKind::Oscillator}) {
        RunConfig c = gen_config(two_j, kind);
        c.alpha = 0.123456789012345;
        c.beta = -2.5;
        c.gamma = 1.0 / 3.0;
        io::MatrixDocument const doc = generate_object(c);

        std::stringstream json;
        io::write_json(json, doc);
        io::MatrixDocument const back = io::read_json(json);
        CHECK(back.two_j == two_j);
        CHECK(back.object == object_name(kind));
        CHECK(back.params == doc.params);
        CHECK(bit_equal(back.rows, doc.rows));

        std::stringstream csv;
        io::write_csv(csv, doc.rows);
        CHECK(bit_equal(io::read_csv(csv), doc.rows));
      }
    }
  }

  TEST_CASE("JSON schema")
  {
    io::MatrixDocument const doc = generate_object(gen_config(2, ObjectKind::Jz));
    nlohmann::json const j = io::to_json(doc);
    CHECK(j.at("two_j") == 2);
    CHECK(j.at("object") == "Jz");
    CHECK(j.at("params").is_object());
    REQUIRE(j.at("rows").size() == 3);
    CHECK(j["rows"][0][0] == nlohmann::json::array({-1.0, 0.0}));
    CHECK(j["rows"][1][1] == nlohmann::json::array({0.0, 0.0}));
    CHECK(j["rows"][2][2] == nlohmann::json::array({1.0, 0.0}));
    CHECK(j["rows"][0][1] == nlohmann::json::array({0.0, 0.0}));

    std::stringstream csv;
    io::write_csv(csv, doc.rows);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "row,col,re,im");
    CHECK_THROWS_AS(io::from_json(nlohmann::json{{"two_j", 1}, {"object", "K"}, {"rows", {{1.0}}}}), std::invalid_argument);
    std::istringstream bad("r,c\n");
    CHECK_THROWS_AS(io::read_csv(bad), std::invalid_argument);
  }

  TEST_CASE("object generation")
  {
    RunConfig d = gen_config(2, ObjectKind::D);
    d.alpha = d.beta = d.gamma = 0.0;
    CHECK((generate_object(d).rows - CMatrix<double>::Identity(3, 3)).norm() < default_tolerance(3));

    RunConfig k = gen_config(1, ObjectKind::K);
    CHECK(bit_equal(generate_object(k).rows, kravchuk_transform_matrix<double>(1)));

    RunConfig deg = gen_config(3, ObjectKind::D);
    deg.alpha = 90.0;
    deg.beta = 180.0;
    deg.gamma = -45.0;
    deg.degrees = true;
    EulerAngles<double> const rad{std::numbers::pi / 2, std::numbers::pi, -std::numbers::pi / 4};
    CHECK((generate_object(deg).rows - euler_matrix<double>(3, rad)).norm() < 1e-14);

    RunConfig coherent = gen_config(4, ObjectKind::Coherent);
    coherent.alpha = 0.5;
    coherent.beta = 1.0;
    io::MatrixDocument const state = generate_object(coherent);
    CHECK(state.rows.cols() == 1);
    CHECK(state.rows.rows() == 5);

    RunConfig missing = gen_config(2, ObjectKind::D);
    missing.alpha = 1.0;
    CHECK_THROWS_AS(generate_object(missing), std::invalid_argument);
    RunConfig missing_beta = gen_config(2, ObjectKind::Coherent);
    missing_beta.alpha = 1.0;
    CHECK_THROWS_AS(generate_object(missing_beta), std::invalid_argument);
    CHECK_THROWS_AS(parse_object("L"), std::invalid_argument);
  }

  TEST_CASE("configuration validation")
  {
    RunConfig c;
    c.command = Command::Verify;
    c.two_j_lo = 3;
    c.two_j_hi = 1;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.two_j_hi = 4;
    CHECK_NOTHROW(c.validate());
    c.tolerance = -1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);

    CHECK(parse_two_j_range("0..8") == std::pair{0, 8});
    CHECK(parse_two_j_range("5") == std::pair{5, 5});
    CHECK_THROWS_AS(parse_two_j_range("8..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_two_j_range("-1..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_two_j_range("a..b"), std::invalid_argument);
  }

  TEST_CASE("tolerance from the environment")
  {
    ::unsetenv("KRAVCHUK_TOL");
    CHECK_FALSE(tolerance_from_env().has_value());
    ::setenv("KRAVCHUK_TOL", "1e-9", 1);
    CHECK(tolerance_from_env() == 1e-9);
    ::setenv("KRAVCHUK_TOL", "0", 1);
    CHECK_THROWS_AS(tolerance_from_env(), std::invalid_argument);
    ::setenv("KRAVCHUK_TOL", "abc", 1);
    CHECK_THROWS_AS(tolerance_from_env(), std::invalid_argument);
    ::unsetenv("KRAVCHUK_TOL");
  }

  TEST_CASE("verification suite")
  {
    std::vector<Report> const zero = run_verification(0);
    CHECK(all_pass(zero));
    for (auto const &r : zero) {
      CHECK_MESSAGE(r.max_residual == 0.0, r.identity);
    }

    std::vector<Report> const reports = run_verification_range(0, 6, std::nullopt, 3);
    CHECK(all_pass(reports));
    for (std::size_t i = 1; i < reports.size(); ++i) {
      auto const key = [](Report const &r) { return std::pair{r.two_j, r.identity}; };
      CHECK(key(reports[i - 1]) < key(reports[i]));
    }
    CHECK(reports.size() == 7 * zero.size());

    std::vector<Report> const strict = run_verification(5, 1e-300);
    CHECK_FALSE(all_pass(strict));
    for (auto const &r : strict) {
      if (r.mode == CheckMode::Exact) { CHECK(r.pass); }
    }
  }

  TEST_CASE("report serialization")
  {
    Report r;
    r.identity = "theorem1_exact";
    r.two_j = 3;
    r.mode = CheckMode::Exact;
    r.failures.emplace_back(TwiceInt{1}, TwiceInt{-3});
    nlohmann::json const j = r;
    CHECK(j.at("mode") == "exact");
    CHECK(j.at("failures")[0] == nlohmann::json::array({"1/2", "-3/2"}));
    Report const back = j.get<Report>();
    CHECK(back.identity == r.identity);
    CHECK(back.two_j == 3);
    CHECK(back.mode == CheckMode::Exact);
  }

  TEST_CASE("info text")
  {
    CHECK(info_text(4).rfind("d=5, labels -2..2", 0) == 0);
    CHECK(info_text(1).rfind("d=2, labels -1/2..1/2", 0) == 0);
    CHECK(info_text(6).find("(total 7") != std::string::npos);
  }
}
