#include "kravchuk/io.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kravchuk::io {

nlohmann::json to_json(MatrixDocument const &doc)
{
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < doc.rows.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < doc.rows.cols(); ++c) {
      row.push_back({doc.rows(r, c).real(), doc.rows(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"two_j", doc.two_j}, {"object", doc.object}, {"params", doc.params}, {"rows", std::move(rows)}};
}

MatrixDocument from_json(nlohmann::json const &j)
{
  MatrixDocument doc;
  doc.two_j = j.at("two_j").get<int>();
  doc.object = j.at("object").get<std::string>();
  doc.params = j.value("params", nlohmann::json::object());
  auto const &rows = j.at("rows");
  if (!rows.is_array()) { throw std::invalid_argument("rows must be an array"); }
  Eigen::Index const nr = static_cast<Eigen::Index>(rows.size());
  Eigen::Index const nc = nr == 0 ? 0 : static_cast<Eigen::Index>(rows.at(0).size());
  doc.rows.resize(nr, nc);
  for (Eigen::Index r = 0; r < nr; ++r) {
    auto const &row = rows.at(r);
    if (static_cast<Eigen::Index>(row.size()) != nc) { throw std::invalid_argument("ragged rows"); }
    for (Eigen::Index c = 0; c < nc; ++c) {
      auto const &entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2) { throw std::invalid_argument("entries must be [re, im] pairs"); }
      doc.rows(r, c) = {entry.at(0).get<double>(), entry.at(1).get<double>()};
    }
  }
  return doc;
}

void write_json(std::ostream &out, MatrixDocument const &doc) { out << to_json(doc).dump() << '\n'; }

MatrixDocument read_json(std::istream &in) { return from_json(nlohmann::json::parse(in)); }

void write_csv(std::ostream &out, CMatrix<double> const &m)
{
  auto const old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << r << ',' << c << ',' << m(r, c).real() << ',' << m(r, c).imag() << '\n';
    }
  }
  out.precision(old_precision);
}

CMatrix<double> read_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || line != "row,col,re,im") { throw std::invalid_argument("missing CSV header row,col,re,im"); }
  struct Entry
  {
    Eigen::Index row, col;
    double re, im;
  };
  std::vector<Entry> entries;
  Eigen::Index nr = 0;
  Eigen::Index nc = 0;
  while (std::getline(in, line)) {
    if (line.empty()) { continue; }
    std::istringstream fields(line);
    Entry e{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(fields >> e.row >> c1 >> e.col >> c2 >> e.re >> c3 >> e.im) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw std::invalid_argument("malformed CSV line: " + line);
    }
    nr = std::max(nr, e.row + 1);
    nc = std::max(nc, e.col + 1);
    entries.push_back(e);
  }
  CMatrix<double> m = CMatrix<double>::Zero(nr, nc);
  for (auto const &e : entries) {
    m(e.row, e.col) = {e.re, e.im};
  }
  return m;
}

} // namespace kravchuk::io
