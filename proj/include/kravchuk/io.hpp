#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kravchuk/types.hpp"

namespace kravchuk::io {

/// A serialized operator or state. States are stored as a single column.
struct MatrixDocument
{
  int two_j = 0;
  std::string object;
  nlohmann::json params = nlohmann::json::object();
  CMatrix<double> rows;
};

/// {"two_j": int, "object": str, "params": {...}, "rows": [[[re, im], ...], ...]}
///
/// Doubles are written in shortest round-trip form, so reading the document
/// back reproduces every entry bit for bit.
nlohmann::json to_json(MatrixDocument const &doc);
MatrixDocument from_json(nlohmann::json const &j);

void write_json(std::ostream &out, MatrixDocument const &doc);
MatrixDocument read_json(std::istream &in);

/// Header `row,col,re,im`, one line per entry in row-major order, 17
/// significant digits.
void write_csv(std::ostream &out, CMatrix<double> const &m);
CMatrix<double> read_csv(std::istream &in);

} // namespace kravchuk::io
