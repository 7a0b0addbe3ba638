// Copyright 2026 The tripartite-gme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gme/cli/matrix_file.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gme/errors.hpp"

namespace gme::cli {
namespace {

using nlohmann::json;

// Integral values get a ".0" so the reader sees a float: "-0" would parse as
// the integer 0 and drop the sign bit.
void write_number(std::ostream& out, double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  std::string s = os.str();
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  out << s;
}

void write_block(std::ostream& out, const ComplexMatrix& rho, bool imag) {
  out << "[\n";
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    out << "    [";
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      if (c) out << ", ";
      write_number(out, imag ? rho(r, c).imag() : rho(r, c).real());
    }
    out << (r + 1 < rho.rows() ? "],\n" : "]\n");
  }
  out << "  ]";
}

std::vector<double> read_block(const json& doc, const char* key, std::size_t n) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw MatrixFileError("shape", std::string("missing field \"") + key + "\"");
  if (!it->is_array() || it->size() != n)
    throw MatrixFileError("shape", std::string("\"") + key + "\" must hold " + std::to_string(n) + " rows");
  std::vector<double> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = (*it)[r];
    if (!row.is_array() || row.size() != n)
      throw MatrixFileError("shape", std::string("\"") + key + "\" row " + std::to_string(r) + " must hold " +
                                         std::to_string(n) + " numbers");
    for (const json& v : row) {
      if (!v.is_number())
        throw MatrixFileError("shape", std::string("\"") + key + "\" row " + std::to_string(r) +
                                           " holds a non-number");
      out.push_back(v.get<double>());
    }
  }
  return out;
}

}  // namespace

void write_matrix_file(const TripartiteState& state, std::ostream& out) {
  out << "{\n  \"d\": " << state.local_dim() << ",\n  \"parties\": 3,\n  \"re\": ";
  write_block(out, state.rho(), false);
  out << ",\n  \"im\": ";
  write_block(out, state.rho(), true);
  out << "\n}\n";
}

std::string to_matrix_document(const TripartiteState& state) {
  std::ostringstream os;
  write_matrix_file(state, os);
  return os.str();
}

TripartiteState parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatrixFileError("syntax", e.what());
  }
  if (!doc.is_object()) throw MatrixFileError("syntax", "top level must be an object");

  const auto d_it = doc.find("d");
  if (d_it == doc.end() || !d_it->is_number_integer() || d_it->get<long long>() < 2)
    throw MatrixFileError("d", "\"d\" must be an integer >= 2");
  const auto d = static_cast<std::size_t>(d_it->get<long long>());
  if (d > 16) throw MatrixFileError("d", "\"d\" = " + std::to_string(d) + " is too large");

  const auto p_it = doc.find("parties");
  if (p_it == doc.end() || !p_it->is_number_integer() || p_it->get<long long>() != 3)
    throw MatrixFileError("parties", "\"parties\" must be 3");

  const std::size_t n = d * d * d;
  const auto re = read_block(doc, "re", n);
  const auto im = read_block(doc, "im", n);
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = {re[i], im[i]};
  try {
    return TripartiteState(d, ComplexMatrix(n, n, std::move(entries)));
  } catch (const ValidationError& e) {
    throw MatrixFileError(e.invariant(), e.what());
  }
}

TripartiteState read_matrix_file(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return parse_matrix_document(os.str());
}

TripartiteState load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MatrixFileError("syntax", "cannot open " + path.string());
  return read_matrix_file(in);
}

void save_matrix_file(const TripartiteState& state, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix_file(state, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace gme::cli
