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

#ifndef GME_CLI_MATRIX_FILE_HPP
#define GME_CLI_MATRIX_FILE_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gme/state.hpp"

namespace gme::cli {

// A density matrix document failed to load. invariant() is one of
// "syntax", "d", "parties", "shape", or the state invariant that failed
// ("finite", "hermitian", "unit-trace", "psd").
class MatrixFileError : public std::runtime_error {
 public:
  MatrixFileError(std::string invariant, const std::string& detail)
      : std::runtime_error("matrix file: " + invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// {"d": d, "parties": 3, "re": [[...]], "im": [[...]]}, row-major d^3 x d^3,
// every number printed with 17 significant digits.
void write_matrix_file(const TripartiteState& state, std::ostream& out);
std::string to_matrix_document(const TripartiteState& state);

TripartiteState read_matrix_file(std::istream& in);
TripartiteState parse_matrix_document(const std::string& text);

TripartiteState load_matrix_file(const std::filesystem::path& path);
void save_matrix_file(const TripartiteState& state, const std::filesystem::path& path);

}  // namespace gme::cli

#endif  // GME_CLI_MATRIX_FILE_HPP
