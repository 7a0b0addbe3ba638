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

#include "gme/su_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gme {
namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("su(d) basis needs d >= 2 (got " + std::to_string(d) + ")");
}

}  // namespace

GellMannBasis::GellMannBasis(std::size_t local_dim) : d_(local_dim) {
  require_dim(d_);
  const std::size_t count = d_ * d_ - 1;
  generators_.reserve(count);
  sparse_.reserve(count);
  pairs_.reserve(count);

  for (std::size_t l = 0; l + 2 <= d_; ++l) {
    const double scale = std::sqrt(2.0 / static_cast<double>((l + 1) * (l + 2)));
    ComplexMatrix g(d_, d_);
    std::vector<SparseEntry> entries;
    for (std::size_t a = 0; a <= l; ++a) {
      g(a, a) = scale;
      entries.push_back({a, a, scale});
    }
    g(l + 1, l + 1) = -scale * static_cast<double>(l + 1);
    entries.push_back({l + 1, l + 1, g(l + 1, l + 1)});
    generators_.push_back(std::move(g));
    sparse_.push_back(std::move(entries));
    pairs_.emplace_back(l + 1, l + 1);
  }

  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t j = 0; j < d_; ++j)
    for (std::size_t k = j + 1; k < d_; ++k) offdiag.emplace_back(j, k);

  for (const auto& [j, k] : offdiag) {
    ComplexMatrix g(d_, d_);
    g(j, k) = 1.0;
    g(k, j) = 1.0;
    generators_.push_back(std::move(g));
    sparse_.push_back({{j, k, 1.0}, {k, j, 1.0}});
    pairs_.emplace_back(j, k);
  }
  const Complex i(0.0, 1.0);
  for (const auto& [j, k] : offdiag) {
    ComplexMatrix g(d_, d_);
    g(j, k) = -i;
    g(k, j) = i;
    generators_.push_back(std::move(g));
    sparse_.push_back({{j, k, -i}, {k, j, i}});
    pairs_.emplace_back(j, k);
  }
}

std::size_t GellMannBasis::checked(std::size_t label) const {
  if (label < 1 || label > generators_.size()) {
    throw std::out_of_range("generator label " + std::to_string(label) + " outside 1.." +
                            std::to_string(generators_.size()));
  }
  return label - 1;
}

const ComplexMatrix& GellMannBasis::generator(std::size_t label) const {
  return generators_[checked(label)];
}

std::span<const SparseEntry> GellMannBasis::sparse(std::size_t label) const {
  return sparse_[checked(label)];
}

GeneratorKind GellMannBasis::kind(std::size_t label) const {
  checked(label);
  if (diagonal_range(d_).contains(label)) return GeneratorKind::diagonal;
  if (symmetric_range(d_).contains(label)) return GeneratorKind::symmetric;
  return GeneratorKind::antisymmetric;
}

std::pair<std::size_t, std::size_t> GellMannBasis::pair(std::size_t label) const {
  if (kind(label) == GeneratorKind::diagonal) {
    throw std::invalid_argument("generator " + std::to_string(label) + " is diagonal");
  }
  return pairs_[label - 1];
}

GellMannBasis build_basis(std::size_t local_dim) { return GellMannBasis(local_dim); }

IndexRange diagonal_range(std::size_t d) {
  require_dim(d);
  return {1, d - 1};
}

IndexRange symmetric_range(std::size_t d) {
  require_dim(d);
  return {d, (d + 2) * (d - 1) / 2};
}

IndexRange antisym_range(std::size_t d) {
  require_dim(d);
  return {d * (d + 1) / 2, d * d - 1};
}

}  // namespace gme
