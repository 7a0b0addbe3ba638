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

#ifndef GME_SU_BASIS_HPP
#define GME_SU_BASIS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gme/matrix.hpp"

namespace gme {

enum class GeneratorKind { diagonal, symmetric, antisymmetric };

// Closed interval of 1-based generator labels.
struct IndexRange {
  std::size_t first;
  std::size_t last;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t label) const { return label >= first && label <= last; }
  bool operator==(const IndexRange&) const = default;
};

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

// Generalised Gell-Mann generators of su(d), labelled 1 .. d^2-1:
//   1 .. d-1                     diagonal, l = label-1:
//                                sqrt(2/((l+1)(l+2))) (sum_{a<=l} |a><a| - (l+1)|l+1><l+1|)
//   d .. (d+2)(d-1)/2            |j><k| + |k><j|
//   d(d+1)/2 .. d^2-1            -i(|j><k| - |k><j|)
// Off-diagonal pairs j<k run lexicographically, (0,1), (0,2), ..., (d-2,d-1),
// identically in both off-diagonal blocks. Every generator is Hermitian,
// traceless, and tr(l_a l_b) = 2 delta_ab.
class GellMannBasis {
 public:
  explicit GellMannBasis(std::size_t local_dim);

  std::size_t local_dim() const { return d_; }
  std::size_t size() const { return generators_.size(); }

  const ComplexMatrix& generator(std::size_t label) const;
  std::span<const SparseEntry> sparse(std::size_t label) const;
  GeneratorKind kind(std::size_t label) const;
  // (j, k) pair of an off-diagonal generator; throws for diagonal labels.
  std::pair<std::size_t, std::size_t> pair(std::size_t label) const;

 private:
  std::size_t checked(std::size_t label) const;

  std::size_t d_;
  std::vector<ComplexMatrix> generators_;
  std::vector<std::vector<SparseEntry>> sparse_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

GellMannBasis build_basis(std::size_t local_dim);

IndexRange diagonal_range(std::size_t local_dim);
IndexRange symmetric_range(std::size_t local_dim);
// [d(d+1)/2, d^2-1]: the generators negated by transposition.
IndexRange antisym_range(std::size_t local_dim);

}  // namespace gme

#endif  // GME_SU_BASIS_HPP
