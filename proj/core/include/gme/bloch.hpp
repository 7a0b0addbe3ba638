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

#ifndef GME_BLOCH_HPP
#define GME_BLOCH_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "gme/linalg.hpp"
#include "gme/matrix.hpp"
#include "gme/state.hpp"
#include "gme/su_basis.hpp"

namespace gme {

// Dense real n x n x n array, row-major in (i1, i2, i3). Matricising at a
// fixed first index gives a row of length n^2 indexed i2*n + i3.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t extent() const { return n_; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  std::span<const double> entries() const { return data_; }
  std::span<double> entries() { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Bloch coefficients t = tr(rho * pattern) of a tripartite state. Storage is
// 0-based: t1[a - 1] belongs to generator label a.
struct CorrelationTensors {
  std::size_t d = 0;
  std::vector<double> t1, t2, t3;
  RealMatrix t12, t13, t23;
  Tensor3 t123;

  std::size_t extent() const { return d * d - 1; }
  static CorrelationTensors zeros(std::size_t local_dim);
};

struct TensorNorms {
  double t1, t2, t3, t12, t13, t23, t123;
};

// tr(rho * A1 (x) A2 (x) A3) with A_k the generator of label labels[k];
// label 0 stands for the identity.
Complex expectation(const TripartiteState& state, const GellMannBasis& basis,
                    const std::array<std::size_t, 3>& labels);

CorrelationTensors decompose(const TripartiteState& state);

// rho = I/d^3 + (1/2d^2) sum t^j (l (x) I (x) I and permutations)
//     + (1/4d) sum t^jk (two-body terms) + (1/8) sum t^123 l (x) l (x) l.
// Throws std::invalid_argument on inconsistent shapes and ValidationError when
// the tensors do not describe a density matrix.
TripartiteState reconstruct(const CorrelationTensors& t);

TensorNorms tensor_norms(const CorrelationTensors& t);

// Largest entrywise difference over all seven tensors.
double max_tensor_difference(const CorrelationTensors& a, const CorrelationTensors& b);

}  // namespace gme

#endif  // GME_BLOCH_HPP
