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

#ifndef GME_STATE_HPP
#define GME_STATE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gme/errors.hpp"
#include "gme/matrix.hpp"

namespace gme {

inline constexpr double kStateHermitianTolerance = 1e-12;
inline constexpr double kStateTraceTolerance = 1e-12;
inline constexpr double kStatePsdTolerance = -1e-10;

using Ket = std::vector<Complex>;

// Density matrix of three d-level parties. Construction validates the
// Hermitian, unit-trace and PSD invariants and throws ValidationError naming
// the first one that fails.
class TripartiteState {
 public:
  TripartiteState(std::size_t local_dim, ComplexMatrix rho);

  // |psi><psi| for a normalised ket of length d^3.
  static TripartiteState from_ket(std::size_t local_dim, std::span<const Complex> ket);
  static TripartiteState maximally_mixed(std::size_t local_dim);

  std::size_t local_dim() const { return d_; }
  std::size_t dim() const { return rho_.rows(); }
  const ComplexMatrix& rho() const { return rho_; }

  // tr(rho^2).
  double purity() const;

 private:
  std::size_t d_;
  ComplexMatrix rho_;
};

// |a><b| for equal-length kets.
ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

// Tensor product of kets, first argument most significant.
Ket kron(std::span<const Complex> a, std::span<const Complex> b);

double ket_norm(std::span<const Complex> ket);

// Convex combination sum_k weights[k] * states[k]. Weights must be
// non-negative and sum to 1 within 1e-12; all states share one d.
TripartiteState mix(std::span<const double> weights, std::span<const TripartiteState> states);

}  // namespace gme

#endif  // GME_STATE_HPP
