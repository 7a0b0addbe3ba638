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

#include "gme/state.hpp"

#include <cmath>
#include <string>

#include "gme/linalg.hpp"

namespace gme {

TripartiteState::TripartiteState(std::size_t local_dim, ComplexMatrix rho)
    : d_(local_dim), rho_(std::move(rho)) {
  if (d_ < 2) throw ValidationError("dimension", "local dimension must be >= 2");
  const std::size_t n = d_ * d_ * d_;
  if (rho_.rows() != n || rho_.cols() != n) {
    throw ValidationError("dimension", "expected " + std::to_string(n) + "x" + std::to_string(n) +
                                           " density matrix, got " + std::to_string(rho_.rows()) +
                                           "x" + std::to_string(rho_.cols()));
  }
  if (!rho_.all_finite()) throw ValidationError("finite", "density matrix has non-finite entries");

  const double herm = hermiticity_residual(rho_);
  if (herm > kStateHermitianTolerance) {
    throw ValidationError("hermitian", "max |rho_ij - conj(rho_ji)| = " + std::to_string(herm));
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0)) > kStateTraceTolerance) {
    throw ValidationError("unit-trace", "trace = " + std::to_string(tr.real()) + " + " +
                                            std::to_string(tr.imag()) + "i");
  }
  const auto eig = hermitian_eigenvalues(rho_);
  if (eig.back() < kStatePsdTolerance) {
    throw ValidationError("psd", "smallest eigenvalue " + std::to_string(eig.back()));
  }
}

TripartiteState TripartiteState::from_ket(std::size_t local_dim, std::span<const Complex> ket) {
  return TripartiteState(local_dim, outer(ket, ket));
}

TripartiteState TripartiteState::maximally_mixed(std::size_t local_dim) {
  const std::size_t n = local_dim * local_dim * local_dim;
  return TripartiteState(local_dim, ComplexMatrix::identity(n) * Complex(1.0 / static_cast<double>(n)));
}

double TripartiteState::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  const double f = frobenius_norm(rho_);
  return f * f;
}

ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

Ket kron(std::span<const Complex> a, std::span<const Complex> b) {
  Ket out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

double ket_norm(std::span<const Complex> ket) {
  double sum = 0.0;
  for (const auto& x : ket) sum += std::norm(x);
  return std::sqrt(sum);
}

TripartiteState mix(std::span<const double> weights, std::span<const TripartiteState> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw std::invalid_argument("mix: need one weight per state and at least one state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("mix: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mix: weights do not sum to 1");

  const std::size_t d = states.front().local_dim();
  ComplexMatrix rho(states.front().dim(), states.front().dim());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].local_dim() != d) throw std::invalid_argument("mix: local dimensions differ");
    rho += states[k].rho() * Complex(weights[k]);
  }
  return TripartiteState(d, std::move(rho));
}

}  // namespace gme
