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

#include "gme/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gme {
namespace {

std::vector<SparseEntry> identity_entries(std::size_t d) {
  std::vector<SparseEntry> out;
  for (std::size_t a = 0; a < d; ++a) out.push_back({a, a, 1.0});
  return out;
}

struct Operands {
  std::vector<SparseEntry> identity;
  const GellMannBasis& basis;

  std::span<const SparseEntry> operator()(std::size_t label) const {
    return label == 0 ? std::span<const SparseEntry>(identity) : basis.sparse(label);
  }
};

// sum over the nonzeros of A1 (x) A2 (x) A3 of A_rc * rho_cr.
Complex pairing(const ComplexMatrix& rho, std::size_t d, std::span<const SparseEntry> a,
                std::span<const SparseEntry> b, std::span<const SparseEntry> c) {
  Complex sum = 0.0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const Complex xy = x.value * y.value;
      const std::size_t r12 = (x.row * d + y.row) * d;
      const std::size_t c12 = (x.col * d + y.col) * d;
      for (const auto& z : c) sum += xy * z.value * rho(c12 + z.col, r12 + z.row);
    }
  }
  return sum;
}

void accumulate(ComplexMatrix& rho, std::size_t d, double coeff, std::span<const SparseEntry> a,
                std::span<const SparseEntry> b, std::span<const SparseEntry> c) {
  if (coeff == 0.0) return;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const Complex xy = coeff * (x.value * y.value);
      const std::size_t r12 = (x.row * d + y.row) * d;
      const std::size_t c12 = (x.col * d + y.col) * d;
      for (const auto& z : c) rho(r12 + z.row, c12 + z.col) += xy * z.value;
    }
  }
}

void require_shape(const CorrelationTensors& t) {
  if (t.d < 2) throw std::invalid_argument("correlation tensors: local dimension must be >= 2");
  const std::size_t n = t.extent();
  const auto square = [n](const RealMatrix& m) { return m.rows() == n && m.cols() == n; };
  if (t.t1.size() != n || t.t2.size() != n || t.t3.size() != n || !square(t.t12) ||
      !square(t.t13) || !square(t.t23) || t.t123.extent() != n) {
    throw std::invalid_argument("correlation tensors: dimensions inconsistent with d = " +
                                std::to_string(t.d));
  }
}

double sum_squares(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_tensor_difference: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

CorrelationTensors CorrelationTensors::zeros(std::size_t local_dim) {
  if (local_dim < 2) throw std::invalid_argument("correlation tensors: local dimension must be >= 2");
  CorrelationTensors t;
  t.d = local_dim;
  const std::size_t n = t.extent();
  t.t1.assign(n, 0.0);
  t.t2.assign(n, 0.0);
  t.t3.assign(n, 0.0);
  t.t12 = RealMatrix(n, n);
  t.t13 = RealMatrix(n, n);
  t.t23 = RealMatrix(n, n);
  t.t123 = Tensor3(n);
  return t;
}

Complex expectation(const TripartiteState& state, const GellMannBasis& basis,
                    const std::array<std::size_t, 3>& labels) {
  const std::size_t d = state.local_dim();
  if (basis.local_dim() != d) throw std::invalid_argument("expectation: basis dimension mismatch");
  const Operands ops{identity_entries(d), basis};
  return pairing(state.rho(), d, ops(labels[0]), ops(labels[1]), ops(labels[2]));
}

CorrelationTensors decompose(const TripartiteState& state) {
  const std::size_t d = state.local_dim();
  const GellMannBasis basis(d);
  const Operands ops{identity_entries(d), basis};
  const ComplexMatrix& rho = state.rho();
  const auto id = ops(0);

  auto t = CorrelationTensors::zeros(d);
  const std::size_t n = t.extent();
  for (std::size_t a = 1; a <= n; ++a) {
    t.t1[a - 1] = pairing(rho, d, ops(a), id, id).real();
    t.t2[a - 1] = pairing(rho, d, id, ops(a), id).real();
    t.t3[a - 1] = pairing(rho, d, id, id, ops(a)).real();
    for (std::size_t b = 1; b <= n; ++b) {
      t.t12(a - 1, b - 1) = pairing(rho, d, ops(a), ops(b), id).real();
      t.t13(a - 1, b - 1) = pairing(rho, d, ops(a), id, ops(b)).real();
      t.t23(a - 1, b - 1) = pairing(rho, d, id, ops(a), ops(b)).real();
      for (std::size_t c = 1; c <= n; ++c) {
        t.t123(a - 1, b - 1, c - 1) = pairing(rho, d, ops(a), ops(b), ops(c)).real();
      }
    }
  }
  return t;
}

TripartiteState reconstruct(const CorrelationTensors& t) {
  require_shape(t);
  const std::size_t d = t.d;
  const std::size_t n = t.extent();
  const GellMannBasis basis(d);
  const Operands ops{identity_entries(d), basis};
  const auto id = ops(0);
  const double dd = static_cast<double>(d);
  const double c0 = 1.0 / (dd * dd * dd);
  const double c1 = 1.0 / (2.0 * dd * dd);
  const double c2 = 1.0 / (4.0 * dd);
  const double c3 = 1.0 / 8.0;

  ComplexMatrix rho(d * d * d, d * d * d);
  accumulate(rho, d, c0, id, id, id);
  for (std::size_t a = 1; a <= n; ++a) {
    accumulate(rho, d, c1 * t.t1[a - 1], ops(a), id, id);
    accumulate(rho, d, c1 * t.t2[a - 1], id, ops(a), id);
    accumulate(rho, d, c1 * t.t3[a - 1], id, id, ops(a));
    for (std::size_t b = 1; b <= n; ++b) {
      accumulate(rho, d, c2 * t.t12(a - 1, b - 1), ops(a), ops(b), id);
      accumulate(rho, d, c2 * t.t13(a - 1, b - 1), ops(a), id, ops(b));
      accumulate(rho, d, c2 * t.t23(a - 1, b - 1), id, ops(a), ops(b));
      for (std::size_t c = 1; c <= n; ++c) {
        accumulate(rho, d, c3 * t.t123(a - 1, b - 1, c - 1), ops(a), ops(b), ops(c));
      }
    }
  }
  return TripartiteState(d, std::move(rho));
}

TensorNorms tensor_norms(const CorrelationTensors& t) {
  require_shape(t);
  return {std::sqrt(sum_squares(t.t1)),          std::sqrt(sum_squares(t.t2)),
          std::sqrt(sum_squares(t.t3)),          frobenius_norm(t.t12),
          frobenius_norm(t.t13),                 frobenius_norm(t.t23),
          std::sqrt(sum_squares(t.t123.entries()))};
}

double max_tensor_difference(const CorrelationTensors& a, const CorrelationTensors& b) {
  require_shape(a);
  require_shape(b);
  if (a.d != b.d) throw std::invalid_argument("max_tensor_difference: local dimensions differ");
  return std::max({max_diff(a.t1, b.t1), max_diff(a.t2, b.t2), max_diff(a.t3, b.t3),
                   max_abs_difference(a.t12, b.t12), max_abs_difference(a.t13, b.t13),
                   max_abs_difference(a.t23, b.t23),
                   max_diff(a.t123.entries(), b.t123.entries())});
}

}  // namespace gme
