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

#include "gme/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gme/linalg.hpp"
#include "gme/su_basis.hpp"

namespace gme {

std::string_view to_string(CriterionId c) {
  return c == CriterionId::pt_qubit ? "pt-qubit" : "ct-qudit";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::gme_detected ? "GME-detected" : "inconclusive";
}

std::string_view to_string(ThresholdMode m) {
  return m == ThresholdMode::theorem2 ? "theorem2" : "corollary";
}

CriterionId parse_criterion(std::string_view name) {
  if (name == "pt-qubit") return CriterionId::pt_qubit;
  if (name == "ct-qudit") return CriterionId::ct_qudit;
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "' (expected pt-qubit or ct-qudit)");
}

ThresholdMode parse_mode(std::string_view name) {
  if (name == "theorem2") return ThresholdMode::theorem2;
  if (name == "corollary") return ThresholdMode::corollary;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected theorem2 or corollary)");
}

CriterionReport make_report(CriterionId criterion, const std::array<double, 3>& norms, double threshold) {
  const double value = (norms[0] + norms[1] + norms[2]) / 3.0;
  return {criterion, norms, value, threshold,
          value > threshold ? Verdict::gme_detected : Verdict::inconclusive};
}

double pt_difference_norm(const TripartiteState& state, Bipartition b) {
  const ComplexMatrix diff =
      state.rho() - partial_transpose(state.rho(), state.local_dim(), transposed_party(b));
  return trace_norm_hermitian(diff);
}

CriterionReport m_pt(const TripartiteState& state) {
  if (state.local_dim() != 2) {
    throw std::invalid_argument("pt-qubit criterion is defined for d = 2 only (got d = " +
                                std::to_string(state.local_dim()) + ")");
  }
  std::array<double, 3> norms{};
  for (std::size_t k = 0; k < 3; ++k) norms[k] = pt_difference_norm(state, kAllBipartitions[k]);
  return make_report(CriterionId::pt_qubit, norms, kQubitThreshold);
}

double pt_product_closed_form(double t3, double r) { return 0.5 * (t3 + r + std::abs(t3 - r)); }

const RealMatrix& ConstructedMatrices::for_bipartition(Bipartition b) const {
  switch (b) {
    case Bipartition::one_vs_23: return n;
    case Bipartition::two_vs_13: return g;
    case Bipartition::three_vs_12: return s;
  }
  throw std::invalid_argument("invalid bipartition");
}

ConstructedMatrices build_constructed(const CorrelationTensors& t) {
  const std::size_t d = t.d;
  const std::size_t n = t.extent();
  if (d < 2 || t.t1.size() != n || t.t2.size() != n || t.t3.size() != n || t.t12.rows() != n ||
      t.t12.cols() != n || t.t13.rows() != n || t.t13.cols() != n || t.t23.rows() != n ||
      t.t23.cols() != n || t.t123.extent() != n) {
    throw std::invalid_argument("build_constructed: tensor dimensions inconsistent with d = " +
                                std::to_string(d));
  }
  const IndexRange anti = antisym_range(d);
  const std::size_t m = anti.size();
  const std::size_t a0 = anti.first - 1;  // 0-based storage offset of the first antisymmetric label

  RealMatrix big_n(1 + m, 1 + 2 * n + n * n);
  big_n(0, 0) = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    big_n(0, 1 + j) = 0.5 * t.t2[j];
    big_n(0, 1 + n + j) = 0.5 * t.t3[j];
    for (std::size_t k = 0; k < n; ++k) big_n(0, 1 + 2 * n + j * n + k) = 0.5 * t.t23(j, k);
  }
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t a = a0 + r;
    big_n(1 + r, 0) = t.t1[a];
    for (std::size_t j = 0; j < n; ++j) {
      big_n(1 + r, 1 + j) = 0.5 * t.t12(a, j);
      big_n(1 + r, 1 + n + j) = 0.5 * t.t13(a, j);
      for (std::size_t k = 0; k < n; ++k) big_n(1 + r, 1 + 2 * n + j * n + k) = 0.5 * t.t123(a, j, k);
    }
  }

  RealMatrix big_g(1 + n, 1 + m + m * n);
  RealMatrix big_s(1 + n, 1 + m + m * n);
  big_g(0, 0) = 1.0;
  big_s(0, 0) = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t a = a0 + r;
    big_g(0, 1 + r) = 0.5 * t.t1[a];
    big_s(0, 1 + r) = 0.5 * t.t1[a];
    for (std::size_t k = 0; k < n; ++k) {
      big_g(0, 1 + m + r * n + k) = 0.5 * t.t13(a, k);
      big_s(0, 1 + m + r * n + k) = 0.5 * t.t12(a, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    big_g(1 + i, 0) = t.t2[i];
    big_s(1 + i, 0) = t.t3[i];
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t a = a0 + r;
      big_g(1 + i, 1 + r) = 0.5 * t.t12(a, i);
      big_s(1 + i, 1 + r) = 0.5 * t.t13(a, i);
      for (std::size_t k = 0; k < n; ++k) {
        big_g(1 + i, 1 + m + r * n + k) = 0.5 * t.t123(a, i, k);
        big_s(1 + i, 1 + m + r * n + k) = 0.5 * t.t123(a, k, i);
      }
    }
  }
  return {d, std::move(big_n), std::move(big_g), std::move(big_s)};
}

Thresholds thresholds(std::size_t d) {
  if (d < 3) {
    throw std::invalid_argument("qudit thresholds need d >= 3 (got " + std::to_string(d) + ")");
  }
  const double x = static_cast<double>(d);
  const double bound_a = std::sqrt((3.0 * x * x * x + 4.0 * x * x - 7.0 * x + 2.0) / (2.0 * x));
  const double bound_bc = std::sqrt((15.0 * x * x * x - 13.0 * x * x - 4.0 * x + 4.0) / (2.0 * x * x * x));
  return {bound_a, bound_bc, std::max(bound_a, bound_bc), (bound_a + 2.0 * bound_bc) / 3.0};
}

double permutation_residual(const TripartiteState& state) {
  const std::size_t d = state.local_dim();
  const auto& rho = state.rho();
  return std::max(frobenius_norm(permute_subsystems(rho, d, {1, 0, 2}) - rho),
                  frobenius_norm(permute_subsystems(rho, d, {0, 2, 1}) - rho));
}

CriterionReport m1_ct(const TripartiteState& state, ThresholdMode mode) {
  const std::size_t d = state.local_dim();
  if (d < 3) {
    throw std::invalid_argument("ct-qudit criterion needs d >= 3 (got d = " + std::to_string(d) + ")");
  }
  if (mode == ThresholdMode::corollary) {
    const double residual = permutation_residual(state);
    if (residual > kPermutationTolerance) {
      throw std::invalid_argument("corollary mode needs a permutation-invariant state (swap residual " +
                                  std::to_string(residual) + ")");
    }
  }
  const auto matrices = build_constructed(decompose(state));
  const std::array<double, 3> norms = {trace_norm(matrices.n), trace_norm(matrices.g),
                                       trace_norm(matrices.s)};
  const auto limits = thresholds(d);
  return make_report(CriterionId::ct_qudit, norms,
                     mode == ThresholdMode::theorem2 ? limits.theorem2 : limits.corollary);
}

}  // namespace gme
