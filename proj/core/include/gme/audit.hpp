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

#ifndef GME_AUDIT_HPP
#define GME_AUDIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gme/bipartition.hpp"
#include "gme/state.hpp"

namespace gme {

// Fixed states evaluated ahead of the random samples:
//   bell_pair        |0>_f (x) (1/sqrt(d)) sum_i |ii>_gh
//   maximally_mixed  I/d^3
enum class AuditProbe { bell_pair, maximally_mixed };

std::string_view to_string(AuditProbe p);
AuditProbe parse_probe(std::string_view name);

struct AuditOptions {
  Bipartition bipartition = Bipartition::one_vs_23;
  std::size_t d = 2;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  bool real_amplitudes = false;
  // Draw the gh factor as a product |b>|c> instead of a general pair state.
  bool separable_pair = false;
  std::vector<AuditProbe> probes;
  unsigned threads = 1;
};

struct AuditSample {
  std::string label;  // probe name or "sample <k>"
  double statistic;
  double running_max;
  // d = 2 only: pt_product_closed_form from the sample's tensors.
  std::optional<double> closed_form;
};

struct AuditRecord {
  Bipartition bipartition;
  std::size_t d;
  std::uint64_t seed;
  double bound;  // sqrt(3) for d = 2, bound_a or bound_bc for d >= 3
  double max_statistic;
  std::string argmax;
  bool bound_exceeded;
  std::optional<double> max_closed_form;
  std::optional<double> max_closed_form_gap;  // max |statistic - closed_form|
  std::vector<AuditSample> samples;
};

// d = 2: ||rho - rho^{T_g}||_tr. d >= 3: trace norm of the constructed matrix
// (N, G or S) belonging to the bipartition.
double audit_statistic(const TripartiteState& state, Bipartition b);

// Random pure products for the bipartition, sample k seeded with
// derive_seed(seed, k), so any split across threads gives the same record.
// Throws std::invalid_argument when there is nothing to evaluate.
AuditRecord audit_bound(const AuditOptions& options);

}  // namespace gme

#endif  // GME_AUDIT_HPP
