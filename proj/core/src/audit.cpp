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

#include "gme/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gme/bloch.hpp"
#include "gme/criteria.hpp"
#include "gme/linalg.hpp"
#include "gme/states.hpp"

namespace gme {
namespace {

// sigma_y is label 3 for qubits.
constexpr std::size_t kQubitAntisym = 2;

double closed_form_for(const TripartiteState& state, Bipartition b) {
  const auto t = decompose(state);
  const RealMatrix* pair = nullptr;
  const std::vector<double>* single = nullptr;
  switch (b) {
    case Bipartition::one_vs_23: pair = &t.t23; single = &t.t2; break;
    case Bipartition::two_vs_13: pair = &t.t13; single = &t.t1; break;
    case Bipartition::three_vs_12: pair = &t.t12; single = &t.t1; break;
  }
  double r2 = 0.0;
  for (std::size_t k = 0; k < t.extent(); ++k) r2 += (*pair)(kQubitAntisym, k) * (*pair)(kQubitAntisym, k);
  return pt_product_closed_form((*single)[kQubitAntisym], std::sqrt(r2));
}

TripartiteState probe_state(AuditProbe probe, Bipartition b, std::size_t d) {
  if (probe == AuditProbe::maximally_mixed) return TripartiteState::maximally_mixed(d);
  Ket single(d);
  single[0] = 1.0;
  Ket pair(d * d);
  for (std::size_t i = 0; i < d; ++i) pair[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return TripartiteState::from_ket(d, embed_biseparable(b, single, pair, d));
}

TripartiteState sample_state(const AuditOptions& o, std::size_t k) {
  const std::size_t single_dims[] = {o.d};
  const std::size_t pair_dims[] = {o.d, o.d};
  const auto amps = o.real_amplitudes ? Amplitudes::real : Amplitudes::complex;
  const std::uint64_t s = derive_seed(o.seed, k);
  const Ket single = random_pure(single_dims, derive_seed(s, 0), amps);
  const Ket pair = o.separable_pair
                       ? kron(random_pure(single_dims, derive_seed(s, 1), amps),
                              random_pure(single_dims, derive_seed(s, 2), amps))
                       : random_pure(pair_dims, derive_seed(s, 1), amps);
  return TripartiteState::from_ket(o.d, embed_biseparable(o.bipartition, single, pair, o.d));
}

struct Evaluated {
  double statistic = 0.0;
  std::optional<double> closed_form;
};

Evaluated evaluate(const TripartiteState& state, Bipartition b) {
  Evaluated e{audit_statistic(state, b), std::nullopt};
  if (state.local_dim() == 2) e.closed_form = closed_form_for(state, b);
  return e;
}

}  // namespace

std::string_view to_string(AuditProbe p) { return p == AuditProbe::bell_pair ? "bell" : "mixed"; }

AuditProbe parse_probe(std::string_view name) {
  if (name == "bell") return AuditProbe::bell_pair;
  if (name == "mixed") return AuditProbe::maximally_mixed;
  throw std::invalid_argument("unknown probe '" + std::string(name) + "' (expected bell or mixed)");
}

double audit_statistic(const TripartiteState& state, Bipartition b) {
  if (state.local_dim() == 2) return pt_difference_norm(state, b);
  return trace_norm(build_constructed(decompose(state)).for_bipartition(b));
}

AuditRecord audit_bound(const AuditOptions& o) {
  if (o.d < 2) throw std::invalid_argument("audit: local dimension must be >= 2");
  if (o.samples == 0 && o.probes.empty()) {
    throw std::invalid_argument("audit: samples must be >= 1 unless a probe state is given");
  }

  AuditRecord rec{};
  rec.bipartition = o.bipartition;
  rec.d = o.d;
  rec.seed = o.seed;
  if (o.d == 2) {
    rec.bound = kQubitThreshold;
  } else {
    const auto th = thresholds(o.d);
    rec.bound = o.bipartition == Bipartition::one_vs_23 ? th.bound_a : th.bound_bc;
  }

  std::vector<std::string> labels;
  std::vector<Evaluated> results;
  for (auto p : o.probes) {
    labels.emplace_back(to_string(p));
    results.push_back(evaluate(probe_state(p, o.bipartition, o.d), o.bipartition));
  }

  std::vector<Evaluated> drawn(o.samples);
  const auto workers = static_cast<unsigned>(
      std::clamp<std::size_t>(o.threads, 1, std::max<std::size_t>(o.samples, 1)));
  auto run = [&](unsigned w) {
    for (std::size_t k = w; k < o.samples; k += workers) drawn[k] = evaluate(sample_state(o, k), o.bipartition);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (std::size_t k = 0; k < o.samples; ++k) {
    labels.push_back("sample " + std::to_string(k));
    results.push_back(drawn[k]);
  }

  double best = -1.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& e = results[i];
    if (e.statistic > best) {
      best = e.statistic;
      rec.argmax = labels[i];
    }
    if (e.closed_form) {
      rec.max_closed_form = std::max(rec.max_closed_form.value_or(*e.closed_form), *e.closed_form);
      const double gap = std::abs(e.statistic - *e.closed_form);
      rec.max_closed_form_gap = std::max(rec.max_closed_form_gap.value_or(gap), gap);
    }
    rec.samples.push_back({labels[i], e.statistic, best, e.closed_form});
  }
  rec.max_statistic = best;
  rec.bound_exceeded = best > rec.bound;
  return rec;
}

}  // namespace gme
