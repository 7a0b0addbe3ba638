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

#ifndef GME_CRITERIA_HPP
#define GME_CRITERIA_HPP

#include <array>
#include <cstddef>
#include <numbers>
#include <string_view>

#include "gme/bipartition.hpp"
#include "gme/bloch.hpp"
#include "gme/matrix.hpp"
#include "gme/state.hpp"

namespace gme {

enum class CriterionId { pt_qubit, ct_qudit };
enum class Verdict { gme_detected, inconclusive };
enum class ThresholdMode { theorem2, corollary };

std::string_view to_string(CriterionId c);
std::string_view to_string(Verdict v);
std::string_view to_string(ThresholdMode m);
CriterionId parse_criterion(std::string_view name);
ThresholdMode parse_mode(std::string_view name);

// Detection threshold of the qubit partial-transpose criterion.
inline constexpr double kQubitThreshold = std::numbers::sqrt3;

// Subsystem-swap residual above which a state is not treated as
// permutation invariant.
inline constexpr double kPermutationTolerance = 1e-8;

// Published crossover points of other detection criteria and of the two
// examples, kept only to annotate emitted curves.
namespace reference {
inline constexpr double kQubitGhzCrossover = 0.134;               // noise weight
inline constexpr double kQubitGhzConcurrenceCrossover = 0.08349;  // noise weight
inline constexpr double kQutritGhzCrossover = 0.708;              // visibility
inline constexpr double kQutritGhzConcurrenceBoundCrossover = 0.83485;
inline constexpr double kQutritGhzCorrelationConcurrenceCrossover = 0.89443;
inline constexpr double kQutritGhzChshOverlapCrossover = 0.731621;
}  // namespace reference

struct CriterionReport {
  CriterionId criterion;
  std::array<double, 3> norms;  // ordered 1|23, 2|13, 3|12
  double value;                 // mean of norms
  double threshold;
  Verdict verdict;              // gme_detected iff value > threshold
};

CriterionReport make_report(CriterionId criterion, const std::array<double, 3>& norms, double threshold);

// ||rho - rho^{T_g}||_tr for f|gh, g the smaller party of the pair; computed
// from the eigenvalues of the Hermitian difference.
double pt_difference_norm(const TripartiteState& state, Bipartition b);

// Qubit criterion: norms ||rho - rho^{T2}||, ||rho - rho^{T1}||, ||rho - rho^{T1}||,
// threshold sqrt(3). Throws std::invalid_argument unless d = 2.
CriterionReport m_pt(const TripartiteState& state);

// (t3 + r + |t3 - r|) / 2, the closed form claimed for ||rho - rho^{T_g}||_tr on
// pure products; t3 is the sigma_y component of party g and r the norm of its
// sigma_y row in the gh correlation matrix. The direct value for such states
// is |t3 + r| + |t3 - r|, see pt_difference_norm.
double pt_product_closed_form(double t3, double r);

// Real block matrices built from the antisymmetric sector of party 1 (labels
// a in antisym_range(d), m = d(d-1)/2 of them), n = d^2 - 1:
//
//   N (1+m) x (1+2n+n^2): [ 1      T2'/2        T3'/2        vec(T23)'/2      ]
//                         [ T1[a]  T12[a,:]/2   T13[a,:]/2   vec(T123[a,:,:])/2 ]
//   G (1+n) x (1+m+mn):   [ 1      T1[a]'/2     vec(T13[a,:])'/2 ]
//                         [ T2[i]  T12[a,i]/2   T123[a,i,:]/2    ]
//   S (1+n) x (1+m+mn):   [ 1      T1[a]'/2     vec(T12[a,:])'/2 ]
//                         [ T3[i]  T13[a,i]/2   T123[a,:,i]/2    ]
//
// Pair columns are flattened first index major.
struct ConstructedMatrices {
  std::size_t d;
  RealMatrix n;
  RealMatrix g;
  RealMatrix s;

  const RealMatrix& for_bipartition(Bipartition b) const;
};

ConstructedMatrices build_constructed(const CorrelationTensors& t);

struct Thresholds {
  double bound_a;    // 1|23
  double bound_bc;   // 2|13 and 3|12
  double theorem2;   // max(bound_a, bound_bc)
  double corollary;  // (bound_a + 2 bound_bc) / 3
};

// Throws std::invalid_argument for d < 3.
Thresholds thresholds(std::size_t d);

// Largest Frobenius distance between rho and its images under the subsystem
// swaps (1 2) and (2 3).
double permutation_residual(const TripartiteState& state);

// Qudit criterion from trace norms of N, G, S. Mode corollary requires a
// permutation-invariant state and throws std::invalid_argument otherwise.
CriterionReport m1_ct(const TripartiteState& state, ThresholdMode mode);

}  // namespace gme

#endif  // GME_CRITERIA_HPP
