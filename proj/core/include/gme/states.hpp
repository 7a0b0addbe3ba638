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

#ifndef GME_STATES_HPP
#define GME_STATES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gme/bipartition.hpp"
#include "gme/state.hpp"

namespace gme {

enum class StateFamily { ghz, w, product, bisep_mixture, random_pure, custom };

std::string_view to_string(StateFamily f);
StateFamily parse_family(std::string_view name);

enum class Amplitudes { complex, real };

struct StateSpec {
  StateFamily family = StateFamily::ghz;
  std::size_t d = 2;
  // Weight on the target state; the remainder is white noise I/d^3.
  double visibility = 1.0;
  std::uint64_t seed = 0;
  std::size_t mixture_terms = 4;
};

// SplitMix64 step of seed + index; independent streams for sample k.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// (1/sqrt(d)) sum_i |iii>.
Ket ghz_ket(std::size_t d);
TripartiteState ghz(std::size_t d);

// (|100> + |010> + |001>)/sqrt(3) embedded in d levels per party.
Ket w_ket(std::size_t d);
TripartiteState w_state(std::size_t d);

// visibility * rho + (1 - visibility) * I/d^3.
TripartiteState white_noise_mix(const TripartiteState& pure, double visibility);

// Normalised vector of independent standard Gaussian amplitudes (Haar
// distributed for complex amplitudes) over the product of dims.
Ket random_pure(std::span<const std::size_t> dims, std::uint64_t seed,
                Amplitudes amplitudes = Amplitudes::complex);

// |single>_f (x) |pair>_gh reordered into the i1 i2 i3 basis.
Ket embed_biseparable(Bipartition b, std::span<const Complex> single, std::span<const Complex> pair,
                      std::size_t d);

struct BiseparableMixture {
  TripartiteState state;
  std::vector<double> weights;
  std::vector<Bipartition> bipartitions;
  std::vector<Ket> kets;
};

// Dirichlet(1, ..., 1) mixture of random pure products. With no bipartition
// each term draws its own uniformly.
BiseparableMixture random_biseparable(std::optional<Bipartition> bipartition, std::size_t d,
                                      std::uint64_t seed, std::size_t mixture_terms,
                                      Amplitudes amplitudes = Amplitudes::complex);

// Builds the state a spec describes. Throws for StateFamily::custom, which
// has to come from a file.
TripartiteState make_state(const StateSpec& spec);

}  // namespace gme

#endif  // GME_STATES_HPP
