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

#include "gme/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gme {
namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("local dimension must be >= 2 (got " + std::to_string(d) + ")");
}

std::size_t flat(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t d) {
  return (i1 * d + i2) * d + i3;
}

}  // namespace

std::string_view to_string(StateFamily f) {
  switch (f) {
    case StateFamily::ghz: return "ghz";
    case StateFamily::w: return "w";
    case StateFamily::product: return "product";
    case StateFamily::bisep_mixture: return "bisep-mixture";
    case StateFamily::random_pure: return "random-pure";
    case StateFamily::custom: return "custom";
  }
  throw std::invalid_argument("invalid state family");
}

StateFamily parse_family(std::string_view name) {
  for (auto f : {StateFamily::ghz, StateFamily::w, StateFamily::product, StateFamily::bisep_mixture,
                 StateFamily::random_pure, StateFamily::custom}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Ket ghz_ket(std::size_t d) {
  require_dim(d);
  Ket ket(d * d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) ket[flat(i, i, i, d)] = amp;
  return ket;
}

TripartiteState ghz(std::size_t d) { return TripartiteState::from_ket(d, ghz_ket(d)); }

Ket w_ket(std::size_t d) {
  require_dim(d);
  Ket ket(d * d * d);
  const double amp = 1.0 / std::sqrt(3.0);
  ket[flat(1, 0, 0, d)] = amp;
  ket[flat(0, 1, 0, d)] = amp;
  ket[flat(0, 0, 1, d)] = amp;
  return ket;
}

TripartiteState w_state(std::size_t d) { return TripartiteState::from_ket(d, w_ket(d)); }

TripartiteState white_noise_mix(const TripartiteState& pure, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw std::invalid_argument("visibility must lie in [0, 1] (got " + std::to_string(visibility) + ")");
  }
  const std::size_t n = pure.dim();
  ComplexMatrix rho = pure.rho() * Complex(visibility);
  const double noise = (1.0 - visibility) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) rho(i, i) += noise;
  return TripartiteState(pure.local_dim(), std::move(rho));
}

Ket random_pure(std::span<const std::size_t> dims, std::uint64_t seed, Amplitudes amplitudes) {
  std::size_t n = 1;
  for (auto k : dims) n *= k;
  if (n == 0) throw std::invalid_argument("random_pure: zero dimension");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Ket ket(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& x : ket) {
      const double re = gauss(rng);
      const double im = amplitudes == Amplitudes::complex ? gauss(rng) : 0.0;
      x = Complex(re, im);
      norm2 += std::norm(x);
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& x : ket) x *= scale;
  return ket;
}

Ket embed_biseparable(Bipartition b, std::span<const Complex> single, std::span<const Complex> pair,
                      std::size_t d) {
  require_dim(d);
  if (single.size() != d || pair.size() != d * d) {
    throw std::invalid_argument("embed_biseparable: expected kets of length d and d^2");
  }
  Ket ket(d * d * d);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t g = 0; g < d; ++g) {
      for (std::size_t h = 0; h < d; ++h) {
        const Complex amp = single[s] * pair[g * d + h];
        switch (b) {
          case Bipartition::one_vs_23: ket[flat(s, g, h, d)] = amp; break;
          case Bipartition::two_vs_13: ket[flat(g, s, h, d)] = amp; break;
          case Bipartition::three_vs_12: ket[flat(g, h, s, d)] = amp; break;
        }
      }
    }
  }
  return ket;
}

BiseparableMixture random_biseparable(std::optional<Bipartition> bipartition, std::size_t d,
                                      std::uint64_t seed, std::size_t mixture_terms,
                                      Amplitudes amplitudes) {
  require_dim(d);
  if (mixture_terms < 1) throw std::invalid_argument("random_biseparable: mixture_terms must be >= 1");

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<int> pick(0, 2);

  std::vector<double> weights(mixture_terms);
  double total = 0.0;
  for (auto& w : weights) {
    w = expo(rng);
    total += w;
  }
  for (auto& w : weights) w /= total;

  const std::size_t single_dims[] = {d};
  const std::size_t pair_dims[] = {d, d};
  std::vector<Bipartition> parts;
  std::vector<Ket> kets;
  std::vector<TripartiteState> terms;
  for (std::size_t k = 0; k < mixture_terms; ++k) {
    const Bipartition b = bipartition ? *bipartition : kAllBipartitions[static_cast<std::size_t>(pick(rng))];
    const Ket single = random_pure(single_dims, derive_seed(seed, 2 * k), amplitudes);
    const Ket pair = random_pure(pair_dims, derive_seed(seed, 2 * k + 1), amplitudes);
    parts.push_back(b);
    kets.push_back(embed_biseparable(b, single, pair, d));
    terms.push_back(TripartiteState::from_ket(d, kets.back()));
  }
  // Absorb rounding so the weights sum to 1 to the last bit available.
  double partial = 0.0;
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) partial += weights[k];
  weights.back() = std::max(0.0, 1.0 - partial);

  TripartiteState state = mix(weights, terms);
  return {std::move(state), std::move(weights), std::move(parts), std::move(kets)};
}

TripartiteState make_state(const StateSpec& spec) {
  require_dim(spec.d);
  const std::size_t d = spec.d;
  const std::size_t dims[] = {d, d, d};
  switch (spec.family) {
    case StateFamily::ghz:
      return white_noise_mix(ghz(d), spec.visibility);
    case StateFamily::w:
      return white_noise_mix(w_state(d), spec.visibility);
    case StateFamily::product: {
      const std::size_t one[] = {d};
      Ket ket = random_pure(one, derive_seed(spec.seed, 0));
      ket = kron(ket, random_pure(one, derive_seed(spec.seed, 1)));
      ket = kron(ket, random_pure(one, derive_seed(spec.seed, 2)));
      return white_noise_mix(TripartiteState::from_ket(d, ket), spec.visibility);
    }
    case StateFamily::bisep_mixture:
      return white_noise_mix(random_biseparable(std::nullopt, d, spec.seed, spec.mixture_terms).state,
                             spec.visibility);
    case StateFamily::random_pure:
      return white_noise_mix(TripartiteState::from_ket(d, random_pure(dims, spec.seed)), spec.visibility);
    case StateFamily::custom:
      break;
  }
  throw std::invalid_argument("state family 'custom' must be read from a matrix file");
}

}  // namespace gme
