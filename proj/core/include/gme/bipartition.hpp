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

#ifndef GME_BIPARTITION_HPP
#define GME_BIPARTITION_HPP

#include <array>
#include <string_view>
#include <utility>

#include "gme/linalg.hpp"

namespace gme {

// Split f|gh of the three parties into a singleton and a pair (g < h).
enum class Bipartition { one_vs_23, two_vs_13, three_vs_12 };

inline constexpr std::array<Bipartition, 3> kAllBipartitions = {
    Bipartition::one_vs_23, Bipartition::two_vs_13, Bipartition::three_vs_12};

std::string_view to_string(Bipartition b);
// Accepts "1|23", "2|13", "3|12"; throws std::invalid_argument otherwise.
Bipartition parse_bipartition(std::string_view label);

Party singleton(Bipartition b);
std::pair<Party, Party> pair_parties(Bipartition b);
// The smaller party of the pair, i.e. the subsystem transposed for f|gh.
Party transposed_party(Bipartition b);

}  // namespace gme

#endif  // GME_BIPARTITION_HPP
