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

#include "gme/bipartition.hpp"

#include <stdexcept>
#include <string>

namespace gme {

std::string_view to_string(Bipartition b) {
  switch (b) {
    case Bipartition::one_vs_23: return "1|23";
    case Bipartition::two_vs_13: return "2|13";
    case Bipartition::three_vs_12: return "3|12";
  }
  throw std::invalid_argument("invalid bipartition");
}

Bipartition parse_bipartition(std::string_view label) {
  for (auto b : kAllBipartitions)
    if (to_string(b) == label) return b;
  throw std::invalid_argument("unknown bipartition '" + std::string(label) +
                              "' (expected 1|23, 2|13 or 3|12)");
}

Party singleton(Bipartition b) {
  switch (b) {
    case Bipartition::one_vs_23: return Party::first;
    case Bipartition::two_vs_13: return Party::second;
    case Bipartition::three_vs_12: return Party::third;
  }
  throw std::invalid_argument("invalid bipartition");
}

std::pair<Party, Party> pair_parties(Bipartition b) {
  switch (b) {
    case Bipartition::one_vs_23: return {Party::second, Party::third};
    case Bipartition::two_vs_13: return {Party::first, Party::third};
    case Bipartition::three_vs_12: return {Party::first, Party::second};
  }
  throw std::invalid_argument("invalid bipartition");
}

Party transposed_party(Bipartition b) { return pair_parties(b).first; }

}  // namespace gme
