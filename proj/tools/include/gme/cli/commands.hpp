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

#ifndef GME_CLI_COMMANDS_HPP
#define GME_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gme/criteria.hpp"
#include "gme/state.hpp"
#include "gme/states.hpp"

namespace gme::cli {

enum class OutputFormat { text, csv, machine };
OutputFormat parse_format(std::string_view name);

// Noise convention of a sweep. Both map onto the canonical visibility:
// visibility = 1 - noise_weight.
enum class SweepParameter { visibility, noise_weight };
std::string_view to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);
double to_visibility(SweepParameter p, double value);

// steps evenly spaced points from lo to hi inclusive; steps >= 2, lo < hi.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 11;
  std::vector<double> points() const;
};
Grid parse_grid(std::string_view text);                        // "lo:hi:steps"
std::pair<double, double> parse_bracket(std::string_view text);  // "lo:hi"

// Where the states come from: a named family, "mixed" (I/d^3 for every
// parameter), or "custom" with a base state loaded from a file.
struct StateSource {
  std::string family = "ghz";
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::size_t mixture_terms = 4;
  std::optional<TripartiteState> base;
};

// visibility -> state.
using StateFactory = std::function<TripartiteState(double)>;
StateFactory make_factory(const StateSource& source);

CriterionReport evaluate(const TripartiteState& state, CriterionId criterion, ThresholdMode mode);

struct SweepPoint {
  double parameter;
  CriterionReport report;
};

struct SweepResult {
  SweepParameter parameter;
  std::vector<SweepPoint> points;  // strictly increasing parameter
  // First root of value - threshold between adjacent grid points, refined by
  // bisection to kCrossoverWidth.
  std::optional<double> crossover;
};

inline constexpr double kCrossoverWidth = 1e-8;

// value - threshold keeps one strict sign on the bracket.
class NoCrossingError : public std::runtime_error {
 public:
  NoCrossingError(const std::string& what, double lo_gap, double hi_gap)
      : std::runtime_error(what), lo_gap_(lo_gap), hi_gap_(hi_gap) {}
  double lo_gap() const { return lo_gap_; }
  double hi_gap() const { return hi_gap_; }

 private:
  double lo_gap_;
  double hi_gap_;
};

struct SweepOptions {
  SweepParameter parameter = SweepParameter::visibility;
  CriterionId criterion = CriterionId::pt_qubit;
  ThresholdMode mode = ThresholdMode::theorem2;
  unsigned threads = 1;
};

// Grid points run concurrently; rows keep grid order.
SweepResult scan(const StateFactory& factory, const Grid& grid, const SweepOptions& options);

// Bisection on value - threshold over [lo, hi] down to width. Throws
// NoCrossingError when both ends share a strict sign.
double find_crossover(const StateFactory& factory, double lo, double hi, const SweepOptions& options,
                      double width = kCrossoverWidth);

// Command-line entry point. Exit status: 0 on success whatever the verdict,
// 2 on invalid input, 3 when a crossover search finds no sign change, 1 on
// numerical failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gme::cli

#endif  // GME_CLI_COMMANDS_HPP
