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

#include "gme/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gme/audit.hpp"
#include "gme/bipartition.hpp"
#include "gme/errors.hpp"
#include "gme/cli/matrix_file.hpp"

namespace gme::cli {
namespace {

using nlohmann::ordered_json;

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + ": '" + std::string(text) + "' is not a finite number");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string num(double v, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string exact(double v) { return num(v, 17); }

double gap(const CriterionReport& r) { return r.value - r.threshold; }

// Published crossover points for the GHZ families, in the sweep's convention.
std::vector<std::pair<std::string, double>> annotations(const StateSource& src, SweepParameter p) {
  std::vector<std::pair<std::string, double>> out;
  if (src.family != "ghz") return out;
  const auto in_sweep = [p](double visibility) { return to_visibility(p, visibility); };
  if (src.d == 2) {
    // Quoted as noise weights.
    out.emplace_back("published-crossover", in_sweep(1.0 - reference::kQubitGhzCrossover));
    out.emplace_back("concurrence-criterion", in_sweep(1.0 - reference::kQubitGhzConcurrenceCrossover));
  } else if (src.d == 3) {
    out.emplace_back("published-crossover", in_sweep(reference::kQutritGhzCrossover));
    out.emplace_back("concurrence-bound", in_sweep(reference::kQutritGhzConcurrenceBoundCrossover));
    out.emplace_back("correlation-concurrence", in_sweep(reference::kQutritGhzCorrelationConcurrenceCrossover));
    out.emplace_back("chsh-overlap", in_sweep(reference::kQutritGhzChshOverlapCrossover));
  }
  return out;
}

ordered_json report_json(const CriterionReport& r) {
  ordered_json norms = ordered_json::object();
  for (std::size_t i = 0; i < 3; ++i) norms[std::string(to_string(kAllBipartitions[i]))] = r.norms[i];
  return {{"criterion", to_string(r.criterion)},
          {"norms", norms},
          {"value", r.value},
          {"threshold", r.threshold},
          {"verdict", to_string(r.verdict)}};
}

// Options shared by the subcommands; only the active one's flags are bound.
struct Options {
  std::string state = "ghz";
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::size_t terms = 4;
  std::string input;
  std::string criterion;
  std::string mode = "theorem2";
  std::optional<double> noise_weight;
  std::optional<double> visibility;
  std::string sweep = "visibility";
  std::string grid = "0:1:11";
  std::string bracket = "0:1";
  std::size_t samples = 1;
  std::string bipartition = "1|23";
  std::vector<std::string> probes;
  bool real = false;
  bool separable_pair = false;
  unsigned threads = 1;
  std::string format = "text";
  std::string out;
};

void add_state_options(CLI::App* sub, Options& o) {
  sub->add_option("--state", o.state, "ghz, w, product, bisep-mixture, random-pure, mixed or custom")
      ->capture_default_str();
  sub->add_option("--d", o.d, "Local dimension")->check(CLI::Range(2, 8))->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for random families")->capture_default_str();
  sub->add_option("--terms", o.terms, "Terms of a bisep-mixture")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--input", o.input, "Matrix file to use as the (custom) state")->check(CLI::ExistingFile);
}

void add_criterion_options(CLI::App* sub, Options& o) {
  sub->add_option("--criterion", o.criterion, "pt-qubit or ct-qudit (default: by dimension)")
      ->check(CLI::IsMember({"pt-qubit", "ct-qudit"}));
  sub->add_option("--mode", o.mode, "Qudit threshold: theorem2 or corollary")
      ->check(CLI::IsMember({"theorem2", "corollary"}))
      ->capture_default_str();
}

void add_noise_options(CLI::App* sub, Options& o) {
  auto* nw = sub->add_option("--noise-weight", o.noise_weight, "Weight of white noise")->check(CLI::Range(0.0, 1.0));
  auto* vis = sub->add_option("--visibility", o.visibility, "Weight of the target state")->check(CLI::Range(0.0, 1.0));
  nw->excludes(vis);
  vis->excludes(nw);
}

void add_output_options(CLI::App* sub, Options& o, bool with_format) {
  if (with_format)
    sub->add_option("--format", o.format, "text, csv or machine")
        ->check(CLI::IsMember({"text", "csv", "machine"}))
        ->capture_default_str();
  sub->add_option("--out", o.out, "Write output to this path instead of stdout");
}

StateSource source_from(const Options& o) {
  StateSource src;
  src.family = o.input.empty() ? o.state : "custom";
  src.d = o.d;
  src.seed = o.seed;
  src.mixture_terms = o.terms;
  if (!o.input.empty()) {
    if (o.state != "ghz" && o.state != "custom")
      throw std::invalid_argument("--input conflicts with --state " + o.state);
    src.base = load_matrix_file(o.input);
    src.d = src.base->local_dim();
  }
  return src;
}

CriterionId criterion_from(const Options& o, std::size_t d) {
  if (!o.criterion.empty()) return parse_criterion(o.criterion);
  return d == 2 ? CriterionId::pt_qubit : CriterionId::ct_qudit;
}

double visibility_from(const Options& o) {
  if (o.noise_weight) return 1.0 - *o.noise_weight;
  return o.visibility.value_or(1.0);
}

SweepOptions sweep_from(const Options& o, std::size_t d) {
  return {parse_sweep_parameter(o.sweep), criterion_from(o, d), parse_mode(o.mode), o.threads};
}

std::string describe(const StateSource& src) {
  std::string s = src.family + " d=" + std::to_string(src.d);
  if (src.family != "ghz" && src.family != "w" && src.family != "mixed" && src.family != "custom")
    s += " seed=" + std::to_string(src.seed);
  return s;
}

void emit_evaluate(std::ostream& os, const Options& o, const StateSource& src, double vis,
                   const CriterionReport& r, OutputFormat fmt) {
  const auto mode = parse_mode(o.mode);
  switch (fmt) {
    case OutputFormat::text:
      os << "state      " << describe(src) << " visibility=" << num(vis) << '\n'
         << "criterion  " << to_string(r.criterion);
      if (r.criterion == CriterionId::ct_qudit) os << " (" << to_string(mode) << ')';
      os << '\n';
      for (std::size_t i = 0; i < 3; ++i)
        os << "norm " << to_string(kAllBipartitions[i]) << "  " << num(r.norms[i]) << '\n';
      os << "value      " << num(r.value) << '\n'
         << "threshold  " << num(r.threshold) << '\n'
         << "verdict    " << to_string(r.verdict) << '\n';
      break;
    case OutputFormat::csv:
      os << "criterion,mode,visibility,norm_1_23,norm_2_13,norm_3_12,value,threshold,verdict\n"
         << to_string(r.criterion) << ',' << to_string(mode) << ',' << exact(vis);
      for (double n : r.norms) os << ',' << exact(n);
      os << ',' << exact(r.value) << ',' << exact(r.threshold) << ',' << to_string(r.verdict) << '\n';
      break;
    case OutputFormat::machine: {
      ordered_json j = {{"state", src.family}, {"d", src.d}, {"visibility", vis}};
      if (r.criterion == CriterionId::ct_qudit) j["mode"] = to_string(mode);
      j.update(report_json(r));
      os << j.dump(2) << '\n';
      break;
    }
  }
}

void emit_scan(std::ostream& os, const StateSource& src, const SweepResult& res, OutputFormat fmt) {
  const auto name = std::string(to_string(res.parameter));
  const auto notes = annotations(src, res.parameter);
  switch (fmt) {
    case OutputFormat::text: {
      os << "# " << describe(src) << ", sweep over " << name << '\n';
      os << std::left << std::setw(14) << name << std::setw(16) << "value" << std::setw(16) << "threshold"
         << "verdict\n";
      for (const auto& p : res.points)
        os << std::setw(14) << num(p.parameter) << std::setw(16) << num(p.report.value) << std::setw(16)
           << num(p.report.threshold) << to_string(p.report.verdict) << '\n';
      os << std::right;
      os << "crossover  " << (res.crossover ? num(*res.crossover) : std::string("none on grid")) << '\n';
      for (const auto& [label, at] : notes) os << "reference  " << label << " at " << name << '=' << num(at) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "parameter,value,threshold,value_minus_threshold\n";
      for (const auto& p : res.points)
        os << exact(p.parameter) << ',' << exact(p.report.value) << ',' << exact(p.report.threshold) << ','
           << exact(gap(p.report)) << '\n';
      break;
    case OutputFormat::machine: {
      ordered_json pts = ordered_json::array();
      for (const auto& p : res.points) {
        ordered_json row = {{"parameter", p.parameter}};
        row.update(report_json(p.report));
        pts.push_back(std::move(row));
      }
      ordered_json refs = ordered_json::object();
      for (const auto& [label, at] : notes) refs[label] = at;
      ordered_json j = {{"state", src.family}, {"d", src.d}, {"parameter", name}, {"points", pts}};
      j["crossover"] = res.crossover ? ordered_json(*res.crossover) : ordered_json(nullptr);
      j["references"] = refs;
      os << j.dump(2) << '\n';
      break;
    }
  }
}

void emit_audit(std::ostream& os, const AuditRecord& rec, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text:
      os << "bipartition     " << to_string(rec.bipartition) << '\n'
         << "d               " << rec.d << '\n'
         << "seed            " << rec.seed << '\n'
         << "evaluated       " << rec.samples.size() << '\n'
         << "bound           " << num(rec.bound) << '\n'
         << "max statistic   " << num(rec.max_statistic) << " (" << rec.argmax << ")\n"
         << "bound exceeded  " << (rec.bound_exceeded ? "yes" : "no") << '\n';
      if (rec.max_closed_form) os << "max closed form " << num(*rec.max_closed_form) << '\n';
      if (rec.max_closed_form_gap)
        os << "max |statistic - closed form| " << num(*rec.max_closed_form_gap) << '\n';
      break;
    case OutputFormat::csv:
      os << "index,label,statistic,running_max,closed_form\n";
      for (std::size_t i = 0; i < rec.samples.size(); ++i) {
        const auto& s = rec.samples[i];
        os << i << ',' << s.label << ',' << exact(s.statistic) << ',' << exact(s.running_max) << ','
           << (s.closed_form ? exact(*s.closed_form) : std::string()) << '\n';
      }
      break;
    case OutputFormat::machine: {
      ordered_json samples = ordered_json::array();
      for (const auto& s : rec.samples) {
        ordered_json row = {{"label", s.label}, {"statistic", s.statistic}, {"running_max", s.running_max}};
        if (s.closed_form) row["closed_form"] = *s.closed_form;
        samples.push_back(std::move(row));
      }
      ordered_json j = {{"bipartition", to_string(rec.bipartition)},
                        {"d", rec.d},
                        {"seed", rec.seed},
                        {"bound", rec.bound},
                        {"max_statistic", rec.max_statistic},
                        {"argmax", rec.argmax},
                        {"bound_exceeded", rec.bound_exceeded}};
      if (rec.max_closed_form) j["max_closed_form"] = *rec.max_closed_form;
      if (rec.max_closed_form_gap) j["max_closed_form_gap"] = *rec.max_closed_form_gap;
      j["samples"] = samples;
      os << j.dump(2) << '\n';
      break;
    }
  }
}

// The qutrit GHZ curve never reaches the corollary threshold; say so next to
// any crossover search on that family.
void qutrit_ghz_note(std::ostream& err, const StateSource& src, const SweepOptions& so) {
  if (src.family != "ghz" || src.d != 3 || so.criterion != CriterionId::ct_qudit) return;
  const auto top = evaluate(ghz(3), CriterionId::ct_qudit, so.mode);
  err << "note: qutrit GHZ reaches at most " << num(top.value, 6) << " (visibility 1) against the "
      << to_string(so.mode) << " threshold " << num(top.threshold, 6) << "; the crossover near visibility "
      << reference::kQutritGhzCrossover << " quoted for this family does not follow from these formulas\n";
}

int dispatch(const Options& o, CLI::App* evaluate_cmd, CLI::App* scan_cmd,
             CLI::App* crossover_cmd, CLI::App* audit_cmd, CLI::App* gen_cmd, std::ostream& out,
             std::ostream& err) {
  const auto fmt = parse_format(o.format);
  std::ostringstream os;

  if (evaluate_cmd->parsed()) {
    const auto src = source_from(o);
    const double vis = visibility_from(o);
    const auto report = evaluate(make_factory(src)(vis), criterion_from(o, src.d), parse_mode(o.mode));
    emit_evaluate(os, o, src, vis, report, fmt);
  } else if (scan_cmd->parsed()) {
    const auto src = source_from(o);
    const auto res = scan(make_factory(src), parse_grid(o.grid), sweep_from(o, src.d));
    emit_scan(os, src, res, fmt);
  } else if (crossover_cmd->parsed()) {
    const auto src = source_from(o);
    const auto so = sweep_from(o, src.d);
    const auto [lo, hi] = parse_bracket(o.bracket);
    qutrit_ghz_note(err, src, so);
    const double x = find_crossover(make_factory(src), lo, hi, so);
    const auto name = std::string(to_string(so.parameter));
    switch (fmt) {
      case OutputFormat::text:
        os << "crossover  " << name << " = " << num(x, 12) << " (bisection width " << kCrossoverWidth << ")\n";
        for (const auto& [label, at] : annotations(src, so.parameter))
          os << "reference  " << label << " at " << name << '=' << num(at) << '\n';
        break;
      case OutputFormat::csv:
        os << "parameter,crossover\n" << name << ',' << exact(x) << '\n';
        break;
      case OutputFormat::machine:
        os << ordered_json{{"state", src.family}, {"d", src.d}, {"parameter", name}, {"crossover", x},
                           {"width", kCrossoverWidth}}
                  .dump(2)
           << '\n';
        break;
    }
  } else if (audit_cmd->parsed()) {
    AuditOptions ao;
    ao.bipartition = parse_bipartition(o.bipartition);
    ao.d = o.d;
    ao.samples = o.samples;
    ao.seed = o.seed;
    ao.real_amplitudes = o.real;
    ao.separable_pair = o.separable_pair;
    for (const auto& p : o.probes) ao.probes.push_back(parse_probe(p));
    ao.threads = o.threads;
    emit_audit(os, audit_bound(ao), fmt);
  } else if (gen_cmd->parsed()) {
    const auto src = source_from(o);
    write_matrix_file(make_factory(src)(visibility_from(o)), os);
  }

  if (o.out.empty()) {
    out << os.str();
  } else {
    std::ofstream file(o.out);
    if (!file) throw std::invalid_argument("cannot write " + o.out);
    file << os.str();
  }
  return 0;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "machine") return OutputFormat::machine;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view to_string(SweepParameter p) {
  return p == SweepParameter::visibility ? "visibility" : "noise-weight";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "visibility") return SweepParameter::visibility;
  if (name == "noise-weight") return SweepParameter::noise_weight;
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

double to_visibility(SweepParameter p, double value) {
  return p == SweepParameter::visibility ? value : 1.0 - value;
}

std::vector<double> Grid::points() const {
  if (!(lo < hi) || steps < 2) throw std::invalid_argument("grid needs lo < hi and at least 2 steps");
  std::vector<double> pts(steps);
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) pts[i] = lo + h * static_cast<double>(i);
  pts.back() = hi;
  return pts;
}

Grid parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid '" + std::string(text) + "' is not lo:hi:steps");
  Grid g;
  g.lo = parse_double(parts[0], "grid lo");
  g.hi = parse_double(parts[1], "grid hi");
  std::size_t steps = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size())
    throw std::invalid_argument("grid steps '" + std::string(parts[2]) + "' is not a count");
  g.steps = steps;
  if (!(g.lo < g.hi)) throw std::invalid_argument("degenerate grid: lo must be below hi");
  if (g.steps < 2) throw std::invalid_argument("degenerate grid: at least 2 steps");
  return g;
}

std::pair<double, double> parse_bracket(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw std::invalid_argument("bracket '" + std::string(text) + "' is not lo:hi");
  const double lo = parse_double(parts[0], "bracket lo");
  const double hi = parse_double(parts[1], "bracket hi");
  if (!(lo < hi)) throw std::invalid_argument("degenerate bracket: lo must be below hi");
  return {lo, hi};
}

StateFactory make_factory(const StateSource& source) {
  if (source.d < 2) throw std::invalid_argument("local dimension must be >= 2");
  if (source.family == "mixed") {
    const auto mixed = TripartiteState::maximally_mixed(source.d);
    return [mixed](double visibility) {
      if (!(visibility >= 0.0 && visibility <= 1.0)) throw std::invalid_argument("visibility outside [0, 1]");
      return mixed;
    };
  }
  const auto family = parse_family(source.family);
  if (family == StateFamily::custom) {
    if (!source.base) throw std::invalid_argument("state family custom needs --input");
    const auto base = *source.base;
    return [base](double visibility) { return visibility == 1.0 ? base : white_noise_mix(base, visibility); };
  }
  StateSpec spec;
  spec.family = family;
  spec.d = source.d;
  spec.seed = source.seed;
  spec.mixture_terms = source.mixture_terms;
  return [spec](double visibility) mutable {
    spec.visibility = visibility;
    return make_state(spec);
  };
}

CriterionReport evaluate(const TripartiteState& state, CriterionId criterion, ThresholdMode mode) {
  return criterion == CriterionId::pt_qubit ? m_pt(state) : m1_ct(state, mode);
}

SweepResult scan(const StateFactory& factory, const Grid& grid, const SweepOptions& options) {
  const auto params = grid.points();
  std::vector<std::optional<CriterionReport>> reports(params.size());
  const unsigned workers = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(params.size()));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < params.size(); i += workers)
            reports[i] = evaluate(factory(to_visibility(options.parameter, params[i])), options.criterion,
                                  options.mode);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepResult res{options.parameter, {}, std::nullopt};
  res.points.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) res.points.push_back({params[i], *reports[i]});
  for (std::size_t i = 0; i < res.points.size() && !res.crossover; ++i) {
    const double g = gap(res.points[i].report);
    if (g == 0.0) {
      res.crossover = res.points[i].parameter;
    } else if (i + 1 < res.points.size() && (g < 0.0) != (gap(res.points[i + 1].report) < 0.0) &&
               gap(res.points[i + 1].report) != 0.0) {
      res.crossover = find_crossover(factory, res.points[i].parameter, res.points[i + 1].parameter, options);
    }
  }
  return res;
}

double find_crossover(const StateFactory& factory, double lo, double hi, const SweepOptions& options,
                      double width) {
  if (!(lo < hi)) throw std::invalid_argument("degenerate bracket: lo must be below hi");
  if (!(width > 0.0)) throw std::invalid_argument("bisection width must be positive");
  const auto f = [&](double p) {
    return gap(evaluate(factory(to_visibility(options.parameter, p)), options.criterion, options.mode));
  };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    std::ostringstream os;
    os << "value - threshold is " << (flo < 0.0 ? "negative" : "positive") << " at both ends of [" << lo << ", "
       << hi << "] (" << flo << ", " << fhi << ")";
    throw NoCrossingError(os.str(), flo, fhi);
  }
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genuine tripartite entanglement criteria for d x d x d states", "gme"};
  app.require_subcommand(1);
  Options o;

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a criterion on one state");
  add_state_options(evaluate_cmd, o);
  add_criterion_options(evaluate_cmd, o);
  add_noise_options(evaluate_cmd, o);
  add_output_options(evaluate_cmd, o, true);

  auto* scan_cmd = app.add_subcommand("scan", "Sweep the noise parameter over a grid");
  add_state_options(scan_cmd, o);
  add_criterion_options(scan_cmd, o);
  scan_cmd->add_option("--sweep", o.sweep, "visibility or noise-weight")
      ->check(CLI::IsMember({"visibility", "noise-weight"}))
      ->capture_default_str();
  scan_cmd->add_option("--grid", o.grid, "lo:hi:steps")->capture_default_str();
  scan_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_output_options(scan_cmd, o, true);

  auto* crossover_cmd = app.add_subcommand("crossover", "Bisect for value = threshold");
  add_state_options(crossover_cmd, o);
  add_criterion_options(crossover_cmd, o);
  crossover_cmd->add_option("--sweep", o.sweep, "visibility or noise-weight")
      ->check(CLI::IsMember({"visibility", "noise-weight"}))
      ->capture_default_str();
  crossover_cmd->add_option("--bracket", o.bracket, "lo:hi")->capture_default_str();
  add_output_options(crossover_cmd, o, true);

  auto* audit_cmd = app.add_subcommand("audit", "Maximise a bound statistic over random products");
  audit_cmd->add_option("--bipartition", o.bipartition, "1|23, 2|13 or 3|12")
      ->check(CLI::IsMember({"1|23", "2|13", "3|12"}))
      ->capture_default_str();
  audit_cmd->add_option("--d", o.d, "Local dimension")->check(CLI::Range(2, 8))->capture_default_str();
  audit_cmd->add_option("--samples", o.samples, "Random product samples")->capture_default_str();
  audit_cmd->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  audit_cmd->add_option("--probe", o.probes, "Fixed probe states: bell, mixed")
      ->check(CLI::IsMember({"bell", "mixed"}));
  audit_cmd->add_flag("--real", o.real, "Draw real amplitudes");
  audit_cmd->add_flag("--separable-pair", o.separable_pair, "Draw the pair factor as a product");
  audit_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_output_options(audit_cmd, o, true);

  auto* gen_cmd = app.add_subcommand("gen", "Write a state as a matrix file");
  add_state_options(gen_cmd, o);
  add_noise_options(gen_cmd, o);
  add_output_options(gen_cmd, o, false);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(o, evaluate_cmd, scan_cmd, crossover_cmd, audit_cmd, gen_cmd, out, err);
  } catch (const NoCrossingError& e) {
    err << "no crossing: " << e.what() << '\n';
    return 3;
  } catch (const MatrixFileError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NonConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gme::cli
