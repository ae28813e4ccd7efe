#pragma once

// Parameter sweeps: a grid of market/engine settings, each row run with and
// without consumers consulting reputation, every run repeated over a list of
// seeds and summarised as mean and sample standard deviation per metric.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "liquidrank/io.hpp"
#include "liquidrank/market.hpp"
#include "liquidrank/metrics.hpp"

namespace liquidrank {

enum class ScalePreset { small, medium, large };

inline std::optional<ScalePreset> scale_preset_from_string(std::string_view s) {
  if (s == "small") return ScalePreset::small;
  if (s == "medium") return ScalePreset::medium;
  if (s == "large") return ScalePreset::large;
  return std::nullopt;
}

inline std::string_view to_string(ScalePreset p) {
  switch (p) {
    case ScalePreset::small: return "small";
    case ScalePreset::medium: return "medium";
    case ScalePreset::large: return "large";
  }
  return "?";
}

/// Population and duration of a preset. Ten agents cannot be split 90/10
/// within both goodness classes, so the small preset trades at 50/50.
inline void apply_preset(ScenarioConfig& config, ScalePreset preset) {
  switch (preset) {
    case ScalePreset::small:
      config.n_agents = 10;
      config.days = 10;
      config.consumer_fraction = 0.5;
      break;
    case ScalePreset::medium:
      config.n_agents = 100;
      config.days = 90;
      break;
    case ScalePreset::large:
      config.n_agents = 1000;
      config.days = 180;
      break;
  }
}

/// One table row. `config` is the variant where consumers consult
/// reputation; the baseline variant is derived from it.
struct SweepRow {
  std::string label;
  ScenarioConfig config;
};

inline ScenarioConfig baseline_of(const ScenarioConfig& using_config) {
  ScenarioConfig c = using_config;
  c.measure_mode = using_config.rating_mode();
  c.usage_mode = UsageMode::none;
  return c;
}

enum class Variant { baseline, consulting };
inline constexpr std::array<Variant, 2> kVariants{Variant::baseline, Variant::consulting};

inline std::string_view to_string(Variant v) { return v == Variant::baseline ? "none" : "using"; }

struct SweepSpec {
  std::string grid;
  std::vector<SweepRow> rows;
  std::vector<std::uint64_t> seeds;

  std::size_t run_count() const { return rows.size() * kVariants.size() * seeds.size(); }
};

/// Engine settings shared by the fixed-parameter grid.
inline EngineParams reference_params() {
  EngineParams p;
  p.default_rank = 0.5;
  p.conservatism = 0.5;
  p.decayed_rank = 0.0;
  p.full_norm = true;
  p.log_ratings = false;
  p.downrating = false;
  p.precision = 0.01;
  return p;
}

/// Three rating kinds times three good/bad value ratios at fixed engine
/// settings.
inline std::vector<SweepRow> fig1_rows(const ScenarioConfig& base) {
  std::vector<SweepRow> rows;
  const std::array<std::pair<UsageMode, std::string_view>, 3> modes{{
      {UsageMode::explicit_unweighted, "unweighted"},
      {UsageMode::explicit_weighted, "weighted"},
      {UsageMode::implicit_financial, "implicit"},
  }};
  for (const auto& [mode, tag] : modes) {
    for (double ratio : {10.0, 20.0, 100.0}) {
      ScenarioConfig c = base;
      c.engine = reference_params();
      c.engine.weighting = mode == UsageMode::explicit_weighted;
      c.usage_mode = mode;
      c.good_value_ratio = ratio;
      rows.push_back({std::string(tag) + "_" + std::to_string(static_cast<int>(ratio)), c});
    }
  }
  return rows;
}

/// Weighted explicit ratings at value ratios 20 and 100 across engine
/// settings: full_norm, log_ratings, downrating, precision, default rank,
/// conservatism, decayed rank.
inline std::vector<SweepRow> fig2_rows(const ScenarioConfig& base) {
  struct Setting {
    double ratio;
    bool full_norm, log_ratings, downrating;
    double precision, default_rank, conservatism, decayed_rank;
  };
  static constexpr std::array<Setting, 25> settings{{
      {20, true, true, false, 0.01, 0.5, 0.5, 0.0},
      {20, false, true, false, 0.01, 0.5, 0.5, 0.0},
      {20, false, false, false, 0.01, 0.5, 0.5, 0.0},
      {20, false, false, false, 0.01, 0.9, 0.1, 0.0},
      {20, true, false, false, 0.01, 0.5, 0.5, 0.0},
      {20, true, false, false, 0.01, 0.1, 0.5, 0.0},
      {20, true, false, false, 0.01, 0.9, 0.5, 0.0},
      {20, true, false, false, 0.01, 0.9, 0.1, 0.0},
      {20, true, false, false, 0.01, 0.9, 0.9, 0.0},
      {20, true, false, false, 0.01, 0.5, 0.5, 0.5},
      {20, true, false, false, 1.00, 0.5, 0.5, 0.0},
      {20, true, false, false, 0.001, 0.5, 0.5, 0.0},
      {20, true, false, true, 0.01, 0.5, 0.5, 0.0},
      {20, true, false, true, 0.01, 0.9, 0.1, 0.0},
      {20, true, true, true, 0.01, 0.9, 0.1, 0.0},
      {20, false, false, true, 0.01, 0.9, 0.1, 0.0},
      {20, false, true, true, 0.01, 0.9, 0.1, 0.0},
      {100, true, true, false, 0.01, 0.5, 0.5, 0.0},
      {100, false, true, false, 0.01, 0.5, 0.5, 0.0},
      {100, false, false, false, 0.01, 0.5, 0.5, 0.0},
      {100, true, false, false, 0.01, 0.5, 0.5, 0.0},
      {100, true, false, false, 0.01, 0.1, 0.5, 0.0},
      {100, true, false, false, 0.01, 0.9, 0.5, 0.0},
      {100, true, false, false, 0.01, 0.9, 0.1, 0.0},
      {100, true, false, false, 0.01, 0.9, 0.9, 0.0},
  }};
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const Setting& s = settings[i];
    ScenarioConfig c = base;
    c.engine = reference_params();
    c.engine.weighting = true;
    c.engine.full_norm = s.full_norm;
    c.engine.log_ratings = s.log_ratings;
    c.engine.downrating = s.downrating;
    c.engine.precision = s.precision;
    c.engine.default_rank = s.default_rank;
    c.engine.conservatism = s.conservatism;
    c.engine.decayed_rank = s.decayed_rank;
    c.usage_mode = UsageMode::explicit_weighted;
    c.good_value_ratio = s.ratio;
    rows.push_back({"p" + std::to_string(i + 1) + "_" + std::to_string(static_cast<int>(s.ratio)), c});
  }
  return rows;
}

/// Builds a named grid at a scale preset on top of `base` (which supplies
/// everything the grid does not vary, e.g. consumer_fraction).
inline SweepSpec make_sweep(std::string_view grid, ScalePreset preset, std::vector<std::uint64_t> seeds,
                            ScenarioConfig base = {}) {
  apply_preset(base, preset);
  SweepSpec spec{std::string(grid), {}, std::move(seeds)};
  if (grid == "fig1") {
    spec.rows = fig1_rows(base);
  } else if (grid == "fig2") {
    spec.rows = fig2_rows(base);
  } else {
    throw std::invalid_argument("unknown grid '" + std::string(grid) + "' (expected fig1 or fig2)");
  }
  if (spec.seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
  return spec;
}

/// "1..10", "1,4,9" or "7".
inline std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    auto lo = try_parse_integer<std::uint64_t>(text.substr(0, dots));
    auto hi = try_parse_integer<std::uint64_t>(text.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) throw std::invalid_argument("malformed seed range '" + std::string(text) + "'");
    for (auto s = *lo; s <= *hi; ++s) seeds.push_back(s);
    return seeds;
  }
  for (auto part : detail::split(text, ',')) {
    auto s = try_parse_integer<std::uint64_t>(detail::trim(part));
    if (!s) throw std::invalid_argument("malformed seed '" + std::string(part) + "'");
    seeds.push_back(*s);
  }
  return seeds;
}

struct MetricStats {
  std::optional<double> mean;
  std::optional<double> stddev;
  int n = 0;  // seeds where the metric was defined

  friend bool operator==(const MetricStats&, const MetricStats&) = default;
};

using MetricSummary = std::array<MetricStats, kMetricFields.size()>;

/// Mean and sample standard deviation over the reports where each metric is
/// defined, accumulated in report order.
inline MetricSummary summarize(std::span<const MetricsReport> reports) {
  MetricSummary out;
  for (std::size_t m = 0; m < kMetricFields.size(); ++m) {
    const auto member = kMetricFields[m].member;
    double sum = 0.0;
    int n = 0;
    for (const auto& r : reports) {
      if (auto x = r.*member) {
        sum += *x;
        ++n;
      }
    }
    if (n == 0) continue;
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& r : reports) {
      if (auto x = r.*member) ss += (*x - mean) * (*x - mean);
    }
    out[m] = {mean, n > 1 ? std::sqrt(ss / (n - 1)) : 0.0, n};
  }
  return out;
}

struct SweepRowResult {
  std::string label;
  ScenarioConfig config;
  std::size_t seeds = 0;
  MetricSummary baseline;
  MetricSummary consulting;

  const MetricSummary& of(Variant v) const { return v == Variant::baseline ? baseline : consulting; }
  MetricSummary& of(Variant v) { return v == Variant::baseline ? baseline : consulting; }

  friend bool operator==(const SweepRowResult&, const SweepRowResult&) = default;
};

struct SweepResult {
  std::string grid;
  std::vector<SweepRowResult> rows;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Worker count from LIQUIDRANK_WORKERS, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("LIQUIDRANK_WORKERS")) {
    if (auto n = try_parse_integer<unsigned>(env); n && *n > 0) return *n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs every (row, variant, seed) independently on up to `workers` threads.
/// Results are gathered by index, so the summary does not depend on
/// scheduling.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned workers = default_workers()) {
  struct Job {
    std::size_t row;
    Variant variant;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    for (Variant v : kVariants) {
      for (auto seed : spec.seeds) jobs.push_back({r, v, seed});
    }
  }
  std::vector<MetricsReport> reports(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        const Job& job = jobs[i];
        ScenarioConfig c = spec.rows[job.row].config;
        if (job.variant == Variant::baseline) c = baseline_of(c);
        c.seed = job.seed;
        reports[i] = run_scenario(c).report;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n_threads; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result{spec.grid, {}};
  const std::size_t per_variant = spec.seeds.size();
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    SweepRowResult row{spec.rows[r].label, spec.rows[r].config, per_variant, {}, {}};
    for (std::size_t v = 0; v < kVariants.size(); ++v) {
      const std::size_t first = (r * kVariants.size() + v) * per_variant;
      row.of(kVariants[v]) = summarize(std::span(reports).subspan(first, per_variant));
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Summary file: one CSV row per (grid row, variant).

namespace detail {

inline constexpr std::array<std::string_view, 13> kSummaryParamColumns{
    "row",         "label",       "variant",   "value_ratio",  "usage_mode",   "consumer_fraction", "full_norm",
    "log_ratings", "downrating",  "precision", "default_rank", "conservatism", "decayed_rank"};

inline std::string summary_header() {
  std::string h;
  for (auto c : kSummaryParamColumns) h += std::string(c) + ',';
  h += "seeds";
  for (const auto& f : kMetricFields) {
    const std::string name(f.name);
    h += "," + name + "_mean," + name + "_std," + name + "_n";
  }
  return h;
}

}  // namespace detail

inline std::string format_summary(const SweepResult& result) {
  std::string out = "# grid=" + result.grid + "\n" + detail::summary_header() + "\n";
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    const auto& row = result.rows[r];
    const auto& e = row.config.engine;
    for (Variant v : kVariants) {
      out += std::to_string(r + 1) + ',' + row.label + ',' + std::string(to_string(v)) + ',' +
             format_number(row.config.good_value_ratio) + ',' + std::string(to_string(row.config.usage_mode)) + ',' +
             format_number(row.config.consumer_fraction) + ',' + std::string(format_bool(e.full_norm)) + ',' +
             std::string(format_bool(e.log_ratings)) + ',' + std::string(format_bool(e.downrating)) + ',' +
             format_number(e.precision) + ',' + format_number(e.default_rank) + ',' + format_number(e.conservatism) +
             ',' + format_number(e.decayed_rank) + ',' + std::to_string(row.seeds);
      for (const auto& stats : row.of(v)) {
        out += ',' + format_optional(stats.mean) + ',' + format_optional(stats.stddev) + ',' + std::to_string(stats.n);
      }
      out += '\n';
    }
  }
  return out;
}

/// Reads back what format_summary wrote. Row configs carry only the columns
/// stored in the file; other fields keep their defaults.
inline SweepResult parse_summary(std::string_view text) {
  const auto lines = detail::lines_of(text);
  if (lines.size() < 2 || !lines[0].starts_with("# grid=")) throw FormatError(1, "expected '# grid=' line");
  if (lines[1] != detail::summary_header()) throw FormatError(2, "unexpected summary header");
  SweepResult result{std::string(lines[0].substr(7)), {}};
  constexpr std::size_t first_metric = detail::kSummaryParamColumns.size() + 1;
  const std::size_t n_fields = first_metric + 3 * kMetricFields.size();
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto line_no = i + 1;
    const auto f = detail::split(lines[i], ',');
    if (f.size() != n_fields) throw FormatError(line_no, "expected " + std::to_string(n_fields) + " fields");
    auto number = [&](std::size_t k) {
      auto x = try_parse_number(f[k]);
      if (!x) throw FormatError(line_no, "malformed number '" + std::string(f[k]) + "'");
      return *x;
    };
    auto boolean = [&](std::size_t k) {
      auto b = try_parse_bool(f[k]);
      if (!b) throw FormatError(line_no, "malformed flag '" + std::string(f[k]) + "'");
      return *b;
    };
    const Variant variant = f[2] == "none" ? Variant::baseline : Variant::consulting;
    if (f[2] != "none" && f[2] != "using") throw FormatError(line_no, "unknown variant '" + std::string(f[2]) + "'");
    if (variant == Variant::baseline) {
      SweepRowResult row;
      row.label = std::string(f[1]);
      row.config.good_value_ratio = number(3);
      auto usage = usage_mode_from_string(f[4]);
      if (!usage) throw FormatError(line_no, "unknown usage mode '" + std::string(f[4]) + "'");
      row.config.usage_mode = *usage;
      row.config.consumer_fraction = number(5);
      row.config.engine.full_norm = boolean(6);
      row.config.engine.log_ratings = boolean(7);
      row.config.engine.downrating = boolean(8);
      row.config.engine.precision = number(9);
      row.config.engine.default_rank = number(10);
      row.config.engine.conservatism = number(11);
      row.config.engine.decayed_rank = number(12);
      auto seeds = try_parse_integer<std::size_t>(f[13]);
      if (!seeds) throw FormatError(line_no, "malformed seed count");
      row.seeds = *seeds;
      result.rows.push_back(std::move(row));
    } else if (result.rows.empty() || result.rows.back().label != f[1]) {
      throw FormatError(line_no, "'using' row without a preceding 'none' row");
    }
    MetricSummary& summary = result.rows.back().of(variant);
    for (std::size_t m = 0; m < kMetricFields.size(); ++m) {
      const std::size_t k = first_metric + 3 * m;
      auto n = try_parse_integer<int>(f[k + 2]);
      if (!n) throw FormatError(line_no, "malformed count '" + std::string(f[k + 2]) + "'");
      if (*n == 0) continue;
      summary[m] = {number(k), number(k + 1), *n};
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Table rendering

namespace detail {

inline std::string cell(const MetricStats& s, bool percent) {
  if (!s.mean) return "undef";
  char buf[32];
  if (percent) {
    const double pct = *s.mean * 100.0;
    std::snprintf(buf, sizeof buf, pct < 10.0 ? "%.1f%%" : "%.0f%%", pct);
  } else {
    std::snprintf(buf, sizeof buf, "%.2f", *s.mean);
  }
  return buf;
}

inline bool is_percent(std::size_t metric) { return metric < 2; }

inline std::string render(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += c == 0 ? row[c] + std::string(width[c] - row[c].size(), ' ')
                     : std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace detail

inline constexpr std::array<std::string_view, 10> kTableMetricHeaders{
    "profit", "loss", "pcc_avg", "pcc_last", "A_g", "A_b", "A_m", "D_g", "D_b", "D_m"};

/// Aligned text table. fig1 shows every metric with and without reputation
/// in use; fig2 shows baseline scam figures, the engine settings, then every
/// metric with reputation in use.
inline std::string render_table(const SweepResult& result) {
  std::vector<std::vector<std::string>> table;
  const bool fig2 = result.grid == "fig2";
  std::vector<std::string> header{"row", "V_g/V_b"};
  if (fig2) {
    for (auto h : {"none:profit", "none:loss", "full_norm", "log_rat", "downrate", "precision", "default", "conserv",
                   "decay"})
      header.emplace_back(h);
    for (auto h : kTableMetricHeaders) header.push_back("using:" + std::string(h));
  } else {
    for (auto v : kVariants) {
      for (auto h : kTableMetricHeaders) header.push_back(std::string(to_string(v)) + ":" + std::string(h));
    }
  }
  table.push_back(header);

  const std::size_t ratio_index = kMetricFields.size() - 1;
  for (const auto& row : result.rows) {
    std::vector<std::string> line{row.label};
    const auto& vr = row.baseline[ratio_index];
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", vr.mean.value_or(NAN));
    line.emplace_back(vr.mean ? buf : "undef");
    auto add_metrics = [&](const MetricSummary& s) {
      for (std::size_t m = 0; m < kTableMetricHeaders.size(); ++m) line.push_back(detail::cell(s[m], detail::is_percent(m)));
    };
    if (fig2) {
      line.push_back(detail::cell(row.baseline[0], true));
      line.push_back(detail::cell(row.baseline[1], true));
      const auto& e = row.config.engine;
      line.emplace_back(e.full_norm ? "TRUE" : "FALSE");
      line.emplace_back(e.log_ratings ? "TRUE" : "FALSE");
      line.emplace_back(e.downrating ? "TRUE" : "FALSE");
      line.push_back(format_number(e.precision));
      line.push_back(format_number(e.default_rank));
      line.push_back(format_number(e.conservatism));
      line.push_back(format_number(e.decayed_rank));
      add_metrics(row.consulting);
    } else {
      add_metrics(row.baseline);
      add_metrics(row.consulting);
    }
    table.push_back(std::move(line));
  }
  return detail::render(table);
}

}  // namespace liquidrank
