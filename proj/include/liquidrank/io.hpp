#pragma once

// Text formats: scenario configs and metric reports as flat key=value lines,
// rating logs and reputation snapshots as comma-separated rows. Every writer
// is deterministic and every reader inverts its writer exactly. See
// docs/formats.md.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "liquidrank/market.hpp"
#include "liquidrank/metrics.hpp"
#include "liquidrank/types.hpp"

namespace liquidrank {

/// Malformed input; carries the 1-based line it was found on.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Shortest text that reads back to the same double, always with a decimal
/// point or exponent ("1.0", "0.875", "1e-05").
inline std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

inline std::optional<double> try_parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return x;
}

template <typename Int>
std::optional<Int> try_parse_integer(std::string_view text) {
  Int x{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return x;
}

inline std::optional<bool> try_parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  return std::nullopt;
}

inline std::string_view format_bool(bool b) { return b ? "true" : "false"; }

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  auto out = split(text, '\n');
  if (!out.empty() && out.back().empty()) out.pop_back();
  for (auto& l : out) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return out;
}

/// One key=value entry with the line it came from.
struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line;
};

inline std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError(i + 1, "expected key=value, got '" + std::string(line) + "'");
    out.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), i + 1});
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scenario config

namespace detail {

inline std::string encode(double x) { return format_number(x); }
inline std::string encode(int x) { return std::to_string(x); }
inline std::string encode(std::uint64_t x) { return std::to_string(x); }
inline std::string encode(bool x) { return std::string(format_bool(x)); }
inline std::string encode(UsageMode x) { return std::string(to_string(x)); }
inline std::string encode(RatingMode x) { return std::string(to_string(x)); }

inline std::optional<double> decode(std::string_view v, double*) { return try_parse_number(v); }
inline std::optional<int> decode(std::string_view v, int*) { return try_parse_integer<int>(v); }
inline std::optional<std::uint64_t> decode(std::string_view v, std::uint64_t*) { return try_parse_integer<std::uint64_t>(v); }
inline std::optional<bool> decode(std::string_view v, bool*) { return try_parse_bool(v); }
inline std::optional<UsageMode> decode(std::string_view v, UsageMode*) { return usage_mode_from_string(v); }
inline std::optional<RatingMode> decode(std::string_view v, RatingMode*) { return rating_mode_from_string(v); }

/// Binds one config key to its field, for both reading and writing.
struct ScenarioKey {
  std::string_view name;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<bool(ScenarioConfig&, std::string_view)> set;  // false on malformed value
};

/// `field` maps a config (const or not) to a reference to the bound member.
template <typename Field>
ScenarioKey key(std::string_view name, Field field) {
  return {name, [field](const ScenarioConfig& c) { return encode(field(c)); },
          [field](ScenarioConfig& c, std::string_view v) {
            auto& member = field(c);
            auto x = decode(v, &member);
            if (x) member = *x;
            return x.has_value();
          }};
}

#define LIQUIDRANK_KEY(name, expr) key(name, [](auto& c) -> auto& { return expr; })

inline const std::vector<ScenarioKey>& scenario_keys() {
  static const std::vector<ScenarioKey> keys = {
      LIQUIDRANK_KEY("n_agents", c.n_agents),
      LIQUIDRANK_KEY("days", c.days),
      LIQUIDRANK_KEY("good_fraction", c.good_fraction),
      LIQUIDRANK_KEY("consumer_fraction", c.consumer_fraction),
      LIQUIDRANK_KEY("bad_tx_rate_multiplier", c.bad_tx_rate_multiplier),
      LIQUIDRANK_KEY("good_value_ratio", c.good_value_ratio),
      LIQUIDRANK_KEY("good_tx_per_day", c.good_tx_per_day),
      LIQUIDRANK_KEY("base_bad_value", c.base_bad_value),
      LIQUIDRANK_KEY("usage_mode", c.usage_mode),
      LIQUIDRANK_KEY("measure_mode", c.measure_mode),
      LIQUIDRANK_KEY("selection_threshold", c.selection_threshold),
      LIQUIDRANK_KEY("seed", c.seed),
      LIQUIDRANK_KEY("default_rank", c.engine.default_rank),
      LIQUIDRANK_KEY("conservatism", c.engine.conservatism),
      LIQUIDRANK_KEY("decayed_rank", c.engine.decayed_rank),
      LIQUIDRANK_KEY("default_rating", c.engine.default_rating),
      LIQUIDRANK_KEY("precision", c.engine.precision),
      LIQUIDRANK_KEY("weighting", c.engine.weighting),
      LIQUIDRANK_KEY("full_norm", c.engine.full_norm),
      LIQUIDRANK_KEY("liquid", c.engine.liquid),
      LIQUIDRANK_KEY("log_ranks", c.engine.log_ranks),
      LIQUIDRANK_KEY("log_ratings", c.engine.log_ratings),
      LIQUIDRANK_KEY("aggregation", c.engine.aggregation),
      LIQUIDRANK_KEY("downrating", c.engine.downrating),
      LIQUIDRANK_KEY("update_period", c.engine.update_period),
  };
  return keys;
}

#undef LIQUIDRANK_KEY

}  // namespace detail

/// Parses key=value lines; keys not given keep their defaults. Unknown keys,
/// repeated keys, malformed values and out-of-range settings all throw
/// FormatError naming the key and line.
inline ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig config;
  std::map<std::string, std::size_t> seen;
  for (const auto& kv : detail::parse_key_values(text)) {
    const auto& keys = detail::scenario_keys();
    auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& k) { return k.name == kv.key; });
    if (it == keys.end()) throw FormatError(kv.line, "unknown key '" + kv.key + "'");
    if (!seen.emplace(kv.key, kv.line).second) throw FormatError(kv.line, "key '" + kv.key + "' given twice");
    if (!it->set(config, kv.value)) {
      throw FormatError(kv.line, "key '" + kv.key + "': malformed value '" + kv.value + "'");
    }
  }
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    const std::string key = msg.substr(0, msg.find(':'));
    auto where = seen.find(key);
    throw FormatError(where != seen.end() ? where->second : 0, "key '" + key + "'" + msg.substr(key.size()));
  }
  return config;
}

inline std::string format_scenario(const ScenarioConfig& config) {
  std::string out;
  for (const auto& k : detail::scenario_keys()) {
    out += k.name;
    out += '=';
    out += k.get(config);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ratings log

inline constexpr std::string_view kRatingsHeader = "day,rater,ratee,rating,value,rater_good,ratee_good";

inline std::string format_ratings_log(const TransactionLog& log) {
  std::string out(kRatingsHeader);
  out += '\n';
  for (const auto& e : log.entries) {
    const auto& r = e.record;
    out += std::to_string(r.day) + ',' + r.rater + ',' + r.ratee + ',' + (r.rating ? format_number(*r.rating) : "") +
           ',' + format_number(r.value) + ',' + std::string(format_bool(e.rater_good)) + ',' +
           std::string(format_bool(e.ratee_good)) + '\n';
  }
  return out;
}

inline TransactionLog parse_ratings_log(std::string_view text) {
  const auto lines = detail::lines_of(text);
  if (lines.empty() || lines[0] != kRatingsHeader) throw FormatError(1, "expected header '" + std::string(kRatingsHeader) + "'");
  TransactionLog log;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = i + 1;
    const auto f = detail::split(lines[i], ',');
    if (f.size() != 7) throw FormatError(row, "expected 7 fields, got " + std::to_string(f.size()));
    LoggedRating e;
    auto day = try_parse_integer<int>(f[0]);
    if (!day) throw FormatError(row, "malformed day '" + std::string(f[0]) + "'");
    e.record.day = *day;
    e.record.rater = std::string(f[1]);
    e.record.ratee = std::string(f[2]);
    if (e.record.rater.empty() || e.record.ratee.empty()) throw FormatError(row, "empty agent id");
    if (!f[3].empty()) {
      auto rating = try_parse_number(f[3]);
      if (!rating) throw FormatError(row, "malformed rating '" + std::string(f[3]) + "'");
      if (!is_fraction(*rating)) throw FormatError(row, "rating " + std::string(f[3]) + " outside [0,1]");
      e.record.rating = *rating;
    }
    auto value = try_parse_number(f[4]);
    if (!value || !(*value >= 0.0)) throw FormatError(row, "malformed or negative value '" + std::string(f[4]) + "'");
    e.record.value = *value;
    auto rg = try_parse_bool(f[5]);
    auto eg = try_parse_bool(f[6]);
    if (!rg || !eg) throw FormatError(row, "goodness flags must be true or false");
    e.rater_good = *rg;
    e.ratee_good = *eg;
    if (e.record.rater == e.record.ratee) throw FormatError(row, "rater equals ratee");
    log.entries.push_back(std::move(e));
  }
  return log;
}

// ---------------------------------------------------------------------------
// Reputation snapshots

inline constexpr std::string_view kStatesHeader = "day,agent,rank";

/// One `day,agent,rank` row per rank; a state with no ranks is written as
/// `day,,` so it survives the round trip.
inline std::string format_states(std::span<const ReputationState> states) {
  std::string out(kStatesHeader);
  out += '\n';
  for (const auto& s : states) {
    if (s.ranks.empty()) out += std::to_string(s.day) + ",,\n";
    for (const auto& [id, rank] : s.ranks) out += std::to_string(s.day) + ',' + id + ',' + format_number(rank) + '\n';
  }
  return out;
}

inline std::vector<ReputationState> parse_states(std::string_view text) {
  const auto lines = detail::lines_of(text);
  if (lines.empty() || lines[0] != kStatesHeader) throw FormatError(1, "expected header '" + std::string(kStatesHeader) + "'");
  std::vector<ReputationState> states;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = i + 1;
    const auto f = detail::split(lines[i], ',');
    if (f.size() != 3) throw FormatError(row, "expected 3 fields, got " + std::to_string(f.size()));
    auto day = try_parse_integer<int>(f[0]);
    if (!day) throw FormatError(row, "malformed day '" + std::string(f[0]) + "'");
    if (states.empty() || states.back().day != *day) {
      if (!states.empty() && states.back().day > *day) throw FormatError(row, "days out of order");
      states.push_back({*day, {}});
    }
    if (f[1].empty() && f[2].empty()) continue;
    auto rank = try_parse_number(f[2]);
    if (f[1].empty() || !rank || !is_fraction(*rank)) throw FormatError(row, "malformed agent or rank");
    if (!states.back().ranks.emplace(std::string(f[1]), *rank).second) throw FormatError(row, "duplicate agent");
  }
  return states;
}

// ---------------------------------------------------------------------------
// Metrics report

inline std::string format_optional(const std::optional<double>& x) { return x ? format_number(*x) : "undefined"; }

inline std::string format_report(const MetricsReport& r) {
  std::string out;
  for (const auto& f : kMetricFields) {
    if (f.name == "volume_ratio") continue;
    out += std::string(f.name) + '=' + format_optional(r.*(f.member)) + '\n';
  }
  out += "volume_good=" + format_number(r.volume_good) + '\n';
  out += "volume_bad=" + format_number(r.volume_bad) + '\n';
  out += "volume_good_to_bad=" + format_number(r.volume_good_to_bad) + '\n';
  out += "volume_ratio=" + format_optional(r.volume_ratio) + '\n';
  return out;
}

inline MetricsReport parse_report(std::string_view text) {
  MetricsReport r;
  std::map<std::string, std::size_t> seen;
  for (const auto& kv : detail::parse_key_values(text)) {
    if (!seen.emplace(kv.key, kv.line).second) throw FormatError(kv.line, "key '" + kv.key + "' given twice");
    auto optional_value = [&]() -> std::optional<double> {
      if (kv.value == "undefined") return std::nullopt;
      auto x = try_parse_number(kv.value);
      if (!x) throw FormatError(kv.line, "key '" + kv.key + "': malformed value '" + kv.value + "'");
      return x;
    };
    auto it = std::find_if(kMetricFields.begin(), kMetricFields.end(), [&](const auto& f) { return f.name == kv.key; });
    if (it != kMetricFields.end()) {
      r.*(it->member) = optional_value();
    } else if (kv.key == "volume_good" || kv.key == "volume_bad" || kv.key == "volume_good_to_bad") {
      auto x = optional_value();
      if (!x) throw FormatError(kv.line, "key '" + kv.key + "' cannot be undefined");
      (kv.key == "volume_good" ? r.volume_good : kv.key == "volume_bad" ? r.volume_bad : r.volume_good_to_bad) = *x;
    } else {
      throw FormatError(kv.line, "unknown key '" + kv.key + "'");
    }
  }
  if (seen.size() != kMetricFields.size() + 3) throw FormatError(0, "report is missing keys");
  return r;
}

// ---------------------------------------------------------------------------
// Files and bundles

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// Prefixes parse errors with the file they came from.
template <typename Fn>
auto parse_file(const std::filesystem::path& path, Fn&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const FormatError& e) {
    throw FormatError(e.line(), e.message(), path.string());
  }
}

inline void write_ratings_log(const TransactionLog& log, const std::filesystem::path& path) {
  write_file(path, format_ratings_log(log));
}
inline TransactionLog read_ratings_log(const std::filesystem::path& path) { return parse_file(path, parse_ratings_log); }

inline void write_states(std::span<const ReputationState> states, const std::filesystem::path& path) {
  write_file(path, format_states(states));
}
inline std::vector<ReputationState> read_states(const std::filesystem::path& path) { return parse_file(path, parse_states); }

inline void write_report(const MetricsReport& report, const std::filesystem::path& path) {
  write_file(path, format_report(report));
}
inline MetricsReport read_report(const std::filesystem::path& path) { return parse_file(path, parse_report); }

inline ScenarioConfig read_scenario(const std::filesystem::path& path) { return parse_file(path, parse_scenario); }

/// Everything one simulate run leaves on disk.
struct RunBundle {
  ScenarioConfig config;
  TransactionLog log;
  std::vector<ReputationState> states;
  MetricsReport report;

  friend bool operator==(const RunBundle&, const RunBundle&) = default;
};

inline constexpr std::string_view kBundleConfig = "scenario.cfg";
inline constexpr std::string_view kBundleRatings = "ratings.csv";
inline constexpr std::string_view kBundleStates = "states.csv";
inline constexpr std::string_view kBundleReport = "report.txt";

inline void write_bundle(const RunBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / kBundleConfig, format_scenario(bundle.config));
  write_ratings_log(bundle.log, dir / kBundleRatings);
  write_states(bundle.states, dir / kBundleStates);
  write_report(bundle.report, dir / kBundleReport);
}

inline RunBundle read_bundle(const std::filesystem::path& dir) {
  return {read_scenario(dir / kBundleConfig), read_ratings_log(dir / kBundleRatings), read_states(dir / kBundleStates),
          read_report(dir / kBundleReport)};
}

}  // namespace liquidrank
