#pragma once

// Agent-based marketplace: honest and scamming consumers buy from honest and
// scamming suppliers, rate them, and optionally consult the reputation engine
// when choosing whom to buy from.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "liquidrank/engine.hpp"
#include "liquidrank/metrics.hpp"
#include "liquidrank/types.hpp"

namespace liquidrank {

/// Whether, and on what kind of ratings, consumers consult reputation.
enum class UsageMode { none, explicit_unweighted, explicit_weighted, implicit_financial };

inline std::string_view to_string(UsageMode mode) {
  switch (mode) {
    case UsageMode::none: return "none";
    case UsageMode::explicit_unweighted: return "explicit-unweighted";
    case UsageMode::explicit_weighted: return "explicit-weighted";
    case UsageMode::implicit_financial: return "implicit-financial";
  }
  return "?";
}

inline std::optional<UsageMode> usage_mode_from_string(std::string_view text) {
  if (text == "none") return UsageMode::none;
  if (auto mode = rating_mode_from_string(text)) {
    switch (*mode) {
      case RatingMode::implicit_financial: return UsageMode::implicit_financial;
      case RatingMode::explicit_unweighted: return UsageMode::explicit_unweighted;
      case RatingMode::explicit_weighted: return UsageMode::explicit_weighted;
    }
  }
  return std::nullopt;
}

struct ScenarioConfig {
  int n_agents = 100;
  int days = 90;
  double good_fraction = 0.8;
  double consumer_fraction = 0.9;  // 1.0: every agent both buys and sells
  int bad_tx_rate_multiplier = 10;
  double good_value_ratio = 20.0;
  double good_tx_per_day = 1.0;
  double base_bad_value = 1.0;
  UsageMode usage_mode = UsageMode::explicit_weighted;
  // Ratings the engine consumes when usage_mode is none; otherwise the usage
  // mode decides.
  RatingMode measure_mode = RatingMode::explicit_weighted;
  double selection_threshold = 0.4;
  std::uint64_t seed = 1;
  EngineParams engine;

  bool overlap() const { return consumer_fraction == 1.0; }

  RatingMode rating_mode() const {
    switch (usage_mode) {
      case UsageMode::none: return measure_mode;
      case UsageMode::explicit_unweighted: return RatingMode::explicit_unweighted;
      case UsageMode::explicit_weighted: return RatingMode::explicit_weighted;
      case UsageMode::implicit_financial: return RatingMode::implicit_financial;
    }
    return measure_mode;
  }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws std::invalid_argument naming the offending field.
inline void validate(const ScenarioConfig& c) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(field) + ": " + what);
  };
  require(c.n_agents >= 2, "n_agents", "must be at least 2");
  require(c.days >= 1, "days", "must be at least 1");
  require(is_fraction(c.good_fraction), "good_fraction", "must be in [0,1]");
  require(is_fraction(c.consumer_fraction), "consumer_fraction", "must be in [0,1]");
  require(c.bad_tx_rate_multiplier >= 1, "bad_tx_rate_multiplier", "must be at least 1");
  require(c.good_value_ratio > 0.0, "good_value_ratio", "must be positive");
  require(c.good_tx_per_day > 0.0, "good_tx_per_day", "must be positive");
  require(c.base_bad_value > 0.0, "base_bad_value", "must be positive");
  require(is_fraction(c.selection_threshold), "selection_threshold", "must be in [0,1]");
  validate(c.engine);
  require(c.days >= c.engine.update_period, "days", "must cover at least one update period");
}

/// Seeded generator with a platform-independent integer draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), by rejection so no modulo bias.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index of empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Role { consumer, supplier, both };

struct Agent {
  AgentId id;
  bool good = true;
  Role role = Role::both;
  std::set<AgentId> blacklist;  // suppliers this consumer rated 0.0

  bool buys() const { return role != Role::supplier; }
  bool sells() const { return role != Role::consumer; }
};

/// Role split applied within each goodness class separately; the slots are
/// shuffled before ids are handed out so ids carry no information.
inline std::vector<Agent> spawn_population(const ScenarioConfig& config, Rng& rng) {
  validate(config);
  const long good_n = std::lround(config.n_agents * config.good_fraction);
  const long bad_n = config.n_agents - good_n;

  struct Slot {
    bool good;
    Role role;
  };
  std::vector<Slot> slots;
  auto add_class = [&](bool good, long n) {
    if (n == 0) return;
    if (config.overlap()) {
      slots.insert(slots.end(), n, Slot{good, Role::both});
      return;
    }
    const long consumers = std::lround(n * config.consumer_fraction);
    const long suppliers = n - consumers;
    if (consumers == 0 || suppliers == 0) {
      throw std::invalid_argument(std::string("population split leaves ") + (good ? "good" : "bad") +
                                  " agents without " + (consumers == 0 ? "consumers" : "suppliers"));
    }
    slots.insert(slots.end(), consumers, Slot{good, Role::consumer});
    slots.insert(slots.end(), suppliers, Slot{good, Role::supplier});
  };
  add_class(true, good_n);
  add_class(false, bad_n);
  rng.shuffle(slots);

  const std::size_t width = std::to_string(config.n_agents - 1).size();
  std::vector<Agent> agents;
  agents.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    std::string digits = std::to_string(i);
    agents.push_back(Agent{"a" + std::string(width - digits.size(), '0') + digits, slots[i].good, slots[i].role, {}});
  }
  return agents;
}

/// Good consumers pick uniformly among suppliers they have not blacklisted;
/// with a reputation state they also require rank >= threshold (suppliers the
/// state does not know count as default_rank). Bad consumers only buy from bad
/// suppliers. Returns nullptr when nobody is eligible.
inline const Agent* select_supplier(const Agent& consumer, std::span<const Agent* const> suppliers,
                                    const ReputationState* reputation, const ScenarioConfig& config, Rng& rng) {
  std::vector<const Agent*> eligible;
  eligible.reserve(suppliers.size());
  for (const Agent* s : suppliers) {
    if (s->id == consumer.id) continue;
    if (!consumer.good) {
      if (!s->good) eligible.push_back(s);
      continue;
    }
    if (consumer.blacklist.contains(s->id)) continue;
    if (reputation) {
      auto it = reputation->ranks.find(s->id);
      const double rank = it != reputation->ranks.end() ? it->second : config.engine.default_rank;
      if (rank < config.selection_threshold) continue;
    }
    eligible.push_back(s);
  }
  if (eligible.empty()) return nullptr;
  return eligible[rng.uniform_index(eligible.size())];
}

inline constexpr std::array<double, 4> kPositiveGrades{0.25, 0.5, 0.75, 1.0};

/// Rating left after a purchase. Honest buyers grade honest sellers on the
/// positive four-star scale and give scammers 0.0 (and never return); scam
/// buyers give their accomplices 1.0.
inline RatingRecord emit_rating(Agent& consumer, const Agent& supplier, int day, const ScenarioConfig& config,
                                Rng& rng) {
  RatingRecord r{day, consumer.id, supplier.id, std::nullopt, 0.0};
  if (consumer.good) {
    r.value = config.base_bad_value * config.good_value_ratio;
    if (supplier.good) {
      r.rating = kPositiveGrades[rng.uniform_index(kPositiveGrades.size())];
    } else {
      r.rating = 0.0;
      consumer.blacklist.insert(supplier.id);
    }
  } else {
    if (supplier.good) throw std::logic_error("bad consumers never buy from good suppliers");
    r.value = config.base_bad_value;
    r.rating = 1.0;
  }
  return r;
}

/// Purchase attempts of one good consumer on `day`; fractional rates are
/// spread deterministically over days.
inline int good_attempts_on(int day, double rate) {
  return static_cast<int>(std::floor(day * rate) - std::floor((day - 1) * rate));
}

/// Ground-truth goodness (1 or 0) of every agent that sells.
inline RankMap expected_goodness(std::span<const Agent> agents) {
  RankMap out;
  for (const auto& a : agents) {
    if (a.sells()) out.emplace(a.id, a.good ? 1.0 : 0.0);
  }
  return out;
}

struct ScenarioResult {
  std::vector<Agent> agents;
  TransactionLog log;
  std::vector<ReputationState> states;
  MetricsReport report;
};

/// Simulates days 1..config.days. States are computed every update period
/// whether or not consumers consult them.
inline ScenarioResult run_scenario(const ScenarioConfig& config) {
  validate(config);
  Rng rng(config.seed);
  ScenarioResult result;
  result.agents = spawn_population(config, rng);

  std::vector<const Agent*> suppliers;
  for (const auto& a : result.agents) {
    if (a.sells()) suppliers.push_back(&a);
  }

  const RatingMode mode = config.rating_mode();
  const bool consult = config.usage_mode != UsageMode::none;
  ReputationState state{0, {}};
  std::vector<RatingRecord> period;

  for (int day = 1; day <= config.days; ++day) {
    const int good_n = good_attempts_on(day, config.good_tx_per_day);
    const int bad_n = good_n * config.bad_tx_rate_multiplier;
    const ReputationState* consulted = consult && !result.states.empty() ? &state : nullptr;

    std::vector<LoggedRating> today;
    for (auto& consumer : result.agents) {
      if (!consumer.buys()) continue;
      const int attempts = consumer.good ? good_n : bad_n;
      for (int k = 0; k < attempts; ++k) {
        const Agent* supplier = select_supplier(consumer, suppliers, consulted, config, rng);
        if (!supplier) continue;
        today.push_back({emit_rating(consumer, *supplier, day, config, rng), consumer.good, supplier->good});
      }
    }
    std::stable_sort(today.begin(), today.end(), [](const LoggedRating& a, const LoggedRating& b) {
      return std::tie(a.record.rater, a.record.ratee) < std::tie(b.record.rater, b.record.ratee);
    });
    for (auto& e : today) {
      period.push_back(e.record);
      result.log.entries.push_back(std::move(e));
    }

    if (day % config.engine.update_period == 0) {
      state = update_period(state, period, config.engine, mode);
      result.states.push_back(state);
      period.clear();
    }
  }

  result.report = build_report(result.log, result.states, expected_goodness(result.agents), config.engine.default_rank);
  return result;
}

}  // namespace liquidrank
