#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liquidrank {

using AgentId = std::string;
using RankMap = std::map<AgentId, double>;

/// How ratings feed the differential update.
enum class RatingMode {
  implicit_financial,   // transaction value is the rating
  explicit_unweighted,  // explicit rating only
  explicit_weighted,    // explicit rating times transaction value
};

inline std::string_view to_string(RatingMode mode) {
  switch (mode) {
    case RatingMode::implicit_financial: return "implicit-financial";
    case RatingMode::explicit_unweighted: return "explicit-unweighted";
    case RatingMode::explicit_weighted: return "explicit-weighted";
  }
  return "?";
}

inline std::optional<RatingMode> rating_mode_from_string(std::string_view text) {
  if (text == "implicit-financial") return RatingMode::implicit_financial;
  if (text == "explicit-unweighted") return RatingMode::explicit_unweighted;
  if (text == "explicit-weighted") return RatingMode::explicit_weighted;
  return std::nullopt;
}

/// Knobs of the weighted liquid rank update.
struct EngineParams {
  double default_rank = 0.5;   // rank of agents seen for the first time
  double conservatism = 0.5;   // weight of the previous rank when blending
  double decayed_rank = 0.0;   // stand-in update for agents not rated this period
  double default_rating = 0.5; // stand-in for a missing explicit rating
  double precision = 0.01;     // financial values become Round(value / precision)
  bool weighting = true;
  bool full_norm = true;
  bool liquid = true;
  bool log_ranks = false;
  bool log_ratings = false;
  bool aggregation = false;
  bool downrating = false;
  int update_period = 1;  // days per observation period

  friend bool operator==(const EngineParams&, const EngineParams&) = default;
};

inline bool is_fraction(double x) { return x >= 0.0 && x <= 1.0; }

/// Throws std::invalid_argument naming the first offending field.
inline void validate(const EngineParams& p) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(field) + ": " + what);
  };
  require(is_fraction(p.default_rank), "default_rank", "must be in [0,1]");
  require(is_fraction(p.conservatism), "conservatism", "must be in [0,1]");
  require(is_fraction(p.decayed_rank), "decayed_rank", "must be in [0,1]");
  require(is_fraction(p.default_rating), "default_rating", "must be in [0,1]");
  require(p.precision > 0.0, "precision", "must be positive");
  require(p.update_period >= 1, "update_period", "must be at least 1");
}

/// One rating or transaction event.
struct RatingRecord {
  int day = 0;
  AgentId rater;
  AgentId ratee;
  std::optional<double> rating;  // absent for implicit-only records
  double value = 0.0;

  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

inline void validate(const RatingRecord& r) {
  if (r.rater == r.ratee) throw std::invalid_argument("rating record: rater equals ratee '" + r.rater + "'");
  if (r.rating && !is_fraction(*r.rating)) throw std::invalid_argument("rating record: rating outside [0,1]");
  if (!(r.value >= 0.0)) throw std::invalid_argument("rating record: negative value");
}

/// Ranks of every agent known at the end of an observation period.
struct ReputationState {
  int day = 0;
  RankMap ranks;

  friend bool operator==(const ReputationState&, const ReputationState&) = default;
};

/// A rating as it happened in the market, with the ground-truth goodness of
/// both parties.
struct LoggedRating {
  RatingRecord record;
  bool rater_good = true;
  bool ratee_good = true;

  friend bool operator==(const LoggedRating&, const LoggedRating&) = default;
};

/// Ordered by day; within a day by rater, then ratee.
struct TransactionLog {
  std::vector<LoggedRating> entries;

  friend bool operator==(const TransactionLog&, const TransactionLog&) = default;
};

struct DifferentialUpdate {
  int day = 0;
  RankMap raw;
  RankMap normalized;
};

}  // namespace liquidrank
