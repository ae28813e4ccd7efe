#pragma once

// Weighted liquid rank: incremental reputation update over one observation
// period. Every function here is pure.

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liquidrank/types.hpp"

namespace liquidrank {

/// A rating after aggregation, precision, log scaling and downrating. Unlike
/// RatingRecord it carries no range invariants: downrated ratings reach -1 and
/// scaled values are unbounded.
struct PreparedRating {
  AgentId rater;
  AgentId ratee;
  std::optional<double> rating;
  double value = 0.0;

  friend bool operator==(const PreparedRating&, const PreparedRating&) = default;
};

/// Collapses the records of each (rater, ratee) pair into one. Ratings are
/// averaged over the records that carry one. Values are summed for explicit
/// modes, so the weighted product keeps the pair's total spend; for implicit
/// mode the value is the rating and is averaged like one.
inline std::vector<RatingRecord> aggregate_ratings(std::span<const RatingRecord> records,
                                                   RatingMode mode = RatingMode::explicit_weighted) {
  struct Acc {
    RatingRecord first;
    double rating_sum = 0.0;
    int rating_count = 0;
    double value_sum = 0.0;
    int count = 0;
  };
  std::map<std::pair<AgentId, AgentId>, std::size_t> slot;
  std::vector<Acc> accs;
  for (const auto& r : records) {
    auto [it, inserted] = slot.try_emplace({r.rater, r.ratee}, accs.size());
    if (inserted) accs.push_back(Acc{r});
    Acc& a = accs[it->second];
    if (r.rating) {
      a.rating_sum += *r.rating;
      ++a.rating_count;
    }
    a.value_sum += r.value;
    ++a.count;
  }

  std::vector<RatingRecord> out;
  out.reserve(accs.size());
  for (const auto& a : accs) {
    if (a.count == 1) {
      out.push_back(a.first);
      continue;
    }
    RatingRecord r = a.first;
    r.rating = a.rating_count > 0 ? std::optional(a.rating_sum / a.rating_count) : std::nullopt;
    r.value = mode == RatingMode::implicit_financial ? a.value_sum / a.count : a.value_sum;
    out.push_back(std::move(r));
  }
  return out;
}

/// Round(value / precision), halves rounded away from zero.
inline double apply_precision(double value, double precision) {
  if (!(precision > 0.0)) throw std::invalid_argument("precision must be positive");
  return std::round(value / precision);
}

/// Signed log scale; negative values stand for withdrawn or cancelled
/// transactions.
inline double apply_log_rating(double q) {
  return q < 0.0 ? -std::log10(1.0 - q) : std::log10(1.0 + q);
}

/// Maps [0, 0.25] onto [-1, 0] and [0.25, 1] onto [0, 1].
inline double apply_downrating(double f) {
  if (!is_fraction(f)) throw std::invalid_argument("downrating input must be in [0,1]");
  return f < 0.25 ? (f - 0.25) / 0.25 : (f - 0.25) / 0.75;
}

/// Steps applied before the differential sum: aggregation, precision, log
/// scaling of values, default-rating substitution and downrating.
inline std::vector<PreparedRating> prepare_ratings(std::span<const RatingRecord> records,
                                                   const EngineParams& params, RatingMode mode) {
  std::vector<RatingRecord> aggregated;
  if (params.aggregation) {
    aggregated = aggregate_ratings(records, mode);
    records = aggregated;
  }
  std::vector<PreparedRating> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    PreparedRating p{r.rater, r.ratee, r.rating, apply_precision(r.value, params.precision)};
    if (params.log_ratings) p.value = apply_log_rating(p.value);
    if (mode != RatingMode::implicit_financial) {
      double f = p.rating.value_or(params.default_rating);
      p.rating = params.downrating ? apply_downrating(f) : f;
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Divides by the maximum, or maps [min, max] onto [0, 1] with full_norm.
/// Zero spread falls back to max-division; a non-positive maximum yields all
/// zeros. Negative entries on the max-division path are clamped to zero.
inline RankMap normalize_differential(const RankMap& raw, const EngineParams& params) {
  RankMap scaled;
  for (const auto& [id, x] : raw) scaled.emplace(id, params.log_ranks ? apply_log_rating(x) : x);
  if (scaled.empty()) return scaled;

  auto [lo_it, hi_it] = std::minmax_element(scaled.begin(), scaled.end(),
                                            [](const auto& a, const auto& b) { return a.second < b.second; });
  const double lo = lo_it->second;
  const double hi = hi_it->second;

  RankMap out;
  for (const auto& [id, x] : scaled) {
    double nd = 0.0;
    if (params.full_norm && hi > lo) {
      nd = (x - lo) / (hi - lo);
    } else if (hi > 0.0) {
      nd = std::max(0.0, x / hi);
    }
    out.emplace(id, nd);
  }
  return out;
}

/// Raw differential update accrues to the rated agent, summing over its
/// raters, each term scaled by the rater's previous rank when liquid.
inline DifferentialUpdate compute_differential(std::span<const PreparedRating> ratings,
                                               const ReputationState& prev, const EngineParams& params,
                                               RatingMode mode) {
  DifferentialUpdate du;
  du.day = prev.day + params.update_period;
  for (const auto& r : ratings) {
    double rater_rank = 1.0;
    if (params.liquid) {
      auto it = prev.ranks.find(r.rater);
      rater_rank = it != prev.ranks.end() ? it->second : params.default_rank;
    }
    const double f = r.rating.value_or(params.default_rating);
    double term = 0.0;
    switch (mode) {
      case RatingMode::implicit_financial: term = r.value * rater_rank; break;
      case RatingMode::explicit_unweighted: term = f * rater_rank; break;
      case RatingMode::explicit_weighted: term = f * r.value * rater_rank; break;
    }
    du.raw[r.ratee] += term;
  }
  du.normalized = normalize_differential(du.raw, params);
  return du;
}

/// prev * C + nd * (1 - C) over the union of both key sets. New agents start
/// from default_rank; known agents without an update take decayed_rank.
inline RankMap blend(const ReputationState& prev, const RankMap& nd, const EngineParams& params) {
  const double c = params.conservatism;
  RankMap out;
  for (const auto& [id, r] : prev.ranks) {
    auto it = nd.find(id);
    const double update = it != nd.end() ? it->second : params.decayed_rank;
    out.emplace(id, r * c + update * (1.0 - c));
  }
  for (const auto& [id, update] : nd) {
    if (!prev.ranks.contains(id)) out.emplace(id, params.default_rank * c + update * (1.0 - c));
  }
  return out;
}

/// Max-division into [0, 1]; an all-zero map stays zero.
inline ReputationState finalize_state(const RankMap& blended, int day) {
  ReputationState state{day, {}};
  double hi = 0.0;
  for (const auto& [id, x] : blended) hi = std::max(hi, x);
  for (const auto& [id, x] : blended) state.ranks.emplace(id, hi > 0.0 ? std::max(0.0, x) / hi : 0.0);
  return state;
}

/// Every intermediate of one period update.
struct PeriodTrace {
  std::vector<PreparedRating> prepared;
  DifferentialUpdate differential;
  RankMap blended;
  ReputationState state;
};

inline PeriodTrace update_period_traced(const ReputationState& prev, std::span<const RatingRecord> records,
                                        const EngineParams& params, RatingMode mode) {
  validate(params);
  const int end_day = prev.day + params.update_period;
  for (const auto& r : records) {
    validate(r);
    if (r.day <= prev.day || r.day > end_day) {
      throw std::invalid_argument("rating on day " + std::to_string(r.day) + " outside period (" +
                                  std::to_string(prev.day) + ", " + std::to_string(end_day) + "]");
    }
  }
  PeriodTrace t;
  t.prepared = prepare_ratings(records, params, mode);
  t.differential = compute_differential(t.prepared, prev, params, mode);
  t.blended = blend(prev, t.differential.normalized, params);
  t.state = finalize_state(t.blended, end_day);
  return t;
}

/// Next reputation state from the previous one and one period of ratings.
inline ReputationState update_period(const ReputationState& prev, std::span<const RatingRecord> records,
                                     const EngineParams& params, RatingMode mode) {
  return update_period_traced(prev, records, params, mode).state;
}

}  // namespace liquidrank
