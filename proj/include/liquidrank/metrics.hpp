#pragma once

// Financial and accuracy metrics of a market run. Undefined quantities (a
// ratio with zero denominator, a correlation of a constant series) are empty
// optionals, never a sentinel number.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "liquidrank/types.hpp"

namespace liquidrank {

struct FinancialMetrics {
  double volume_good = 0.0;         // V_g: spend by good consumers
  double volume_bad = 0.0;          // V_b: spend by bad consumers
  double volume_good_to_bad = 0.0;  // V_gb: good consumers' spend at bad suppliers
  std::optional<double> loss_to_scam;
  std::optional<double> profit_from_scam;
};

struct GoodBadMean {
  std::optional<double> good;
  std::optional<double> bad;
  std::optional<double> mean;
};

struct MetricsReport {
  std::optional<double> profit_from_scam;
  std::optional<double> loss_to_scam;
  std::optional<double> pearson_avg;
  std::optional<double> pearson_latest;
  std::optional<double> acc_good;
  std::optional<double> acc_bad;
  std::optional<double> acc_mean;
  std::optional<double> rmsd_good;
  std::optional<double> rmsd_bad;
  std::optional<double> rmsd_mean;
  double volume_good = 0.0;
  double volume_bad = 0.0;
  double volume_good_to_bad = 0.0;
  std::optional<double> volume_ratio;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

struct MetricField {
  std::string_view name;
  std::optional<double> MetricsReport::*member;
};

/// Ratio-valued report fields in table column order.
inline constexpr std::array<MetricField, 11> kMetricFields{{
    {"profit_from_scam", &MetricsReport::profit_from_scam},
    {"loss_to_scam", &MetricsReport::loss_to_scam},
    {"pearson_avg", &MetricsReport::pearson_avg},
    {"pearson_latest", &MetricsReport::pearson_latest},
    {"acc_good", &MetricsReport::acc_good},
    {"acc_bad", &MetricsReport::acc_bad},
    {"acc_mean", &MetricsReport::acc_mean},
    {"rmsd_good", &MetricsReport::rmsd_good},
    {"rmsd_bad", &MetricsReport::rmsd_bad},
    {"rmsd_mean", &MetricsReport::rmsd_mean},
    {"volume_ratio", &MetricsReport::volume_ratio},
}};

inline std::optional<double> safe_ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

inline FinancialMetrics financial_metrics(const TransactionLog& log) {
  FinancialMetrics m;
  for (const auto& e : log.entries) {
    if (e.rater_good) {
      m.volume_good += e.record.value;
      if (!e.ratee_good) m.volume_good_to_bad += e.record.value;
    } else {
      m.volume_bad += e.record.value;
    }
  }
  m.loss_to_scam = safe_ratio(m.volume_good_to_bad, m.volume_good);
  m.profit_from_scam = safe_ratio(m.volume_good_to_bad, m.volume_bad);
  return m;
}

namespace detail {

inline void require_same_keys(const RankMap& computed, const RankMap& expected) {
  if (computed.size() != expected.size()) throw std::invalid_argument("computed and expected key sets differ");
  for (auto a = computed.begin(), b = expected.begin(); a != computed.end(); ++a, ++b) {
    if (a->first != b->first) throw std::invalid_argument("computed and expected key sets differ at '" + a->first + "'");
  }
}

}  // namespace detail

/// Goodness-weighted and badness-weighted average of computed goodness and
/// badness respectively.
inline GoodBadMean accuracy_metrics(const RankMap& computed, const RankMap& expected) {
  detail::require_same_keys(computed, expected);
  double good_num = 0.0, good_den = 0.0, bad_num = 0.0, bad_den = 0.0;
  for (auto c = computed.begin(), e = expected.begin(); c != computed.end(); ++c, ++e) {
    good_num += c->second * e->second;
    good_den += e->second;
    bad_num += (1.0 - c->second) * (1.0 - e->second);
    bad_den += 1.0 - e->second;
  }
  GoodBadMean out{safe_ratio(good_num, good_den), safe_ratio(bad_num, bad_den), std::nullopt};
  if (out.good && out.bad) out.mean = (*out.good + *out.bad) / 2.0;
  return out;
}

/// Root-mean-square deviations, weighted by expected goodness, by expected
/// badness, and unweighted.
inline GoodBadMean rmsd_metrics(const RankMap& computed, const RankMap& expected) {
  detail::require_same_keys(computed, expected);
  double good_num = 0.0, good_den = 0.0, bad_num = 0.0, bad_den = 0.0, all = 0.0;
  for (auto c = computed.begin(), e = expected.begin(); c != computed.end(); ++c, ++e) {
    const double sq = (c->second - e->second) * (c->second - e->second);
    good_num += sq * e->second;
    good_den += e->second;
    bad_num += sq * (1.0 - e->second);
    bad_den += 1.0 - e->second;
    all += sq;
  }
  auto root = [](std::optional<double> x) { return x ? std::optional(std::sqrt(*x)) : std::nullopt; };
  return {root(safe_ratio(good_num, good_den)), root(safe_ratio(bad_num, bad_den)),
          root(safe_ratio(all, static_cast<double>(computed.size())))};
}

/// Sample Pearson correlation of two equal-length series.
inline std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: series lengths differ");
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline std::optional<double> pearson(const RankMap& computed, const RankMap& expected) {
  detail::require_same_keys(computed, expected);
  std::vector<double> c, e;
  c.reserve(computed.size());
  e.reserve(expected.size());
  for (const auto& [id, v] : computed) c.push_back(v);
  for (const auto& [id, v] : expected) e.push_back(v);
  return pearson(c, e);
}

/// Computed goodness of every labelled agent in `state`; agents the state
/// does not know are scored at `missing_rank`.
inline RankMap computed_goodness(const ReputationState& state, const RankMap& expected, double missing_rank) {
  RankMap out;
  for (const auto& [id, label] : expected) {
    auto it = state.ranks.find(id);
    out.emplace(id, it != state.ranks.end() ? it->second : missing_rank);
  }
  return out;
}

namespace detail {

struct RunningMean {
  double sum = 0.0;
  int n = 0;
  void add(std::optional<double> x) {
    if (x) {
      sum += *x;
      ++n;
    }
  }
  std::optional<double> value() const { return n > 0 ? std::optional(sum / n) : std::nullopt; }
};

}  // namespace detail

/// Financial metrics over the whole log; correlation, accuracy and deviation
/// averaged over every state where defined, plus the latest correlation.
inline MetricsReport build_report(const TransactionLog& log, std::span<const ReputationState> states,
                                  const RankMap& expected, double missing_rank) {
  if (states.empty()) throw std::invalid_argument("build_report needs at least one reputation state");
  MetricsReport r;
  const FinancialMetrics fin = financial_metrics(log);
  r.profit_from_scam = fin.profit_from_scam;
  r.loss_to_scam = fin.loss_to_scam;
  r.volume_good = fin.volume_good;
  r.volume_bad = fin.volume_bad;
  r.volume_good_to_bad = fin.volume_good_to_bad;
  r.volume_ratio = safe_ratio(fin.volume_good, fin.volume_bad);

  detail::RunningMean pcc, acc_g, acc_b, dev_g, dev_b, dev_m;
  for (const auto& state : states) {
    const RankMap computed = computed_goodness(state, expected, missing_rank);
    pcc.add(pearson(computed, expected));
    const GoodBadMean acc = accuracy_metrics(computed, expected);
    acc_g.add(acc.good);
    acc_b.add(acc.bad);
    const GoodBadMean dev = rmsd_metrics(computed, expected);
    dev_g.add(dev.good);
    dev_b.add(dev.bad);
    dev_m.add(dev.mean);
  }
  r.pearson_avg = pcc.value();
  r.pearson_latest = pearson(computed_goodness(states.back(), expected, missing_rank), expected);
  r.acc_good = acc_g.value();
  r.acc_bad = acc_b.value();
  if (r.acc_good && r.acc_bad) r.acc_mean = (*r.acc_good + *r.acc_bad) / 2.0;
  r.rmsd_good = dev_g.value();
  r.rmsd_bad = dev_b.value();
  r.rmsd_mean = dev_m.value();
  return r;
}

}  // namespace liquidrank
