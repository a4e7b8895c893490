#include "dialeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dialeval/errors.hpp"

namespace dialeval {

AgreementLevel agreement_level_from_string(const std::string& s) {
  if (s == "nominal") return AgreementLevel::nominal;
  if (s == "ordinal") return AgreementLevel::ordinal;
  if (s == "interval") return AgreementLevel::interval;
  throw ConfigError("unknown agreement level: " + s);
}

const char* to_string(AgreementLevel level) {
  switch (level) {
    case AgreementLevel::nominal: return "nominal";
    case AgreementLevel::ordinal: return "ordinal";
    case AgreementLevel::interval: return "interval";
  }
  return "?";
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ValidationError("correlation inputs differ in length: " +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()));
  if (x.size() < 2)
    throw UndefinedCorrelationError(
        "correlation needs at least 2 pairs, got " + std::to_string(x.size()));
  for (double v : x)
    if (!std::isfinite(v)) throw ValidationError("non-finite value in x");
  for (double v : y)
    if (!std::isfinite(v)) throw ValidationError("non-finite value in y");
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const std::size_t n = x.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0)
    throw UndefinedCorrelationError(
        "correlation undefined: constant input vector");
  return cov / std::sqrt(var_x * var_y);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the average of ranks i+1..j+1
    const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const std::vector<double> rx = fractional_ranks(x);
  const std::vector<double> ry = fractional_ranks(y);
  return pearson(rx, ry);
}

CorrelationResult correlate(std::span<const double> x,
                            std::span<const double> y) {
  CorrelationResult r;
  r.pearson = pearson(x, y);
  r.spearman = spearman(x, y);
  r.n = x.size();
  return r;
}

AgreementResult krippendorff_alpha(
    const std::vector<std::vector<std::optional<double>>>& ratings,
    AgreementLevel level) {
  // Distinct values, ordered; labels are compared exactly.
  std::map<double, std::size_t> value_index;
  std::size_t n_raters = 0;
  for (const auto& item : ratings) {
    n_raters = std::max(n_raters, item.size());
    for (const auto& v : item)
      if (v) value_index.emplace(*v, 0);
  }
  std::size_t next = 0;
  std::vector<double> values;
  values.reserve(value_index.size());
  for (auto& [v, idx] : value_index) {
    idx = next++;
    values.push_back(v);
  }
  const std::size_t n_values = values.size();

  // Coincidence matrix over pairable items (>= 2 ratings).
  std::vector<std::vector<double>> coincidence(
      n_values, std::vector<double>(n_values, 0.0));
  std::size_t n_items = 0;
  for (const auto& item : ratings) {
    std::vector<std::size_t> present;
    for (const auto& v : item)
      if (v) present.push_back(value_index.at(*v));
    const std::size_t m = present.size();
    if (m < 2) continue;
    ++n_items;
    std::vector<double> counts(n_values, 0.0);
    for (std::size_t idx : present) counts[idx] += 1.0;
    for (std::size_t c = 0; c < n_values; ++c) {
      if (counts[c] == 0.0) continue;
      for (std::size_t k = 0; k < n_values; ++k) {
        const double pairs = counts[c] * (counts[k] - (c == k ? 1.0 : 0.0));
        if (pairs != 0.0)
          coincidence[c][k] += pairs / static_cast<double>(m - 1);
      }
    }
  }
  if (n_items < 2)
    throw Error("krippendorff_alpha needs at least 2 items with 2+ ratings, got " +
                std::to_string(n_items));

  std::vector<double> marginal(n_values, 0.0);
  for (std::size_t c = 0; c < n_values; ++c)
    for (std::size_t k = 0; k < n_values; ++k) marginal[c] += coincidence[c][k];

  auto distance_sq = [&](std::size_t c, std::size_t k) -> double {
    if (c == k) return 0.0;
    switch (level) {
      case AgreementLevel::nominal:
        return 1.0;
      case AgreementLevel::interval: {
        const double d = values[c] - values[k];
        return d * d;
      }
      case AgreementLevel::ordinal: {
        const auto lo = std::min(c, k);
        const auto hi = std::max(c, k);
        double cum = 0.0;
        for (std::size_t g = lo; g <= hi; ++g) cum += marginal[g];
        const double d = cum - 0.5 * (marginal[c] + marginal[k]);
        return d * d;
      }
    }
    return 0.0;
  };

  double observed = 0.0, expected = 0.0;
  for (std::size_t c = 0; c < n_values; ++c) {
    for (std::size_t k = 0; k < n_values; ++k) {
      const double d2 = distance_sq(c, k);
      observed += coincidence[c][k] * d2;
      expected += marginal[c] * marginal[k] * d2;
    }
  }
  double total = 0.0;
  for (double m : marginal) total += m;

  AgreementResult result;
  result.n_items = n_items;
  result.n_raters = n_raters;
  result.level = level;
  if (observed == 0.0) {
    // every pair within every item agrees exactly
    result.alpha = 1.0;
    return result;
  }
  if (expected == 0.0)
    throw Error("krippendorff_alpha: expected disagreement is zero");
  result.alpha = 1.0 - (total - 1.0) * observed / expected;
  return result;
}

int majority_vote(const std::vector<int>& rater_labels,
                  std::optional<int> adjudicator) {
  if (rater_labels.empty())
    throw ValidationError("majority_vote requires at least one rater label");
  std::map<int, std::size_t> counts;
  for (int label : rater_labels) ++counts[label];
  std::size_t best = 0;
  for (const auto& [label, count] : counts) best = std::max(best, count);
  std::vector<int> modal;
  for (const auto& [label, count] : counts)
    if (count == best) modal.push_back(label);
  if (modal.size() == 1) return modal.front();
  if (adjudicator) return *adjudicator;
  std::string tied;
  for (int label : modal) {
    if (!tied.empty()) tied += ", ";
    tied += std::to_string(label);
  }
  throw UnresolvedTieError("majority vote tied between {" + tied +
                           "} and no adjudicator label is available");
}

}  // namespace dialeval
