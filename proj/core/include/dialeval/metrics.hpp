#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dialeval {

struct CorrelationResult {
  double pearson = 0.0;   // in [-1, 1]
  double spearman = 0.0;  // in [-1, 1]
  std::size_t n = 0;      // >= 2
};

enum class AgreementLevel { nominal, ordinal, interval };

AgreementLevel agreement_level_from_string(const std::string& s);
const char* to_string(AgreementLevel level);

struct AgreementResult {
  double alpha = 0.0;  // <= 1
  std::size_t n_items = 0;   // pairable items (>= 2 ratings)
  std::size_t n_raters = 0;  // rater columns
  AgreementLevel level = AgreementLevel::nominal;
};

// Sample Pearson r. Requires |x| = |y| >= 2; a constant vector on either
// side raises UndefinedCorrelationError rather than producing NaN.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson over average (fractional) ranks; ties share the mean of the ranks
// they occupy.
double spearman(std::span<const double> x, std::span<const double> y);

// 1-based fractional ranks, exposed because spearman is defined through it.
std::vector<double> fractional_ranks(std::span<const double> values);

CorrelationResult correlate(std::span<const double> x,
                            std::span<const double> y);

// alpha = 1 - D_o/D_e over the coincidence matrix of paired ratings, with
// the level's squared-distance metric. Missing entries are ignored per item;
// items with fewer than two ratings do not pair. Exact agreement over every
// pair yields exactly 1.0. No pairable values raises Error.
AgreementResult krippendorff_alpha(
    const std::vector<std::vector<std::optional<double>>>& ratings,
    AgreementLevel level);

// Modal label; ties fall to the adjudicator, and a tie with no adjudicator
// raises UnresolvedTieError.
int majority_vote(const std::vector<int>& rater_labels,
                  std::optional<int> adjudicator = std::nullopt);

}  // namespace dialeval
