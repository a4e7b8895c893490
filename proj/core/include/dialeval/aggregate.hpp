#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dialeval/score_table.hpp"
#include "dialeval/stamp.hpp"

namespace dialeval {

struct DialogScore {
  std::string dialog_id;
  double value = 0.0;
  std::size_t n_turns = 0;  // >= 1
};

// Arithmetic mean; errors on an empty list.
double aggregate_mean(const std::vector<double>& turn_scores);

// Aggregation strategies are registered by name so alternates can ship
// later; "mean" is the only built-in.
using AggregateFn = double (*)(const std::vector<double>&);
class AggregatorRegistry {
 public:
  static AggregatorRegistry& instance();
  void add(const std::string& name, AggregateFn fn);
  AggregateFn get(const std::string& name) const;  // throws ConfigError

 private:
  AggregatorRegistry();
  std::map<std::string, AggregateFn> fns_;
};

// One DialogScore per dialog with at least one scored turn, ordered by
// dialog_id. Row order within the input table does not affect the result.
std::vector<DialogScore> aggregate_corpus(const ScoreTable& table,
                                          const std::string& strategy = "mean");

// TSV with header "dialog_id\tscore\tn_turns".
void write_dialog_scores(const std::vector<DialogScore>& scores,
                         const std::string& path, const RunStamp& stamp);
std::vector<DialogScore> read_dialog_scores(const std::string& path);

}  // namespace dialeval
