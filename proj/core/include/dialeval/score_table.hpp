#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dialeval/stamp.hpp"

namespace dialeval {

struct ScoreRow {
  std::string dialog_id;
  int turn_index = 0;
  double score = 0.0;
};

// Per-turn score table, kept sorted by (dialog_id, turn_index). Duplicate
// (dialog_id, turn_index) rows are rejected.
struct ScoreTable {
  std::vector<ScoreRow> rows;

  void sort_and_validate();  // throws ValidationError on duplicates
  const ScoreRow* find(const std::string& dialog_id, int turn_index) const;
};

// TSV with header "dialog_id\tturn_index\tscore". Lines starting with '#'
// are provenance comments and are skipped on read.
ScoreTable read_score_table(const std::string& path);
void write_score_table(const ScoreTable& table, const std::string& path,
                       const RunStamp& stamp);

}  // namespace dialeval
