#include "dialeval/score_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "dialeval/errors.hpp"
#include "dialeval/text.hpp"

namespace dialeval {

namespace {

constexpr const char* kHeader = "dialog_id\tturn_index\tscore";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

void ScoreTable::sort_and_validate() {
  std::sort(rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
    if (a.dialog_id != b.dialog_id) return a.dialog_id < b.dialog_id;
    return a.turn_index < b.turn_index;
  });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].dialog_id == rows[i - 1].dialog_id &&
        rows[i].turn_index == rows[i - 1].turn_index)
      throw ValidationError("duplicate score row for turn " +
                                std::to_string(rows[i].turn_index),
                            rows[i].dialog_id);
}

const ScoreRow* ScoreTable::find(const std::string& dialog_id,
                                 int turn_index) const {
  auto it = std::lower_bound(
      rows.begin(), rows.end(), std::pair(dialog_id, turn_index),
      [](const ScoreRow& row, const std::pair<std::string, int>& key) {
        if (row.dialog_id != key.first) return row.dialog_id < key.first;
        return row.turn_index < key.second;
      });
  if (it == rows.end() || it->dialog_id != dialog_id ||
      it->turn_index != turn_index)
    return nullptr;
  return &*it;
}

ScoreTable read_score_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open score table: " + path);
  ScoreTable table;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kHeader)
        throw ParseError(path + ": expected header \"" + kHeader + "\"", line_no);
      header_seen = true;
      continue;
    }
    const std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError(path + ": expected 3 tab-separated fields", line_no);
    ScoreRow row;
    row.dialog_id = fields[0];
    {
      auto [p, ec] = std::from_chars(fields[1].data(),
                                     fields[1].data() + fields[1].size(),
                                     row.turn_index);
      if (ec != std::errc() || p != fields[1].data() + fields[1].size())
        throw ParseError(path + ": bad turn_index \"" + fields[1] + "\"", line_no);
    }
    {
      auto [p, ec] = std::from_chars(fields[2].data(),
                                     fields[2].data() + fields[2].size(),
                                     row.score);
      if (ec != std::errc() || p != fields[2].data() + fields[2].size())
        throw ParseError(path + ": bad score \"" + fields[2] + "\"", line_no);
    }
    table.rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw ParseError(path + ": missing header \"" + std::string(kHeader) + "\"");
  table.sort_and_validate();
  return table;
}

void write_score_table(const ScoreTable& table, const std::string& path,
                       const RunStamp& stamp) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << stamp_comment(stamp) << '\n' << kHeader << '\n';
  for (const ScoreRow& row : table.rows)
    out << row.dialog_id << '\t' << row.turn_index << '\t'
        << format_double(row.score) << '\n';
}

}  // namespace dialeval
