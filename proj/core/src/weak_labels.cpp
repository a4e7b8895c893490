#include "dialeval/weak_labels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "dialeval/errors.hpp"
#include "dialeval/text.hpp"

namespace dialeval {

using nlohmann::json;

LabelMode label_mode_from_string(const std::string& s) {
  if (s == "sentiment_only") return LabelMode::sentiment_only;
  if (s == "sentiment_plus_stop") return LabelMode::sentiment_plus_stop;
  if (s == "annotation") return LabelMode::annotation;
  throw ConfigError("unknown label mode: " + s);
}

const char* to_string(LabelMode mode) {
  switch (mode) {
    case LabelMode::sentiment_only: return "sentiment_only";
    case LabelMode::sentiment_plus_stop: return "sentiment_plus_stop";
    case LabelMode::annotation: return "annotation";
  }
  return "?";
}

StopPhraseList::StopPhraseList()
    : StopPhraseList(std::vector<std::string>{
          "stop", "alexa stop", "goodbye", "bye", "exit", "quit"}) {}

StopPhraseList::StopPhraseList(std::vector<std::string> phrases) {
  for (const std::string& phrase : phrases) {
    std::string norm = normalize_utterance(phrase);
    if (norm.empty()) continue;
    if (std::find(normalized_.begin(), normalized_.end(), norm) ==
        normalized_.end())
      normalized_.push_back(std::move(norm));
  }
}

StopPhraseList StopPhraseList::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stop-phrase file: " + path);
  std::vector<std::string> phrases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    phrases.push_back(line);
  }
  return StopPhraseList(std::move(phrases));
}

bool StopPhraseList::matches(std::string_view utterance) const {
  const std::string norm = normalize_utterance(utterance);
  if (norm.empty()) return false;
  return std::find(normalized_.begin(), normalized_.end(), norm) !=
         normalized_.end();
}

SentimentScore score_sentiment(std::string_view utterance,
                               SentimentProvider& provider) {
  const double raw = provider.score(utterance);
  if (std::isnan(raw))
    throw ProviderError(provider.id(), "provider returned NaN valence");
  return SentimentScore{std::clamp(raw, kValenceMin, kValenceMax)};
}

namespace {

std::size_t turn_position(const Dialog& dialog, int turn_index) {
  for (std::size_t p = 0; p < dialog.turns.size(); ++p)
    if (dialog.turns[p].index == turn_index) return p;
  throw ValidationError("no turn with index " + std::to_string(turn_index),
                        dialog.dialog_id);
}

}  // namespace

StopSignal detect_stop(const Dialog& dialog, int turn_index,
                       const StopPhraseList& stops) {
  const std::size_t p = turn_position(dialog, turn_index);
  if (p + 1 >= dialog.turns.size())
    throw ValidationError("turn " + std::to_string(turn_index) +
                              " has no next user utterance",
                          dialog.dialog_id);
  const std::string& next_user = dialog.turns[p + 1].user;
  const bool final_user_utterance = p + 2 == dialog.turns.size();
  const bool stopped = stops.matches(next_user) ||
                       (final_user_utterance && dialog.user_terminated);
  return StopSignal{stopped ? 0 : 1};
}

LabelBatch build_weak_labels(const Dialog& dialog, LabelMode mode,
                             SentimentProvider& provider,
                             const StopPhraseList& stops) {
  if (mode == LabelMode::annotation)
    throw ConfigError(
        "build_weak_labels handles sentiment modes; use "
        "build_annotation_labels for annotation labels");
  LabelBatch batch;
  if (dialog.turns.empty()) return batch;
  for (std::size_t p = 0; p + 1 < dialog.turns.size(); ++p) {
    const Turn& turn = dialog.turns[p];
    SentimentScore s;
    try {
      s = score_sentiment(dialog.turns[p + 1].user, provider);
    } catch (const ProviderError& e) {
      throw ProviderError(provider.id(),
                          std::string(e.what()) + " [dialog " +
                              dialog.dialog_id + " turn " +
                              std::to_string(turn.index) + "]");
    }
    double q = s.valence;
    if (mode == LabelMode::sentiment_plus_stop)
      q += detect_stop(dialog, turn.index, stops).continues;
    batch.labels.push_back(TurnLabel{turn.index, WeakLabel{q, mode}});
  }
  // the trailing system response has no following user utterance
  batch.skipped_turns = 1;
  return batch;
}

LabelBatch build_annotation_labels(const Dialog& dialog) {
  LabelBatch batch;
  for (const Turn& turn : dialog.turns) {
    if (turn.quality_3p)
      batch.labels.push_back(TurnLabel{
          turn.index,
          WeakLabel{static_cast<double>(*turn.quality_3p), LabelMode::annotation}});
    else
      ++batch.skipped_turns;
  }
  return batch;
}

void write_label_file(const std::vector<LabelRow>& rows,
                      const std::string& path, const RunStamp& stamp) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  json preamble;
  preamble["dialeval_version"] = stamp.tool_version;
  preamble["config_hash"] = stamp.config_hash;
  preamble["seed"] = stamp.seed;
  out << preamble.dump() << '\n';
  for (const LabelRow& row : rows) {
    json j;
    j["dialog_id"] = row.dialog_id;
    j["turn_index"] = row.turn_index;
    j["q"] = row.q;
    j["mode"] = to_string(row.mode);
    out << j.dump() << '\n';
  }
}

std::vector<LabelRow> read_label_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open label file: " + path);
  std::vector<LabelRow> rows;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(path + ": " + e.what(), line_no);
    }
    if (!j.contains("dialog_id")) continue;  // provenance preamble
    try {
      LabelRow row;
      row.dialog_id = j.at("dialog_id").get<std::string>();
      row.turn_index = j.at("turn_index").get<int>();
      row.q = j.at("q").get<double>();
      row.mode = label_mode_from_string(j.at("mode").get<std::string>());
      rows.push_back(std::move(row));
    } catch (const json::exception& e) {
      throw ParseError(path + ": " + e.what(), line_no);
    }
  }
  return rows;
}

}  // namespace dialeval
