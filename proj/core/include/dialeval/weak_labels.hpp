#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dialeval/dialog.hpp"
#include "dialeval/sentiment.hpp"
#include "dialeval/stamp.hpp"

namespace dialeval {

inline constexpr double kValenceMin = -3.0;
inline constexpr double kValenceMax = 3.0;

// Valence clamped to [kValenceMin, kValenceMax].
struct SentimentScore {
  double valence = 0.0;
};

// 0 = the user's next utterance ends the dialog, 1 = they continue.
struct StopSignal {
  int continues = 1;
};

enum class LabelMode { sentiment_only, sentiment_plus_stop, annotation };

LabelMode label_mode_from_string(const std::string& s);
const char* to_string(LabelMode mode);

// Reference label q for one system response.
//   sentiment_only:      q = s(next user utterance), in [-3, 3]
//   sentiment_plus_stop: q = s + e, in [-3, 4]
//   annotation:          q = the turn's quality_3p label
struct WeakLabel {
  double q = 0.0;
  LabelMode mode = LabelMode::sentiment_only;
};

struct TurnLabel {
  int turn_index = 0;
  WeakLabel label;
};

struct LabelBatch {
  std::vector<TurnLabel> labels;
  std::size_t skipped_turns = 0;  // system responses with no usable signal
};

// Stop phrases matched case-insensitively against the normalized utterance.
class StopPhraseList {
 public:
  StopPhraseList();  // defaults: "stop", "goodbye", "bye", "alexa stop", ...
  explicit StopPhraseList(std::vector<std::string> phrases);
  static StopPhraseList from_file(const std::string& path);  // one per line

  bool matches(std::string_view utterance) const;
  std::size_t size() const { return normalized_.size(); }

 private:
  std::vector<std::string> normalized_;
};

// Provider valence clamped onto the declared range. Provider failures
// propagate as ProviderError.
SentimentScore score_sentiment(std::string_view utterance,
                               SentimentProvider& provider);

// continues = 0 iff the next user utterance u_{i+1} matches the stop-phrase
// list OR is the final user utterance of a dialog with user_terminated set.
// turn_index is 1-based; the turn after it must exist, else ValidationError.
StopSignal detect_stop(const Dialog& dialog, int turn_index,
                       const StopPhraseList& stops = StopPhraseList());

// One label per system response that has a following user utterance; the
// trailing turn (no u_{i+1}) is skipped and counted. mode must be a
// sentiment mode; use build_annotation_labels for annotation labels.
LabelBatch build_weak_labels(const Dialog& dialog, LabelMode mode,
                             SentimentProvider& provider,
                             const StopPhraseList& stops = StopPhraseList());

// q = quality_3p for every labeled turn; unlabeled turns are counted as
// skipped. A dialog with no labeled turns yields an empty batch.
LabelBatch build_annotation_labels(const Dialog& dialog);

// On-disk label row: JSONL of {"dialog_id", "turn_index", "q", "mode"}.
struct LabelRow {
  std::string dialog_id;
  int turn_index = 0;
  double q = 0.0;
  LabelMode mode = LabelMode::sentiment_only;
};

void write_label_file(const std::vector<LabelRow>& rows,
                      const std::string& path, const RunStamp& stamp);
std::vector<LabelRow> read_label_file(const std::string& path);

}  // namespace dialeval
