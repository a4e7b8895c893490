#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dialeval {

// Declared label scale of a dataset's per-turn quality annotations.
enum class LabelScale { binary01, ordinal012, none };

enum class DialogSource { spoken, written };

LabelScale label_scale_from_string(const std::string& s);
const char* to_string(LabelScale scale);
DialogSource dialog_source_from_string(const std::string& s);
const char* to_string(DialogSource source);

// One user utterance followed by one system response.
struct Turn {
  int index = 0;  // 1-based, strictly increasing within a dialog
  std::string user;
  std::string system;
  std::optional<int> quality_3p;             // per-turn annotator label
  std::optional<std::vector<int>> raters;    // per-rater labels, when released
  std::optional<int> adjudicator;            // tie-break label
  // Unknown input keys, preserved verbatim as raw JSON value text so
  // third-party annotations survive a round trip.
  std::map<std::string, std::string> extras;
};

struct Dialog {
  std::string dialog_id;
  DialogSource source = DialogSource::spoken;
  bool user_terminated = true;
  std::optional<double> rating_1p;  // in [1, 5]
  std::optional<double> rating_3p;  // in [1, 5]
  std::vector<Turn> turns;          // non-empty
  std::map<std::string, std::string> extras;  // raw JSON value text per key
};

struct DatasetManifest {
  std::string name;
  LabelScale label_scale = LabelScale::none;
  // split name -> dialog ids; splits are disjoint and every id must resolve
  std::map<std::string, std::vector<std::string>> splits;
};

struct DatasetStats {
  std::size_t n_dialogs = 0;
  std::size_t n_turns = 0;
  double mean_turns = 0.0;
  std::size_t n_labeled_turns = 0;
  // label value -> percentage of labeled turns (sums to 100)
  std::map<int, double> label_percent;
};

// Throws ValidationError naming the dialog id and offending field.
void validate_dialog(const Dialog& dialog, LabelScale scale);

// One JSON dialog object per line. Malformed lines raise ParseError with the
// line number; invariant violations raise ValidationError.
std::vector<Dialog> parse_dialogs(const std::string& path,
                                  const DatasetManifest& manifest);
std::vector<Dialog> parse_dialogs(std::istream& in,
                                  const DatasetManifest& manifest,
                                  const std::string& origin = "<stream>");

// Single-line JSON rendering (no trailing newline). parse/serialize round-trip
// preserves every field, including extras, modulo key order.
std::string serialize_dialog(const Dialog& dialog);
void write_dialogs(const std::vector<Dialog>& dialogs, const std::string& path);

DatasetManifest load_manifest(const std::string& path);

// Counts, mean turns per dialog, and the label distribution over turns that
// carry quality_3p. Errors on empty input.
DatasetStats dataset_stats(const std::vector<Dialog>& dialogs);

// Partitions dialogs exactly as the manifest dictates. A split id with no
// matching dialog raises ValidationError listing every missing id.
std::map<std::string, std::vector<Dialog>> split_dialogs(
    const std::vector<Dialog>& dialogs, const DatasetManifest& manifest);

}  // namespace dialeval
