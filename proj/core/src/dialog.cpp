#include "dialeval/dialog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dialeval/errors.hpp"

namespace dialeval {

using nlohmann::json;

LabelScale label_scale_from_string(const std::string& s) {
  if (s == "binary01") return LabelScale::binary01;
  if (s == "ordinal012") return LabelScale::ordinal012;
  if (s == "none") return LabelScale::none;
  throw ConfigError("unknown label scale: " + s);
}

const char* to_string(LabelScale scale) {
  switch (scale) {
    case LabelScale::binary01: return "binary01";
    case LabelScale::ordinal012: return "ordinal012";
    case LabelScale::none: return "none";
  }
  return "?";
}

DialogSource dialog_source_from_string(const std::string& s) {
  if (s == "spoken") return DialogSource::spoken;
  if (s == "written") return DialogSource::written;
  throw ConfigError("unknown dialog source: " + s);
}

const char* to_string(DialogSource source) {
  return source == DialogSource::spoken ? "spoken" : "written";
}

namespace {

bool label_in_scale(int label, LabelScale scale) {
  switch (scale) {
    case LabelScale::binary01: return label == 0 || label == 1;
    case LabelScale::ordinal012: return label >= 0 && label <= 2;
    case LabelScale::none: return true;
  }
  return false;
}

void check_label(int label, LabelScale scale, const std::string& dialog_id,
                 const std::string& field) {
  if (!label_in_scale(label, scale))
    throw ValidationError("label " + std::to_string(label) +
                              " outside declared scale " + to_string(scale),
                          dialog_id, field);
}

const std::set<std::string> kDialogKeys = {
    "dialog_id", "source", "user_terminated", "rating_1p", "rating_3p", "turns"};
const std::set<std::string> kTurnKeys = {
    "index", "user", "system", "quality_3p", "raters", "adjudicator"};

Turn turn_from_json(const json& j, const std::string& dialog_id) {
  if (!j.is_object())
    throw ValidationError("turn entry is not an object", dialog_id, "turns");
  Turn turn;
  turn.index = j.at("index").get<int>();
  turn.user = j.at("user").get<std::string>();
  turn.system = j.at("system").get<std::string>();
  if (j.contains("quality_3p") && !j["quality_3p"].is_null())
    turn.quality_3p = j["quality_3p"].get<int>();
  if (j.contains("raters") && !j["raters"].is_null())
    turn.raters = j["raters"].get<std::vector<int>>();
  if (j.contains("adjudicator") && !j["adjudicator"].is_null())
    turn.adjudicator = j["adjudicator"].get<int>();
  for (const auto& [key, value] : j.items())
    if (!kTurnKeys.count(key)) turn.extras[key] = value.dump();
  return turn;
}

Dialog dialog_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("dialog record is not an object");
  Dialog d;
  d.dialog_id = j.at("dialog_id").get<std::string>();
  d.source = j.contains("source")
                 ? dialog_source_from_string(j["source"].get<std::string>())
                 : DialogSource::spoken;
  // spoken interactions end when the user asks to stop; written ones don't
  d.user_terminated = d.source == DialogSource::spoken;
  if (j.contains("user_terminated") && !j["user_terminated"].is_null())
    d.user_terminated = j["user_terminated"].get<bool>();
  if (j.contains("rating_1p") && !j["rating_1p"].is_null())
    d.rating_1p = j["rating_1p"].get<double>();
  if (j.contains("rating_3p") && !j["rating_3p"].is_null())
    d.rating_3p = j["rating_3p"].get<double>();
  if (j.contains("turns"))
    for (const auto& turn : j.at("turns"))
      d.turns.push_back(turn_from_json(turn, d.dialog_id));
  for (const auto& [key, value] : j.items())
    if (!kDialogKeys.count(key)) d.extras[key] = value.dump();
  return d;
}

}  // namespace

void validate_dialog(const Dialog& dialog, LabelScale scale) {
  const std::string& id = dialog.dialog_id;
  if (id.empty()) throw ValidationError("empty dialog_id");
  if (dialog.turns.empty())
    throw ValidationError("dialog has no turns", id, "turns");
  int last_index = 0;
  for (const Turn& turn : dialog.turns) {
    if (turn.index < 1)
      throw ValidationError("turn index must be >= 1, got " +
                                std::to_string(turn.index),
                            id, "index");
    if (turn.index <= last_index)
      throw ValidationError("turn indices must be strictly increasing (" +
                                std::to_string(turn.index) + " after " +
                                std::to_string(last_index) + ")",
                            id, "index");
    last_index = turn.index;
    if (turn.quality_3p) check_label(*turn.quality_3p, scale, id, "quality_3p");
    if (turn.raters)
      for (int r : *turn.raters) check_label(r, scale, id, "raters");
    if (turn.adjudicator) check_label(*turn.adjudicator, scale, id, "adjudicator");
  }
  auto check_rating = [&](const std::optional<double>& r, const char* field) {
    if (r && (*r < 1.0 || *r > 5.0))
      throw ValidationError("rating must lie in [1, 5], got " +
                                std::to_string(*r),
                            id, field);
  };
  check_rating(dialog.rating_1p, "rating_1p");
  check_rating(dialog.rating_3p, "rating_3p");
}

std::vector<Dialog> parse_dialogs(std::istream& in,
                                  const DatasetManifest& manifest,
                                  const std::string& origin) {
  std::vector<Dialog> dialogs;
  std::set<std::string> seen_ids;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(origin + ": " + e.what(), line_no);
    }
    Dialog d;
    try {
      d = dialog_from_json(j);
    } catch (const json::exception& e) {
      throw ParseError(origin + ": " + e.what(), line_no);
    }
    validate_dialog(d, manifest.label_scale);
    if (!seen_ids.insert(d.dialog_id).second)
      throw ValidationError("duplicate dialog_id", d.dialog_id);
    dialogs.push_back(std::move(d));
  }
  return dialogs;
}

std::vector<Dialog> parse_dialogs(const std::string& path,
                                  const DatasetManifest& manifest) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dialog file: " + path);
  return parse_dialogs(in, manifest, path);
}

namespace {

json turn_to_json(const Turn& turn) {
  json j;
  j["index"] = turn.index;
  j["user"] = turn.user;
  j["system"] = turn.system;
  if (turn.quality_3p) j["quality_3p"] = *turn.quality_3p;
  if (turn.raters) j["raters"] = *turn.raters;
  if (turn.adjudicator) j["adjudicator"] = *turn.adjudicator;
  for (const auto& [key, raw] : turn.extras) j[key] = json::parse(raw);
  return j;
}

}  // namespace

std::string serialize_dialog(const Dialog& dialog) {
  json j;
  j["dialog_id"] = dialog.dialog_id;
  j["source"] = to_string(dialog.source);
  j["user_terminated"] = dialog.user_terminated;
  if (dialog.rating_1p) j["rating_1p"] = *dialog.rating_1p;
  if (dialog.rating_3p) j["rating_3p"] = *dialog.rating_3p;
  j["turns"] = json::array();
  for (const Turn& turn : dialog.turns) j["turns"].push_back(turn_to_json(turn));
  for (const auto& [key, raw] : dialog.extras) j[key] = json::parse(raw);
  return j.dump();
}

void write_dialogs(const std::vector<Dialog>& dialogs,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  for (const Dialog& d : dialogs) out << serialize_dialog(d) << '\n';
}

DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  DatasetManifest manifest;
  if (j.contains("name")) manifest.name = j["name"].get<std::string>();
  if (j.contains("label_scale"))
    manifest.label_scale = label_scale_from_string(j["label_scale"].get<std::string>());
  if (j.contains("splits")) {
    std::set<std::string> seen;
    for (const auto& [split, ids] : j["splits"].items()) {
      auto& list = manifest.splits[split];
      for (const auto& id : ids) {
        std::string s = id.get<std::string>();
        if (!seen.insert(s).second)
          throw ValidationError("dialog_id appears in more than one split", s,
                                "splits");
        list.push_back(std::move(s));
      }
    }
  }
  return manifest;
}

DatasetStats dataset_stats(const std::vector<Dialog>& dialogs) {
  if (dialogs.empty()) throw Error("dataset_stats over an empty corpus");
  DatasetStats stats;
  stats.n_dialogs = dialogs.size();
  std::map<int, std::size_t> label_counts;
  for (const Dialog& d : dialogs) {
    stats.n_turns += d.turns.size();
    for (const Turn& turn : d.turns)
      if (turn.quality_3p) {
        ++label_counts[*turn.quality_3p];
        ++stats.n_labeled_turns;
      }
  }
  stats.mean_turns =
      static_cast<double>(stats.n_turns) / static_cast<double>(stats.n_dialogs);
  for (const auto& [label, count] : label_counts)
    stats.label_percent[label] =
        100.0 * static_cast<double>(count) / static_cast<double>(stats.n_labeled_turns);
  return stats;
}

std::map<std::string, std::vector<Dialog>> split_dialogs(
    const std::vector<Dialog>& dialogs, const DatasetManifest& manifest) {
  std::map<std::string, const Dialog*> by_id;
  for (const Dialog& d : dialogs) by_id.emplace(d.dialog_id, &d);
  std::map<std::string, std::vector<Dialog>> out;
  std::set<std::string> assigned;
  std::vector<std::string> missing;
  for (const auto& [split, ids] : manifest.splits) {
    auto& bucket = out[split];
    for (const std::string& id : ids) {
      if (!assigned.insert(id).second)
        throw ValidationError("dialog_id appears in more than one split", id,
                              "splits");
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        missing.push_back(id);
        continue;
      }
      bucket.push_back(*it->second);
    }
  }
  if (!missing.empty()) {
    std::string joined;
    for (const std::string& id : missing) {
      if (!joined.empty()) joined += ", ";
      joined += id;
    }
    throw ValidationError("manifest references unknown dialog ids: " + joined);
  }
  return out;
}

}  // namespace dialeval
