#include "dialeval/sentiment.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dialeval/errors.hpp"
#include "dialeval/text.hpp"
#include "line_process.hpp"

namespace dialeval {

namespace {

// Built-in polarity weights for conversational English. Deliberately small:
// enough to give desk-scale runs a usable signal, not a replacement for a
// real sentiment model. Note that a bare "no" scores negative, which is a
// known failure mode of text-only sentiment on yes/no answers.
const std::map<std::string, double>& builtin_lexicon() {
  static const std::map<std::string, double> lex = {
      {"love", 3},      {"loved", 3},     {"awesome", 3},   {"amazing", 3},
      {"fantastic", 3}, {"wonderful", 3}, {"excellent", 3}, {"perfect", 3},
      {"best", 3},      {"brilliant", 3}, {"great", 2},     {"good", 2},
      {"nice", 2},      {"cool", 2},      {"fun", 2},       {"funny", 2},
      {"happy", 2},     {"glad", 2},      {"enjoy", 2},     {"enjoyed", 2},
      {"like", 2},      {"liked", 2},     {"interesting", 2}, {"smart", 2},
      {"thanks", 2},    {"thank", 2},     {"helpful", 2},   {"impressive", 2},
      {"beautiful", 2}, {"favorite", 2},  {"win", 2},       {"won", 2},
      {"yay", 2},       {"wow", 2},       {"sweet", 2},     {"delightful", 3},
      {"pleasant", 2},  {"friendly", 2},  {"clever", 2},    {"laugh", 2},
      {"laughed", 2},   {"haha", 2},      {"lol", 2},       {"yes", 1},
      {"yeah", 1},      {"yep", 1},       {"sure", 1},      {"okay", 1},
      {"ok", 1},        {"fine", 1},      {"right", 1},     {"correct", 1},
      {"agree", 1},     {"please", 1},    {"more", 1},      {"absolutely", 2},
      {"definitely", 1}, {"exactly", 1},  {"true", 1},      {"super", 2},
      {"hate", -3},     {"hated", -3},    {"terrible", -3}, {"awful", -3},
      {"horrible", -3}, {"worst", -3},    {"disgusting", -3}, {"stupid", -3},
      {"useless", -3},  {"garbage", -3},  {"trash", -3},    {"idiot", -3},
      {"dumb", -2},     {"bad", -2},      {"boring", -2},   {"annoying", -2},
      {"wrong", -2},    {"broken", -2},   {"sad", -2},      {"angry", -2},
      {"mad", -2},      {"upset", -2},    {"confused", -2}, {"confusing", -2},
      {"weird", -1},    {"strange", -1},  {"dislike", -2},  {"disliked", -2},
      {"disappointed", -2}, {"disappointing", -2}, {"frustrating", -2},
      {"frustrated", -2}, {"lame", -2},   {"ugly", -2},     {"gross", -2},
      {"creepy", -2},   {"rude", -2},     {"mean", -2},     {"nonsense", -2},
      {"pointless", -2}, {"repetitive", -2}, {"repeat", -1}, {"repeated", -1},
      {"no", -1},       {"nope", -1},     {"nah", -1},      {"not", -1},
      {"never", -1},    {"cant", -1},     {"dont", -1},     {"wont", -1},
      {"didnt", -1},    {"doesnt", -1},   {"stop", -1},     {"quit", -1},
      {"bye", -1},      {"goodbye", -1},  {"whatever", -1}, {"meh", -1},
      {"already", -1},  {"again", -1},    {"off", -1},      {"lost", -1},
      {"fail", -2},     {"failed", -2},   {"fails", -2},    {"problem", -1},
      {"problems", -1}, {"issue", -1},    {"error", -1},    {"ignore", -1},
      {"ignored", -1},  {"ignores", -1},  {"liar", -2},     {"lie", -1},
      {"lies", -1},     {"bot", -1},      {"robot", -1},    {"scary", -1},
      {"sense", 1},     {"senseless", -2}, {"incoherent", -2},
      {"coherent", 1},  {"relevant", 1},  {"irrelevant", -2},
  };
  return lex;
}

}  // namespace

LexiconProvider::LexiconProvider() : lexicon_(builtin_lexicon()) {}

LexiconProvider::LexiconProvider(std::map<std::string, double> lexicon)
    : lexicon_(std::move(lexicon)) {}

LexiconProvider LexiconProvider::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProviderError("lexicon", "cannot open lexicon file: " + path);
  std::map<std::string, double> lex;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string word;
    double weight = 0.0;
    if (!(row >> word >> weight))
      throw ParseError(path + ": expected \"word weight\"", line_no);
    lex[normalize_utterance(word)] = weight;
  }
  return LexiconProvider(std::move(lex));
}

double LexiconProvider::score(std::string_view utterance) {
  double sum = 0.0;
  for (const std::string& token :
       tokenize_whitespace(normalize_utterance(utterance))) {
    auto it = lexicon_.find(token);
    if (it != lexicon_.end()) sum += it->second;
  }
  if (sum == 0.0) return 0.0;
  return 3.0 * std::tanh(sum / 3.0);
}

ConstantTableProvider::ConstantTableProvider(std::map<std::string, double> table,
                                             double fallback)
    : table_(std::move(table)), fallback_(fallback) {}

ConstantTableProvider ConstantTableProvider::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProviderError("table", "cannot open table file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.is_object())
    throw ParseError(path + ": expected a JSON object of utterance -> valence");
  std::map<std::string, double> table;
  for (const auto& [key, value] : j.items()) table[key] = value.get<double>();
  return ConstantTableProvider(std::move(table));
}

double ConstantTableProvider::score(std::string_view utterance) {
  auto it = table_.find(std::string(utterance));
  return it != table_.end() ? it->second : fallback_;
}

struct ExternalProcessProvider::Process {
  detail::LineProcess proc;
  explicit Process(const std::string& command) : proc(command, {}) {}
};

ExternalProcessProvider::ExternalProcessProvider(std::string command)
    : command_(std::move(command)) {
  if (command_.empty())
    throw ProviderError(id_, "empty provider command");
}

ExternalProcessProvider::~ExternalProcessProvider() = default;

void ExternalProcessProvider::ensure_started() {
  if (process_) return;
  process_ = std::make_unique<Process>(command_);
  try {
    process_->proc.start();
  } catch (const std::exception& e) {
    process_.reset();
    throw ProviderError(id_, std::string("failed to start: ") + e.what());
  }
}

double ExternalProcessProvider::score(std::string_view utterance) {
  ensure_started();
  std::string reply;
  try {
    reply = process_->proc.exchange(utterance);
  } catch (const std::exception& e) {
    throw ProviderError(id_, std::string(e.what()) + " (command: " + command_ + ")");
  }
  try {
    std::size_t consumed = 0;
    const double value = std::stod(reply, &consumed);
    while (consumed < reply.size() &&
           std::isspace(static_cast<unsigned char>(reply[consumed])))
      ++consumed;
    if (consumed != reply.size()) throw std::invalid_argument(reply);
    return value;
  } catch (const std::exception&) {
    throw ProviderError(id_, "expected one decimal valence per line, got \"" +
                                 reply + "\"");
  }
}

std::unique_ptr<SentimentProvider> make_provider(const std::string& spec) {
  if (spec == "lexicon") return std::make_unique<LexiconProvider>();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "lexicon")
      return std::make_unique<LexiconProvider>(LexiconProvider::from_file(arg));
    if (kind == "table")
      return std::make_unique<ConstantTableProvider>(
          ConstantTableProvider::from_file(arg));
    if (kind == "external")
      return std::make_unique<ExternalProcessProvider>(arg);
  }
  throw ConfigError(
      "unknown sentiment provider spec \"" + spec +
      "\" (expected lexicon, lexicon:<path>, table:<path>, external:<command>)");
}

}  // namespace dialeval
