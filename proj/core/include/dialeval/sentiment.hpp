#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace dialeval {

// Scores one utterance with a real-valued sentiment valence. Implementations
// return raw values; clamping to the valence range happens in
// score_sentiment. Failures raise ProviderError carrying the provider id —
// a provider never silently returns zero.
class SentimentProvider {
 public:
  virtual ~SentimentProvider() = default;
  virtual const std::string& id() const = 0;
  virtual double score(std::string_view utterance) = 0;
  // Whether score() may be called concurrently from several threads.
  virtual bool thread_safe() const { return true; }
};

// Deterministic token-polarity scorer: sums per-token weights from a word
// list and squashes the sum onto [-3, 3] with 3*tanh(sum/3). Empty and
// unknown-word utterances score 0.
class LexiconProvider : public SentimentProvider {
 public:
  LexiconProvider();  // built-in English polarity lexicon
  explicit LexiconProvider(std::map<std::string, double> lexicon);
  // "word<TAB>weight" per line; '#' comments allowed.
  static LexiconProvider from_file(const std::string& path);

  const std::string& id() const override { return id_; }
  double score(std::string_view utterance) override;

 private:
  std::string id_ = "lexicon";
  std::map<std::string, double> lexicon_;
};

// Exact-utterance lookup table for tests and fixtures. Unknown utterances
// score `fallback`.
class ConstantTableProvider : public SentimentProvider {
 public:
  explicit ConstantTableProvider(std::map<std::string, double> table,
                                 double fallback = 0.0);
  // JSON object file: {"utterance": valence, ...}
  static ConstantTableProvider from_file(const std::string& path);

  const std::string& id() const override { return id_; }
  double score(std::string_view utterance) override;

 private:
  std::string id_ = "table";
  std::map<std::string, double> table_;
  double fallback_;
};

// Line-protocol subprocess: writes one UTF-8 utterance per line to the
// child's stdin (embedded newlines replaced by spaces) and reads one decimal
// valence per line from its stdout, flushing after each line. The command
// runs under /bin/sh -c. Single consumer: not safe for concurrent score().
class ExternalProcessProvider : public SentimentProvider {
 public:
  explicit ExternalProcessProvider(std::string command);
  ~ExternalProcessProvider() override;
  ExternalProcessProvider(const ExternalProcessProvider&) = delete;
  ExternalProcessProvider& operator=(const ExternalProcessProvider&) = delete;

  const std::string& id() const override { return id_; }
  double score(std::string_view utterance) override;
  bool thread_safe() const override { return false; }

 private:
  struct Process;
  void ensure_started();
  std::string id_ = "external";
  std::string command_;
  std::unique_ptr<Process> process_;
};

// Provider spec grammar:
//   "lexicon"            built-in lexicon
//   "lexicon:<path>"     lexicon loaded from file
//   "table:<path>"       constant table from JSON file
//   "external:<command>" line-protocol subprocess
std::unique_ptr<SentimentProvider> make_provider(const std::string& spec);

}  // namespace dialeval
