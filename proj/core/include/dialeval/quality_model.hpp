#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialeval/dialog.hpp"
#include "dialeval/encoder.hpp"
#include "dialeval/score_table.hpp"
#include "dialeval/weak_labels.hpp"

namespace dialeval {

enum class ModelMode { classification, regression };
enum class SelectionMetric { dev_pearson, dev_spearman, dev_loss };

ModelMode model_mode_from_string(const std::string& s);
const char* to_string(ModelMode mode);
SelectionMetric selection_metric_from_string(const std::string& s);
const char* to_string(SelectionMetric metric);

struct ModelConfig {
  ModelMode mode = ModelMode::regression;
  EncoderSpec encoder;
  int batch_size = 8;
  double learning_rate = 1e-5;
  int epochs = 10;
  std::string optimizer = "adam";  // the only supported optimizer
  SelectionMetric selection_metric = SelectionMetric::dev_pearson;
  std::uint64_t seed = 0;
};

// Serialized dialog context ending in the system response, paired with its
// reference label.
struct TrainingExample {
  std::string dialog_id;
  int turn_index = 0;
  std::string text;
  double label = 0.0;
  LabelMode label_mode = LabelMode::sentiment_only;
};

// Joins label rows onto their dialogs and serializes each labeled context.
// A label row addressing an unknown (dialog_id, turn_index) raises
// ValidationError.
std::vector<TrainingExample> build_training_examples(
    const std::vector<Dialog>& dialogs, const std::vector<LabelRow>& labels,
    int max_tokens);

struct EpochRecord {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double dev_score = 0.0;  // selection metric, oriented so higher is better
};

struct TrainingLog {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;
  double best_dev_score = 0.0;
  std::size_t n_train_examples = 0;
  std::size_t n_dev_turns = 0;
  std::vector<std::string> notes;
};

// Pooled encoder output through a linear head. Classification scores are
// sigmoid probabilities in [0, 1]; regression scores are unbounded reals.
class QualityModel {
 public:
  QualityModel() = default;
  QualityModel(ModelConfig config, std::vector<float> weights, float bias,
               int best_epoch, double dev_score);

  const ModelConfig& config() const { return config_; }
  const std::vector<float>& weights() const { return weights_; }
  float bias() const { return bias_; }
  int best_epoch() const { return best_epoch_; }
  double dev_score() const { return dev_score_; }

  double predict_text(std::string_view text,
                      EncoderRegistry& registry = EncoderRegistry::instance()) const;
  double predict_vector(const PooledVector& pooled) const;
  double predict_turn(const Dialog& dialog, int turn_index,
                      EncoderRegistry& registry = EncoderRegistry::instance()) const;

 private:
  ModelConfig config_;
  std::vector<float> weights_;
  float bias_ = 0.0f;
  int best_epoch_ = 0;
  double dev_score_ = 0.0;
};

struct TrainResult {
  QualityModel model;
  TrainingLog log;
};

// Head loss and analytic head gradient for one example; exposed so tests can
// check the gradient against finite differences.
double head_loss(ModelMode mode, const std::vector<double>& weights,
                 double bias, const PooledVector& x, double y);
struct HeadGradient {
  std::vector<double> d_weights;
  double d_bias = 0.0;
  double loss = 0.0;
};
HeadGradient head_loss_gradient(ModelMode mode,
                                const std::vector<double>& weights,
                                double bias, const PooledVector& x, double y);

// Runs config.epochs of minibatch Adam over the examples, scores the labeled
// dev turns after each epoch, and returns the parameters of the best epoch
// (ties resolved toward the earliest). Classification requires labels in
// {0, 1}; the check runs before any optimization. Reproducible for a fixed
// seed under single-threaded execution.
TrainResult train(const std::vector<TrainingExample>& examples,
                  const std::vector<Dialog>& dev_dialogs,
                  const ModelConfig& config,
                  EncoderRegistry& registry = EncoderRegistry::instance());

struct CorpusScores {
  ScoreTable table;
  std::vector<std::string> failures;  // "dialog_id: message" per failed dialog
};

// One score per turn, ordered by (dialog_id, turn_index). Per-dialog
// failures are collected rather than fatal. jobs > 1 scores dialogs in
// parallel; the output order does not depend on jobs.
CorpusScores predict_corpus(const QualityModel& model,
                            const std::vector<Dialog>& dialogs, int jobs = 1,
                            std::ostream* progress = nullptr,
                            EncoderRegistry& registry = EncoderRegistry::instance());

// Single-file checkpoint: one JSON header line (config, dimension,
// best_epoch, dev_score, provenance) followed by raw little-endian float32
// parameter blocks. load(save(m)) predicts identically to m.
void save_model(const QualityModel& model, const std::string& path,
                const RunStamp& stamp);
QualityModel load_model(const std::string& path);

// Per-epoch training log: provenance comment + one TSV row per epoch.
void write_training_log(const TrainingLog& log, const std::string& path,
                        const RunStamp& stamp);

}  // namespace dialeval
