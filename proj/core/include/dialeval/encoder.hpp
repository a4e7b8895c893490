#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dialeval/dialog.hpp"

namespace dialeval {

struct EncoderSpec {
  std::string adapter_id = "hashbag";
  int dimension = 256;   // > 0
  int max_tokens = 512;  // > 0
  // Honored only by adapters that own trainable parameters; the bundled
  // adapters are parameter-free, so only the head trains.
  bool trainable = true;
};

struct PooledVector {
  std::vector<float> values;  // length = EncoderSpec.dimension, all finite
};

struct SerializedContext {
  std::string text;
  bool response_truncated = false;  // the response alone exceeded the budget
};

// Interleaves user/system utterances oldest-to-newest with <usr>/<sys>
// markers, ending with the system response of turn `turn_index` (1-based).
// Tokens are dropped from the left until the result fits max_tokens, keeping
// the final response intact; if the response alone does not fit, its tail is
// cut and response_truncated is set. Turns after turn_index never appear.
SerializedContext serialize_context(const Dialog& dialog, int turn_index,
                                    int max_tokens);

class EncoderAdapter {
 public:
  virtual ~EncoderAdapter() = default;
  virtual const std::string& id() const = 0;
  // Deterministic for fixed adapter state and text. Output length must
  // equal spec.dimension. Throws ProviderError on failure.
  virtual PooledVector encode(std::string_view text,
                              const EncoderSpec& spec) = 0;
  virtual bool has_trainable_parameters() const { return false; }
  virtual bool thread_safe() const { return true; }
};

// Deterministic test encoder: signed feature hashing of the unigram +
// adjacent-bigram bag into `dimension` buckets, L2-normalized. Bigrams are
// order-insensitive (the pair is canonicalized), so the encoding has pure
// bag semantics. The hash seed is fixed, so vectors are identical across
// process restarts.
class HashBagEncoder : public EncoderAdapter {
 public:
  HashBagEncoder() = default;
  const std::string& id() const override { return id_; }
  PooledVector encode(std::string_view text, const EncoderSpec& spec) override;

 private:
  std::string id_ = "hashbag";
};

// Pretrained encoders served out of process over a line protocol: one input
// text per line on the child's stdin, one line of `dimension`
// whitespace-separated floats back on its stdout. The command runs under
// /bin/sh -c with DIALEVAL_MODEL_NAME and DIALEVAL_CACHE_DIR exported.
// Single consumer; the served model is frozen from this side.
class ExternalProcessEncoder : public EncoderAdapter {
 public:
  ExternalProcessEncoder(std::string command, std::string model_name,
                         std::string cache_dir);
  ~ExternalProcessEncoder() override;
  ExternalProcessEncoder(const ExternalProcessEncoder&) = delete;
  ExternalProcessEncoder& operator=(const ExternalProcessEncoder&) = delete;

  const std::string& id() const override { return id_; }
  PooledVector encode(std::string_view text, const EncoderSpec& spec) override;
  bool thread_safe() const override { return false; }

 private:
  struct Process;
  void ensure_started();
  std::string id_ = "external";
  std::string command_;
  std::string model_name_;
  std::string cache_dir_;
  std::unique_ptr<Process> process_;
};

// Adapter registry keyed by adapter_id. The process-wide instance comes with
// "hashbag" preregistered.
class EncoderRegistry {
 public:
  static EncoderRegistry& instance();
  EncoderRegistry();

  void add(std::shared_ptr<EncoderAdapter> adapter);
  // Throws ProviderError naming the adapter id when unregistered.
  EncoderAdapter& get(const std::string& adapter_id) const;
  bool has(const std::string& adapter_id) const;

 private:
  std::map<std::string, std::shared_ptr<EncoderAdapter>> adapters_;
};

// Lookup + encode, validating the output length against spec.dimension.
PooledVector encode(std::string_view text, const EncoderSpec& spec,
                    EncoderRegistry& registry = EncoderRegistry::instance());

}  // namespace dialeval
