#include "dialeval/encoder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "dialeval/errors.hpp"
#include "dialeval/text.hpp"
#include "line_process.hpp"

namespace dialeval {

namespace {

constexpr const char* kUserMarker = "<usr>";
constexpr const char* kSystemMarker = "<sys>";
constexpr std::uint64_t kHashSeed = 0x9e3779b97f4a7c15ULL;

std::size_t turn_position(const Dialog& dialog, int turn_index) {
  for (std::size_t p = 0; p < dialog.turns.size(); ++p)
    if (dialog.turns[p].index == turn_index) return p;
  throw ValidationError("no turn with index " + std::to_string(turn_index),
                        dialog.dialog_id);
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

SerializedContext serialize_context(const Dialog& dialog, int turn_index,
                                    int max_tokens) {
  if (max_tokens < 1)
    throw ConfigError("max_tokens must be >= 1, got " +
                      std::to_string(max_tokens));
  const std::size_t pos = turn_position(dialog, turn_index);
  std::vector<std::string> tokens;
  std::size_t response_start = 0;  // first token of "<sys> r_i"
  for (std::size_t p = 0; p <= pos; ++p) {
    tokens.push_back(kUserMarker);
    for (std::string& t : tokenize_whitespace(dialog.turns[p].user))
      tokens.push_back(std::move(t));
    if (p == pos) response_start = tokens.size();
    tokens.push_back(kSystemMarker);
    for (std::string& t : tokenize_whitespace(dialog.turns[p].system))
      tokens.push_back(std::move(t));
  }
  const std::size_t budget = static_cast<std::size_t>(max_tokens);
  const std::size_t response_len = tokens.size() - response_start;
  SerializedContext out;
  if (response_len > budget) {
    // the response alone does not fit: keep its head, cut its tail
    out.text = join_tokens(tokens, response_start, response_start + budget);
    out.response_truncated = true;
    return out;
  }
  const std::size_t first =
      tokens.size() > budget ? tokens.size() - budget : 0;
  out.text = join_tokens(tokens, first, tokens.size());
  return out;
}

PooledVector HashBagEncoder::encode(std::string_view text,
                                    const EncoderSpec& spec) {
  if (spec.dimension < 1)
    throw ConfigError("encoder dimension must be >= 1, got " +
                      std::to_string(spec.dimension));
  PooledVector pooled;
  pooled.values.assign(static_cast<std::size_t>(spec.dimension), 0.0f);
  const std::vector<std::string> tokens = tokenize_whitespace(text);
  auto add_feature = [&](const std::string& feature) {
    const std::uint64_t h = fnv1a64(feature, kHashSeed);
    const std::size_t bucket =
        static_cast<std::size_t>(h % static_cast<std::uint64_t>(spec.dimension));
    const float sign = (h >> 63) ? -1.0f : 1.0f;
    pooled.values[bucket] += sign;
  };
  for (const std::string& t : tokens) add_feature("u\x1f" + t);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    // order-insensitive bigram: canonicalize the pair so the encoding is a bag
    const std::string& a = std::min(tokens[i], tokens[i + 1]);
    const std::string& b = std::max(tokens[i], tokens[i + 1]);
    add_feature("b\x1f" + a + "\x1f" + b);
  }
  double norm = 0.0;
  for (float v : pooled.values) norm += static_cast<double>(v) * v;
  if (norm > 0.0) {
    const float inv = static_cast<float>(1.0 / std::sqrt(norm));
    for (float& v : pooled.values) v *= inv;
  }
  return pooled;
}

struct ExternalProcessEncoder::Process {
  detail::LineProcess proc;
  Process(const std::string& command, const std::string& model_name,
          const std::string& cache_dir)
      : proc(command, {{"DIALEVAL_MODEL_NAME", model_name},
                       {"DIALEVAL_CACHE_DIR", cache_dir}}) {}
};

ExternalProcessEncoder::ExternalProcessEncoder(std::string command,
                                               std::string model_name,
                                               std::string cache_dir)
    : command_(std::move(command)),
      model_name_(std::move(model_name)),
      cache_dir_(std::move(cache_dir)) {
  if (command_.empty()) throw ProviderError(id_, "empty encoder command");
}

ExternalProcessEncoder::~ExternalProcessEncoder() = default;

void ExternalProcessEncoder::ensure_started() {
  if (process_) return;
  process_ = std::make_unique<Process>(command_, model_name_, cache_dir_);
  try {
    process_->proc.start();
  } catch (const std::exception& e) {
    process_.reset();
    throw ProviderError(id_, std::string("failed to start: ") + e.what());
  }
}

PooledVector ExternalProcessEncoder::encode(std::string_view text,
                                            const EncoderSpec& spec) {
  ensure_started();
  std::string reply;
  try {
    reply = process_->proc.exchange(text);
  } catch (const std::exception& e) {
    throw ProviderError(id_, std::string(e.what()) + " (command: " + command_ + ")");
  }
  PooledVector pooled;
  pooled.values.reserve(static_cast<std::size_t>(spec.dimension));
  const char* p = reply.data();
  const char* end = reply.data() + reply.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    float value = 0.0f;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc())
      throw ProviderError(id_, "malformed float in encoder output: \"" + reply + "\"");
    pooled.values.push_back(value);
    p = next;
  }
  if (pooled.values.size() != static_cast<std::size_t>(spec.dimension))
    throw ProviderError(id_, "expected " + std::to_string(spec.dimension) +
                                 " floats, got " +
                                 std::to_string(pooled.values.size()));
  return pooled;
}

EncoderRegistry::EncoderRegistry() {
  add(std::make_shared<HashBagEncoder>());
}

EncoderRegistry& EncoderRegistry::instance() {
  static EncoderRegistry registry;
  return registry;
}

void EncoderRegistry::add(std::shared_ptr<EncoderAdapter> adapter) {
  adapters_[adapter->id()] = std::move(adapter);
}

EncoderAdapter& EncoderRegistry::get(const std::string& adapter_id) const {
  auto it = adapters_.find(adapter_id);
  if (it == adapters_.end())
    throw ProviderError(adapter_id, "no encoder adapter registered under this id");
  return *it->second;
}

bool EncoderRegistry::has(const std::string& adapter_id) const {
  return adapters_.count(adapter_id) > 0;
}

PooledVector encode(std::string_view text, const EncoderSpec& spec,
                    EncoderRegistry& registry) {
  PooledVector pooled = registry.get(spec.adapter_id).encode(text, spec);
  if (pooled.values.size() != static_cast<std::size_t>(spec.dimension))
    throw ProviderError(spec.adapter_id,
                        "adapter produced " + std::to_string(pooled.values.size()) +
                            " values for dimension " +
                            std::to_string(spec.dimension));
  for (float v : pooled.values)
    if (!std::isfinite(v))
      throw ProviderError(spec.adapter_id, "non-finite value in pooled vector");
  return pooled;
}

}  // namespace dialeval
