#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dialeval {

// Shortest decimal form that round-trips to the same double. Used for every
// numeric value written to output artifacts so reruns are byte-identical.
std::string format_double(double value);

// Whitespace-separated tokens, no empty entries.
std::vector<std::string> tokenize_whitespace(std::string_view text);

// Lowercase, punctuation stripped to spaces, whitespace collapsed, trimmed.
std::string normalize_utterance(std::string_view utterance);

// FNV-1a over bytes; stable across platforms and process restarts.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0);

}  // namespace dialeval
