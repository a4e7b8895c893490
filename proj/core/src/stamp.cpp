#include "dialeval/stamp.hpp"

#include <array>
#include <charconv>

#include "dialeval/text.hpp"

namespace dialeval {

std::string stamp_comment(const RunStamp& stamp) {
  return "# dialeval " + stamp.tool_version + " config=" + stamp.config_hash +
         " seed=" + std::to_string(stamp.seed);
}

std::string hash_config(const std::string& canonical_config) {
  std::uint64_t h = fnv1a64(canonical_config);
  std::array<char, 17> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + 16, h, 16);
  std::string hex(buf.data(), ptr);
  return std::string(16 - hex.size(), '0') + hex;
}

}  // namespace dialeval
