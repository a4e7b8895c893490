#pragma once

#include <cstdint>
#include <string>

namespace dialeval {

// Provenance header written at the top of every output artifact: who
// produced it, under which configuration, with which seed.
struct RunStamp {
  std::string tool_version;
  std::string config_hash;
  std::uint64_t seed = 0;
};

// "# dialeval <version> config=<hash> seed=<seed>" (no trailing newline).
std::string stamp_comment(const RunStamp& stamp);

// Hex digest of a canonical key=value rendering of the effective settings.
std::string hash_config(const std::string& canonical_config);

}  // namespace dialeval
