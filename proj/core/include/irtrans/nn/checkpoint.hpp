#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/nn/state.hpp"

namespace irtrans::nn {

inline constexpr int kCheckpointVersion = 1;

struct AdamState {
  std::uint64_t t = 0;  // completed updates
  Buffer m;
  Buffer v;

  bool operator==(const AdamState&) const = default;
};

// On disk: one line of JSON (format, version, config, languages, vocabulary
// text and hash, step, tensor table, optimizer counters, free-form trainer
// metadata), a newline, then the raw little-endian doubles of the parameters
// followed by the Adam moments when present.
struct Checkpoint {
  ModelState model;
  std::vector<std::string> languages;  // source tags; dialect tags are implied
  std::string vocab_text;
  std::string vocab_hash;
  std::uint64_t step = 0;
  AdamState optimizer;
  std::string metadata_json = "{}";
};

std::string serialize_checkpoint(const Checkpoint& ckpt);
Checkpoint parse_checkpoint(std::string_view bytes);
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace irtrans::nn
