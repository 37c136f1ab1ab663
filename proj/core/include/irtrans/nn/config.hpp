#pragma once

#include <cstdint>
#include <string>

namespace irtrans::nn {

struct ModelConfig {
  int encoder_layers = 2;
  int decoder_layers = 2;
  int heads = 4;
  int dim = 64;
  int ffn_dim = 256;
  int max_len = 256;
  int vocab_size = 2048;
  int num_tags = 4;  // source tags + IR dialect tags
  // One decoder stack per target tag instead of a single shared one.
  bool separate_decoders = false;
  std::uint64_t seed = 1;

  int decoder_count() const { return separate_decoders ? num_tags : 1; }
  // Throws Error(kInvalidArgument).
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

}  // namespace irtrans::nn
