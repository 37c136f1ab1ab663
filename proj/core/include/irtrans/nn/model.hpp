#pragma once

#include <string>
#include <vector>

#include "irtrans/nn/state.hpp"
#include "irtrans/nn/tape.hpp"

namespace irtrans::nn {

// Token ids with a language tag per position.
struct ModelInput {
  std::vector<int> ids;
  std::vector<int> tags;

  static ModelInput uniform(std::vector<int> ids, int tag);
  std::size_t size() const { return ids.size(); }
  bool operator==(const ModelInput&) const = default;
};

struct LossReport {
  std::string objective;
  double loss = 0.0;
  std::size_t tokens = 0;
  double grad_norm = 0.0;
};

// Per-position encoder output after the final layer norm.
Mat encode_states(const ModelState& m, const ModelInput& src);

// Teacher-forced decoder logits: row i scores target[i + 1] given target[0..i].
Mat decoder_logits(const ModelState& m, const ModelInput& src, const std::vector<int>& target, int target_tag);

// Summed next-token cross-entropy of target[1..] (target starts with BOS) given
// the source. PAD targets are skipped. When `grads` is given, scale * dLoss is
// accumulated into it and grad_norm reports the norm of the whole buffer.
// Throws Error(kNonFiniteLoss) before touching `grads` if the loss is not finite.
LossReport sequence_loss(const ModelState& m, const ModelInput& src, const std::vector<int>& target, int target_tag,
                         Gradients* grads = nullptr, double scale = 1.0);

// Cross-entropy of the original tokens at `positions`, predicted from the
// encoder states of `masked` through the tied output projection.
// Throws Error(kEmptyMaskSet) when positions is empty.
LossReport masked_lm_loss(const ModelState& m, const ModelInput& masked, const std::vector<int>& original,
                          const std::vector<int>& positions, Gradients* grads = nullptr, double scale = 1.0);

Gradients zero_gradients(const ModelState& m);
double gradient_norm(const Gradients& g);

// Decoding. Output ids start with BOS and end with EOS unless max_new_tokens
// was reached first. max_new_tokens is clamped so positions stay < max_len.
std::vector<int> greedy_decode(const ModelState& m, const ModelInput& src, int target_tag, int max_new_tokens);

struct Hypothesis {
  std::vector<int> ids;  // BOS + generated tokens
  double log_prob = 0.0;
  double score = 0.0;  // log_prob / generated token count
};

// Length-normalized beam search. Returns final hypotheses sorted by score,
// best first; beam_decode returns the first one's ids.
std::vector<Hypothesis> beam_search(const ModelState& m, const ModelInput& src, int target_tag, int beam_size,
                                    int max_new_tokens);
std::vector<int> beam_decode(const ModelState& m, const ModelInput& src, int target_tag, int beam_size,
                             int max_new_tokens);

}  // namespace irtrans::nn
