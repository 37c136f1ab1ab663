#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/frontends/language.hpp"
#include "irtrans/frontends/record.hpp"
#include "irtrans/nn/model.hpp"
#include "irtrans/tokenizer/vocab.hpp"
#include "irtrans/util/rng.hpp"

namespace irtrans::objectives {

// The seven training objectives plus the dialect back-translation used by
// pivot-mode training (IR of one language decoded into another).
enum class Objective { kMLM, kAE, kBT, kTLM, kTAE, kIRGen, kDecomp, kPivotBT };

std::string_view objective_name(Objective o);
// Accepts the names printed by objective_name. Throws Error(kInvalidArgument).
Objective parse_objective(std::string_view name);
bool requires_ir(Objective o);
bool is_masked_lm(Objective o);

struct NoiseConfig {
  double mlm_mask_rate = 0.15;
  double ae_mask_rate = 0.20;
  double span_length_mean = 3.0;
  double token_drop_rate = 0.1;
  int shuffle_window = 3;
  // TLM rates per segment; negative means "use mlm_mask_rate".
  double tlm_code_rate = -1.0;
  double tlm_ir_rate = -1.0;
  // 80/10/10 replacement (MASK / random token / unchanged) instead of always MASK.
  bool random_replacement = false;

  // Throws Error(kInvalidArgument).
  void validate() const;
};

struct MaskResult {
  std::vector<int> ids;
  std::vector<int> positions;
};

// Selects each non-special position independently with probability `rate`
// and replaces it with MASK. With random_replacement set, a selected token
// becomes MASK with probability 0.8, a uniformly drawn non-special id below
// vocab_size with 0.1, and stays unchanged otherwise.
MaskResult mask_tokens(const std::vector<int>& ids, double rate, util::Rng& rng, bool random_replacement = false,
                       int vocab_size = 0);

// Span masking (Poisson lengths) up to round(ae_mask_rate * n) tokens, then
// independent dropping, then a local shuffle moving each token at most
// shuffle_window places. Special tokens (BOS/EOS/SEP...) are never touched;
// the corruption applies to the maximal run of ordinary tokens between them.
std::vector<int> corrupt_sequence(const std::vector<int>& ids, const NoiseConfig& cfg, util::Rng& rng);

// [BOS] x [SEP] z [EOS]. Positions before `boundary` (the SEP index) carry
// code_tag, the rest ir_tag. x and z are raw ids without BOS/EOS.
struct ConcatPair {
  std::vector<int> ids;
  std::vector<int> tags;
  std::size_t boundary = 0;
  nn::ModelInput input() const { return {ids, tags}; }
};

// Throws Error(kSequenceTooLong) when the result exceeds max_len.
ConcatPair concat_with_ir(const std::vector<int>& x, const std::vector<int>& z, int code_tag, int ir_tag,
                          std::size_t max_len);

// A record after tokenization: raw ids without BOS/EOS.
struct EncodedRecord {
  int language = 0;  // source-language id in the LanguageSet
  std::vector<int> code;
  std::optional<std::vector<int>> ir;
};

EncodedRecord encode_record(const frontends::FunctionRecord& r, const tokenizer::Vocab& vocab,
                            const frontends::LanguageSet& languages);

struct TrainingExample {
  Objective objective = Objective::kMLM;
  nn::ModelInput input;
  // MLM/TLM: the uncorrupted sequence (same length as input).
  // Otherwise: decoder target starting with BOS.
  std::vector<int> target;
  int target_tag = 0;
  std::vector<int> positions;  // masked positions, MLM/TLM only
};

struct ObjectiveContext {
  const frontends::LanguageSet* languages = nullptr;
  NoiseConfig noise;
  int vocab_size = 0;
  std::size_t max_len = 256;
  // Upper bound on tokens generated for back-translation; the effective bound
  // is min(bt_max_new, 2 * |x| + 8).
  int bt_max_new = 256;
};

// Builds the example for one record. BT and PivotBT decode with `model`
// (greedy, no gradient); other objectives ignore it.
// Throws Error(kMissingIR) for IR objectives on records without IR and
// Error(kInvalidArgument) for BT with fewer than two source languages.
TrainingExample build_example(Objective o, const EncodedRecord& r, const ObjectiveContext& ctx, util::Rng& rng,
                              const nn::ModelState* model = nullptr);

// Loss of one example through masked_lm_loss or sequence_loss.
nn::LossReport example_loss(const nn::ModelState& m, const TrainingExample& ex, nn::Gradients* grads = nullptr,
                            double scale = 1.0);

// Mean loss over the batch; gradients of the mean are accumulated into grads.
// Examples are built in batch order from one rng, so the result depends only
// on (objective, batch, model, cfg, rng state).
nn::LossReport objective_step(Objective o, const std::vector<EncodedRecord>& batch, const nn::ModelState& m,
                              const ObjectiveContext& ctx, util::Rng& rng, nn::Gradients* grads = nullptr);

nn::LossReport objective_step(Objective o, const std::vector<frontends::FunctionRecord>& batch,
                              const nn::ModelState& m, const tokenizer::Vocab& vocab, const ObjectiveContext& ctx,
                              util::Rng& rng, nn::Gradients* grads = nullptr);

}  // namespace irtrans::objectives
