#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irtrans/frontends/language.hpp"
#include "irtrans/frontends/record.hpp"
#include "irtrans/nn/checkpoint.hpp"
#include "irtrans/objectives/objectives.hpp"
#include "irtrans/tokenizer/vocab.hpp"
#include "irtrans/util/config_file.hpp"

namespace irtrans::trainer {

using objectives::Objective;

struct TrainConfig {
  std::vector<Objective> objectives = {Objective::kMLM, Objective::kAE, Objective::kBT};
  std::uint64_t steps = 1000;
  std::size_t batch_size = 8;
  double learning_rate = 1e-5;
  std::uint64_t warmup_steps = 200;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double epsilon = 1e-8;
  double clip_norm = 0.0;  // 0 disables clipping
  std::uint64_t checkpoint_interval = 0;  // 0: final checkpoint only
  std::uint64_t seed = 1;
  // Adds IRGen, Decomp and PivotBT to the schedule when absent.
  bool pivot_mode = false;
  int bt_max_new = 256;
  objectives::NoiseConfig noise;

  // The schedule actually run: `objectives`, extended for pivot mode.
  std::vector<Objective> effective_objectives() const;
  // Throws Error(kInvalidArgument).
  void validate(std::size_t source_languages) const;
};

// Reads the [train] and [noise] sections; absent keys keep the defaults in
// `base`. Keys: train.objectives (comma list), steps, batch_size,
// learning_rate, warmup_steps, beta1, beta2, epsilon, clip_norm,
// checkpoint_interval, seed, pivot_mode, bt_max_new; noise.mlm_mask_rate,
// ae_mask_rate, span_length_mean, token_drop_rate, shuffle_window,
// tlm_code_rate, tlm_ir_rate, random_replacement.
TrainConfig train_config_from(const util::ConfigFile& file, TrainConfig base = {});
// [model] section: encoder_layers, decoder_layers, heads, dim, ffn_dim,
// max_len, separate_decoders, seed. vocab_size and num_tags are set by train().
nn::ModelConfig model_config_from(const util::ConfigFile& file, nn::ModelConfig base = {});

// Round robin: objectives[step % size].
Objective schedule(std::uint64_t step, const std::vector<Objective>& objectives);

// base * min(step / warmup, sqrt(warmup / step)); step 0 gives 0. With no
// warmup the rate is base / sqrt(max(step, 1)).
double lr_at(std::uint64_t step, const TrainConfig& cfg);

// Tokenized training records. `mono` feeds MLM/AE/BT/PivotBT, `parallel`
// (records with IR) feeds TLM/TAE/IRGen/Decomp.
struct TrainData {
  frontends::LanguageSet languages;
  tokenizer::Vocab vocab;
  std::vector<objectives::EncodedRecord> mono;
  std::vector<objectives::EncodedRecord> parallel;

  static TrainData from_records(const std::vector<frontends::FunctionRecord>& mono,
                                const std::vector<frontends::FunctionRecord>& parallel, tokenizer::Vocab vocab,
                                frontends::LanguageSet languages);
  // Reads <lang>.mono.jsonl and <lang>.para.jsonl for every language. A
  // missing monolingual shard falls back to the parallel records.
  static TrainData load(const std::filesystem::path& corpus_dir, const std::vector<std::string>& languages,
                        tokenizer::Vocab vocab);
};

struct TrainLogEntry {
  std::uint64_t step = 0;  // 1-based update index
  std::string objective;
  double loss = 0.0;
  double lr = 0.0;
  double grad_norm = 0.0;
  std::size_t tokens = 0;
};

struct CheckpointEvent {
  std::uint64_t step = 0;
  std::filesystem::path path;
  std::string validation_json = "{}";
};

struct TrainLog {
  std::vector<TrainLogEntry> steps;
  std::vector<CheckpointEvent> checkpoints;
};

std::string to_json_line(const TrainLogEntry& e);
std::string to_json_line(const CheckpointEvent& e);

struct TrainOptions {
  // Checkpoints (checkpoint-<step>.ckpt, last.ckpt) and train_log.jsonl go
  // here; empty keeps everything in memory.
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> resume_from;
  // Called at every checkpoint; returns a JSON object recorded in the log.
  std::function<std::string(const nn::ModelState&, std::uint64_t step)> validate;
  std::function<void(const TrainLogEntry&)> on_step;
};

struct TrainResult {
  nn::Checkpoint checkpoint;
  TrainLog log;
};

// Runs cfg.steps updates (continuing from the resume checkpoint when given).
// model.vocab_size and model.num_tags are taken from `data`. Every random
// choice of update k comes from mix_seed(cfg.seed, k), so resuming at k and
// training straight through give identical parameters.
// Errors: MissingIR when an IR objective has no usable parallel record,
// NonFiniteLoss (the last written checkpoint is left in place),
// CheckpointMismatch when resuming with a different vocabulary or languages.
TrainResult train(const TrainData& data, const TrainConfig& cfg, nn::ModelConfig model, const TrainOptions& options = {});

}  // namespace irtrans::trainer
