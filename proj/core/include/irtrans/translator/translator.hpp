#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/frontends/frontend.hpp"
#include "irtrans/frontends/language.hpp"
#include "irtrans/irnorm/normalize.hpp"
#include "irtrans/nn/checkpoint.hpp"
#include "irtrans/tokenizer/vocab.hpp"

namespace irtrans::translator {

// A loaded checkpoint with its vocabulary and language set. Read-only, so a
// single instance may serve concurrent requests.
class Model {
 public:
  // Throws Error(kCheckpointMismatch) when the stored vocabulary does not
  // hash to the recorded value.
  explicit Model(nn::Checkpoint checkpoint);
  static Model load(const std::filesystem::path& path);

  // Throws Error(kCheckpointMismatch) unless `vocab` is the checkpoint's.
  void require_vocab(const tokenizer::Vocab& vocab) const;

  const nn::ModelState& state() const { return ckpt_.model; }
  const tokenizer::Vocab& vocab() const { return vocab_; }
  const frontends::LanguageSet& languages() const { return languages_; }
  const nn::Checkpoint& checkpoint() const { return ckpt_; }

 private:
  nn::Checkpoint ckpt_;
  tokenizer::Vocab vocab_;
  frontends::LanguageSet languages_;
};

struct DecodeOptions {
  int beam_size = 1;  // 1 is greedy
  int max_new_tokens = 255;
};

// Decodes token ids `src_ids` (BOS..EOS) tagged `src_tag` into text in `tgt_tag`.
std::string decode_text(const Model& model, const std::vector<int>& src_ids, std::string_view src_tag,
                        std::string_view tgt_tag, const DecodeOptions& opt = {});

// Direct translation; never touches a frontend.
// Errors: InvalidArgument (src == tgt, or either is not a source language of
// the model), SequenceTooLong.
std::string translate(const Model& model, std::string_view source, std::string_view src, std::string_view tgt,
                      const DecodeOptions& opt = {});

// Top-k beam hypotheses (beam width max(opt.beam_size, k)), best first.
// k == 1 with beam_size 1 is the greedy output.
std::vector<std::string> translate_candidates(const Model& model, std::string_view source, std::string_view src,
                                              std::string_view tgt, std::size_t k, const DecodeOptions& opt = {});

enum class DecoderMode { kShared, kSeparate };
// "shared" / "separate"; throws Error(kInvalidArgument).
DecoderMode parse_decoder_mode(std::string_view name);

// Normalizes `ir_text`, tags it with `ir_dialect` (empty: the dialect of tgt)
// and decodes into tgt. The requested decoder mode must match the
// checkpoint's architecture, otherwise Error(kCheckpointMismatch).
// Errors: MalformedIR, DanglingLabel from normalization.
std::string decompile(const Model& model, std::string_view ir_text, std::string_view tgt, DecoderMode mode,
                      std::string_view ir_dialect = {}, const irnorm::NormalizationConfig& norm = {},
                      const DecodeOptions& opt = {});

// Decodes already-normalized IR of language `src` into tgt. The output depends
// only on (normalized_ir, src, tgt, model).
std::string pivot_from_ir(const Model& model, std::string_view normalized_ir, std::string_view src,
                          std::string_view tgt, const DecodeOptions& opt = {});

// Compiles `source` with the src frontend, normalizes, then pivot_from_ir.
// Errors: CompileFailure (no fallback to direct translation), MissingFrontend,
// MalformedIR.
std::string pivot_translate(const Model& model, std::string_view source, std::string_view src,
                            std::string_view tgt, const frontends::FrontendConfig& frontends,
                            const irnorm::NormalizationConfig& norm = {}, const DecodeOptions& opt = {});

}  // namespace irtrans::translator
