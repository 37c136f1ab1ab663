#include "irtrans/translator/translator.hpp"

#include <algorithm>

#include "irtrans/error.hpp"
#include "irtrans/nn/model.hpp"
#include "irtrans/tokenizer/bpe.hpp"

namespace irtrans::translator {

namespace {

int source_tag(const Model& model, std::string_view tag) {
  if (frontends::is_dialect(tag) || !model.languages().contains(tag)) {
    throw Error(ErrorCode::kInvalidArgument, "'" + std::string(tag) + "' is not a source language of this model");
  }
  return model.languages().id(tag);
}

std::vector<int> wrap(std::string_view text, const tokenizer::Vocab& vocab) {
  return tokenizer::encode(text, "", vocab).ids;
}

}  // namespace

Model::Model(nn::Checkpoint checkpoint)
    : ckpt_(std::move(checkpoint)),
      vocab_(tokenizer::Vocab::from_text(ckpt_.vocab_text)),
      languages_(ckpt_.languages) {
  if (vocab_.hash() != ckpt_.vocab_hash) {
    throw Error(ErrorCode::kCheckpointMismatch, "checkpoint vocabulary does not match its recorded hash");
  }
  if (static_cast<std::size_t>(ckpt_.model.config().vocab_size) != vocab_.size() ||
      static_cast<std::size_t>(ckpt_.model.config().num_tags) != languages_.size()) {
    throw Error(ErrorCode::kCheckpointMismatch, "checkpoint model does not fit its vocabulary or language set");
  }
}

Model Model::load(const std::filesystem::path& path) { return Model(nn::load_checkpoint(path)); }

void Model::require_vocab(const tokenizer::Vocab& vocab) const {
  if (vocab.hash() != ckpt_.vocab_hash) {
    throw Error(ErrorCode::kCheckpointMismatch,
                "vocabulary hash " + vocab.hash() + " differs from the checkpoint's " + ckpt_.vocab_hash);
  }
}

std::string decode_text(const Model& model, const std::vector<int>& src_ids, std::string_view src_tag,
                        std::string_view tgt_tag, const DecodeOptions& opt) {
  if (opt.beam_size < 1) throw Error(ErrorCode::kInvalidArgument, "beam size must be >= 1");
  const auto& langs = model.languages();
  auto input = nn::ModelInput::uniform(src_ids, langs.id(src_tag));
  int tgt = langs.id(tgt_tag);
  auto ids = opt.beam_size == 1 ? nn::greedy_decode(model.state(), input, tgt, opt.max_new_tokens)
                                : nn::beam_decode(model.state(), input, tgt, opt.beam_size, opt.max_new_tokens);
  return tokenizer::decode(ids, model.vocab());
}

std::string translate(const Model& model, std::string_view source, std::string_view src, std::string_view tgt,
                      const DecodeOptions& opt) {
  source_tag(model, src);
  source_tag(model, tgt);
  if (src == tgt) throw Error(ErrorCode::kInvalidArgument, "source and target language are the same");
  return decode_text(model, wrap(source, model.vocab()), src, tgt, opt);
}

std::vector<std::string> translate_candidates(const Model& model, std::string_view source, std::string_view src,
                                              std::string_view tgt, std::size_t k, const DecodeOptions& opt) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (k == 1) return {translate(model, source, src, tgt, opt)};
  source_tag(model, src);
  source_tag(model, tgt);
  if (src == tgt) throw Error(ErrorCode::kInvalidArgument, "source and target language are the same");
  const auto& langs = model.languages();
  auto input = nn::ModelInput::uniform(wrap(source, model.vocab()), langs.id(src));
  int beam = std::max(opt.beam_size, static_cast<int>(k));
  auto hyps = nn::beam_search(model.state(), input, langs.id(tgt), beam, opt.max_new_tokens);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < hyps.size() && i < k; ++i) out.push_back(tokenizer::decode(hyps[i].ids, model.vocab()));
  return out;
}

DecoderMode parse_decoder_mode(std::string_view name) {
  if (name == "shared") return DecoderMode::kShared;
  if (name == "separate") return DecoderMode::kSeparate;
  throw Error(ErrorCode::kInvalidArgument, "decoder mode must be 'shared' or 'separate', got '" + std::string(name) + "'");
}

std::string decompile(const Model& model, std::string_view ir_text, std::string_view tgt, DecoderMode mode,
                      std::string_view ir_dialect, const irnorm::NormalizationConfig& norm, const DecodeOptions& opt) {
  source_tag(model, tgt);
  bool separate = model.state().config().separate_decoders;
  if (separate != (mode == DecoderMode::kSeparate)) {
    throw Error(ErrorCode::kCheckpointMismatch, std::string("checkpoint was trained with ") +
                                                    (separate ? "separate" : "a shared") + " decoder");
  }
  std::string dialect = ir_dialect.empty() ? frontends::dialect_of(tgt) : std::string(ir_dialect);
  if (!frontends::is_dialect(dialect) || !model.languages().contains(dialect)) {
    throw Error(ErrorCode::kInvalidArgument, "'" + dialect + "' is not an IR dialect of this model");
  }
  auto normalized = irnorm::normalize(ir_text, norm);
  return decode_text(model, wrap(normalized, model.vocab()), dialect, tgt, opt);
}

std::string pivot_from_ir(const Model& model, std::string_view normalized_ir, std::string_view src,
                          std::string_view tgt, const DecodeOptions& opt) {
  source_tag(model, src);
  source_tag(model, tgt);
  return decode_text(model, wrap(normalized_ir, model.vocab()), frontends::dialect_of(src), tgt, opt);
}

std::string pivot_translate(const Model& model, std::string_view source, std::string_view src,
                            std::string_view tgt, const frontends::FrontendConfig& frontends,
                            const irnorm::NormalizationConfig& norm, const DecodeOptions& opt) {
  source_tag(model, src);
  source_tag(model, tgt);
  auto rec = frontends::compile_to_ir(frontends::make_record(std::string(src), std::string(source)), frontends);
  if (rec.compile_status != frontends::CompileStatus::kOk || !rec.raw_ir) {
    throw Error(ErrorCode::kCompileFailure, std::string(src) + " frontend failed (" +
                                                std::string(frontends::status_name(rec.compile_status)) +
                                                "): " + rec.status_message);
  }
  return pivot_from_ir(model, irnorm::normalize(*rec.raw_ir, norm), src, tgt, opt);
}

}  // namespace irtrans::translator
