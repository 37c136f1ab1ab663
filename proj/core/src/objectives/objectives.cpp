#include "irtrans/objectives/objectives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "irtrans/error.hpp"
#include "irtrans/tokenizer/bpe.hpp"

namespace irtrans::objectives {

using tokenizer::Vocab;

namespace {

constexpr std::array<std::string_view, 8> kNames = {"MLM", "AE", "BT", "TLM", "TAE", "IRGen", "Decomp", "PivotBT"};

bool special(int id) { return id >= 0 && id < Vocab::kReserved; }

std::vector<int> wrap(const std::vector<int>& raw) {
  std::vector<int> out;
  out.reserve(raw.size() + 2);
  out.push_back(Vocab::kBos);
  out.insert(out.end(), raw.begin(), raw.end());
  out.push_back(Vocab::kEos);
  return out;
}

int replacement(util::Rng& rng, bool random_replacement, int original, int vocab_size) {
  if (!random_replacement) return Vocab::kMask;
  double u = util::uniform01(rng);
  if (u < 0.8) return Vocab::kMask;
  if (u < 0.9 && vocab_size > Vocab::kReserved) {
    return Vocab::kReserved + static_cast<int>(util::uniform_index(rng, static_cast<std::uint64_t>(vocab_size - Vocab::kReserved)));
  }
  return original;
}

// Per-position rates; forces one masked position when nothing was drawn but
// some rate is positive, so a short sequence still yields a training signal.
template <typename RateFn>
MaskResult mask_with(const std::vector<int>& ids, RateFn rate_at, util::Rng& rng, bool random_replacement,
                     int vocab_size, bool force_one) {
  MaskResult out{ids, {}};
  std::vector<int> eligible;
  bool any_rate = false;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (special(ids[i])) continue;
    eligible.push_back(static_cast<int>(i));
    double rate = rate_at(i);
    any_rate = any_rate || rate > 0.0;
    if (util::uniform01(rng) < rate) out.positions.push_back(static_cast<int>(i));
  }
  if (force_one && out.positions.empty() && any_rate && !eligible.empty()) {
    out.positions.push_back(eligible[util::uniform_index(rng, eligible.size())]);
  }
  for (int p : out.positions) {
    auto& id = out.ids[static_cast<std::size_t>(p)];
    id = replacement(rng, random_replacement, id, vocab_size);
  }
  return out;
}

std::vector<int> corrupt_run(std::vector<int> run, const NoiseConfig& cfg, util::Rng& rng) {
  const std::size_t n = run.size();
  if (n == 0) return run;
  auto target = static_cast<std::size_t>(std::llround(cfg.ae_mask_rate * static_cast<double>(n)));
  if (target > 0) {
    std::vector<char> masked(n, 0);
    std::size_t covered = 0;
    for (std::size_t iter = 0; covered < target && iter < 50 * n + 100; ++iter) {
      auto len = static_cast<std::size_t>(std::max(1, util::poisson(rng, cfg.span_length_mean)));
      len = std::min(len, target - covered);
      auto start = util::uniform_index(rng, n - len + 1);
      for (std::size_t i = start; i < start + len; ++i) {
        if (!masked[i]) {
          masked[i] = 1;
          ++covered;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (masked[i]) run[i] = Vocab::kMask;
    }
  }
  if (cfg.token_drop_rate > 0.0) {
    std::vector<int> kept;
    kept.reserve(n);
    for (int id : run) {
      if (util::uniform01(rng) >= cfg.token_drop_rate) kept.push_back(id);
    }
    if (kept.empty()) kept.push_back(run.front());
    run = std::move(kept);
  }
  if (cfg.shuffle_window > 0 && run.size() > 1) {
    std::vector<double> keys(run.size());
    for (std::size_t i = 0; i < run.size(); ++i) {
      keys[i] = static_cast<double>(i) + util::uniform01(rng) * (cfg.shuffle_window + 1);
    }
    std::vector<std::size_t> order(run.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<int> shuffled;
    shuffled.reserve(run.size());
    for (auto i : order) shuffled.push_back(run[i]);
    run = std::move(shuffled);
  }
  return run;
}

int other_language(int language, std::size_t count, util::Rng& rng) {
  if (count < 2) throw Error(ErrorCode::kInvalidArgument, "back-translation needs at least two source languages");
  auto k = static_cast<int>(util::uniform_index(rng, count - 1));
  return k >= language ? k + 1 : k;
}

const std::vector<int>& ir_of(const EncodedRecord& r, Objective o) {
  if (!r.ir) throw Error(ErrorCode::kMissingIR, std::string(objective_name(o)) + " needs a record with normalized IR");
  return *r.ir;
}

std::vector<int> generate(const nn::ModelState* model, const std::vector<int>& src, int src_tag, int tgt_tag,
                          const ObjectiveContext& ctx) {
  if (model == nullptr) throw Error(ErrorCode::kInvalidArgument, "back-translation needs a model");
  int bound = std::min(ctx.bt_max_new, 2 * static_cast<int>(src.size()) + 8);
  return nn::greedy_decode(*model, nn::ModelInput::uniform(src, src_tag), tgt_tag, bound);
}

void check_length(const std::vector<int>& ids, std::size_t max_len) {
  if (ids.size() > max_len) {
    throw Error(ErrorCode::kSequenceTooLong,
                "sequence of " + std::to_string(ids.size()) + " tokens exceeds " + std::to_string(max_len));
  }
}

}  // namespace

std::string_view objective_name(Objective o) { return kNames[static_cast<std::size_t>(o)]; }

Objective parse_objective(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Objective>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown objective '" + std::string(name) + "'");
}

bool requires_ir(Objective o) {
  return o == Objective::kTLM || o == Objective::kTAE || o == Objective::kIRGen || o == Objective::kDecomp;
}

bool is_masked_lm(Objective o) { return o == Objective::kMLM || o == Objective::kTLM; }

void NoiseConfig::validate() const {
  auto rate = [](double r, const char* name) {
    if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be in [0,1]");
  };
  rate(mlm_mask_rate, "mlm_mask_rate");
  rate(ae_mask_rate, "ae_mask_rate");
  rate(token_drop_rate, "token_drop_rate");
  if (tlm_code_rate >= 0.0) rate(tlm_code_rate, "tlm_code_rate");
  if (tlm_ir_rate >= 0.0) rate(tlm_ir_rate, "tlm_ir_rate");
  if (!(span_length_mean > 0.0)) throw Error(ErrorCode::kInvalidArgument, "span_length_mean must be positive");
  if (shuffle_window < 0) throw Error(ErrorCode::kInvalidArgument, "shuffle_window must be >= 0");
}

MaskResult mask_tokens(const std::vector<int>& ids, double rate, util::Rng& rng, bool random_replacement,
                       int vocab_size) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "mask rate must be in [0,1]");
  return mask_with(ids, [rate](std::size_t) { return rate; }, rng, random_replacement, vocab_size, false);
}

std::vector<int> corrupt_sequence(const std::vector<int>& ids, const NoiseConfig& cfg, util::Rng& rng) {
  cfg.validate();
  std::vector<int> out;
  out.reserve(ids.size());
  std::size_t i = 0;
  while (i < ids.size()) {
    if (special(ids[i])) {
      out.push_back(ids[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < ids.size() && !special(ids[j])) ++j;
    auto run = corrupt_run(std::vector<int>(ids.begin() + static_cast<std::ptrdiff_t>(i), ids.begin() + static_cast<std::ptrdiff_t>(j)), cfg, rng);
    out.insert(out.end(), run.begin(), run.end());
    i = j;
  }
  return out;
}

ConcatPair concat_with_ir(const std::vector<int>& x, const std::vector<int>& z, int code_tag, int ir_tag,
                          std::size_t max_len) {
  ConcatPair p;
  p.ids.reserve(x.size() + z.size() + 3);
  p.ids.push_back(Vocab::kBos);
  p.ids.insert(p.ids.end(), x.begin(), x.end());
  p.boundary = p.ids.size();
  p.ids.push_back(Vocab::kSep);
  p.ids.insert(p.ids.end(), z.begin(), z.end());
  p.ids.push_back(Vocab::kEos);
  check_length(p.ids, max_len);
  p.tags.assign(p.ids.size(), ir_tag);
  std::fill(p.tags.begin(), p.tags.begin() + static_cast<std::ptrdiff_t>(p.boundary), code_tag);
  return p;
}

EncodedRecord encode_record(const frontends::FunctionRecord& r, const tokenizer::Vocab& vocab,
                            const frontends::LanguageSet& languages) {
  EncodedRecord e;
  e.language = languages.id(r.language);
  e.code = tokenizer::encode_ids(r.source, vocab);
  if (r.normalized_ir) e.ir = tokenizer::encode_ids(*r.normalized_ir, vocab);
  return e;
}

TrainingExample build_example(Objective o, const EncodedRecord& r, const ObjectiveContext& ctx, util::Rng& rng,
                              const nn::ModelState* model) {
  if (ctx.languages == nullptr) throw Error(ErrorCode::kInvalidArgument, "objective context has no language set");
  const auto nsrc = ctx.languages->sources().size();
  const int src_tag = r.language;
  const int ir_tag = r.language + static_cast<int>(nsrc);
  const auto& noise = ctx.noise;
  TrainingExample ex;
  ex.objective = o;
  switch (o) {
    case Objective::kMLM: {
      auto x = wrap(r.code);
      double rate = noise.mlm_mask_rate;
      auto masked = mask_with(x, [rate](std::size_t) { return rate; }, rng, noise.random_replacement, ctx.vocab_size, true);
      ex.input = nn::ModelInput::uniform(std::move(masked.ids), src_tag);
      ex.positions = std::move(masked.positions);
      ex.target = std::move(x);
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kAE: {
      auto x = wrap(r.code);
      ex.input = nn::ModelInput::uniform(corrupt_sequence(x, noise, rng), src_tag);
      ex.target = std::move(x);
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kBT: {
      int other = other_language(r.language, nsrc, rng);
      auto x = wrap(r.code);
      ex.input = nn::ModelInput::uniform(generate(model, x, src_tag, other, ctx), other);
      ex.target = std::move(x);
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kPivotBT: {
      int other = other_language(r.language, nsrc, rng);
      int other_dialect = other + static_cast<int>(nsrc);
      auto x = wrap(r.code);
      ex.input = nn::ModelInput::uniform(generate(model, x, src_tag, other_dialect, ctx), other_dialect);
      ex.target = std::move(x);
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kTLM: {
      const auto& z = ir_of(r, o);
      auto pair = concat_with_ir(r.code, z, src_tag, ir_tag, ctx.max_len);
      double code_rate = noise.tlm_code_rate >= 0.0 ? noise.tlm_code_rate : noise.mlm_mask_rate;
      double ir_rate = noise.tlm_ir_rate >= 0.0 ? noise.tlm_ir_rate : noise.mlm_mask_rate;
      auto boundary = pair.boundary;
      auto masked = mask_with(
          pair.ids, [&](std::size_t i) { return i < boundary ? code_rate : ir_rate; }, rng, noise.random_replacement,
          ctx.vocab_size, true);
      ex.input = {std::move(masked.ids), pair.tags};
      ex.positions = std::move(masked.positions);
      ex.target = std::move(pair.ids);
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kTAE: {
      const auto& z = ir_of(r, o);
      auto noisy_x = corrupt_sequence(r.code, noise, rng);
      auto noisy_z = corrupt_sequence(z, noise, rng);
      ex.input = concat_with_ir(noisy_x, noisy_z, src_tag, ir_tag, ctx.max_len).input();
      ex.target = concat_with_ir(r.code, z, src_tag, ir_tag, ctx.max_len).ids;
      ex.target_tag = src_tag;
      break;
    }
    case Objective::kIRGen: {
      const auto& z = ir_of(r, o);
      ex.input = nn::ModelInput::uniform(wrap(r.code), src_tag);
      ex.target = wrap(z);
      ex.target_tag = ir_tag;
      break;
    }
    case Objective::kDecomp: {
      const auto& z = ir_of(r, o);
      ex.input = nn::ModelInput::uniform(wrap(z), ir_tag);
      ex.target = wrap(r.code);
      ex.target_tag = src_tag;
      break;
    }
  }
  check_length(ex.input.ids, ctx.max_len);
  check_length(ex.target, ctx.max_len);
  return ex;
}

nn::LossReport example_loss(const nn::ModelState& m, const TrainingExample& ex, nn::Gradients* grads, double scale) {
  nn::LossReport r = is_masked_lm(ex.objective) ? nn::masked_lm_loss(m, ex.input, ex.target, ex.positions, grads, scale)
                                                : nn::sequence_loss(m, ex.input, ex.target, ex.target_tag, grads, scale);
  r.objective = std::string(objective_name(ex.objective));
  return r;
}

nn::LossReport objective_step(Objective o, const std::vector<EncodedRecord>& batch, const nn::ModelState& m,
                              const ObjectiveContext& ctx, util::Rng& rng, nn::Gradients* grads) {
  if (batch.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  nn::LossReport total;
  total.objective = std::string(objective_name(o));
  const double scale = 1.0 / static_cast<double>(batch.size());
  for (const auto& r : batch) {
    auto ex = build_example(o, r, ctx, rng, &m);
    auto rep = example_loss(m, ex, grads, scale);
    total.loss += rep.loss * scale;
    total.tokens += rep.tokens;
  }
  if (grads != nullptr) total.grad_norm = nn::gradient_norm(*grads);
  return total;
}

nn::LossReport objective_step(Objective o, const std::vector<frontends::FunctionRecord>& batch,
                              const nn::ModelState& m, const tokenizer::Vocab& vocab, const ObjectiveContext& ctx,
                              util::Rng& rng, nn::Gradients* grads) {
  if (ctx.languages == nullptr) throw Error(ErrorCode::kInvalidArgument, "objective context has no language set");
  std::vector<EncodedRecord> encoded;
  encoded.reserve(batch.size());
  for (const auto& r : batch) {
    if (requires_ir(o) && !r.normalized_ir) {
      throw Error(ErrorCode::kMissingIR, std::string(objective_name(o)) + " needs IR for record " + r.id);
    }
    encoded.push_back(encode_record(r, vocab, *ctx.languages));
  }
  return objective_step(o, encoded, m, ctx, rng, grads);
}

}  // namespace irtrans::objectives
