#include "irtrans/trainer/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "irtrans/error.hpp"
#include "irtrans/frontends/frontend.hpp"
#include "irtrans/util/files.hpp"
#include "irtrans/util/rng.hpp"

namespace irtrans::trainer {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using objectives::EncodedRecord;

namespace {

bool is_back_translation(Objective o) { return o == Objective::kBT || o == Objective::kPivotBT; }

// Indices of the records each objective may draw from.
struct Pool {
  std::vector<std::size_t> all;
  std::map<int, std::vector<std::size_t>> by_language;
  bool parallel = false;
};

Pool make_pool(Objective o, const TrainData& data, std::size_t max_len) {
  Pool pool;
  pool.parallel = objectives::requires_ir(o);
  const auto& records = pool.parallel ? data.parallel : data.mono;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::size_t code = r.code.size();
    std::size_t ir = r.ir ? r.ir->size() : 0;
    bool fits = false;
    switch (o) {
      case Objective::kTLM:
      case Objective::kTAE:
        fits = code + ir + 3 <= max_len;
        break;
      case Objective::kIRGen:
      case Objective::kDecomp:
        fits = code + 2 <= max_len && ir + 2 <= max_len;
        break;
      default:
        fits = code + 2 <= max_len;
    }
    if (!fits) continue;
    pool.all.push_back(i);
    pool.by_language[r.language].push_back(i);
  }
  if (pool.all.empty()) {
    if (pool.parallel) {
      throw Error(ErrorCode::kMissingIR,
                  std::string(objectives::objective_name(o)) + " has no parallel record within max_len");
    }
    throw Error(ErrorCode::kEmptyCorpus,
                std::string(objectives::objective_name(o)) + " has no monolingual record within max_len");
  }
  return pool;
}

std::vector<EncodedRecord> sample_batch(Objective o, const Pool& pool, const TrainData& data, std::size_t size,
                                        util::Rng& rng) {
  const auto& records = pool.parallel ? data.parallel : data.mono;
  const std::vector<std::size_t>* from = &pool.all;
  if (is_back_translation(o)) {
    // One source language per step; the target language is drawn per example.
    auto it = pool.by_language.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(util::uniform_index(rng, pool.by_language.size())));
    from = &it->second;
  }
  std::vector<EncodedRecord> batch;
  batch.reserve(size);
  for (std::size_t i = 0; i < size; ++i) batch.push_back(records[(*from)[util::uniform_index(rng, from->size())]]);
  return batch;
}

json config_json(const TrainConfig& cfg) {
  json objs = json::array();
  for (auto o : cfg.objectives) objs.push_back(std::string(objectives::objective_name(o)));
  return json{{"objectives", objs},
              {"steps", cfg.steps},
              {"batch_size", cfg.batch_size},
              {"learning_rate", cfg.learning_rate},
              {"warmup_steps", cfg.warmup_steps},
              {"seed", cfg.seed},
              {"pivot_mode", cfg.pivot_mode}};
}

void adam_update(nn::ModelState& m, const nn::Gradients& g, nn::AdamState& st, const TrainConfig& cfg, double lr) {
  auto& p = m.params();
  if (st.m.size() != p.size()) st.m.assign(p.size(), 0.0);
  if (st.v.size() != p.size()) st.v.assign(p.size(), 0.0);
  st.t += 1;
  const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(st.t));
  const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(st.t));
  for (std::size_t i = 0; i < p.size(); ++i) {
    st.m[i] = cfg.beta1 * st.m[i] + (1.0 - cfg.beta1) * g[i];
    st.v[i] = cfg.beta2 * st.v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
    p[i] -= lr * (st.m[i] / c1) / (std::sqrt(st.v[i] / c2) + cfg.epsilon);
  }
}

std::string checkpoint_name(std::uint64_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "checkpoint-%06llu.ckpt", static_cast<unsigned long long>(step));
  return buf;
}

// Keeps the log lines of steps <= `step` so a resumed run appends cleanly.
void truncate_log(const fs::path& path, std::uint64_t step) {
  if (!fs::exists(path)) return;
  std::string kept;
  for (const auto& line : util::split_lines(util::read_file(path))) {
    if (line.empty()) continue;
    auto j = json::parse(line, nullptr, false);
    if (j.is_discarded() || j.value("step", std::uint64_t{0}) > step) continue;
    kept += line + "\n";
  }
  util::write_file(path, kept);
}

}  // namespace

std::vector<Objective> TrainConfig::effective_objectives() const {
  auto out = objectives;
  if (pivot_mode) {
    for (auto o : {Objective::kIRGen, Objective::kDecomp, Objective::kPivotBT}) {
      if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
    }
  }
  return out;
}

void TrainConfig::validate(std::size_t source_languages) const {
  if (objectives.empty()) throw Error(ErrorCode::kInvalidArgument, "objective list is empty");
  if (batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch_size must be positive");
  if (!(learning_rate > 0.0)) throw Error(ErrorCode::kInvalidArgument, "learning_rate must be positive");
  if (!(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0 && epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid Adam parameters");
  }
  if (clip_norm < 0.0) throw Error(ErrorCode::kInvalidArgument, "clip_norm must be >= 0");
  noise.validate();
  for (auto o : effective_objectives()) {
    if (is_back_translation(o) && source_languages < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(objectives::objective_name(o)) + " requires at least two source languages");
    }
  }
}

TrainConfig train_config_from(const util::ConfigFile& f, TrainConfig c) {
  auto names = f.get_list("train.objectives");
  if (!names.empty()) {
    c.objectives.clear();
    for (const auto& n : names) c.objectives.push_back(objectives::parse_objective(n));
  }
  c.steps = static_cast<std::uint64_t>(f.get_int("train.steps", static_cast<long long>(c.steps)));
  c.batch_size = static_cast<std::size_t>(f.get_int("train.batch_size", static_cast<long long>(c.batch_size)));
  c.learning_rate = f.get_double("train.learning_rate", c.learning_rate);
  c.warmup_steps = static_cast<std::uint64_t>(f.get_int("train.warmup_steps", static_cast<long long>(c.warmup_steps)));
  c.beta1 = f.get_double("train.beta1", c.beta1);
  c.beta2 = f.get_double("train.beta2", c.beta2);
  c.epsilon = f.get_double("train.epsilon", c.epsilon);
  c.clip_norm = f.get_double("train.clip_norm", c.clip_norm);
  c.checkpoint_interval =
      static_cast<std::uint64_t>(f.get_int("train.checkpoint_interval", static_cast<long long>(c.checkpoint_interval)));
  c.seed = static_cast<std::uint64_t>(f.get_int("train.seed", static_cast<long long>(c.seed)));
  c.pivot_mode = f.get_bool("train.pivot_mode", c.pivot_mode);
  c.bt_max_new = static_cast<int>(f.get_int("train.bt_max_new", c.bt_max_new));
  auto& n = c.noise;
  n.mlm_mask_rate = f.get_double("noise.mlm_mask_rate", n.mlm_mask_rate);
  n.ae_mask_rate = f.get_double("noise.ae_mask_rate", n.ae_mask_rate);
  n.span_length_mean = f.get_double("noise.span_length_mean", n.span_length_mean);
  n.token_drop_rate = f.get_double("noise.token_drop_rate", n.token_drop_rate);
  n.shuffle_window = static_cast<int>(f.get_int("noise.shuffle_window", n.shuffle_window));
  n.tlm_code_rate = f.get_double("noise.tlm_code_rate", n.tlm_code_rate);
  n.tlm_ir_rate = f.get_double("noise.tlm_ir_rate", n.tlm_ir_rate);
  n.random_replacement = f.get_bool("noise.random_replacement", n.random_replacement);
  return c;
}

nn::ModelConfig model_config_from(const util::ConfigFile& f, nn::ModelConfig c) {
  c.encoder_layers = static_cast<int>(f.get_int("model.encoder_layers", c.encoder_layers));
  c.decoder_layers = static_cast<int>(f.get_int("model.decoder_layers", c.decoder_layers));
  c.heads = static_cast<int>(f.get_int("model.heads", c.heads));
  c.dim = static_cast<int>(f.get_int("model.dim", c.dim));
  c.ffn_dim = static_cast<int>(f.get_int("model.ffn_dim", c.ffn_dim));
  c.max_len = static_cast<int>(f.get_int("model.max_len", c.max_len));
  c.separate_decoders = f.get_bool("model.separate_decoders", c.separate_decoders);
  c.seed = static_cast<std::uint64_t>(f.get_int("model.seed", static_cast<long long>(c.seed)));
  return c;
}

Objective schedule(std::uint64_t step, const std::vector<Objective>& objectives) {
  if (objectives.empty()) throw Error(ErrorCode::kInvalidArgument, "objective list is empty");
  return objectives[step % objectives.size()];
}

double lr_at(std::uint64_t step, const TrainConfig& cfg) {
  const double base = cfg.learning_rate;
  const double s = static_cast<double>(std::max<std::uint64_t>(step, 1));
  if (cfg.warmup_steps == 0) return base / std::sqrt(s);
  const double w = static_cast<double>(cfg.warmup_steps);
  if (step == 0) return 0.0;
  return base * std::min(s / w, std::sqrt(w / s));
}

TrainData TrainData::from_records(const std::vector<frontends::FunctionRecord>& mono,
                                  const std::vector<frontends::FunctionRecord>& parallel, tokenizer::Vocab vocab,
                                  frontends::LanguageSet languages) {
  TrainData d;
  d.vocab = std::move(vocab);
  d.languages = std::move(languages);
  for (const auto& r : mono) {
    auto e = objectives::encode_record(r, d.vocab, d.languages);
    e.ir.reset();
    d.mono.push_back(std::move(e));
  }
  for (const auto& r : parallel) {
    if (!r.normalized_ir) throw Error(ErrorCode::kMissingIR, "parallel record " + r.id + " has no normalized IR");
    d.parallel.push_back(objectives::encode_record(r, d.vocab, d.languages));
  }
  return d;
}

TrainData TrainData::load(const fs::path& dir, const std::vector<std::string>& languages, tokenizer::Vocab vocab) {
  std::vector<frontends::FunctionRecord> mono, parallel;
  for (const auto& lang : languages) {
    auto para_path = frontends::parallel_shard_path(dir, lang);
    auto mono_path = frontends::monolingual_shard_path(dir, lang);
    std::vector<frontends::FunctionRecord> p;
    if (fs::exists(para_path)) p = frontends::read_shard(para_path.string());
    auto m = fs::exists(mono_path) ? frontends::read_shard(mono_path.string()) : p;
    if (!fs::exists(para_path) && !fs::exists(mono_path)) {
      throw Error(ErrorCode::kIOError, "no shards for '" + lang + "' in " + dir.string());
    }
    mono.insert(mono.end(), m.begin(), m.end());
    parallel.insert(parallel.end(), p.begin(), p.end());
  }
  return from_records(mono, parallel, std::move(vocab), frontends::LanguageSet(languages));
}

std::string to_json_line(const TrainLogEntry& e) {
  return json{{"step", e.step}, {"objective", e.objective}, {"loss", e.loss}, {"lr", e.lr},
              {"grad_norm", e.grad_norm}, {"tokens", e.tokens}}
      .dump();
}

std::string to_json_line(const CheckpointEvent& e) {
  return json{{"step", e.step}, {"checkpoint", e.path.filename().string()},
              {"validation", json::parse(e.validation_json)}}
      .dump();
}

TrainResult train(const TrainData& data, const TrainConfig& cfg, nn::ModelConfig model, const TrainOptions& options) {
  cfg.validate(data.languages.sources().size());
  model.vocab_size = static_cast<int>(data.vocab.size());
  model.num_tags = static_cast<int>(data.languages.size());
  model.validate();

  const auto schedule_list = cfg.effective_objectives();
  std::map<Objective, Pool> pools;
  for (auto o : schedule_list) {
    if (!pools.count(o)) pools.emplace(o, make_pool(o, data, static_cast<std::size_t>(model.max_len)));
  }

  TrainResult result;
  auto& ck = result.checkpoint;
  if (options.resume_from) {
    ck = nn::load_checkpoint(*options.resume_from);
    if (ck.vocab_hash != data.vocab.hash() || ck.languages != data.languages.sources()) {
      throw Error(ErrorCode::kCheckpointMismatch, "checkpoint was trained with a different vocabulary or language set");
    }
    if (!(ck.model.config() == model)) {
      throw Error(ErrorCode::kCheckpointMismatch, "checkpoint model configuration differs from the requested one");
    }
  } else {
    ck.model = nn::ModelState(model);
    ck.languages = data.languages.sources();
    ck.vocab_text = data.vocab.to_text();
    ck.vocab_hash = data.vocab.hash();
  }
  ck.metadata_json = config_json(cfg).dump();

  const bool to_disk = !options.out_dir.empty();
  const fs::path log_path = options.out_dir / "train_log.jsonl";
  std::ofstream log_out;
  if (to_disk) {
    fs::create_directories(options.out_dir);
    if (options.resume_from) {
      truncate_log(log_path, ck.step);
    } else {
      util::write_file(log_path, "");
    }
    log_out.open(log_path, std::ios::app);
  }

  auto write_checkpoint = [&](bool final) {
    CheckpointEvent ev{ck.step, {}, "{}"};
    if (options.validate) ev.validation_json = options.validate(ck.model, ck.step);
    if (to_disk) {
      ev.path = options.out_dir / checkpoint_name(ck.step);
      nn::save_checkpoint(ev.path, ck);
      if (final) nn::save_checkpoint(options.out_dir / "last.ckpt", ck);
      log_out << to_json_line(ev) << '\n';
      log_out.flush();
    }
    result.log.checkpoints.push_back(std::move(ev));
  };

  objectives::ObjectiveContext ctx;
  ctx.languages = &data.languages;
  ctx.noise = cfg.noise;
  ctx.vocab_size = model.vocab_size;
  ctx.max_len = static_cast<std::size_t>(model.max_len);
  ctx.bt_max_new = cfg.bt_max_new;

  nn::Gradients grads = nn::zero_gradients(ck.model);
  for (std::uint64_t step = ck.step + 1; step <= cfg.steps; ++step) {
    util::Rng rng(util::mix_seed(cfg.seed, step));
    Objective o = schedule(step - 1, schedule_list);
    auto batch = sample_batch(o, pools.at(o), data, cfg.batch_size, rng);
    std::fill(grads.begin(), grads.end(), 0.0);
    auto rep = objectives::objective_step(o, batch, ck.model, ctx, rng, &grads);
    double norm = rep.grad_norm;
    if (!std::isfinite(norm)) throw Error(ErrorCode::kNonFiniteLoss, "non-finite gradient at step " + std::to_string(step));
    if (cfg.clip_norm > 0.0 && norm > cfg.clip_norm) {
      const double f = cfg.clip_norm / norm;
      for (auto& g : grads) g *= f;
    }
    const double lr = lr_at(step, cfg);
    adam_update(ck.model, grads, ck.optimizer, cfg, lr);
    if (!ck.model.all_finite()) {
      throw Error(ErrorCode::kNonFiniteLoss, "parameters became non-finite at step " + std::to_string(step));
    }
    ck.step = step;
    TrainLogEntry entry{step, rep.objective, rep.loss, lr, norm, rep.tokens};
    if (to_disk) log_out << to_json_line(entry) << '\n';
    if (options.on_step) options.on_step(entry);
    result.log.steps.push_back(std::move(entry));
    if (cfg.checkpoint_interval > 0 && step % cfg.checkpoint_interval == 0 && step != cfg.steps) write_checkpoint(false);
  }
  write_checkpoint(true);
  return result;
}

}  // namespace irtrans::trainer
