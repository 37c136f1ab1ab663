#include "irtrans/nn/state.hpp"

#include <cmath>

#include "irtrans/error.hpp"
#include "irtrans/util/rng.hpp"

namespace irtrans::nn {

void ModelConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kInvalidArgument, "invalid model config: " + what);
  };
  require(encoder_layers > 0 && decoder_layers > 0, "layer counts must be positive");
  require(heads > 0 && dim > 0 && ffn_dim > 0, "heads, dim and ffn_dim must be positive");
  require(dim % heads == 0, "dim must be divisible by heads");
  require(max_len > 1, "max_len must exceed 1");
  require(vocab_size > 0 && num_tags > 0, "vocab_size and num_tags must be positive");
}

ModelState::ModelState(const ModelConfig& config) : config_(config) {
  config_.validate();
  const int d = config_.dim;
  tok_emb = add("tok_emb", config_.vocab_size, d);
  pos_emb = add("pos_emb", config_.max_len, d);
  lang_emb = add("lang_emb", config_.num_tags, d);
  out_bias = add("out_bias", 1, config_.vocab_size);
  for (int l = 0; l < config_.encoder_layers; ++l) {
    auto p = "enc" + std::to_string(l) + ".";
    EncoderLayerIds e{};
    e.ln1_g = add(p + "ln1_g", 1, d);
    e.ln1_b = add(p + "ln1_b", 1, d);
    e.self = add_attention(p + "self.");
    e.ln2_g = add(p + "ln2_g", 1, d);
    e.ln2_b = add(p + "ln2_b", 1, d);
    e.ffn = add_ffn(p + "ffn.");
    encoder.push_back(e);
  }
  enc_lnf_g = add("enc.lnf_g", 1, d);
  enc_lnf_b = add("enc.lnf_b", 1, d);
  for (int k = 0; k < config_.decoder_count(); ++k) {
    DecoderIds dec;
    for (int l = 0; l < config_.decoder_layers; ++l) {
      auto p = "dec" + std::to_string(k) + "." + std::to_string(l) + ".";
      DecoderLayerIds x{};
      x.ln1_g = add(p + "ln1_g", 1, d);
      x.ln1_b = add(p + "ln1_b", 1, d);
      x.self = add_attention(p + "self.");
      x.ln2_g = add(p + "ln2_g", 1, d);
      x.ln2_b = add(p + "ln2_b", 1, d);
      x.cross = add_attention(p + "cross.");
      x.ln3_g = add(p + "ln3_g", 1, d);
      x.ln3_b = add(p + "ln3_b", 1, d);
      x.ffn = add_ffn(p + "ffn.");
      dec.layers.push_back(x);
    }
    auto p = "dec" + std::to_string(k) + ".";
    dec.lnf_g = add(p + "lnf_g", 1, d);
    dec.lnf_b = add(p + "lnf_b", 1, d);
    decoders.push_back(std::move(dec));
  }
  params_.assign(tensors_.empty() ? 0 : tensors_.back().offset + tensors_.back().size(), 0.0);
  initialize();
}

int ModelState::add(const std::string& name, int rows, int cols) {
  std::size_t end = tensors_.empty() ? 0 : tensors_.back().offset + tensors_.back().size();
  TensorInfo t{name, rows, cols, (end + kTensorAlign - 1) / kTensorAlign * kTensorAlign};
  tensors_.push_back(t);
  return static_cast<int>(tensors_.size()) - 1;
}

AttentionIds ModelState::add_attention(const std::string& prefix) {
  const int d = config_.dim;
  AttentionIds a{};
  a.wq = add(prefix + "wq", d, d);
  a.bq = add(prefix + "bq", 1, d);
  a.wk = add(prefix + "wk", d, d);
  a.bk = add(prefix + "bk", 1, d);
  a.wv = add(prefix + "wv", d, d);
  a.bv = add(prefix + "bv", 1, d);
  a.wo = add(prefix + "wo", d, d);
  a.bo = add(prefix + "bo", 1, d);
  return a;
}

FeedForwardIds ModelState::add_ffn(const std::string& prefix) {
  FeedForwardIds f{};
  f.w1 = add(prefix + "w1", config_.dim, config_.ffn_dim);
  f.b1 = add(prefix + "b1", 1, config_.ffn_dim);
  f.w2 = add(prefix + "w2", config_.ffn_dim, config_.dim);
  f.b2 = add(prefix + "b2", 1, config_.dim);
  return f;
}

void ModelState::initialize() {
  util::Rng rng(util::mix_seed(config_.seed, 0));
  const double d = config_.dim;
  const double residual_scale = 1.0 / std::sqrt(2.0 * (config_.encoder_layers + config_.decoder_layers));
  for (const auto& t : tensors_) {
    const auto& n = t.name;
    auto ends = [&](const char* suffix) {
      std::string s(suffix);
      return n.size() >= s.size() && n.compare(n.size() - s.size(), s.size(), s) == 0;
    };
    double* p = params_.data() + t.offset;
    if (ends("_g")) {
      for (std::size_t i = 0; i < t.size(); ++i) p[i] = 1.0;
      continue;
    }
    if (t.rows == 1) continue;  // biases and layer-norm shifts start at 0
    double stddev = 1.0 / std::sqrt(static_cast<double>(t.rows));
    if (n == "tok_emb" || n == "pos_emb" || n == "lang_emb") stddev = 1.0 / std::sqrt(d);
    if (ends("wo") || ends("w2")) stddev *= residual_scale;
    for (std::size_t i = 0; i < t.size(); ++i) p[i] = stddev * util::normal01(rng);
  }
}

ConstMatMap ModelState::tensor(int id) const {
  const auto& t = tensors_.at(static_cast<std::size_t>(id));
  return ConstMatMap(params_.data() + t.offset, t.rows, t.cols);
}

MatMap ModelState::tensor(int id) {
  const auto& t = tensors_.at(static_cast<std::size_t>(id));
  return MatMap(params_.data() + t.offset, t.rows, t.cols);
}

int ModelState::find(const std::string& name) const {
  for (std::size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

bool ModelState::all_finite() const {
  for (double v : params_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace irtrans::nn
