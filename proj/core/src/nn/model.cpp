#include "irtrans/nn/model.hpp"

#include <algorithm>
#include <cmath>

#include "irtrans/error.hpp"
#include "irtrans/tokenizer/vocab.hpp"

namespace irtrans::nn {
namespace {

using Var = Tape::Var;
using tokenizer::Vocab;

Var feed_forward(Tape& t, Var x, const FeedForwardIds& f) {
  return t.linear(t.gelu(t.linear(x, f.w1, f.b1)), f.w2, f.b2);
}

Var encoder_forward(Tape& t, const ModelState& m, const ModelInput& src) {
  if (src.ids.empty()) throw Error(ErrorCode::kInvalidArgument, "empty encoder input");
  Var x = t.embed(src.ids, src.tags);
  for (const auto& l : m.encoder) {
    Var h = t.layer_norm(x, l.ln1_g, l.ln1_b);
    x = t.add(x, t.attention(h, h, l.self, false));
    x = t.add(x, feed_forward(t, t.layer_norm(x, l.ln2_g, l.ln2_b), l.ffn));
  }
  return t.layer_norm(x, m.enc_lnf_g, m.enc_lnf_b);
}

const DecoderIds& decoder_for(const ModelState& m, int target_tag) {
  if (target_tag < 0 || target_tag >= m.config().num_tags) {
    throw Error(ErrorCode::kInvalidArgument, "target tag " + std::to_string(target_tag) + " outside the tag table");
  }
  return m.decoders[static_cast<std::size_t>(m.config().separate_decoders ? target_tag : 0)];
}

Var decoder_forward(Tape& t, const ModelState& m, Var enc, const std::vector<int>& ids, int tag) {
  const auto& dec = decoder_for(m, tag);
  Var y = t.embed(ids, std::vector<int>(ids.size(), tag));
  for (const auto& l : dec.layers) {
    Var h = t.layer_norm(y, l.ln1_g, l.ln1_b);
    y = t.add(y, t.attention(h, h, l.self, true));
    y = t.add(y, t.attention(t.layer_norm(y, l.ln2_g, l.ln2_b), enc, l.cross, false));
    y = t.add(y, feed_forward(t, t.layer_norm(y, l.ln3_g, l.ln3_b), l.ffn));
  }
  return t.layer_norm(y, dec.lnf_g, dec.lnf_b);
}

void check_target(const ModelState& m, const std::vector<int>& target) {
  if (target.size() < 2) throw Error(ErrorCode::kInvalidArgument, "target needs at least BOS and one token");
  if (static_cast<int>(target.size()) - 1 > m.config().max_len) {
    throw Error(ErrorCode::kSequenceTooLong, "target of length " + std::to_string(target.size()) + " exceeds max_len " +
                                                 std::to_string(m.config().max_len));
  }
}

LossReport finish(Tape& t, Var loss, std::size_t tokens, const char* name, Gradients* grads, double scale) {
  LossReport r;
  r.objective = name;
  r.loss = t.value(loss)(0, 0);
  r.tokens = tokens;
  if (!std::isfinite(r.loss)) throw Error(ErrorCode::kNonFiniteLoss, std::string(name) + " loss is not finite");
  if (grads) {
    t.backward(loss, scale);
    r.grad_norm = gradient_norm(*grads);
  }
  return r;
}

// --- incremental decoding -------------------------------------------------

struct CrossCache {
  std::vector<Mat> k, v;
};

struct SelfCache {
  std::vector<Mat> k, v;  // per layer, one row per decoded position
};

Mat row_linear(const Mat& x, const ConstMatMap& w, const ConstMatMap& b) {
  Mat y = x * w;
  y.rowwise() += b.row(0);
  return y;
}

Mat attend(const ModelState& m, const Mat& q, const Mat& K, const Mat& V, const AttentionIds& a) {
  const int H = m.config().heads;
  const int dh = m.config().dim / H;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  Mat o(1, m.config().dim);
  for (int h = 0; h < H; ++h) {
    Mat s = q.middleCols(h * dh, dh) * K.middleCols(h * dh, dh).transpose() * scale;
    double mx = s.maxCoeff();
    Mat p = (s.array() - mx).exp();
    p /= p.sum();
    o.middleCols(h * dh, dh).noalias() = p * V.middleCols(h * dh, dh);
  }
  return row_linear(o, m.tensor(a.wo), m.tensor(a.bo));
}

class IncrementalDecoder {
 public:
  IncrementalDecoder(const ModelState& m, const ModelInput& src, int tag) : m_(m), dec_(decoder_for(m, tag)), tag_(tag) {
    Tape t(m, nullptr);
    Mat enc = t.value(encoder_forward(t, m, src));
    for (const auto& l : dec_.layers) {
      cross_.k.push_back(row_linear(enc, m.tensor(l.cross.wk), m.tensor(l.cross.bk)));
      cross_.v.push_back(row_linear(enc, m.tensor(l.cross.wv), m.tensor(l.cross.bv)));
    }
  }

  // Log-probabilities of the next token after feeding `token` at `pos`.
  Mat step(SelfCache& cache, int token, int pos) const {
    const auto& cfg = m_.config();
    if (pos >= cfg.max_len) throw Error(ErrorCode::kSequenceTooLong, "decoder position exceeds max_len");
    if (cache.k.empty()) {
      cache.k.resize(dec_.layers.size(), Mat(0, cfg.dim));
      cache.v.resize(dec_.layers.size(), Mat(0, cfg.dim));
    }
    Mat y = m_.tensor(m_.tok_emb).row(token) + m_.tensor(m_.pos_emb).row(pos) + m_.tensor(m_.lang_emb).row(tag_);
    for (std::size_t li = 0; li < dec_.layers.size(); ++li) {
      const auto& l = dec_.layers[li];
      Mat h = layer_norm_forward(y, m_.tensor(l.ln1_g), m_.tensor(l.ln1_b));
      Mat q = row_linear(h, m_.tensor(l.self.wq), m_.tensor(l.self.bq));
      auto& K = cache.k[li];
      auto& V = cache.v[li];
      K.conservativeResize(K.rows() + 1, Eigen::NoChange);
      V.conservativeResize(V.rows() + 1, Eigen::NoChange);
      K.row(K.rows() - 1) = row_linear(h, m_.tensor(l.self.wk), m_.tensor(l.self.bk));
      V.row(V.rows() - 1) = row_linear(h, m_.tensor(l.self.wv), m_.tensor(l.self.bv));
      y += attend(m_, q, K, V, l.self);
      h = layer_norm_forward(y, m_.tensor(l.ln2_g), m_.tensor(l.ln2_b));
      q = row_linear(h, m_.tensor(l.cross.wq), m_.tensor(l.cross.bq));
      y += attend(m_, q, cross_.k[li], cross_.v[li], l.cross);
      h = layer_norm_forward(y, m_.tensor(l.ln3_g), m_.tensor(l.ln3_b));
      Mat f = gelu_forward(row_linear(h, m_.tensor(l.ffn.w1), m_.tensor(l.ffn.b1)));
      y += row_linear(f, m_.tensor(l.ffn.w2), m_.tensor(l.ffn.b2));
    }
    Mat out = layer_norm_forward(y, m_.tensor(dec_.lnf_g), m_.tensor(dec_.lnf_b));
    Mat logits = out * m_.tensor(m_.tok_emb).transpose();
    logits.rowwise() += m_.tensor(m_.out_bias).row(0);
    return log_softmax(logits);
  }

 private:
  const ModelState& m_;
  const DecoderIds& dec_;
  int tag_;
  CrossCache cross_;
};

int clamp_new_tokens(const ModelState& m, int max_new_tokens) {
  return std::max(0, std::min(max_new_tokens, m.config().max_len - 1));
}

}  // namespace

ModelInput ModelInput::uniform(std::vector<int> ids, int tag) {
  ModelInput in;
  in.tags.assign(ids.size(), tag);
  in.ids = std::move(ids);
  return in;
}

Gradients zero_gradients(const ModelState& m) { return Gradients(m.parameter_count(), 0.0); }

double gradient_norm(const Gradients& g) {
  double s = 0.0;
  for (double v : g) s += v * v;
  return std::sqrt(s);
}

Mat encode_states(const ModelState& m, const ModelInput& src) {
  Tape t(m, nullptr);
  return t.value(encoder_forward(t, m, src));
}

Mat decoder_logits(const ModelState& m, const ModelInput& src, const std::vector<int>& target, int target_tag) {
  check_target(m, target);
  Tape t(m, nullptr);
  Var enc = encoder_forward(t, m, src);
  std::vector<int> input(target.begin(), target.end() - 1);
  Var h = decoder_forward(t, m, enc, input, target_tag);
  std::vector<int> rows(input.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
  return t.value(t.logits(h, rows));
}

LossReport sequence_loss(const ModelState& m, const ModelInput& src, const std::vector<int>& target, int target_tag,
                         Gradients* grads, double scale) {
  check_target(m, target);
  Tape t(m, grads);
  Var enc = encoder_forward(t, m, src);
  std::vector<int> input(target.begin(), target.end() - 1);
  Var h = decoder_forward(t, m, enc, input, target_tag);
  std::vector<int> rows;
  std::vector<int> labels;
  for (std::size_t i = 1; i < target.size(); ++i) {
    if (target[i] == Vocab::kPad) continue;
    rows.push_back(static_cast<int>(i) - 1);
    labels.push_back(target[i]);
  }
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "target has no non-PAD tokens");
  Var loss = t.cross_entropy(t.logits(h, rows), labels);
  return finish(t, loss, rows.size(), "sequence", grads, scale);
}

LossReport masked_lm_loss(const ModelState& m, const ModelInput& masked, const std::vector<int>& original,
                          const std::vector<int>& positions, Gradients* grads, double scale) {
  if (positions.empty()) throw Error(ErrorCode::kEmptyMaskSet, "no masked positions to predict");
  if (original.size() != masked.ids.size()) {
    throw Error(ErrorCode::kInvalidArgument, "masked and original sequences differ in length");
  }
  std::vector<int> labels;
  for (int p : positions) {
    if (p < 0 || static_cast<std::size_t>(p) >= original.size()) {
      throw Error(ErrorCode::kInvalidArgument, "mask position " + std::to_string(p) + " out of range");
    }
    labels.push_back(original[static_cast<std::size_t>(p)]);
  }
  Tape t(m, grads);
  Var enc = encoder_forward(t, m, masked);
  Var loss = t.cross_entropy(t.logits(enc, positions), labels);
  return finish(t, loss, positions.size(), "masked_lm", grads, scale);
}

std::vector<int> greedy_decode(const ModelState& m, const ModelInput& src, int target_tag, int max_new_tokens) {
  IncrementalDecoder dec(m, src, target_tag);
  SelfCache cache;
  std::vector<int> ids = {Vocab::kBos};
  const int limit = clamp_new_tokens(m, max_new_tokens);
  for (int pos = 0; pos < limit; ++pos) {
    Mat lp = dec.step(cache, ids.back(), pos);
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < lp.cols(); ++j) {
      if (lp(0, j) > lp(0, best)) best = j;
    }
    ids.push_back(static_cast<int>(best));
    if (best == Vocab::kEos) break;
  }
  return ids;
}

std::vector<Hypothesis> beam_search(const ModelState& m, const ModelInput& src, int target_tag, int beam_size,
                                    int max_new_tokens) {
  if (beam_size < 1) throw Error(ErrorCode::kInvalidArgument, "beam_size must be at least 1");
  IncrementalDecoder dec(m, src, target_tag);

  struct Live {
    std::vector<int> ids;
    double log_prob;
    SelfCache cache;
  };
  struct Candidate {
    std::size_t parent;
    int token;
    double log_prob;
  };
  std::vector<Live> active;
  active.push_back({{Vocab::kBos}, 0.0, {}});
  std::vector<Hypothesis> finished;
  const int limit = clamp_new_tokens(m, max_new_tokens);
  const auto beam = static_cast<std::size_t>(beam_size);

  for (int pos = 0; pos < limit && !active.empty() && finished.size() < beam; ++pos) {
    std::vector<Candidate> cands;
    for (std::size_t h = 0; h < active.size(); ++h) {
      Mat lp = dec.step(active[h].cache, active[h].ids.back(), pos);
      std::vector<int> order(static_cast<std::size_t>(lp.cols()));
      for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
      auto keep = std::min(beam, order.size());
      std::partial_sort(order.begin(), order.begin() + static_cast<long>(keep), order.end(), [&](int a, int b) {
        return lp(0, a) > lp(0, b) || (lp(0, a) == lp(0, b) && a < b);
      });
      for (std::size_t j = 0; j < keep; ++j) cands.push_back({h, order[j], active[h].log_prob + lp(0, order[j])});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.token < b.token;
    });
    if (cands.size() > beam) cands.resize(beam);
    std::vector<Live> next;
    for (const auto& c : cands) {
      auto ids = active[c.parent].ids;
      ids.push_back(c.token);
      if (c.token == Vocab::kEos) {
        double n = static_cast<double>(ids.size() - 1);
        finished.push_back({std::move(ids), c.log_prob, c.log_prob / n});
      } else {
        next.push_back({std::move(ids), c.log_prob, active[c.parent].cache});
      }
    }
    active = std::move(next);
  }
  for (auto& a : active) {
    double n = static_cast<double>(std::max<std::size_t>(1, a.ids.size() - 1));
    finished.push_back({std::move(a.ids), a.log_prob, a.log_prob / n});
  }
  std::stable_sort(finished.begin(), finished.end(),
                   [](const Hypothesis& a, const Hypothesis& b) { return a.score > b.score; });
  return finished;
}

std::vector<int> beam_decode(const ModelState& m, const ModelInput& src, int target_tag, int beam_size,
                             int max_new_tokens) {
  auto hyps = beam_search(m, src, target_tag, beam_size, max_new_tokens);
  return hyps.empty() ? std::vector<int>{Vocab::kBos} : hyps.front().ids;
}

}  // namespace irtrans::nn
