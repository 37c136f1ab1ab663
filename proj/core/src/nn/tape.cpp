#include "irtrans/nn/tape.hpp"

#include <cmath>

#include "irtrans/error.hpp"

namespace irtrans::nn {
namespace {

constexpr double kGeluC = 0.7978845608028654;  // sqrt(2/pi)
constexpr double kGeluA = 0.044715;

}  // namespace

Mat layer_norm_forward(const Mat& x, const ConstMatMap& g, const ConstMatMap& b, Mat* xhat_out, Vec* inv_std_out) {
  const auto n = x.rows();
  const auto d = x.cols();
  Mat xhat(n, d);
  Vec inv_std(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double mean = x.row(i).mean();
    auto centered = x.row(i).array() - mean;
    double var = centered.square().sum() / static_cast<double>(d);
    inv_std(i) = 1.0 / std::sqrt(var + kLayerNormEps);
    xhat.row(i) = centered * inv_std(i);
  }
  Mat y = (xhat.array().rowwise() * g.row(0).array()).rowwise() + b.row(0).array();
  if (xhat_out) *xhat_out = std::move(xhat);
  if (inv_std_out) *inv_std_out = std::move(inv_std);
  return y;
}

Mat gelu_forward(const Mat& x) {
  return x.unaryExpr([](double v) { return 0.5 * v * (1.0 + std::tanh(kGeluC * (v + kGeluA * v * v * v))); });
}

Mat log_softmax(const Mat& logits) {
  Mat out(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    double m = logits.row(i).maxCoeff();
    double lse = m + std::log((logits.row(i).array() - m).exp().sum());
    out.row(i) = logits.row(i).array() - lse;
  }
  return out;
}

Tape::Var Tape::push(Mat value, std::function<void(const Mat&)> backward) {
  auto node = std::make_unique<Node>();
  node->value = std::move(value);
  if (tracking()) node->backward = std::move(backward);
  nodes_.push_back(std::move(node));
  return static_cast<Var>(nodes_.size()) - 1;
}

void Tape::accumulate(Var v, const Mat& g) {
  auto& node = *nodes_[static_cast<std::size_t>(v)];
  if (node.grad.size() == 0) {
    node.grad = g;
  } else {
    node.grad += g;
  }
}

MatMap Tape::param_grad(int id) {
  const auto& t = model_.tensors()[static_cast<std::size_t>(id)];
  return MatMap(grads_->data() + t.offset, t.rows, t.cols);
}

Tape::Var Tape::embed(const std::vector<int>& ids, const std::vector<int>& tags, int pos_offset) {
  const auto& cfg = model_.config();
  const int n = static_cast<int>(ids.size());
  if (tags.size() != ids.size()) throw Error(ErrorCode::kInvalidArgument, "one language tag per position required");
  if (pos_offset + n > cfg.max_len) {
    throw Error(ErrorCode::kSequenceTooLong,
                "sequence of length " + std::to_string(pos_offset + n) + " exceeds max_len " + std::to_string(cfg.max_len));
  }
  auto tok = model_.tensor(model_.tok_emb);
  auto pos = model_.tensor(model_.pos_emb);
  auto lang = model_.tensor(model_.lang_emb);
  Mat x(n, cfg.dim);
  for (int i = 0; i < n; ++i) {
    if (ids[i] < 0 || ids[i] >= cfg.vocab_size) {
      throw Error(ErrorCode::kUnknownToken, "token id " + std::to_string(ids[i]) + " outside the model vocabulary");
    }
    if (tags[i] < 0 || tags[i] >= cfg.num_tags) {
      throw Error(ErrorCode::kInvalidArgument, "language tag " + std::to_string(tags[i]) + " outside the tag table");
    }
    x.row(i) = tok.row(ids[i]) + pos.row(pos_offset + i) + lang.row(tags[i]);
  }
  return push(std::move(x), [this, ids, tags, pos_offset](const Mat& g) {
    auto gt = param_grad(model_.tok_emb);
    auto gp = param_grad(model_.pos_emb);
    auto gl = param_grad(model_.lang_emb);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      gt.row(ids[i]) += g.row(static_cast<Eigen::Index>(i));
      gp.row(pos_offset + static_cast<int>(i)) += g.row(static_cast<Eigen::Index>(i));
      gl.row(tags[i]) += g.row(static_cast<Eigen::Index>(i));
    }
  });
}

Tape::Var Tape::linear(Var x, int w, int b) {
  auto W = model_.tensor(w);
  auto B = model_.tensor(b);
  Mat y = value(x) * W;
  y.rowwise() += B.row(0);
  return push(std::move(y), [this, x, w, b](const Mat& g) {
    const Mat& xv = value(x);
    param_grad(w).noalias() += xv.transpose() * g;
    param_grad(b) += g.colwise().sum();
    accumulate(x, g * model_.tensor(w).transpose());
  });
}

Tape::Var Tape::layer_norm(Var x, int g, int b) {
  auto xhat = std::make_shared<Mat>();
  auto inv_std = std::make_shared<Vec>();
  Mat y = layer_norm_forward(value(x), model_.tensor(g), model_.tensor(b), xhat.get(), inv_std.get());
  return push(std::move(y), [this, x, g, b, xhat, inv_std](const Mat& dy) {
    auto G = model_.tensor(g);
    param_grad(g) += (dy.array() * xhat->array()).colwise().sum().matrix();
    param_grad(b) += dy.colwise().sum();
    Mat dxhat = dy.array().rowwise() * G.row(0).array();
    const double d = static_cast<double>(dy.cols());
    Mat dx(dy.rows(), dy.cols());
    for (Eigen::Index i = 0; i < dy.rows(); ++i) {
      double mean_d = dxhat.row(i).sum() / d;
      double mean_dx = dxhat.row(i).dot(xhat->row(i)) / d;
      dx.row(i) = (dxhat.row(i).array() - mean_d - xhat->row(i).array() * mean_dx) * (*inv_std)(i);
    }
    accumulate(x, dx);
  });
}

Tape::Var Tape::gelu(Var x) {
  return push(gelu_forward(value(x)), [this, x](const Mat& g) {
    Mat d = value(x).unaryExpr([](double v) {
      double t = std::tanh(kGeluC * (v + kGeluA * v * v * v));
      return 0.5 * (1.0 + t) + 0.5 * v * (1.0 - t * t) * kGeluC * (1.0 + 3.0 * kGeluA * v * v);
    });
    accumulate(x, g.cwiseProduct(d));
  });
}

Tape::Var Tape::add(Var a, Var b) {
  return push(value(a) + value(b), [this, a, b](const Mat& g) {
    accumulate(a, g);
    accumulate(b, g);
  });
}

Tape::Var Tape::attention(Var xq, Var xkv, const AttentionIds& ids, bool causal) {
  const auto& cfg = model_.config();
  const int H = cfg.heads;
  const int dh = cfg.dim / H;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
  const Mat& Xq = value(xq);
  const Mat& Xkv = value(xkv);
  const auto n = Xq.rows();
  const auto m = Xkv.rows();

  auto Q = std::make_shared<Mat>(Xq * model_.tensor(ids.wq));
  Q->rowwise() += model_.tensor(ids.bq).row(0);
  auto K = std::make_shared<Mat>(Xkv * model_.tensor(ids.wk));
  K->rowwise() += model_.tensor(ids.bk).row(0);
  auto V = std::make_shared<Mat>(Xkv * model_.tensor(ids.wv));
  V->rowwise() += model_.tensor(ids.bv).row(0);

  auto P = std::make_shared<std::vector<Mat>>(H);
  auto O = std::make_shared<Mat>(n, cfg.dim);
  for (int h = 0; h < H; ++h) {
    Mat S = Q->middleCols(h * dh, dh) * K->middleCols(h * dh, dh).transpose() * scale;
    Mat& Ph = (*P)[h];
    Ph.resize(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index limit = causal ? std::min<Eigen::Index>(i + 1, m) : m;
      double mx = S.row(i).head(limit).maxCoeff();
      double z = 0.0;
      for (Eigen::Index j = 0; j < m; ++j) {
        double e = j < limit ? std::exp(S(i, j) - mx) : 0.0;
        Ph(i, j) = e;
        z += e;
      }
      Ph.row(i) /= z;
    }
    O->middleCols(h * dh, dh).noalias() = Ph * V->middleCols(h * dh, dh);
  }
  Mat Y = *O * model_.tensor(ids.wo);
  Y.rowwise() += model_.tensor(ids.bo).row(0);

  return push(std::move(Y), [this, xq, xkv, ids, H, dh, scale, Q, K, V, P, O](const Mat& dY) {
    param_grad(ids.wo).noalias() += O->transpose() * dY;
    param_grad(ids.bo) += dY.colwise().sum();
    Mat dO = dY * model_.tensor(ids.wo).transpose();
    Mat dQ(Q->rows(), Q->cols());
    Mat dK(K->rows(), K->cols());
    Mat dV(V->rows(), V->cols());
    for (int h = 0; h < H; ++h) {
      const Mat& Ph = (*P)[h];
      auto dOh = dO.middleCols(h * dh, dh);
      Mat dP = dOh * V->middleCols(h * dh, dh).transpose();
      dV.middleCols(h * dh, dh).noalias() = Ph.transpose() * dOh;
      Mat dS = Ph.cwiseProduct(dP);
      Eigen::VectorXd rowdot = dS.rowwise().sum();
      dS -= Ph.cwiseProduct(rowdot.replicate(1, Ph.cols()));
      dS *= scale;
      dQ.middleCols(h * dh, dh).noalias() = dS * K->middleCols(h * dh, dh);
      dK.middleCols(h * dh, dh).noalias() = dS.transpose() * Q->middleCols(h * dh, dh);
    }
    const Mat& Xq = value(xq);
    const Mat& Xkv = value(xkv);
    param_grad(ids.wq).noalias() += Xq.transpose() * dQ;
    param_grad(ids.bq) += dQ.colwise().sum();
    param_grad(ids.wk).noalias() += Xkv.transpose() * dK;
    param_grad(ids.bk) += dK.colwise().sum();
    param_grad(ids.wv).noalias() += Xkv.transpose() * dV;
    param_grad(ids.bv) += dV.colwise().sum();
    accumulate(xq, dQ * model_.tensor(ids.wq).transpose());
    Mat dXkv = dK * model_.tensor(ids.wk).transpose();
    dXkv.noalias() += dV * model_.tensor(ids.wv).transpose();
    accumulate(xkv, dXkv);
  });
}

Tape::Var Tape::logits(Var h, const std::vector<int>& rows) {
  const Mat& hv = value(h);
  Mat sel(static_cast<Eigen::Index>(rows.size()), hv.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) sel.row(static_cast<Eigen::Index>(r)) = hv.row(rows[r]);
  auto E = model_.tensor(model_.tok_emb);
  Mat out = sel * E.transpose();
  out.rowwise() += model_.tensor(model_.out_bias).row(0);
  auto selected = std::make_shared<Mat>(std::move(sel));
  return push(std::move(out), [this, h, rows, selected](const Mat& g) {
    auto E = model_.tensor(model_.tok_emb);
    param_grad(model_.tok_emb).noalias() += g.transpose() * *selected;
    param_grad(model_.out_bias) += g.colwise().sum();
    Mat dsel = g * E;
    Mat dh = Mat::Zero(value(h).rows(), value(h).cols());
    for (std::size_t r = 0; r < rows.size(); ++r) dh.row(rows[r]) += dsel.row(static_cast<Eigen::Index>(r));
    accumulate(h, dh);
  });
}

Tape::Var Tape::cross_entropy(Var logits, const std::vector<int>& targets) {
  const Mat& L = value(logits);
  if (static_cast<std::size_t>(L.rows()) != targets.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cross_entropy: one target per logits row required");
  }
  auto logp = std::make_shared<Mat>(log_softmax(L));
  double loss = 0.0;
  for (std::size_t r = 0; r < targets.size(); ++r) loss -= (*logp)(static_cast<Eigen::Index>(r), targets[r]);
  Mat v(1, 1);
  v(0, 0) = loss;
  return push(std::move(v), [this, logits, targets, logp](const Mat& g) {
    Mat d = logp->array().exp();
    for (std::size_t r = 0; r < targets.size(); ++r) d(static_cast<Eigen::Index>(r), targets[r]) -= 1.0;
    accumulate(logits, d * g(0, 0));
  });
}

void Tape::backward(Var loss, double scale) {
  if (!tracking()) throw Error(ErrorCode::kInvalidArgument, "backward on a tape without a gradient buffer");
  Mat seed(1, 1);
  seed(0, 0) = scale;
  accumulate(loss, seed);
  for (auto v = static_cast<std::size_t>(loss) + 1; v-- > 0;) {
    auto& node = *nodes_[v];
    if (node.grad.size() == 0 || !node.backward) continue;
    node.backward(node.grad);
    node.grad.resize(0, 0);
  }
}

}  // namespace irtrans::nn
