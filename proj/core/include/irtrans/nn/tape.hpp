#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "irtrans/nn/state.hpp"

namespace irtrans::nn {

inline constexpr double kLayerNormEps = 1e-5;

// Forward kernels shared by the tape and the incremental decoder.
Mat layer_norm_forward(const Mat& x, const ConstMatMap& g, const ConstMatMap& b, Mat* xhat = nullptr,
                       Vec* inv_std = nullptr);
Mat gelu_forward(const Mat& x);
// Row-wise log-softmax.
Mat log_softmax(const Mat& logits);

// Reverse-mode tape over row-major activation matrices. Parameter gradients
// are accumulated straight into the Gradients buffer given at construction.
class Tape {
 public:
  using Var = int;

  Tape(const ModelState& model, Gradients* grads) : model_(model), grads_(grads) {}

  const Mat& value(Var v) const { return nodes_[static_cast<std::size_t>(v)]->value; }

  // rows: token embedding[id] + position embedding[pos_offset + i] + language embedding[tag].
  Var embed(const std::vector<int>& ids, const std::vector<int>& tags, int pos_offset = 0);
  Var linear(Var x, int w, int b);
  Var layer_norm(Var x, int g, int b);
  Var gelu(Var x);
  Var add(Var a, Var b);
  // Multi-head attention with queries from xq and keys/values from xkv.
  Var attention(Var xq, Var xkv, const AttentionIds& ids, bool causal);
  // Logits through the tied projection for the listed rows of h.
  Var logits(Var h, const std::vector<int>& rows);
  // Summed cross-entropy of logits rows against targets; 1x1 value.
  Var cross_entropy(Var logits, const std::vector<int>& targets);

  // Seeds d(loss) = scale and runs all backward closures in reverse order.
  void backward(Var loss, double scale = 1.0);

 private:
  struct Node {
    Mat value;
    Mat grad;
    std::function<void(const Mat&)> backward;  // receives this node's gradient
  };

  Var push(Mat value, std::function<void(const Mat&)> backward);
  void accumulate(Var v, const Mat& g);
  MatMap param_grad(int id);
  bool tracking() const { return grads_ != nullptr; }

  const ModelState& model_;
  Gradients* grads_;
  std::vector<std::unique_ptr<Node>> nodes_;
};

}  // namespace irtrans::nn
