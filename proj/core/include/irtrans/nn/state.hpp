#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/StdVector>

#include "irtrans/nn/config.hpp"

namespace irtrans::nn {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<Mat>;
using ConstMatMap = Eigen::Map<const Mat>;

// Flat parameter-shaped storage. Vectorized Eigen kernels choose their code
// path from pointer alignment, so every buffer and every tensor offset is kept
// at a fixed alignment to make results independent of where memory lands.
using Buffer = std::vector<double, Eigen::aligned_allocator<double>>;
inline constexpr std::size_t kTensorAlign = 8;  // doubles

struct TensorInfo {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;

  std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
};

struct AttentionIds {
  int wq, bq, wk, bk, wv, bv, wo, bo;
};

struct FeedForwardIds {
  int w1, b1, w2, b2;
};

struct EncoderLayerIds {
  int ln1_g, ln1_b;
  AttentionIds self;
  int ln2_g, ln2_b;
  FeedForwardIds ffn;
};

struct DecoderLayerIds {
  int ln1_g, ln1_b;
  AttentionIds self;
  int ln2_g, ln2_b;
  AttentionIds cross;
  int ln3_g, ln3_b;
  FeedForwardIds ffn;
};

struct DecoderIds {
  std::vector<DecoderLayerIds> layers;
  int lnf_g, lnf_b;
};

// All learnable parameters in one flat buffer plus the tensor table that
// views into it. The output projection is tied to the token embedding.
class ModelState {
 public:
  ModelState() = default;
  // Seeded initialization from config.seed.
  explicit ModelState(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  const std::vector<TensorInfo>& tensors() const { return tensors_; }
  std::size_t parameter_count() const { return params_.size(); }

  Buffer& params() { return params_; }
  const Buffer& params() const { return params_; }

  ConstMatMap tensor(int id) const;
  MatMap tensor(int id);
  int find(const std::string& name) const;  // -1 if absent

  // Tensor ids.
  int tok_emb = -1, pos_emb = -1, lang_emb = -1, out_bias = -1;
  std::vector<EncoderLayerIds> encoder;
  int enc_lnf_g = -1, enc_lnf_b = -1;
  std::vector<DecoderIds> decoders;

  bool all_finite() const;
  bool operator==(const ModelState& other) const {
    return config_ == other.config_ && params_ == other.params_;
  }

 private:
  int add(const std::string& name, int rows, int cols);
  AttentionIds add_attention(const std::string& prefix);
  FeedForwardIds add_ffn(const std::string& prefix);
  void initialize();

  ModelConfig config_;
  std::vector<TensorInfo> tensors_;
  Buffer params_;
};

// Same layout as ModelState::params().
using Gradients = Buffer;

}  // namespace irtrans::nn
