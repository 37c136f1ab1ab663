#include "irtrans/eval/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "irtrans/error.hpp"

namespace irtrans::eval {

double embedding_similarity(const nn::ModelState& m, int a, int b) {
  auto emb = m.tensor(m.tok_emb);
  double na = emb.row(a).norm();
  double nb = emb.row(b).norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  // Keep sim(a, a) exactly 1 despite rounding in the dot product.
  if (a == b) return 1.0;
  return emb.row(a).dot(emb.row(b)) / (na * nb);
}

std::vector<Neighbor> embedding_report(const translator::Model& model, std::string_view token, std::size_t k) {
  const auto& vocab = model.vocab();
  int id = -1;
  if (auto found = vocab.id_of(token)) {
    id = *found;
  } else {
    for (int s = 0; s < static_cast<int>(vocab.size()) && id < 0; ++s) {
      if ((vocab.is_special(s) && vocab.token(s) == token) || vocab.display(s) == token) id = s;
    }
  }
  if (id < 0) throw Error(ErrorCode::kUnknownToken, "'" + std::string(token) + "' is not a vocabulary token");

  const auto& m = model.state();
  std::vector<Neighbor> all;
  all.reserve(vocab.size());
  for (int j = 0; j < static_cast<int>(vocab.size()); ++j) {
    all.push_back({j, vocab.display(j), embedding_similarity(m, id, j)});
  }
  auto cmp = [](const Neighbor& x, const Neighbor& y) {
    return x.similarity != y.similarity ? x.similarity > y.similarity : x.id < y.id;
  };
  k = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), cmp);
  all.resize(k);
  return all;
}

}  // namespace irtrans::eval
