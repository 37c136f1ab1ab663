#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/nn/state.hpp"
#include "irtrans/translator/translator.hpp"

namespace irtrans::eval {

struct Neighbor {
  int id = 0;
  std::string token;  // display form
  double similarity = 0.0;
};

// Cosine similarity of two token-embedding rows (0 when either row is zero).
double embedding_similarity(const nn::ModelState& m, int a, int b);

// The k rows most similar to `token` (raw bytes or the display form), descending, ties by id. The token itself is included.
// Error(kUnknownToken) when the text is not a single vocabulary token.
std::vector<Neighbor> embedding_report(const translator::Model& model, std::string_view token, std::size_t k);

}  // namespace irtrans::eval
