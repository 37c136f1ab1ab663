#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irtrans/frontends/record.hpp"

namespace irtrans::frontends {

// Top-level (non-method) function definitions, found by signature matching
// and brace balancing. Namespaces and `extern "C"` blocks are searched; class,
// impl and trait bodies are not. For Java, static methods of top-level
// classes count as standalone functions.
std::vector<FunctionRecord> extract_functions(std::string_view file_text, std::string_view language,
                                              std::string_view path = {});

}  // namespace irtrans::frontends
