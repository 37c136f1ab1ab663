#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irtrans/irnorm/ir_module.hpp"
#include "irtrans/util/config_file.hpp"

namespace irtrans::irnorm {

struct NormalizationConfig {
  bool strip_comments = true;
  bool strip_debug = true;
  bool strip_attributes = true;
  bool strip_directives = true;  // target/source_filename header lines
  bool canonicalize_blocks = true;
  bool canonicalize_temporaries = true;
  bool demangle = true;
  // Shell template with a {symbol} placeholder, e.g. "c++filt {symbol}".
  std::optional<std::string> demangler_command;

  // Keywords removed from define/declare lines when strip_attributes is set.
  std::vector<std::string> signature_keywords = {
      "dso_local", "dso_preemptable", "local_unnamed_addr", "unnamed_addr", "hidden", "protected",
      "noundef",   "nonnull",         "nocapture",          "readonly",     "writeonly", "readnone",
      "noalias",   "nofree",          "signext",            "zeroext",      "inreg",     "returned",
      "immarg",    "nonlazybind",     "uwtable",            "optsize",      "minsize",   "willreturn",
      "nounwind",  "mustprogress",    "norecurse",          "nosync",       "noinline"};
  // Keywords taking a parenthesized argument, e.g. dereferenceable(8).
  std::vector<std::string> signature_call_keywords = {"dereferenceable", "dereferenceable_or_null", "captures",
                                                      "range",           "nofpclass",               "memory",
                                                      "initializes",     "allocsize",               "align"};
};

// [normalize] strip_comments, strip_debug, strip_attributes, strip_directives,
// canonicalize_blocks, canonicalize_temporaries, demangle, demangler_command.
NormalizationConfig normalization_config_from(const util::ConfigFile& file, NormalizationConfig base = {});

struct DemangleFailure {
  std::string symbol;
  std::string reason;
};

IRModule strip_noise(const IRModule& module, const NormalizationConfig& config);

// Renames blocks to bb0, bb1, ... in layout order and, when enabled,
// renumbers unnamed temporaries. Throws Error(kDanglingLabel).
IRModule canonicalize(const IRModule& module, const NormalizationConfig& config);

// Replaces mangled `@` symbols everywhere in the module. Failures are appended
// to `failures` (when given) and the symbol is left unchanged.
IRModule demangle_symbols(const IRModule& module, const NormalizationConfig& config,
                          std::vector<DemangleFailure>* failures = nullptr);

std::string normalize(std::string_view text, const NormalizationConfig& config,
                      std::vector<DemangleFailure>* failures = nullptr);

}  // namespace irtrans::irnorm
