#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace irtrans::irnorm {

// Built-in decoder for Itanium-mangled function names whose parameters are
// builtin, pointer/reference/cv-qualified, or plain class types. Templates
// and most special names are rejected (nullopt) so that callers can fall
// back to an external demangler or leave the symbol as is.
std::optional<std::string> demangle_itanium(std::string_view symbol);

// True when the symbol starts with a prefix of a known mangling scheme
// (Itanium `_Z` / `__Z`, Rust v0 `_R`).
bool has_mangling_prefix(std::string_view symbol);

}  // namespace irtrans::irnorm
