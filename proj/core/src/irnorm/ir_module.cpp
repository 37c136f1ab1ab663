#include "irtrans/irnorm/ir_module.hpp"

#include <cctype>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::irnorm {
namespace lex {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '$' || c == '.' || c == '_';
}

std::size_t comment_start(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"') {
      in_string = !in_string;
    } else if (c == ';' && !in_string) {
      return i;
    }
  }
  return std::string_view::npos;
}

std::string strip_comment(std::string_view line) {
  auto pos = comment_start(line);
  auto kept = pos == std::string_view::npos ? line : line.substr(0, pos);
  while (!kept.empty() && (kept.back() == ' ' || kept.back() == '\t' || kept.back() == '\r')) kept.remove_suffix(1);
  return std::string(kept);
}

std::optional<std::string> label_of(std::string_view line) {
  auto code = strip_comment(line);
  auto body = util::trim(code);
  if (body.size() < 2 || body.back() != ':') return std::nullopt;
  auto name = body.substr(0, body.size() - 1);
  if (name.front() == '"') {
    if (name.size() < 2 || name.back() != '"') return std::nullopt;
    if (name.substr(1, name.size() - 2).find('"') != std::string_view::npos) return std::nullopt;
    return std::string(name);
  }
  for (char c : name) {
    if (!is_name_char(c)) return std::nullopt;
  }
  return std::string(name);
}

namespace {

// Scans a name starting at `pos` (just after the sigil). Returns the end
// position, or pos when there is no name.
std::size_t scan_name(std::string_view line, std::size_t pos) {
  if (pos < line.size() && line[pos] == '"') {
    auto close = line.find('"', pos + 1);
    return close == std::string_view::npos ? pos : close + 1;
  }
  std::size_t end = pos;
  while (end < line.size() && is_name_char(line[end])) ++end;
  return end;
}

template <typename Visit>
void for_each_name(std::string_view line, char sigil, Visit&& visit) {
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ';') {
      // Comments are scanned too, so stale references in them stay consistent.
      ++i;
      continue;
    }
    if (c == '"') {
      auto close = line.find('"', i + 1);
      i = close == std::string_view::npos ? line.size() : close + 1;
      continue;
    }
    if (c == sigil) {
      auto end = scan_name(line, i + 1);
      if (end > i + 1) {
        visit(i, end);
        i = end;
        continue;
      }
    }
    ++i;
  }
}

}  // namespace

std::string rewrite_names(std::string_view line, char sigil,
                          const std::function<std::optional<std::string>(const std::string&)>& fn) {
  std::string out;
  out.reserve(line.size() + 8);
  std::size_t copied = 0;
  for_each_name(line, sigil, [&](std::size_t begin, std::size_t end) {
    std::string name(line.substr(begin + 1, end - begin - 1));
    if (auto replacement = fn(name)) {
      out.append(line.substr(copied, begin + 1 - copied));
      out += *replacement;
      copied = end;
    }
  });
  out.append(line.substr(copied));
  return out;
}

std::vector<std::string> names_in(std::string_view line, char sigil) {
  std::vector<std::string> names;
  for_each_name(line, sigil, [&](std::size_t begin, std::size_t end) {
    names.emplace_back(line.substr(begin + 1, end - begin - 1));
  });
  return names;
}

std::string render_name(std::string_view name) {
  if (!name.empty() && name.front() == '"') return std::string(name);
  bool bare = !name.empty();
  for (char c : name) bare = bare && is_name_char(c);
  if (bare) return std::string(name);
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"') {
      quoted += "\\22";
    } else if (c == '\\') {
      quoted += "\\5C";
    } else {
      quoted += c;
    }
  }
  quoted += '"';
  return quoted;
}

}  // namespace lex

namespace {

int brace_delta(std::string_view line) {
  auto code = lex::strip_comment(line);
  int delta = 0;
  bool in_string = false;
  for (char c : code) {
    if (c == '"') in_string = !in_string;
    if (in_string) continue;
    if (c == '{') ++delta;
    if (c == '}') --delta;
  }
  return delta;
}

bool is_define(std::string_view line) { return util::starts_with(line, "define "); }

std::string symbol_of(std::string_view signature) {
  auto names = lex::names_in(signature, '@');
  if (names.empty()) throw Error(ErrorCode::kMalformedIR, "define line without a symbol: " + std::string(signature));
  return names.front();
}

// The entry block takes the first free slot after the unnamed arguments.
std::string implicit_entry_slot(std::string_view signature) {
  long next = 0;
  for (const auto& name : lex::names_in(signature, '%')) {
    bool numeric = !name.empty();
    for (char c : name) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (numeric) next = std::max(next, std::stol(name) + 1);
  }
  return std::to_string(next);
}

}  // namespace

IRModule parse_ir(std::string_view text) {
  IRModule module;
  module.trailing_newline = text.empty() || text.back() == '\n';
  auto lines = util::split_lines(text);

  std::vector<std::string> pending;  // top-level lines not yet assigned
  int outside_depth = 0;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& line = lines[i];
    if (!is_define(line)) {
      outside_depth += brace_delta(line);
      if (outside_depth < 0) {
        throw Error(ErrorCode::kMalformedIR, "unbalanced '}' at line " + std::to_string(i + 1));
      }
      pending.push_back(line);
      ++i;
      continue;
    }
    if (outside_depth != 0) {
      throw Error(ErrorCode::kMalformedIR, "define inside an open brace at line " + std::to_string(i + 1));
    }

    IRFunction function;
    function.signature_line = line;
    function.symbol = symbol_of(line);
    int depth = brace_delta(line);
    if (depth != 1) {
      throw Error(ErrorCode::kMalformedIR, "define line must open exactly one body brace: " + line);
    }
    if (module.functions.empty()) {
      module.header_lines = std::move(pending);
    } else {
      function.leading_lines = std::move(pending);
    }
    pending.clear();

    const std::size_t define_line = i;
    ++i;
    bool closed = false;
    while (i < lines.size()) {
      const auto& body = lines[i];
      int delta = brace_delta(body);
      if (depth + delta == 0 && util::trim(lex::strip_comment(body)) == "}") {
        function.closing_line = body;
        closed = true;
        ++i;
        break;
      }
      depth += delta;
      if (depth <= 0) throw Error(ErrorCode::kMalformedIR, "unbalanced braces at line " + std::to_string(i + 1));
      if (is_define(body)) {
        throw Error(ErrorCode::kMalformedIR, "define at line " + std::to_string(i + 1) +
                                                 " before the body opened at line " +
                                                 std::to_string(define_line + 1) + " was closed");
      }
      if (auto label = lex::label_of(body)) {
        function.blocks.push_back(IRBlock{*label, body, {}});
      } else {
        if (function.blocks.empty()) {
          function.blocks.push_back(IRBlock{implicit_entry_slot(function.signature_line), "", {}});
        }
        function.blocks.back().lines.push_back(body);
      }
      ++i;
    }
    if (!closed) {
      throw Error(ErrorCode::kMalformedIR,
                  "function " + function.symbol + " opened at line " + std::to_string(define_line + 1) + " has no closing brace");
    }
    module.functions.push_back(std::move(function));
  }
  if (outside_depth != 0) throw Error(ErrorCode::kMalformedIR, "unbalanced braces at end of module");
  if (module.functions.empty()) {
    module.header_lines = std::move(pending);
  } else {
    module.footer_lines = std::move(pending);
  }
  return module;
}

std::string serialize(const IRModule& module) {
  std::vector<const std::string*> lines;
  for (const auto& l : module.header_lines) lines.push_back(&l);
  for (const auto& f : module.functions) {
    for (const auto& l : f.leading_lines) lines.push_back(&l);
    lines.push_back(&f.signature_line);
    for (const auto& b : f.blocks) {
      if (!b.implicit_label()) lines.push_back(&b.label_line);
      for (const auto& l : b.lines) lines.push_back(&l);
    }
    lines.push_back(&f.closing_line);
  }
  for (const auto& l : module.footer_lines) lines.push_back(&l);

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out += *lines[i];
    if (i + 1 < lines.size() || module.trailing_newline) out += '\n';
  }
  return out;
}

std::vector<std::string> defined_labels(const IRFunction& function) {
  std::vector<std::string> labels;
  labels.reserve(function.blocks.size());
  for (const auto& b : function.blocks) labels.push_back(b.label);
  return labels;
}

std::set<std::string> referenced_labels(const IRFunction& function) {
  std::set<std::string> refs;
  for (const auto& block : function.blocks) {
    for (const auto& raw : block.lines) {
      auto line = lex::strip_comment(raw);
      // `label %X` operands of br, switch, indirectbr, invoke, callbr.
      std::size_t pos = 0;
      while ((pos = line.find("label %", pos)) != std::string::npos) {
        if (pos > 0 && lex::is_name_char(line[pos - 1])) {
          pos += 7;
          continue;
        }
        auto names = lex::names_in(std::string_view(line).substr(pos + 6), '%');
        if (!names.empty()) refs.insert(names.front());
        pos += 7;
      }
      // Incoming blocks of phi nodes: the last local name of each [ v, %bb ] pair.
      if (line.find("= phi ") != std::string::npos) {
        std::size_t open = line.find('[');
        while (open != std::string::npos) {
          auto close = line.find(']', open);
          if (close == std::string::npos) break;
          auto names = lex::names_in(std::string_view(line).substr(open, close - open), '%');
          if (!names.empty()) refs.insert(names.back());
          open = line.find('[', close);
        }
      }
    }
  }
  return refs;
}

}  // namespace irtrans::irnorm
