#include "irtrans/irnorm/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "irtrans/error.hpp"
#include "irtrans/irnorm/demangle.hpp"
#include "irtrans/util/files.hpp"
#include "irtrans/util/subprocess.hpp"

namespace irtrans::irnorm {
namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Removes `, !kind !N` / `, !kind !{...}` attachments and trailing `#N`
// attribute-group references.
std::string strip_metadata_and_groups(const std::string& line) {
  std::string out;
  out.reserve(line.size());
  bool in_string = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '"') {
      in_string = !in_string;
      out += c;
      ++i;
      continue;
    }
    // `, !kind !N` in instructions, ` !kind !N` on define lines.
    if (!in_string && (c == ',' || (c == ' ' && i + 1 < line.size() && line[i + 1] == '!'))) {
      std::size_t j = i + 1;
      while (j < line.size() && line[j] == ' ') ++j;
      if (j < line.size() && line[j] == '!') {
        std::size_t k = j + 1;
        while (k < line.size() && (lex::is_name_char(line[k]))) ++k;
        while (k < line.size() && line[k] == ' ') ++k;
        if (k < line.size() && line[k] == '!') {
          ++k;
          if (k < line.size() && line[k] == '{') {
            int depth = 0;
            while (k < line.size()) {
              if (line[k] == '{') ++depth;
              if (line[k] == '}' && --depth == 0) {
                ++k;
                break;
              }
              ++k;
            }
          } else {
            while (k < line.size() && lex::is_name_char(line[k])) ++k;
          }
          i = k;
          continue;
        }
      }
    }
    if (!in_string && c == '#' && (i == 0 || line[i - 1] == ' ') && i + 1 < line.size() &&
        std::isdigit(static_cast<unsigned char>(line[i + 1]))) {
      std::size_t k = i + 1;
      while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
      if (k == line.size() || line[k] == ' ' || line[k] == '{') {
        while (!out.empty() && out.back() == ' ') out.pop_back();
        i = k;
        continue;
      }
    }
    out += c;
    ++i;
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
  return out;
}

// Drops attribute keywords from a define/declare line. Works on the text
// outside quoted strings so symbol names are never touched.
std::string strip_signature_keywords(const std::string& line, const NormalizationConfig& config) {
  auto is_keyword = [&](std::string_view w) {
    return std::find(config.signature_keywords.begin(), config.signature_keywords.end(), w) !=
           config.signature_keywords.end();
  };
  auto is_call_keyword = [&](std::string_view w) {
    return std::find(config.signature_call_keywords.begin(), config.signature_call_keywords.end(), w) !=
           config.signature_call_keywords.end();
  };
  std::string out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    char c = line[i];
    if (c == '"') {
      auto close = line.find('"', i + 1);
      close = close == std::string::npos ? n : close + 1;
      out.append(line, i, close - i);
      i = close;
      continue;
    }
    bool word_start = std::isalpha(static_cast<unsigned char>(c)) &&
                      (i == 0 || line[i - 1] == ' ' || line[i - 1] == '(');
    if (!word_start) {
      out += c;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
    std::string_view word(line.data() + i, j - i);
    std::size_t end = std::string::npos;  // end of the span to drop
    if (j < n && line[j] == '(' && is_call_keyword(word)) {
      int depth = 0;
      std::size_t k = j;
      for (; k < n; ++k) {
        if (line[k] == '(') ++depth;
        if (line[k] == ')' && --depth == 0) break;
      }
      if (k < n) end = k + 1;
    } else if (j == n || line[j] == ' ' || line[j] == ',' || line[j] == ')') {
      if (is_keyword(word)) {
        end = j;
      } else if (word == "align" && is_call_keyword("align") && j + 1 < n && line[j] == ' ' &&
                 std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
        std::size_t k = j + 1;
        while (k < n && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
        end = k;
      }
    }
    if (end == std::string::npos) {
      out.append(line, i, j - i);
      i = j;
      continue;
    }
    // Remove the keyword and one adjoining space.
    if (end < n && line[end] == ' ') {
      ++end;
    } else if (!out.empty() && out.back() == ' ') {
      out.pop_back();
    }
    i = end;
  }
  return out;
}

bool is_debug_line(std::string_view trimmed) {
  return trimmed.find("@llvm.dbg.") != std::string_view::npos || util::starts_with(trimmed, "#dbg_");
}

// Returns nullopt when the line is dropped entirely.
std::optional<std::string> strip_line(const std::string& raw, bool top_level, bool is_signature,
                                      const NormalizationConfig& config) {
  std::string line = raw;
  if (config.strip_comments) line = lex::strip_comment(line);
  auto trimmed = util::trim(line);
  if (trimmed.empty()) return config.strip_comments ? std::nullopt : std::optional<std::string>(raw);
  if (top_level && config.strip_directives) {
    if (util::starts_with(trimmed, "target ") || util::starts_with(trimmed, "source_filename")) return std::nullopt;
  }
  if (top_level && config.strip_attributes && util::starts_with(trimmed, "attributes #")) return std::nullopt;
  if (top_level && config.strip_debug && util::starts_with(trimmed, "!")) return std::nullopt;
  if (config.strip_debug && is_debug_line(trimmed)) return std::nullopt;
  if (config.strip_debug || config.strip_attributes) line = strip_metadata_and_groups(line);
  if (config.strip_attributes && (is_signature || util::starts_with(trimmed, "declare "))) {
    line = strip_signature_keywords(line, config);
  }
  return line;
}

std::vector<std::string> strip_lines(const std::vector<std::string>& lines, const NormalizationConfig& config) {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    if (auto kept = strip_line(l, true, false, config)) out.push_back(std::move(*kept));
  }
  return out;
}

}  // namespace

IRModule strip_noise(const IRModule& module, const NormalizationConfig& config) {
  IRModule out;
  out.trailing_newline = module.trailing_newline;
  out.header_lines = strip_lines(module.header_lines, config);
  out.footer_lines = strip_lines(module.footer_lines, config);
  for (const auto& f : module.functions) {
    IRFunction g;
    g.symbol = f.symbol;
    g.leading_lines = strip_lines(f.leading_lines, config);
    g.signature_line = strip_line(f.signature_line, true, true, config).value_or(f.signature_line);
    g.closing_line = config.strip_comments ? lex::strip_comment(f.closing_line) : f.closing_line;
    for (const auto& b : f.blocks) {
      IRBlock nb;
      nb.label = b.label;
      if (!b.implicit_label()) {
        nb.label_line = config.strip_comments ? lex::strip_comment(b.label_line) : b.label_line;
      }
      for (const auto& l : b.lines) {
        if (auto kept = strip_line(l, false, false, config)) nb.lines.push_back(std::move(*kept));
      }
      g.blocks.push_back(std::move(nb));
    }
    out.functions.push_back(std::move(g));
  }
  return out;
}

IRModule canonicalize(const IRModule& module, const NormalizationConfig& config) {
  IRModule out = module;
  if (!config.canonicalize_blocks && !config.canonicalize_temporaries) return out;

  for (auto& f : out.functions) {
    auto labels = defined_labels(f);
    {
      std::set<std::string> seen;
      for (const auto& l : labels) {
        if (!seen.insert(l).second) throw Error(ErrorCode::kMalformedIR, "duplicate block label %" + l + " in @" + f.symbol);
      }
      for (const auto& ref : referenced_labels(f)) {
        if (!seen.count(ref)) throw Error(ErrorCode::kDanglingLabel, "label %" + ref + " referenced in @" + f.symbol + " is not defined");
      }
    }

    std::unordered_map<std::string, std::string> renames;
    if (config.canonicalize_blocks) {
      for (std::size_t i = 0; i < labels.size(); ++i) renames[labels[i]] = "bb" + std::to_string(i);
    }
    if (config.canonicalize_temporaries) {
      std::set<std::string> label_set(labels.begin(), labels.end());
      long next = 0;
      auto assign = [&](const std::string& name) {
        if (!is_digits(name) || renames.count(name)) return;
        if (label_set.count(name)) {
          // Blocks that keep their numeric name still consume a slot.
          if (!config.canonicalize_blocks) renames[name] = std::to_string(next++);
          return;
        }
        renames[name] = std::to_string(next++);
      };
      for (const auto& name : lex::names_in(lex::strip_comment(f.signature_line), '%')) assign(name);
      for (const auto& b : f.blocks) {
        if (!config.canonicalize_blocks) assign(b.label);
        for (const auto& l : b.lines) {
          auto stripped = lex::strip_comment(l);
          auto code = util::trim(stripped);
          if (code.empty() || code[0] != '%') continue;
          auto eq = code.find('=');
          if (eq == std::string_view::npos) continue;
          auto lhs = util::trim(code.substr(1, eq - 1));
          if (is_digits(lhs)) assign(std::string(lhs));
        }
      }
    }

    auto apply = [&](const std::string& line) {
      return lex::rewrite_names(line, '%', [&](const std::string& name) -> std::optional<std::string> {
        auto it = renames.find(name);
        if (it == renames.end() || it->second == name) return std::nullopt;
        return it->second;
      });
    };
    f.signature_line = apply(f.signature_line);
    for (auto& b : f.blocks) {
      auto it = renames.find(b.label);
      std::string new_label = it == renames.end() ? b.label : it->second;
      if (b.implicit_label()) {
        if (config.canonicalize_blocks) b.label_line = new_label + ":";
      } else {
        auto colon = b.label_line.find(':', b.label_line.find(b.label) + b.label.size());
        std::string rest = colon == std::string::npos ? "" : b.label_line.substr(colon + 1);
        b.label_line = new_label + ":" + apply(rest);
      }
      b.label = new_label;
      for (auto& l : b.lines) l = apply(l);
    }
  }
  return out;
}

IRModule demangle_symbols(const IRModule& module, const NormalizationConfig& config,
                          std::vector<DemangleFailure>* failures) {
  if (!config.demangle) return module;
  std::map<std::string, std::optional<std::string>> cache;

  auto resolve = [&](const std::string& name) -> std::optional<std::string> {
    if (name.empty() || name.front() == '"' || !has_mangling_prefix(name)) return std::nullopt;
    auto hit = cache.find(name);
    if (hit != cache.end()) return hit->second;

    std::optional<std::string> result;
    std::string reason;
    if (config.demangler_command) {
      auto cmd = util::expand_template(*config.demangler_command, {{"symbol", name}});
      util::ProcessOptions opts;
      opts.timeout = std::chrono::seconds(10);
      auto r = util::run_shell(cmd, opts);
      auto text = std::string(util::trim(r.out));
      if (!r.ok()) {
        reason = std::string(error_name(ErrorCode::kDemanglerFailure)) + ": command exited with status " +
                 std::to_string(r.exit_code);
      } else if (text.empty() || text == name) {
        reason = "external demangler did not recognize the symbol";
      } else {
        result = text;
      }
    } else {
      result = demangle_itanium(name);
      if (!result) reason = "not decodable by the built-in Itanium decoder";
    }
    if (!result && failures) failures->push_back({name, reason});
    std::optional<std::string> rendered;
    if (result) rendered = lex::render_name(*result);
    cache.emplace(name, rendered);
    return rendered;
  };

  auto apply = [&](const std::string& line) { return lex::rewrite_names(line, '@', resolve); };
  IRModule out = module;
  for (auto& l : out.header_lines) l = apply(l);
  for (auto& l : out.footer_lines) l = apply(l);
  for (auto& f : out.functions) {
    for (auto& l : f.leading_lines) l = apply(l);
    f.signature_line = apply(f.signature_line);
    f.symbol = lex::names_in(f.signature_line, '@').front();
    for (auto& b : f.blocks) {
      for (auto& l : b.lines) l = apply(l);
    }
  }
  return out;
}

std::string normalize(std::string_view text, const NormalizationConfig& config,
                      std::vector<DemangleFailure>* failures) {
  auto module = parse_ir(text);
  module = strip_noise(module, config);
  module = demangle_symbols(module, config, failures);
  module = canonicalize(module, config);
  module.trailing_newline = true;
  return serialize(module);
}

NormalizationConfig normalization_config_from(const util::ConfigFile& file, NormalizationConfig c) {
  c.strip_comments = file.get_bool("normalize.strip_comments", c.strip_comments);
  c.strip_debug = file.get_bool("normalize.strip_debug", c.strip_debug);
  c.strip_attributes = file.get_bool("normalize.strip_attributes", c.strip_attributes);
  c.strip_directives = file.get_bool("normalize.strip_directives", c.strip_directives);
  c.canonicalize_blocks = file.get_bool("normalize.canonicalize_blocks", c.canonicalize_blocks);
  c.canonicalize_temporaries = file.get_bool("normalize.canonicalize_temporaries", c.canonicalize_temporaries);
  c.demangle = file.get_bool("normalize.demangle", c.demangle);
  if (auto cmd = file.get("normalize.demangler_command")) c.demangler_command = *cmd;
  return c;
}

}  // namespace irtrans::irnorm
