#include "irtrans/frontends/extract.hpp"

#include <cctype>
#include <optional>
#include <regex>

#include "irtrans/error.hpp"
#include "irtrans/frontends/language.hpp"

namespace irtrans::frontends {
namespace {

enum class Family { kCLike, kRust, kGo, kJava };

Family family_of(std::string_view language) {
  if (language == "rust") return Family::kRust;
  if (language == "go") return Family::kGo;
  if (language == "java") return Family::kJava;
  return Family::kCLike;
}

class Scanner {
 public:
  Scanner(std::string_view text, Family family) : text_(text), family_(family) {}

  // If position i starts a comment, string, char literal or preprocessor line,
  // returns the position just past it.
  std::optional<std::size_t> skip_opaque(std::size_t i) const {
    const std::size_t n = text_.size();
    char c = text_[i];
    char next = i + 1 < n ? text_[i + 1] : '\0';
    if (c == '/' && next == '/') return line_end(i);
    if (c == '/' && next == '*') {
      auto close = text_.find("*/", i + 2);
      return close == std::string_view::npos ? n : close + 2;
    }
    if (c == '#' && family_ == Family::kCLike && at_line_start(i)) {
      std::size_t j = i;
      while (true) {
        j = line_end(j);
        if (j >= 2 && text_[j - 1] == '\\' && j < n) {
          ++j;
          continue;
        }
        return j;
      }
    }
    if (c == '"') return quoted_end(i, '"');
    if (c == '`' && family_ == Family::kGo) {
      auto close = text_.find('`', i + 1);
      return close == std::string_view::npos ? n : close + 1;
    }
    if (c == '\'') {
      if (family_ == Family::kRust) {
        // 'a' or '\n' is a char literal; 'a (no closing quote) is a lifetime.
        if (next == '\\') return quoted_end(i, '\'');
        if (i + 2 < n && text_[i + 2] == '\'') return i + 3;
        return std::nullopt;
      }
      return quoted_end(i, '\'');
    }
    return std::nullopt;
  }

  // Position of the '}' matching the '{' at `open`, or npos.
  std::size_t match_brace(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < text_.size();) {
      if (auto skip = skip_opaque(i)) {
        i = *skip;
        continue;
      }
      if (text_[i] == '{') ++depth;
      if (text_[i] == '}' && --depth == 0) return i;
      ++i;
    }
    return std::string_view::npos;
  }

  std::string_view text() const { return text_; }

 private:
  std::size_t line_end(std::size_t i) const {
    auto nl = text_.find('\n', i);
    return nl == std::string_view::npos ? text_.size() : nl;
  }

  bool at_line_start(std::size_t i) const {
    while (i > 0 && (text_[i - 1] == ' ' || text_[i - 1] == '\t')) --i;
    return i == 0 || text_[i - 1] == '\n';
  }

  std::size_t quoted_end(std::size_t i, char quote) const {
    for (std::size_t j = i + 1; j < text_.size(); ++j) {
      if (text_[j] == '\\') {
        ++j;
      } else if (text_[j] == quote) {
        return j + 1;
      } else if (text_[j] == '\n') {
        return j;  // unterminated literal: stop at end of line
      }
    }
    return text_.size();
  }

  std::string_view text_;
  Family family_;
};

// Collapses whitespace runs and drops comments so the header can be matched
// against single-line patterns.
std::string flatten(const Scanner& sc, std::size_t begin, std::size_t end) {
  std::string out;
  auto text = sc.text();
  for (std::size_t i = begin; i < end;) {
    char c = text[i];
    if ((c == '/' && i + 1 < end && (text[i + 1] == '/' || text[i + 1] == '*'))) {
      i = std::min(end, *sc.skip_opaque(i));
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty() && out.back() != ' ') out += ' ';
      ++i;
      continue;
    }
    out += c;
    ++i;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Advances past whitespace, comments and preprocessor lines.
std::size_t skip_trivia(const Scanner& sc, std::size_t i, std::size_t end) {
  auto text = sc.text();
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '/' || text[i] == '#') {
      if (text[i] == '#' && i + 1 < end && text[i + 1] == '[') return i;  // Rust attribute
      if (auto skip = sc.skip_opaque(i)) {
        i = *skip;
        continue;
      }
    }
    break;
  }
  return i;
}

enum class HeaderKind { kFunction, kContainer, kOther };

const std::regex& re(const char* pattern) {
  // Patterns are string literals, so caching by address is enough.
  thread_local std::vector<std::pair<const char*, std::regex>> cache;
  for (const auto& [p, r] : cache) {
    if (p == pattern) return r;
  }
  cache.emplace_back(pattern, std::regex(pattern, std::regex::ECMAScript | std::regex::optimize));
  return cache.back().second;
}

constexpr const char* kCFunction =
    R"(^(template\s*<.*>\s*)?((static|inline|constexpr|extern|unsigned|signed|const|volatile|struct)\s+)*)"
    R"([A-Za-z_][\w:<>,\s]*?[\s\*&]+([A-Za-z_]\w*)\s*\([^{};]*\)\s*(const\s*)?(noexcept\s*)?(->\s*[^{};=]+)?$)";
constexpr const char* kCContainer = R"(^(inline\s+)?namespace(\s+[\w:]+)?$|^extern\s*"C(\+\+)?"$)";
constexpr const char* kRustFunction =
    R"(^(#\[[^\]]*\]\s*)*(pub(\([^)]*\))?\s+)?((const|async|unsafe|extern(\s*"[^"]*")?)\s+)*fn\s+[A-Za-z_]\w*\b.*\)(\s*->\s*.+)?(\s*where\s.*)?$)";
constexpr const char* kGoFunction = R"(^func\s+[A-Za-z_]\w*\s*[\[(].*$)";
constexpr const char* kJavaContainer =
    R"(^(@\w+(\([^)]*\))?\s+)*((public|private|protected|abstract|final|static|sealed|strictfp)\s+)*(class|interface|enum|record)\s+\w+.*$)";
constexpr const char* kJavaStaticMethod =
    R"(^(@\w+(\([^)]*\))?\s+)*((public|private|protected|final|synchronized|native|strictfp)\s+)*static\s+((public|private|protected|final|synchronized)\s+)*(<[^>]*>\s*)?[\w<>\[\],.?\s]+\s+[A-Za-z_]\w*\s*\([^)]*\)(\s*throws\s+[\w.,\s]+)?$)";

bool is_control_keyword(const std::string& name) {
  static const char* kw[] = {"if", "for", "while", "switch", "return", "catch", "sizeof", "do", "else", "operator"};
  for (auto* k : kw) {
    if (name == k) return true;
  }
  return false;
}

HeaderKind classify(const std::string& header, Family family, bool inside_container) {
  std::smatch m;
  switch (family) {
    case Family::kCLike:
      if (std::regex_match(header, re(kCContainer))) return HeaderKind::kContainer;
      if (header.find('=') != std::string::npos && header.find("operator") == std::string::npos) {
        // `int x = ...{` or a lambda initializer; `= default` never reaches here.
        auto paren = header.find('(');
        if (paren == std::string::npos || header.find('=') < paren) return HeaderKind::kOther;
      }
      if (std::regex_match(header, m, re(kCFunction)) && !is_control_keyword(m[4].str())) {
        // Qualified names (Foo::bar) are out-of-line method definitions.
        auto name_pos = static_cast<std::size_t>(m.position(4));
        if (name_pos >= 2 && header.compare(name_pos - 2, 2, "::") == 0) return HeaderKind::kOther;
        return HeaderKind::kFunction;
      }
      return HeaderKind::kOther;
    case Family::kRust:
      return std::regex_match(header, re(kRustFunction)) ? HeaderKind::kFunction : HeaderKind::kOther;
    case Family::kGo:
      return std::regex_match(header, re(kGoFunction)) ? HeaderKind::kFunction : HeaderKind::kOther;
    case Family::kJava:
      if (!inside_container) {
        return std::regex_match(header, re(kJavaContainer)) ? HeaderKind::kContainer : HeaderKind::kOther;
      }
      return std::regex_match(header, re(kJavaStaticMethod)) ? HeaderKind::kFunction : HeaderKind::kOther;
  }
  return HeaderKind::kOther;
}

// Go statements at file scope end at newlines; keep only the line(s) starting
// at the last `func` keyword.
std::size_t go_header_start(std::string_view text, std::size_t begin, std::size_t brace) {
  std::size_t best = std::string_view::npos;
  for (std::size_t i = begin; i < brace; ++i) {
    bool line_start = i == begin || text[i - 1] == '\n';
    if (line_start && text.substr(i, 5) == "func ") best = i;
  }
  return best;
}

void scan_region(const Scanner& sc, Family family, std::size_t begin, std::size_t end, bool inside_container,
                 std::string_view language, std::string_view path, std::vector<FunctionRecord>& out) {
  auto text = sc.text();
  std::size_t stmt_start = begin;
  for (std::size_t i = begin; i < end;) {
    if (auto skip = sc.skip_opaque(i)) {
      i = *skip;
      continue;
    }
    char c = text[i];
    if (c == ';' || c == '}') {
      stmt_start = i + 1;
      ++i;
      continue;
    }
    if (c != '{') {
      ++i;
      continue;
    }
    std::size_t close = sc.match_brace(i);
    if (close == std::string_view::npos || close >= end) return;  // unbalanced: stop scanning this region

    std::size_t header_begin = skip_trivia(sc, stmt_start, i);
    if (family == Family::kGo) {
      auto g = go_header_start(text, header_begin, i);
      header_begin = g == std::string_view::npos ? i : g;
    }
    auto header = flatten(sc, header_begin, i);
    switch (classify(header, family, inside_container)) {
      case HeaderKind::kFunction: {
        Provenance prov{std::string(path), header_begin, close + 1};
        out.push_back(make_record(std::string(language), std::string(text.substr(header_begin, close + 1 - header_begin)),
                                  std::move(prov)));
        break;
      }
      case HeaderKind::kContainer:
        scan_region(sc, family, i + 1, close, true, language, path, out);
        break;
      case HeaderKind::kOther:
        break;
    }
    i = close + 1;
    stmt_start = i;
  }
}

}  // namespace

std::vector<FunctionRecord> extract_functions(std::string_view file_text, std::string_view language,
                                              std::string_view path) {
  if (is_dialect(language)) {
    throw Error(ErrorCode::kInvalidArgument, "extract_functions needs a source language, got " + std::string(language));
  }
  std::vector<FunctionRecord> out;
  auto family = family_of(language);
  Scanner sc(file_text, family);
  scan_region(sc, family, 0, file_text.size(), false, language, path, out);
  return out;
}

}  // namespace irtrans::frontends
