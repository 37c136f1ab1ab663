#include "irtrans/irnorm/demangle.hpp"

#include <cctype>
#include <vector>

namespace irtrans::irnorm {
namespace {

class ItaniumDecoder {
 public:
  explicit ItaniumDecoder(std::string_view s) : s_(s) {}

  std::optional<std::string> run() {
    if (!consume("_Z")) return std::nullopt;
    bool const_method = false;
    auto name = parse_name(&const_method);
    if (!name) return std::nullopt;
    if (done()) return *name;  // data object

    std::vector<std::string> params;
    while (!done()) {
      auto t = parse_type();
      if (!t) return std::nullopt;
      params.push_back(*t);
    }
    std::string out = *name + "(";
    if (!(params.size() == 1 && params[0] == "void")) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i];
      }
    }
    out += ")";
    if (const_method) out += " const";
    return out;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  bool consume(std::string_view token) {
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::optional<std::string> parse_source_name() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::size_t len = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      len = len * 10 + static_cast<std::size_t>(peek() - '0');
      if (len > s_.size()) return std::nullopt;
      ++pos_;
    }
    if (len == 0 || pos_ + len > s_.size()) return std::nullopt;
    std::string id(s_.substr(pos_, len));
    pos_ += len;
    return id;
  }

  // S_ / S<base-36>_ back-references; St is handled by the callers.
  std::optional<std::string> parse_substitution() {
    if (!consume("S")) return std::nullopt;
    if (consume("_")) {
      if (subs_.empty()) return std::nullopt;
      return subs_[0];
    }
    std::size_t id = 0;
    bool any = false;
    while (!done() && peek() != '_') {
      char c = peek();
      std::size_t digit;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digit = static_cast<std::size_t>(c - '0');
      } else if (c >= 'A' && c <= 'Z') {
        digit = static_cast<std::size_t>(c - 'A') + 10;
      } else {
        return std::nullopt;
      }
      id = id * 36 + digit;
      any = true;
      ++pos_;
    }
    if (!any || !consume("_")) return std::nullopt;
    if (id + 1 >= subs_.size()) return std::nullopt;
    return subs_[id + 1];
  }

  std::optional<std::string> parse_name(bool* const_method) {
    if (consume("N")) {
      bool is_const = false;
      while (peek() == 'r' || peek() == 'V' || peek() == 'K') {
        if (peek() == 'K') is_const = true;
        ++pos_;
      }
      if (const_method) *const_method = is_const;
      std::string prefix;
      std::string last;
      bool first = true;
      // Scopes introduced by St or a back-reference are not new candidates.
      bool prefix_is_candidate = false;
      while (!consume("E")) {
        if (done()) return std::nullopt;
        std::string component;
        if (first && consume("St")) {
          prefix = "std";
          first = false;
          continue;
        }
        if (first && peek() == 'S') {
          auto sub = parse_substitution();
          if (!sub) return std::nullopt;
          prefix = *sub;
          first = false;
          continue;
        }
        if (peek() == 'C' && (peek(1) == '1' || peek(1) == '2' || peek(1) == '3')) {
          pos_ += 2;
          component = last;
        } else if (peek() == 'D' && (peek(1) == '0' || peek(1) == '1' || peek(1) == '2')) {
          pos_ += 2;
          component = "~" + last;
        } else if (consume("L")) {
          auto id = parse_source_name();
          if (!id) return std::nullopt;
          component = *id;
        } else {
          auto id = parse_source_name();
          if (!id) return std::nullopt;
          component = *id;
        }
        if (!prefix.empty()) {
          // The enclosing scope becomes a substitution candidate once it is
          // extended; the final component (the entity itself) never does.
          if (prefix_is_candidate) subs_.push_back(prefix);
          prefix += "::" + component;
        } else {
          prefix = component;
        }
        prefix_is_candidate = true;
        last = component;
        first = false;
      }
      if (prefix.empty()) return std::nullopt;
      return prefix;
    }
    if (consume("St")) {
      auto id = parse_source_name();
      if (!id) return std::nullopt;
      return "std::" + *id;
    }
    consume("L");
    return parse_source_name();
  }

  std::optional<std::string> builtin(char c) {
    switch (c) {
      case 'v': return "void";
      case 'w': return "wchar_t";
      case 'b': return "bool";
      case 'c': return "char";
      case 'a': return "signed char";
      case 'h': return "unsigned char";
      case 's': return "short";
      case 't': return "unsigned short";
      case 'i': return "int";
      case 'j': return "unsigned int";
      case 'l': return "long";
      case 'm': return "unsigned long";
      case 'x': return "long long";
      case 'y': return "unsigned long long";
      case 'n': return "__int128";
      case 'o': return "unsigned __int128";
      case 'f': return "float";
      case 'd': return "double";
      case 'e': return "long double";
      case 'g': return "__float128";
      case 'z': return "...";
      default: return std::nullopt;
    }
  }

  std::optional<std::string> parse_type() {
    char c = peek();
    if (auto b = builtin(c)) {
      ++pos_;
      return b;
    }
    if (c == 'D') {
      char d = peek(1);
      std::optional<std::string> t;
      if (d == 'n') t = "decltype(nullptr)";
      if (d == 'i') t = "char32_t";
      if (d == 's') t = "char16_t";
      if (d == 'u') t = "char8_t";
      if (!t) return std::nullopt;
      pos_ += 2;
      return t;
    }
    if (c == 'P' || c == 'R' || c == 'O' || c == 'K' || c == 'V') {
      ++pos_;
      auto inner = parse_type();
      if (!inner) return std::nullopt;
      std::string t;
      switch (c) {
        case 'P': t = *inner + "*"; break;
        case 'R': t = *inner + "&"; break;
        case 'O': t = *inner + "&&"; break;
        case 'K': t = *inner + " const"; break;
        default: t = *inner + " volatile"; break;
      }
      subs_.push_back(t);
      return t;
    }
    if (c == 'S') {
      if (peek(1) == 't') {
        pos_ += 2;
        auto id = parse_source_name();
        if (!id) return std::nullopt;
        std::string t = "std::" + *id;
        subs_.push_back(t);
        return t;
      }
      return parse_substitution();
    }
    if (c == 'N' || std::isdigit(static_cast<unsigned char>(c))) {
      auto name = parse_name(nullptr);
      if (!name) return std::nullopt;
      subs_.push_back(*name);
      return name;
    }
    return std::nullopt;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> subs_;
};

}  // namespace

std::optional<std::string> demangle_itanium(std::string_view symbol) {
  if (symbol.substr(0, 3) == "__Z") symbol.remove_prefix(1);
  return ItaniumDecoder(symbol).run();
}

bool has_mangling_prefix(std::string_view symbol) {
  return symbol.substr(0, 2) == "_Z" || symbol.substr(0, 3) == "__Z" || symbol.substr(0, 2) == "_R";
}

}  // namespace irtrans::irnorm
