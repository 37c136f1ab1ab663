#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace irtrans::irnorm {

// A basic block. `label` is the name without the leading '%'; for an
// unlabeled entry block it holds the implicit slot number and `label_line`
// is empty.
struct IRBlock {
  std::string label;
  std::string label_line;
  std::vector<std::string> lines;

  bool implicit_label() const { return label_line.empty(); }
  bool operator==(const IRBlock&) const = default;
};

struct IRFunction {
  std::vector<std::string> leading_lines;  // top-level lines between the previous function and this one
  std::string symbol;                      // as written after '@', quotes included when quoted
  std::string signature_line;
  std::vector<IRBlock> blocks;
  std::string closing_line;

  bool operator==(const IRFunction&) const = default;
};

struct IRModule {
  std::vector<std::string> header_lines;
  std::vector<IRFunction> functions;
  std::vector<std::string> footer_lines;
  bool trailing_newline = true;

  bool operator==(const IRModule&) const = default;
};

// Line-structured parse. Throws Error(kMalformedIR) on an unterminated
// function body or unbalanced braces.
IRModule parse_ir(std::string_view text);
std::string serialize(const IRModule& module);

// Labels referenced by `label %X` operands and by phi incoming blocks.
std::set<std::string> referenced_labels(const IRFunction& function);
std::vector<std::string> defined_labels(const IRFunction& function);

// Lexical helpers shared by the passes.
namespace lex {

bool is_name_char(char c);
// Position of the ';' that starts a comment, or npos.
std::size_t comment_start(std::string_view line);
std::string strip_comment(std::string_view line);
// Label name if the line is a block label (e.g. "5:" or "if.then:  ; preds").
std::optional<std::string> label_of(std::string_view line);
// Rewrites `sigil name` tokens outside string literals. `fn` receives the name
// (quotes included for quoted names) and returns a replacement or nullopt.
std::string rewrite_names(std::string_view line, char sigil,
                          const std::function<std::optional<std::string>(const std::string&)>& fn);
std::vector<std::string> names_in(std::string_view line, char sigil);
// Renders a global or local name, quoting it when it contains characters
// outside the bare identifier set.
std::string render_name(std::string_view name);

}  // namespace lex

}  // namespace irtrans::irnorm
