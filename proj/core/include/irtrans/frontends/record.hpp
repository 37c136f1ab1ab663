#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irtrans::frontends {

enum class CompileStatus { kOk, kCompileError, kTimeout, kSkippedTooLong, kPending };

std::string_view status_name(CompileStatus s);
CompileStatus parse_status(std::string_view name);

struct Provenance {
  std::string path;
  std::size_t begin = 0;  // byte span [begin, end) in the input file
  std::size_t end = 0;

  bool operator==(const Provenance&) const = default;
};

struct FunctionRecord {
  std::string id;
  std::string language;
  std::string source;
  std::optional<std::string> raw_ir;
  std::optional<std::string> normalized_ir;
  CompileStatus compile_status = CompileStatus::kPending;
  std::string status_message;  // compiler diagnostics for kCompileError
  Provenance provenance;

  bool operator==(const FunctionRecord&) const = default;
};

std::string record_id(std::string_view language, std::string_view source);
FunctionRecord make_record(std::string language, std::string source, Provenance provenance = {});

std::string to_json_line(const FunctionRecord& r);
FunctionRecord from_json_line(std::string_view line);

std::vector<FunctionRecord> read_shard(const std::string& path);
void write_shard(const std::string& path, const std::vector<FunctionRecord>& records);

}  // namespace irtrans::frontends
