#include "irtrans/frontends/record.hpp"

#include <nlohmann/json.hpp>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::frontends {

std::string_view status_name(CompileStatus s) {
  switch (s) {
    case CompileStatus::kOk: return "ok";
    case CompileStatus::kCompileError: return "compile_error";
    case CompileStatus::kTimeout: return "timeout";
    case CompileStatus::kSkippedTooLong: return "skipped_too_long";
    case CompileStatus::kPending: return "pending";
  }
  return "pending";
}

CompileStatus parse_status(std::string_view name) {
  for (auto s : {CompileStatus::kOk, CompileStatus::kCompileError, CompileStatus::kTimeout,
                 CompileStatus::kSkippedTooLong, CompileStatus::kPending}) {
    if (status_name(s) == name) return s;
  }
  throw Error(ErrorCode::kUnsupportedFormat, "unknown compile status '" + std::string(name) + "'");
}

std::string record_id(std::string_view language, std::string_view source) {
  std::string key(language);
  key += '\0';
  key += source;
  return util::hex64(util::fnv1a64(key));
}

FunctionRecord make_record(std::string language, std::string source, Provenance provenance) {
  FunctionRecord r;
  r.id = record_id(language, source);
  r.language = std::move(language);
  r.source = std::move(source);
  r.provenance = std::move(provenance);
  return r;
}

std::string to_json_line(const FunctionRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["language"] = r.language;
  j["source"] = r.source;
  j["raw_ir"] = r.raw_ir ? nlohmann::ordered_json(*r.raw_ir) : nlohmann::ordered_json(nullptr);
  j["normalized_ir"] = r.normalized_ir ? nlohmann::ordered_json(*r.normalized_ir) : nlohmann::ordered_json(nullptr);
  j["compile_status"] = status_name(r.compile_status);
  if (!r.status_message.empty()) j["status_message"] = r.status_message;
  j["provenance"] = {{"path", r.provenance.path}, {"begin", r.provenance.begin}, {"end", r.provenance.end}};
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

FunctionRecord from_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kUnsupportedFormat, std::string("bad record line: ") + e.what());
  }
  try {
    FunctionRecord r;
    r.id = j.at("id").get<std::string>();
    r.language = j.at("language").get<std::string>();
    r.source = j.at("source").get<std::string>();
    if (j.contains("raw_ir") && !j["raw_ir"].is_null()) r.raw_ir = j["raw_ir"].get<std::string>();
    if (j.contains("normalized_ir") && !j["normalized_ir"].is_null()) r.normalized_ir = j["normalized_ir"].get<std::string>();
    r.compile_status = parse_status(j.value("compile_status", std::string("pending")));
    r.status_message = j.value("status_message", std::string());
    if (j.contains("provenance")) {
      const auto& p = j["provenance"];
      r.provenance.path = p.value("path", std::string());
      r.provenance.begin = p.value("begin", std::size_t{0});
      r.provenance.end = p.value("end", std::size_t{0});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kUnsupportedFormat, std::string("bad record fields: ") + e.what());
  }
}

std::vector<FunctionRecord> read_shard(const std::string& path) {
  std::vector<FunctionRecord> out;
  for (const auto& line : util::split_lines(util::read_file(path))) {
    if (util::trim(line).empty()) continue;
    out.push_back(from_json_line(line));
  }
  return out;
}

void write_shard(const std::string& path, const std::vector<FunctionRecord>& records) {
  std::string text;
  for (const auto& r : records) {
    text += to_json_line(r);
    text += '\n';
  }
  util::write_file(path, text);
}

}  // namespace irtrans::frontends
