#include "irtrans/nn/checkpoint.hpp"

#include <cstring>

#include <nlohmann/json.hpp>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::nn {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormat = "irtrans-checkpoint";

void append_doubles(std::string& out, const Buffer& v) {
  static_assert(sizeof(double) == 8, "checkpoint payload assumes 64-bit doubles");
  const auto* p = reinterpret_cast<const char*>(v.data());
  out.append(p, v.size() * sizeof(double));
}

Buffer read_doubles(std::string_view bytes, std::size_t& pos, std::size_t count) {
  if (pos + count * sizeof(double) > bytes.size()) throw Error(ErrorCode::kUnsupportedFormat, "truncated checkpoint payload");
  Buffer v(count);
  std::memcpy(v.data(), bytes.data() + pos, count * sizeof(double));
  pos += count * sizeof(double);
  return v;
}

json config_json(const ModelConfig& c) {
  return json{{"encoder_layers", c.encoder_layers}, {"decoder_layers", c.decoder_layers}, {"heads", c.heads},
              {"dim", c.dim},   {"ffn_dim", c.ffn_dim},   {"max_len", c.max_len},
              {"vocab_size", c.vocab_size}, {"num_tags", c.num_tags}, {"separate_decoders", c.separate_decoders},
              {"seed", c.seed}};
}

ModelConfig config_from(const json& j) {
  ModelConfig c;
  c.encoder_layers = j.at("encoder_layers").get<int>();
  c.decoder_layers = j.at("decoder_layers").get<int>();
  c.heads = j.at("heads").get<int>();
  c.dim = j.at("dim").get<int>();
  c.ffn_dim = j.at("ffn_dim").get<int>();
  c.max_len = j.at("max_len").get<int>();
  c.vocab_size = j.at("vocab_size").get<int>();
  c.num_tags = j.at("num_tags").get<int>();
  c.separate_decoders = j.at("separate_decoders").get<bool>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& ckpt) {
  const auto& model = ckpt.model;
  json tensors = json::array();
  for (const auto& t : model.tensors()) {
    tensors.push_back(json{{"name", t.name}, {"rows", t.rows}, {"cols", t.cols}, {"offset", t.offset}});
  }
  bool has_moments = !ckpt.optimizer.m.empty();
  if (has_moments && (ckpt.optimizer.m.size() != model.parameter_count() || ckpt.optimizer.v.size() != model.parameter_count())) {
    throw Error(ErrorCode::kInvalidArgument, "optimizer moments do not match the parameter count");
  }
  json header{{"format", kFormat},
              {"version", kCheckpointVersion},
              {"config", config_json(model.config())},
              {"languages", ckpt.languages},
              {"vocab_hash", ckpt.vocab_hash},
              {"vocab", ckpt.vocab_text},
              {"step", ckpt.step},
              {"parameter_count", model.parameter_count()},
              {"tensors", tensors},
              {"optimizer", json{{"t", ckpt.optimizer.t}, {"moments", has_moments}}},
              {"metadata", json::parse(ckpt.metadata_json.empty() ? "{}" : ckpt.metadata_json)}};
  std::string out = header.dump();
  out += '\n';
  append_doubles(out, model.params());
  if (has_moments) {
    append_doubles(out, ckpt.optimizer.m);
    append_doubles(out, ckpt.optimizer.v);
  }
  return out;
}

Checkpoint parse_checkpoint(std::string_view bytes) {
  auto nl = bytes.find('\n');
  if (nl == std::string_view::npos) throw Error(ErrorCode::kUnsupportedFormat, "checkpoint header missing");
  json header;
  try {
    header = json::parse(bytes.substr(0, nl));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kUnsupportedFormat, std::string("bad checkpoint header: ") + e.what());
  }
  if (header.value("format", std::string()) != kFormat) throw Error(ErrorCode::kUnsupportedFormat, "not a checkpoint file");
  if (header.value("version", 0) != kCheckpointVersion) {
    throw Error(ErrorCode::kUnsupportedFormat, "unsupported checkpoint version " + std::to_string(header.value("version", 0)));
  }
  Checkpoint ckpt;
  try {
    ckpt.model = ModelState(config_from(header.at("config")));
    ckpt.languages = header.at("languages").get<std::vector<std::string>>();
    ckpt.vocab_text = header.at("vocab").get<std::string>();
    ckpt.vocab_hash = header.at("vocab_hash").get<std::string>();
    ckpt.step = header.at("step").get<std::uint64_t>();
    ckpt.optimizer.t = header.at("optimizer").at("t").get<std::uint64_t>();
    ckpt.metadata_json = header.at("metadata").dump();
    if (header.at("parameter_count").get<std::size_t>() != ckpt.model.parameter_count()) {
      throw Error(ErrorCode::kCheckpointMismatch, "parameter count does not match the stored configuration");
    }
    const auto& tensors = header.at("tensors");
    if (tensors.size() != ckpt.model.tensors().size()) throw Error(ErrorCode::kCheckpointMismatch, "tensor table mismatch");
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      const auto& t = ckpt.model.tensors()[i];
      if (tensors[i].at("name").get<std::string>() != t.name || tensors[i].at("rows").get<int>() != t.rows ||
          tensors[i].at("cols").get<int>() != t.cols) {
        throw Error(ErrorCode::kCheckpointMismatch, "tensor '" + t.name + "' does not match the stored layout");
      }
    }
    std::size_t pos = nl + 1;
    ckpt.model.params() = read_doubles(bytes, pos, ckpt.model.parameter_count());
    if (header.at("optimizer").at("moments").get<bool>()) {
      ckpt.optimizer.m = read_doubles(bytes, pos, ckpt.model.parameter_count());
      ckpt.optimizer.v = read_doubles(bytes, pos, ckpt.model.parameter_count());
    }
    if (pos != bytes.size()) throw Error(ErrorCode::kUnsupportedFormat, "trailing bytes after checkpoint payload");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kUnsupportedFormat, std::string("bad checkpoint header field: ") + e.what());
  }
  return ckpt;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  // Write then rename so an interrupted save never leaves a torn file.
  auto tmp = path;
  tmp += ".tmp";
  util::write_file(tmp, serialize_checkpoint(ckpt));
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIOError, "cannot move checkpoint into place: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) { return parse_checkpoint(util::read_file(path)); }

}  // namespace irtrans::nn
