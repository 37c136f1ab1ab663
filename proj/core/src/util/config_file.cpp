#include "irtrans/util/config_file.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <set>
#include <sstream>

#include "irtrans/error.hpp"
#include "irtrans/util/files.hpp"

namespace irtrans::util {
namespace {

void flatten(const boost::property_tree::ptree& tree, const std::string& prefix,
             std::map<std::string, std::string>& out) {
  for (const auto& [key, child] : tree) {
    auto full = prefix.empty() ? key : prefix + "." + key;
    if (child.empty()) {
      out[full] = child.data();
    } else {
      flatten(child, full, out);
    }
  }
}

}  // namespace

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

ConfigFile ConfigFile::parse(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
  }
  ConfigFile config;
  flatten(tree, "", config.values_);
  return config;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string ConfigFile::get_or(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double ConfigFile::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    return std::stod(*v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "config key " + key + " is not a number: " + *v);
  }
}

long long ConfigFile::get_int(const std::string& key, long long fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    return std::stoll(*v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "config key " + key + " is not an integer: " + *v);
  }
}

bool ConfigFile::get_bool(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  throw Error(ErrorCode::kInvalidArgument, "config key " + key + " is not a boolean: " + *v);
}

std::vector<std::string> ConfigFile::get_list(const std::string& key) const {
  std::vector<std::string> items;
  auto v = get(key);
  if (!v) return items;
  std::istringstream in(*v);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) items.emplace_back(t);
  }
  return items;
}

std::vector<std::string> ConfigFile::sections(const std::string& prefix) const {
  std::set<std::string> names;
  auto head = prefix + ".";
  for (const auto& [key, value] : values_) {
    if (!starts_with(key, head)) continue;
    auto rest = key.substr(head.size());
    auto dot = rest.find('.');
    if (dot != std::string::npos) names.insert(rest.substr(0, dot));
  }
  return {names.begin(), names.end()};
}

}  // namespace irtrans::util
