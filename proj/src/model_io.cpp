#include "dmt/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dmt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> string_list(const json& j, const std::string& key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ModelError("'" + key + "' must be an array of strings");
  for (const auto& e : arr) {
    if (!e.is_string()) throw ModelError("'" + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ModelError("'" + where + "' must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ModelError("'" + where + "' entries must be [\"world\", \"world\"] pairs");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

}  // namespace

RawModel parse_model_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed model JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model file must contain a JSON object");

  RawModel raw;
  raw.atoms = string_list(j, "atoms");
  raw.modalities = string_list(j, "modalities");
  raw.worlds = string_list(j, "worlds");
  if (j.contains("valuation")) {
    const json& val = j.at("valuation");
    if (!val.is_object()) throw ModelError("'valuation' must be an object");
    for (const auto& [world, atoms] : val.items()) {
      auto& out = raw.valuation[world];
      if (!atoms.is_array()) throw ModelError("valuation of '" + world + "' must be an array");
      for (const auto& a : atoms) {
        if (!a.is_string()) throw ModelError("valuation of '" + world + "' must list atom names");
        out.push_back(a.get<std::string>());
      }
    }
  }
  if (j.contains("relations")) {
    const json& rel = j.at("relations");
    if (!rel.is_object()) throw ModelError("'relations' must be an object");
    for (const auto& [mod, edges] : rel.items()) {
      raw.relations[mod] = pair_list(edges, "relations." + mod);
    }
  }
  if (j.contains("preference")) raw.preference = pair_list(j.at("preference"), "preference");
  return raw;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PreferentialModel load_model(const std::filesystem::path& path) {
  return PreferentialModel::validate(parse_model_json(read_text_file(path)));
}

std::string model_to_json(const PreferentialModel& m) {
  const RawModel raw = m.to_raw();
  ordered_json j;
  j["atoms"] = raw.atoms;
  j["modalities"] = raw.modalities;
  j["worlds"] = raw.worlds;
  ordered_json val = ordered_json::object();
  for (const auto& w : raw.worlds) val[w] = raw.valuation.at(w);
  j["valuation"] = val;
  ordered_json rel = ordered_json::object();
  for (const auto& mod : raw.modalities) {
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : raw.relations.at(mod)) edges.push_back({a, b});
    rel[mod] = edges;
  }
  j["relations"] = rel;
  ordered_json pref = ordered_json::array();
  for (const auto& [a, b] : raw.preference) pref.push_back({a, b});
  j["preference"] = pref;
  return j.dump(2) + "\n";
}

void save_model(const PreferentialModel& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << model_to_json(m);
}

}  // namespace dmt
