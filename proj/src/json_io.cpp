#include "wrt/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace wrt {
namespace {

using Json = nlohmann::ordered_json;

Json ids(const std::vector<VertexId>& v) { return Json(v); }

std::vector<VertexId> read_ids(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
  std::vector<VertexId> out;
  for (const auto& e : j[key]) {
    if (!e.is_number_integer()) throw std::invalid_argument(std::string("non-integer id in '") + key + "'");
    out.push_back(e.get<VertexId>());
  }
  return out;
}

Rational read_rational(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing '") + key + "'");
  const Json& v = j[key];
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw std::invalid_argument(std::string("'") + key + "' must be a \"p/q\" string");
}

}  // namespace

std::string witness_to_json(const Witness& witness) {
  Json j;
  if (const auto* path = std::get_if<PathWitness>(&witness)) {
    j["kind"] = "path";
    j["u"] = path->u;
    j["path"] = ids(path->path);
    j["weight"] = path->weight.to_string();
  } else {
    const auto& pair = std::get<PairWitness>(witness);
    j["kind"] = "pair";
    j["a"] = ids(pair.a);
    j["b"] = ids(pair.b);
    j["weight_a"] = pair.weight_a.to_string();
    j["weight_b"] = pair.weight_b.to_string();
  }
  return j.dump();
}

Witness witness_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("witness is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("witness needs a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "path") {
    if (!j.contains("u") || !j["u"].is_number_integer()) throw std::invalid_argument("path witness needs integer 'u'");
    return PathWitness{j["u"].get<VertexId>(), read_ids(j, "path"), read_rational(j, "weight")};
  }
  if (kind == "pair") {
    return PairWitness{read_ids(j, "a"), read_ids(j, "b"), read_rational(j, "weight_a"), read_rational(j, "weight_b")};
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

std::string oracle_to_json(const OracleResult& result) {
  Json j;
  j["best_path_weight"] = result.best_path_weight.to_string();
  j["best_pair_value"] = result.best_pair_value.to_string();
  j["a"] = ids(result.a);
  j["b"] = ids(result.b);
  return j.dump();
}

std::string partition_to_json(const PartitionResult& result, bool with_trace) {
  Json j;
  j["a"] = ids(result.a);
  j["b"] = ids(result.b);
  Json colors = Json::object();
  for (std::size_t v = 0; v < result.colors.size(); ++v) {
    if (result.colors[v] != Color::kUncolored) colors[std::to_string(v)] = std::string(to_string(result.colors[v]));
  }
  j["colors"] = std::move(colors);
  j["r_star"] = result.r_star;
  j["residual_path"] = ids(result.residual_path);
  j["weight_a"] = result.weight_a.to_string();
  j["weight_b"] = result.weight_b.to_string();
  if (with_trace) {
    Json trace = Json::array();
    for (const TraceEvent& e : result.trace) {
      Json ev;
      ev["kind"] = std::string(to_string(e.kind));
      ev["vertex"] = e.vertex;
      if (e.side != Side::kNone) ev["side"] = std::string(to_string(e.side));
      if (e.color != Color::kUncolored) ev["color"] = std::string(to_string(e.color));
      ev["weight_a"] = e.weight_a.to_string();
      ev["weight_b"] = e.weight_b.to_string();
      trace.push_back(std::move(ev));
    }
    j["trace"] = std::move(trace);
  }
  return j.dump();
}

}  // namespace wrt
