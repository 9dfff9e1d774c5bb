#include "bunred/trace_io.hpp"

#include <json.hpp>

namespace bunred {
namespace {

using Json = nlohmann::ordered_json;

Json map_to_json(const DegreeAffineMap& m) { return Json{{"sign", m.sign}, {"shift", m.shift}}; }

Json node_to_json(const StepNode& node) {
  if (const auto* b = std::get_if<BaseStep>(&node.step)) {
    return Json{{"kind", "base"},
                {"rank", b->type.rank()},
                {"degree", b->type.degree()},
                {"twist_degree", b->twist_degree}};
  }
  const auto& c = std::get<CompositeStep>(node.step);
  Json maps = Json::array();
  for (const auto& m : c.det_maps) maps.push_back(map_to_json(m));
  Json out;
  out["kind"] = "composite";
  out["rank"] = c.type.rank();
  out["degree"] = c.type.degree();
  out["rF"] = c.sol.rF;
  out["dF"] = c.sol.dF;
  out["r1"] = c.sol.r1;
  out["d1"] = c.sol.d1;
  out["h1"] = c.sol.h1;
  out["rkV"] = c.rkV;
  out["rho_affine"] = c.rho_affine;
  out["hecke_affine"] = c.hecke_affine;
  out["det_maps"] = std::move(maps);
  out["mu1"] = c.mu1 ? node_to_json(*c.mu1) : Json(nullptr);
  out["mu2"] = c.mu2 ? node_to_json(*c.mu2) : Json(nullptr);
  return out;
}

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& obj, const std::string& where, const char* key) {
  const Json& v = field(obj, where, key);
  const std::string here = where + "/" + key;
  if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<std::int64_t>();
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) parse_fail(here, "integer exceeds 64-bit range");
    return static_cast<std::int64_t>(u);
  }
  parse_fail(here, "expected an integer");
}

SheafType type_at(std::int64_t rank, std::int64_t degree, const std::string& where) {
  try {
    return SheafType(rank, degree);
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

DegreeAffineMap map_from_json(const Json& j, const std::string& where) {
  return {integer(j, where, "sign"), integer(j, where, "shift")};
}

StepNode node_from_json(const Json& j, const std::string& where) {
  const Json& kind = field(j, where, "kind");
  if (!kind.is_string()) parse_fail(where + "/kind", "expected a string");
  const SheafType t = type_at(integer(j, where, "rank"), integer(j, where, "degree"), where);

  if (kind == "base") return StepNode{BaseStep{t, integer(j, where, "twist_degree")}};
  if (kind != "composite") parse_fail(where + "/kind", "unknown node kind " + kind.dump());

  CompositeStep c;
  c.type = t;
  c.sol.rF = integer(j, where, "rF");
  c.sol.dF = integer(j, where, "dF");
  c.sol.r1 = integer(j, where, "r1");
  c.sol.d1 = integer(j, where, "d1");
  c.sol.h1 = integer(j, where, "h1");
  c.sol.h = t.rank() >= 1 ? hcf(t.rank(), t.degree()) : 0;
  c.rkV = integer(j, where, "rkV");
  c.rho_affine = integer(j, where, "rho_affine");
  c.hecke_affine = integer(j, where, "hecke_affine");
  const Json& maps = field(j, where, "det_maps");
  if (!maps.is_array()) parse_fail(where + "/det_maps", "expected an array");
  for (std::size_t i = 0; i < maps.size(); ++i)
    c.det_maps.push_back(map_from_json(maps[i], where + "/det_maps/" + std::to_string(i)));
  c.mu1 = Box<StepNode>(node_from_json(field(j, where, "mu1"), where + "/mu1"));
  c.mu2 = Box<StepNode>(node_from_json(field(j, where, "mu2"), where + "/mu2"));
  return StepNode{std::move(c)};
}

}  // namespace

std::string serialize_trace(const ReductionTrace& trace) {
  Json doc;
  doc["version"] = kTraceFormatVersion;
  doc["genus"] = trace.genus;
  doc["input"] = Json{{"rank", trace.input.rank()}, {"degree", trace.input.degree()}};
  doc["h"] = trace.h;
  doc["total_affine_dim"] = trace.total_affine_dim;
  doc["composite_det"] = map_to_json(trace.composite_det);
  doc["root"] = node_to_json(trace.root);
  return doc.dump(2) + "\n";
}

ReductionTrace parse_trace(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const std::int64_t version = integer(doc, "", "version");
  if (version != kTraceFormatVersion) parse_fail("/version", "unsupported version " + std::to_string(version));

  ReductionTrace trace;
  trace.genus = integer(doc, "", "genus");
  const Json& input = field(doc, "", "input");
  trace.input = type_at(integer(input, "/input", "rank"), integer(input, "/input", "degree"), "/input");
  trace.h = integer(doc, "", "h");
  trace.total_affine_dim = integer(doc, "", "total_affine_dim");
  trace.composite_det = map_from_json(field(doc, "", "composite_det"), "/composite_det");
  trace.root = node_from_json(field(doc, "", "root"), "/root");
  return trace;
}

}  // namespace bunred
