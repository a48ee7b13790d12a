#include "posetgor/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "posetgor/error.hpp"

namespace posetgor {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

BuildResult parse_poset(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    bad("poset needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) bad("element ids must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) bad("\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        bad("each cover must be a pair of strings");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return build_poset(std::move(elements), covers);
}

BuildResult load_poset(const std::string& path) { return parse_poset(read_json_file(path)); }

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = Json::array();
  for (Index x = 0; x < p.size(); ++x) j["elements"].push_back(p.name(x));
  j["covers"] = Json::array();
  for (const auto& [x, y] : p.cover_pairs()) j["covers"].push_back({p.name(x), p.name(y)});
  return j;
}

LatticePoint parse_point(const Json& j, const Poset& p) {
  if (!j.is_object()) bad("point must be an object");
  if (!j.contains("degree") || !j["degree"].is_number_integer()) bad("point needs an integer \"degree\"");
  if (!j.contains("values") || !j["values"].is_object()) bad("point needs a \"values\" object");
  LatticePoint pt;
  pt.degree = j["degree"].get<std::int64_t>();
  pt.values.assign(p.size(), 0);
  std::vector<char> given(p.size(), 0);
  for (const auto& [key, v] : j["values"].items()) {
    auto x = p.find(key);
    if (!x && (key == "inf" || key == "-inf"))
      bad("the value at " + key + " is fixed by convention; use \"degree\" for -inf");
    if (!x) bad("point names unknown element '" + key + "'");
    if (!v.is_number_integer()) bad("value of '" + key + "' must be an integer");
    pt.values[*x] = v.get<std::int64_t>();
    given[*x] = 1;
  }
  for (Index x = 0; x < p.size(); ++x)
    if (!given[x]) bad("point has no value for '" + p.name(x) + "'");
  return pt;
}

LatticePoint load_point(const std::string& path, const Poset& p) {
  return parse_point(read_json_file(path), p);
}

Json point_to_json(const Poset& p, const LatticePoint& pt) {
  Json j;
  j["degree"] = pt.degree;
  j["values"] = Json::object();
  for (Index x = 0; x < p.size(); ++x) j["values"][p.name(x)] = pt.values[x];
  return j;
}

Json chain_to_json(const Poset& p, const Chain& c) {
  Json j = Json::array();
  for (Index x : c) j.push_back(p.display(x));
  return j;
}

Json sequence_to_json(const Poset& host, const StarSequence& s) {
  Json j;
  j["a"] = chain_to_json(host, s.a);
  j["b"] = chain_to_json(host, s.b);
  return j;
}

Json chain_witness_to_json(const Poset& p, const ChainWitness& w) {
  Json j;
  if (w.kind == ChainWitness::Kind::NonPureStar) {
    j["kind"] = "NonPureStar";
    j["chains"] = Json::array({chain_to_json(p, w.chain)});
  } else {
    j["kind"] = "BadCycle";
    j["chains"] = Json::array();
    for (const auto& c : w.lower) j["chains"].push_back(chain_to_json(p, c));
    for (const auto& c : w.upper) j["chains"].push_back(chain_to_json(p, c));
  }
  return j;
}

Json order_witness_to_json(const Poset& pm, const OrderWitness& w) {
  Json j;
  j["kind"] = "OrderCycle";
  j["sequence"] = sequence_to_json(pm, w.sequence);
  return j;
}

Json certificate_to_json(const Poset& p, const Certificate& c) {
  Json j;
  j["ring"] = ring_name(c.ring);
  j["N"] = c.N;
  j["exponent"] = c.N;
  j["eta"] = point_to_json(p, c.eta);
  j["zeta"] = point_to_json(p, c.zeta);
  return j;
}

Json label_to_json(const Poset& p, const PrimeLabel& l) {
  Json j;
  switch (l.kind) {
    case PrimeLabel::Kind::OrderCycle:
      j["kind"] = "OrderCycle";
      j["data"] = sequence_to_json(extend(p, ExtendMode::Both), l.sequence);
      break;
    case PrimeLabel::Kind::ChainStar:
      j["kind"] = "ChainStar";
      j["data"] = {{"chain", chain_to_json(p, l.chain)}};
      break;
    case PrimeLabel::Kind::ChainCycle: {
      j["kind"] = "ChainCycle";
      Json lower = Json::array(), upper = Json::array();
      for (const auto& c : l.tuple.lower) lower.push_back(chain_to_json(p, c));
      for (const auto& c : l.tuple.upper) upper.push_back(chain_to_json(p, c));
      j["data"] = {{"lower", lower}, {"upper", upper}, {"sequence", sequence_to_json(p, l.sequence)}};
      break;
    }
  }
  j["coheight"] = l.coheight;
  j["face_dim"] = l.face_dim;
  j["minimal"] = l.minimal;
  return j;
}

std::string_view ring_name(Ring r) { return r == Ring::Order ? "order" : "chain"; }

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace posetgor
