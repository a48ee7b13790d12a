#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "posetgor/lattice.hpp"
#include "posetgor/locus.hpp"
#include "posetgor/poset.hpp"
#include "posetgor/trace.hpp"

namespace posetgor {

using Json = nlohmann::ordered_json;

// {"elements": [...], "covers": [[x, y], ...]}. Throws ParseError on shape
// problems, the build_poset errors otherwise.
BuildResult parse_poset(const Json& j);
BuildResult load_poset(const std::string& path);
Json poset_to_json(const Poset& p);

// {"degree": d, "values": {"x": v, ...}}; every element needs a value and
// keys naming inf or -inf are rejected.
LatticePoint parse_point(const Json& j, const Poset& p);
LatticePoint load_point(const std::string& path, const Poset& p);
Json point_to_json(const Poset& p, const LatticePoint& pt);

Json read_json_file(const std::string& path);

Json chain_to_json(const Poset& p, const Chain& c);
Json sequence_to_json(const Poset& host, const StarSequence& s);
Json chain_witness_to_json(const Poset& p, const ChainWitness& w);
Json order_witness_to_json(const Poset& pm, const OrderWitness& w);
Json certificate_to_json(const Poset& p, const Certificate& c);
Json label_to_json(const Poset& p, const PrimeLabel& l);

std::string_view ring_name(Ring r);

// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace posetgor
