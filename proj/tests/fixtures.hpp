#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetgor/lattice.hpp"
#include "posetgor/poset.hpp"

namespace fx {

using posetgor::LatticePoint;
using posetgor::Poset;
using Covers = std::vector<std::pair<std::string, std::string>>;
using Values = std::map<std::string, std::int64_t>;

inline Poset make(std::vector<std::string> elements, const Covers& covers) {
  return posetgor::build_poset(std::move(elements), covers).poset;
}

// Missing elements get 0.
inline LatticePoint point(const Poset& p, std::int64_t degree, const Values& values) {
  LatticePoint pt{degree, std::vector<std::int64_t>(p.size(), 0)};
  for (const auto& [k, v] : values) pt.values[p.index_of(k)] = v;
  return pt;
}

inline std::vector<std::int64_t> function(const Poset& p, const Values& values) {
  return point(p, 0, values).values;
}

inline Poset chain(int n) {
  std::vector<std::string> e;
  Covers c;
  for (int i = 0; i < n; ++i) {
    e.push_back("c" + std::to_string(i));
    if (i > 0) c.emplace_back("c" + std::to_string(i - 1), "c" + std::to_string(i));
  }
  return make(e, c);
}

inline Poset antichain(int n) {
  std::vector<std::string> e;
  for (int i = 0; i < n; ++i) e.push_back("x" + std::to_string(i));
  return make(e, {});
}

// Nine elements, two crossing strands.
inline Poset nx() {
  return make({"a1", "e1", "b1", "d1", "a2", "e2", "b2", "d2", "a3"},
              {{"a1", "e1"}, {"e1", "b1"}, {"d1", "a2"}, {"d2", "a2"}, {"a2", "b1"},
               {"a2", "e2"}, {"e2", "b2"}, {"d1", "a3"}, {"d2", "a3"}});
}
inline LatticePoint xi_nx(const Poset& p) {
  return point(p, 3, {{"a1", 1}, {"a2", 1}, {"a3", 2}, {"b1", 1}, {"b2", 1}, {"d1", 1}, {"d2", 1}});
}
inline LatticePoint eta_nx(const Poset& p) {
  return point(p, 7, {{"a3", 4}, {"b1", 3}, {"b2", 2}, {"d1", 2}, {"d2", 2},
                      {"a1", 1}, {"a2", 1}, {"e1", 1}, {"e2", 1}});
}
inline LatticePoint zeta_nx(const Poset& p) {
  return point(p, -1, {{"a1", 1}, {"a2", 1}, {"b1", -1}, {"e1", -1}, {"e2", -1}});
}
inline std::vector<std::int64_t> mu1(const Poset& p) {
  return function(p, {{"b1", 1}, {"e1", 1}, {"e2", 1}, {"a2", -1}});
}

// Twelve elements, a hexagon of strands.
inline Poset hex() {
  return make({"a1", "a2", "a3", "b1", "b2", "b3", "d1", "d2", "d3", "e1", "e2", "e3"},
              {{"a1", "d1"}, {"d1", "e1"}, {"e1", "b1"}, {"a1", "b2"}, {"a2", "d2"}, {"d2", "b1"},
               {"a2", "b3"}, {"a3", "e2"}, {"e2", "b2"}, {"a3", "d3"}, {"d3", "e3"}, {"e3", "b3"}});
}
inline LatticePoint xi_hex(const Poset& p) {
  return point(p, 2, {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b1", 1}, {"b2", 1}, {"b3", 1}});
}
inline LatticePoint eta_hex(const Poset& p) {
  return point(p, 9, {{"a1", 2}, {"a2", 3}, {"a3", 1}, {"b1", 4}, {"b2", 6}, {"b3", 5},
                      {"d1", 1}, {"d2", 1}, {"d3", 1}, {"e1", 1}, {"e2", 1}, {"e3", 1}});
}
inline LatticePoint zeta_hex(const Poset& p) {
  return point(p, 1, {{"a1", 3}, {"a2", 2}, {"a3", 4}, {"b1", 1}, {"b2", -1}, {"b3", 0},
                      {"d1", -1}, {"d2", -1}, {"d3", -1}, {"e1", -1}, {"e2", -1}, {"e3", -1}});
}
inline std::vector<std::int64_t> mu3(const Poset& p) {
  return function(p, {{"a1", -2}, {"a2", -1}, {"a3", -3}, {"b1", 0}, {"b2", 2}, {"b3", 1},
                      {"d1", 1}, {"d2", 1}, {"d3", 1}, {"e1", 1}, {"e2", 1}, {"e3", 1}});
}

inline Poset bowtie() {
  return make({"a1", "a2", "x", "b1", "b2"},
              {{"a1", "x"}, {"x", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}});
}

inline Poset claw() {
  return make({"c", "d", "a", "y", "z", "w"}, {{"c", "a"}, {"d", "a"}, {"a", "y"}, {"y", "z"}, {"a", "w"}});
}

inline Poset ladder() {
  return make({"c1", "c2", "a1", "a2", "m", "b1", "b2", "d1", "d2"},
              {{"c1", "a1"}, {"a1", "m"}, {"m", "b1"}, {"b1", "d1"}, {"c2", "a2"}, {"a2", "b2"},
               {"b2", "d2"}, {"a1", "b2"}, {"a2", "b1"}});
}

// Seven elements; the naive choice of chains loses a dimension.
inline Poset ex54() {
  return make({"d1", "d2", "a1", "a2", "e", "b1", "b2"},
              {{"d1", "a1"}, {"a1", "e"}, {"e", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"d2", "a2"},
               {"a2", "b2"}, {"d2", "a1"}, {"d1", "a2"}});
}

// Seventeen elements with four strands.
inline Poset big() {
  return make({"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "e",
               "d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8"},
              {{"d5", "d3"}, {"d3", "d1"}, {"d1", "a1"}, {"a1", "e"}, {"e", "b1"},
               {"d6", "d4"}, {"d4", "d2"}, {"d2", "a2"}, {"a2", "b2"},
               {"d7", "a3"}, {"a3", "b3"}, {"d8", "a4"}, {"a4", "b4"},
               {"d5", "d4"}, {"d3", "d2"}, {"d2", "a3"}, {"a1", "b4"}, {"d6", "d3"}, {"d4", "d1"},
               {"a2", "b1"}, {"d7", "a2"}, {"a3", "b2"}, {"d7", "a4"}, {"d8", "a3"}, {"a4", "b3"}});
}

}  // namespace fx
