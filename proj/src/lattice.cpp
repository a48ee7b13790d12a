#include "posetgor/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "posetgor/error.hpp"

namespace posetgor {

std::int64_t sum_over(const LatticePoint& pt, std::span<const Index> elements) {
  std::int64_t s = 0;
  for (Index x : elements) {
    if (x >= pt.values.size())
      throw Error(ErrorKind::UnknownElement, "index " + std::to_string(x) + " outside point");
    s += pt.values[x];
  }
  return s;
}

void check_domain(const Poset& p, const LatticePoint& pt) {
  if (pt.values.size() != p.size())
    throw Error(ErrorKind::DomainMismatch, "point has " + std::to_string(pt.values.size()) +
                                               " values for a poset of " + std::to_string(p.size()));
}

bool in_T(const Poset& p, const LatticePoint& pt, std::int64_t n) {
  check_domain(p, pt);
  if (p.empty()) return pt.degree >= n;
  for (Index x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).empty() && pt.degree - pt.values[x] < n) return false;
    if (p.upper_covers(x).empty() && pt.values[x] < n) return false;
    for (Index y : p.upper_covers(x))
      if (pt.values[x] - pt.values[y] < n) return false;
  }
  return true;
}

std::vector<std::int64_t> max_sum_ending_at(const Poset& p, std::span<const std::int64_t> values) {
  std::vector<std::int64_t> best(p.size(), 0);
  for (Index x : p.linear_extension()) {
    std::int64_t below = 0;
    bool first = true;
    for (Index z : p.lower_covers(x)) {
      below = first ? best[z] : std::max(below, best[z]);
      first = false;
    }
    best[x] = below + values[x];
  }
  return best;
}

std::vector<std::int64_t> max_sum_starting_at(const Poset& p, std::span<const std::int64_t> values) {
  std::vector<std::int64_t> best(p.size(), 0);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Index x = *it;
    std::int64_t above = 0;
    bool first = true;
    for (Index y : p.upper_covers(x)) {
      above = first ? best[y] : std::max(above, best[y]);
      first = false;
    }
    best[x] = above + values[x];
  }
  return best;
}

// Values may be negative (points of S^(-1)), so the DP runs over maximal
// chains only: every path starts at a minimal and ends at a maximal element.
std::int64_t max_chain_sum(const Poset& p, std::span<const std::int64_t> values) {
  if (p.empty()) return 0;
  auto best = max_sum_ending_at(p, values);
  std::int64_t m = std::numeric_limits<std::int64_t>::min();
  for (Index x : p.maximal_elements()) m = std::max(m, best[x]);
  return m;
}

bool in_S(const Poset& p, const LatticePoint& pt, std::int64_t n) {
  check_domain(p, pt);
  for (auto v : pt.values)
    if (v < n) return false;
  return pt.degree >= max_chain_sum(p, pt.values) + n;
}

bool in_S_explicit(const Poset& p, const LatticePoint& pt, std::int64_t n) {
  check_domain(p, pt);
  for (auto v : pt.values)
    if (v < n) return false;
  for (const auto& c : maximal_chains(p))
    if (pt.degree < sum_over(pt, c) + n) return false;
  return true;
}

std::vector<Chain> level_chains(const Poset& p, const LatticePoint& pt, std::int64_t n) {
  check_domain(p, pt);
  std::vector<Chain> out;
  for (auto& c : maximal_chains(p))
    if (sum_over(pt, c) == n) out.push_back(std::move(c));
  return out;
}

ExtendedCR extended_cr(const Poset& p) {
  ExtendedCR e;
  e.pm = extend(p, ExtendMode::Both);
  e.cr = covering_relation_poset(e.pm);
  return e;
}

std::int64_t extended_value(const ExtendedCR& ecr, const LatticePoint& nu, Index x) {
  switch (ecr.pm.kind(x)) {
    case ElementKind::Bottom: return nu.degree;
    case ElementKind::Top: return 0;
    case ElementKind::Plain: return nu.values[x];
  }
  return 0;
}

CRPoint phi(const ExtendedCR& ecr, const LatticePoint& nu) {
  if (nu.values.size() != ecr.pm.plain_count())
    throw Error(ErrorKind::DomainMismatch, "point does not match the poset");
  CRPoint out;
  out.degree = nu.degree;
  for (const auto& [x, y] : ecr.cr.covers)
    out.values.push_back(extended_value(ecr, nu, x) - extended_value(ecr, nu, y));
  return out;
}

LatticePoint psi(const ExtendedCR& ecr, const CRPoint& xi) {
  const Poset& pm = ecr.pm;
  if (xi.values.size() != ecr.cr.covers.size())
    throw Error(ErrorKind::DomainMismatch, "CR point has the wrong number of values");
  const std::size_t n = pm.size();
  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> pot(n, kUnset);
  const Index top = *pm.top();
  pot[top] = 0;
  // Potentials from the top down; every cover must agree.
  const auto& order = pm.linear_extension();
  std::vector<std::int64_t> cover_value(n * n, 0);
  for (std::size_t i = 0; i < ecr.cr.covers.size(); ++i) {
    const auto& [x, y] = ecr.cr.covers[i];
    cover_value[x * n + y] = xi.values[i];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Index x = *it;
    for (Index y : pm.upper_covers(x)) {
      std::int64_t v = cover_value[x * n + y] + pot[y];
      if (pot[x] == kUnset)
        pot[x] = v;
      else if (pot[x] != v)
        throw Error(ErrorKind::NotInG, "saturated chains through " + pm.display(x) + " disagree");
    }
  }
  const Index bottom = *pm.bottom();
  if (pot[bottom] != xi.degree)
    throw Error(ErrorKind::NotInG, "chain sum " + std::to_string(pot[bottom]) +
                                       " differs from degree " + std::to_string(xi.degree));
  LatticePoint out;
  out.degree = xi.degree;
  for (Index x = 0; x < n; ++x)
    if (pm.kind(x) == ElementKind::Plain) out.values.push_back(pot[x]);
  return out;
}

void for_each_point(const Poset& p, Ring ring, std::int64_t d,
                    const std::function<void(const LatticePoint&)>& visit) {
  if (d < 0) return;
  LatticePoint pt{d, std::vector<std::int64_t>(p.size(), 0)};
  const auto& order = p.linear_extension();
  // Running max chain sum ending at each element, chain side only.
  std::vector<std::int64_t> best(p.size(), 0);

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      visit(pt);
      return;
    }
    Index x = order[i];
    if (ring == Ring::Order) {
      std::int64_t hi = d;
      for (Index z : p.lower_covers(x)) hi = std::min(hi, pt.values[z]);
      for (std::int64_t v = 0; v <= hi; ++v) {
        pt.values[x] = v;
        self(self, i + 1);
      }
    } else {
      std::int64_t below = 0;
      for (Index z : p.lower_covers(x)) below = std::max(below, best[z]);
      for (std::int64_t v = 0; below + v <= d; ++v) {
        pt.values[x] = v;
        best[x] = below + v;
        self(self, i + 1);
      }
    }
    pt.values[x] = 0;
  };
  dfs(dfs, 0);
}

std::uint64_t count_points(const Poset& p, Ring ring, std::int64_t d) {
  std::uint64_t c = 0;
  for_each_point(p, ring, d, [&](const LatticePoint&) { ++c; });
  return c;
}

}  // namespace posetgor
