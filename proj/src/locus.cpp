#include "posetgor/locus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "posetgor/error.hpp"
#include "posetgor/trace.hpp"

namespace posetgor {

namespace {

void require_mask_width(const Poset& p) {
  if (p.size() > 63)
    throw Error(ErrorKind::OutOfRange, "vertex enumeration supports at most 63 elements");
}

std::uint64_t mask_of(const Chain& c) {
  std::uint64_t m = 0;
  for (Index x : c) m |= std::uint64_t{1} << x;
  return m;
}

// Longest chain below (height) or above (coheight) each element.
std::vector<int> heights(const Poset& p) {
  std::vector<int> h(p.size(), 0);
  for (Index x : p.linear_extension())
    for (Index z : p.lower_covers(x)) h[x] = std::max(h[x], h[z] + 1);
  return h;
}

std::vector<int> coheights(const Poset& p) {
  std::vector<int> h(p.size(), 0);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Index y : p.upper_covers(*it)) h[*it] = std::max(h[*it], h[y] + 1);
  return h;
}

void settle(std::vector<PrimeLabel>& labels, bool prune) {
  std::vector<PrimeLabel> unique;
  std::map<std::vector<std::uint64_t>, bool> seen;
  for (auto& l : labels)
    if (seen.emplace(l.vertices, true).second) unique.push_back(std::move(l));
  for (auto& l : unique) {
    l.minimal = true;
    for (const auto& other : unique) {
      if (other.vertices.size() <= l.vertices.size()) continue;
      if (std::includes(other.vertices.begin(), other.vertices.end(), l.vertices.begin(),
                        l.vertices.end())) {
        l.minimal = false;
        break;
      }
    }
  }
  if (prune)
    std::erase_if(unique, [](const PrimeLabel& l) { return !l.minimal; });
  labels = std::move(unique);
}

}  // namespace

std::vector<std::uint64_t> antichain_masks(const Poset& p) {
  require_mask_width(p);
  const std::size_t n = p.size();
  std::vector<std::uint64_t> comparable(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (p.comparable(x, y)) comparable[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> out;
  auto dfs = [&](auto&& self, Index from, std::uint64_t cur, std::uint64_t blocked) -> void {
    out.push_back(cur);
    for (Index x = from; x < n; ++x)
      if (!(blocked >> x & 1)) self(self, x + 1, cur | std::uint64_t{1} << x, blocked | comparable[x]);
  };
  dfs(dfs, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> ideal_masks(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> down(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (p.leq(y, x)) down[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : antichain_masks(p)) {
    std::uint64_t ideal = 0;
    for (Index x = 0; x < n; ++x)
      if (a >> x & 1) ideal |= down[x];
    out.push_back(ideal);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Row echelon form over the integers, each row kept primitive by its gcd.
int affine_dimension(const std::vector<std::uint64_t>& masks, std::size_t n) {
  if (masks.empty()) return -1;
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<std::size_t> pivots;
  const std::uint64_t base = masks.front();
  for (std::size_t k = 1; k < masks.size(); ++k) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<std::int64_t>(masks[k] >> i & 1) - static_cast<std::int64_t>(base >> i & 1);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const std::size_t pc = pivots[r];
      if (v[pc] == 0) continue;
      const std::int64_t f = basis[r][pc], g = v[pc];
      std::int64_t common = 0;
      for (std::size_t i = 0; i < n; ++i) {
        __int128 w = static_cast<__int128>(v[i]) * f - static_cast<__int128>(basis[r][i]) * g;
        if (w > INT64_MAX || w < INT64_MIN)
          throw Error(ErrorKind::InternalInvariant, "affine rank overflow");
        v[i] = static_cast<std::int64_t>(w);
        common = std::gcd(common, v[i]);
      }
      if (common > 1)
        for (auto& e : v) e /= common;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](std::int64_t e) { return e != 0; });
    if (nz == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
    basis.push_back(std::move(v));
    if (basis.size() == n) break;
  }
  return static_cast<int>(basis.size());
}

std::vector<StarSequence> enumerate_star_sequences(const Poset& p) {
  return star_sequences(extend(p, ExtendMode::Both));
}

int order_coheight(const Poset& pm, const StarSequence& s) {
  return static_cast<int>(pm.plain_count()) - static_cast<int>(m_set(pm, s).size()) + 2;
}

int order_face_dim_formula(const Poset& pm, const StarSequence& s) {
  return order_coheight(pm, s) - 1;
}

std::vector<std::uint64_t> order_face_vertices(const Poset& pm, const StarSequence& s,
                                               const std::vector<std::uint64_t>& ideals) {
  auto value = [&](std::uint64_t ideal, Index x) -> int {
    switch (pm.kind(x)) {
      case ElementKind::Bottom: return 1;
      case ElementKind::Top: return 0;
      case ElementKind::Plain: return static_cast<int>(ideal >> x & 1);
    }
    return 0;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t ideal : ideals) {
    const int v = value(ideal, s.a.front());
    bool constant = true;
    for (Index x : s.a) constant = constant && value(ideal, x) == v;
    for (Index x : s.b) constant = constant && value(ideal, x) == v;
    if (constant) out.push_back(ideal);
  }
  return out;
}

int chain_star_face_dim_formula(const Poset& p, const Chain& c) {
  return static_cast<int>(p.size()) - static_cast<int>(link(p, c).size()) - 1;
}

std::vector<std::uint64_t> chain_star_face_vertices(const Chain& c,
                                                    const std::vector<std::uint64_t>& antichains) {
  const std::uint64_t cm = mask_of(c);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : antichains)
    if (a & cm) out.push_back(a);
  return out;
}

std::vector<std::uint64_t> chain_cycle_face_vertices(const ChainTuple& t,
                                                     const std::vector<std::uint64_t>& antichains) {
  std::vector<std::uint64_t> masks;
  for (const auto& c : t.lower) masks.push_back(mask_of(c));
  for (const auto& c : t.upper) masks.push_back(mask_of(c));
  const int u = static_cast<int>(t.lower.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : antichains) {
    int total = 0;
    for (std::uint64_t m : masks) total += std::popcount(a & m);
    if (total == u) out.push_back(a);
  }
  return out;
}

ChainTuple realize_chain_tuple(const Poset& p, const StarSequence& s) {
  if (s.length() < 2)
    throw Error(ErrorKind::PreconditionViolated, "realization needs a sequence of length at least 2");
  for (Index x : s.a)
    if (x >= p.size() || p.kind(x) != ElementKind::Plain)
      throw Error(ErrorKind::PreconditionViolated, "sequence must lie in P");
  for (Index x : s.b)
    if (x >= p.size() || p.kind(x) != ElementKind::Plain)
      throw Error(ErrorKind::PreconditionViolated, "sequence must lie in P");
  if (!satisfies_star(p, s)) throw Error(ErrorKind::PreconditionViolated, "sequence is not a star sequence");

  const auto ht = heights(p);
  const auto coht = coheights(p);
  std::vector<Index> d1, d2;
  for (Index x = 0; x < p.size(); ++x) {
    if (std::any_of(s.a.begin(), s.a.end(), [&](Index a) { return p.less(x, a); })) d1.push_back(x);
    if (std::any_of(s.b.begin(), s.b.end(), [&](Index b) { return p.less(b, x); })) d2.push_back(x);
  }
  std::stable_sort(d1.begin(), d1.end(), [&](Index x, Index y) { return ht[x] > ht[y]; });
  std::stable_sort(d2.begin(), d2.end(), [&](Index x, Index y) { return coht[x] > coht[y]; });

  ChainTuple t;
  for (Index a : s.a) {
    Chain c{a};
    while (ht[c.back()] > 0) {
      auto it = std::find_if(d1.begin(), d1.end(), [&](Index d) { return p.less(d, c.back()); });
      c.push_back(*it);
    }
    std::reverse(c.begin(), c.end());
    t.lower.push_back(std::move(c));
  }
  for (Index b : s.b) {
    Chain c{b};
    while (coht[c.back()] > 0) {
      auto it = std::find_if(d2.begin(), d2.end(), [&](Index d) { return p.less(c.back(), d); });
      c.push_back(*it);
    }
    t.upper.push_back(std::move(c));
  }
  return t;
}

int face_dimension(const Poset& p, const PrimeLabel& label) {
  switch (label.kind) {
    case PrimeLabel::Kind::OrderCycle: {
      const Poset pm = extend(p, ExtendMode::Both);
      return affine_dimension(order_face_vertices(pm, label.sequence, ideal_masks(p)), p.size());
    }
    case PrimeLabel::Kind::ChainStar:
      return affine_dimension(chain_star_face_vertices(label.chain, antichain_masks(p)), p.size());
    case PrimeLabel::Kind::ChainCycle:
      return affine_dimension(chain_cycle_face_vertices(label.tuple, antichain_masks(p)), p.size());
  }
  return -1;
}

int order_locus_dimension(const Poset& p) {
  const Poset pm = extend(p, ExtendMode::Both);
  int best = -1;
  for (const auto& s : star_sequences(pm)) best = std::max(best, order_coheight(pm, s));
  return best;
}

int chain_locus_dimension(const Poset& p) {
  const ChainCriterion crit(p);
  int best = -1;
  for (const auto& c : crit.nonpure_star_chains())
    best = std::max(best, chain_star_face_dim_formula(p, c) + 1);
  std::vector<std::uint64_t> antichains;
  for (const auto& s : crit.cycles()) {
    if (s.length() < 2) continue;
    if (antichains.empty()) antichains = antichain_masks(p);
    const ChainTuple t = realize_chain_tuple(p, s);
    best = std::max(best, affine_dimension(chain_cycle_face_vertices(t, antichains), p.size()) + 1);
  }
  return best;
}

std::vector<PrimeLabel> order_radical_decomposition(const Poset& p, bool prune) {
  const Poset pm = extend(p, ExtendMode::Both);
  const auto ideals = ideal_masks(p);
  std::vector<PrimeLabel> labels;
  for (const auto& s : star_sequences(pm)) {
    PrimeLabel l;
    l.kind = PrimeLabel::Kind::OrderCycle;
    l.sequence = s;
    l.coheight = order_coheight(pm, s);
    l.vertices = order_face_vertices(pm, s, ideals);
    l.face_dim = affine_dimension(l.vertices, p.size());
    labels.push_back(std::move(l));
  }
  settle(labels, prune);
  return labels;
}

std::vector<PrimeLabel> chain_radical_decomposition(const Poset& p, bool prune) {
  const ChainCriterion crit(p);
  const auto antichains = antichain_masks(p);
  std::vector<PrimeLabel> labels;
  for (const auto& c : crit.nonpure_star_chains()) {
    PrimeLabel l;
    l.kind = PrimeLabel::Kind::ChainStar;
    l.chain = c;
    l.coheight = chain_star_face_dim_formula(p, c) + 1;
    l.vertices = chain_star_face_vertices(c, antichains);
    l.face_dim = affine_dimension(l.vertices, p.size());
    labels.push_back(std::move(l));
  }
  for (const auto& s : crit.cycles()) {
    if (s.length() < 2) continue;
    PrimeLabel l;
    l.kind = PrimeLabel::Kind::ChainCycle;
    l.sequence = s;
    l.tuple = realize_chain_tuple(p, s);
    l.vertices = chain_cycle_face_vertices(l.tuple, antichains);
    l.face_dim = affine_dimension(l.vertices, p.size());
    l.coheight = l.face_dim + 1;
    labels.push_back(std::move(l));
  }
  settle(labels, prune);
  return labels;
}

Poset generate_poset(int n, int m) {
  if (m < 0 || m > n - 4)
    throw Error(ErrorKind::OutOfRange,
                "need 0 <= m <= n - 4, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  const int len = n - m - 2;
  for (int i = 1; i <= len; ++i) {
    elements.push_back("p" + std::to_string(i));
    if (i > 1) covers.emplace_back("p" + std::to_string(i - 1), "p" + std::to_string(i));
  }
  elements.emplace_back("q");
  for (int i = 1; i <= m; ++i) {
    elements.push_back("c" + std::to_string(i));
    if (i > 1) covers.emplace_back("c" + std::to_string(i - 1), "c" + std::to_string(i));
  }
  if (m > 0) {
    covers.emplace_back("p" + std::to_string(len), "c1");
    covers.emplace_back("q", "c1");
  }
  return build_poset(std::move(elements), covers).poset;
}

}  // namespace posetgor
