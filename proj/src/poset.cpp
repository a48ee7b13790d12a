#include "posetgor/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "posetgor/error.hpp"

namespace posetgor {

namespace {

constexpr int kUnreachable = -1;

const char* sentinel_name(ElementKind k) {
  return k == ElementKind::Bottom ? "-inf" : "inf";
}

}  // namespace

std::string ExtendedElement::display() const {
  return kind == ElementKind::Plain ? id : std::string(sentinel_name(kind));
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<ElementKind> kinds,
                           std::vector<char> less) {
  Poset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.kinds_ = std::move(kinds);
  p.less_ = std::move(less);
  p.up_.assign(n, {});
  p.down_.assign(n, {});

  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (Index z = 0; z < n && cover; ++z)
        if (p.less(x, z) && p.less(z, y)) cover = false;
      if (cover) {
        p.up_[x].push_back(y);
        p.down_[y].push_back(x);
      }
    }
  }

  // Kahn's algorithm, smallest index first.
  std::vector<std::size_t> indeg(n);
  for (Index y = 0; y < n; ++y) indeg[y] = p.down_[y].size();
  std::priority_queue<Index, std::vector<Index>, std::greater<>> ready;
  for (Index x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  while (!ready.empty()) {
    Index x = ready.top();
    ready.pop();
    p.topo_.push_back(x);
    for (Index y : p.up_[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (p.topo_.size() != n) throw Error(ErrorKind::CycleDetected, "relation is not acyclic");

  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[p.topo_[i]] = i;

  p.rank_.assign(n * n, kUnreachable);
  p.dist_.assign(n * n, kUnreachable);
  for (Index x = 0; x < n; ++x) {
    int* r = &p.rank_[x * n];
    int* d = &p.dist_[x * n];
    r[x] = d[x] = 0;
    for (std::size_t i = pos[x] + 1; i < n; ++i) {
      Index y = p.topo_[i];
      if (!p.less(x, y)) continue;
      int best = kUnreachable;
      int shortest = std::numeric_limits<int>::max();
      for (Index z : p.down_[y]) {
        if (r[z] == kUnreachable) continue;
        best = std::max(best, r[z] + 1);
        shortest = std::min(shortest, d[z] + 1);
      }
      r[y] = best;
      d[y] = shortest;
    }
  }
  return p;
}

std::string Poset::display(Index i) const {
  return kinds_[i] == ElementKind::Plain ? names_[i] : std::string(sentinel_name(kinds_[i]));
}

ExtendedElement Poset::element(Index i) const {
  if (kinds_[i] == ElementKind::Plain) return ExtendedElement::plain(names_[i]);
  return {kinds_[i], {}};
}

std::size_t Poset::plain_count() const {
  return static_cast<std::size_t>(
      std::count(kinds_.begin(), kinds_.end(), ElementKind::Plain));
}

std::optional<Index> Poset::bottom() const {
  for (Index i = 0; i < size(); ++i)
    if (kinds_[i] == ElementKind::Bottom) return i;
  return std::nullopt;
}

std::optional<Index> Poset::top() const {
  for (Index i = 0; i < size(); ++i)
    if (kinds_[i] == ElementKind::Top) return i;
  return std::nullopt;
}

std::optional<Index> Poset::find(std::string_view id) const {
  for (Index i = 0; i < size(); ++i)
    if (kinds_[i] == ElementKind::Plain && names_[i] == id) return i;
  return std::nullopt;
}

std::optional<Index> Poset::find(const ExtendedElement& e) const {
  switch (e.kind) {
    case ElementKind::Bottom: return bottom();
    case ElementKind::Top: return top();
    case ElementKind::Plain: return find(e.id);
  }
  return std::nullopt;
}

Index Poset::index_of(const ExtendedElement& e) const {
  auto i = find(e);
  if (!i) throw Error(ErrorKind::UnknownElement, "no element '" + e.display() + "'");
  return *i;
}

Index Poset::index_of(std::string_view id) const {
  return index_of(ExtendedElement::plain(std::string(id)));
}

bool Poset::covers(Index x, Index y) const {
  const auto& u = up_[x];
  return std::binary_search(u.begin(), u.end(), y);
}

std::vector<std::pair<Index, Index>> Poset::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < size(); ++x)
    for (Index y : up_[x]) out.emplace_back(x, y);
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size();
  return c;
}

std::vector<Index> Poset::minimal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Index> Poset::maximal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

int Poset::rank(Index x, Index y) const {
  int r = rank_[x * size() + y];
  if (r == kUnreachable)
    throw Error(ErrorKind::NotComparable, display(x) + " is not below " + display(y));
  return r;
}

int Poset::dist(Index x, Index y) const {
  int d = dist_[x * size() + y];
  if (d == kUnreachable)
    throw Error(ErrorKind::NotComparable, display(x) + " is not below " + display(y));
  return d;
}

int Poset::rank() const {
  int best = -1;
  for (Index x : minimal_elements())
    for (Index y = 0; y < size(); ++y)
      best = std::max(best, rank_[x * size() + y]);
  return best;
}

BuildResult build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, Index> where;
  for (Index i = 0; i < n; ++i) {
    if (!where.emplace(elements[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }

  auto lookup = [&](const std::string& id) {
    auto it = where.find(id);
    if (it == where.end())
      throw Error(ErrorKind::UnknownElementInCover, "cover mentions unknown element '" + id + "'");
    return it->second;
  };

  std::vector<std::vector<Index>> adj(n);
  std::vector<std::pair<Index, Index>> edges;
  for (const auto& [a, b] : covers) {
    Index x = lookup(a), y = lookup(b);
    if (x == y) throw Error(ErrorKind::CycleDetected, "self-loop on '" + a + "'");
    edges.emplace_back(x, y);
    adj[x].push_back(y);
  }

  // Reachability by DFS from each node; a path back to the start is a cycle.
  std::vector<char> less(n * n, 0);
  for (Index s = 0; s < n; ++s) {
    std::vector<Index> stack(adj[s].begin(), adj[s].end());
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      if (v == s)
        throw Error(ErrorKind::CycleDetected, "cover relation has a cycle through '" + elements[s] + "'");
      if (less[s * n + v]) continue;
      less[s * n + v] = 1;
      for (Index w : adj[v]) stack.push_back(w);
    }
  }

  BuildResult out;
  std::vector<char> seen(n * n, 0);
  for (const auto& [x, y] : edges) {
    bool implied = false;
    for (Index z = 0; z < n && !implied; ++z)
      if (less[x * n + z] && less[z * n + y]) implied = true;
    if (implied || seen[x * n + y]) out.reduced_covers.emplace_back(elements[x], elements[y]);
    seen[x * n + y] = 1;
  }
  std::vector<ElementKind> kinds(n, ElementKind::Plain);
  out.poset = Poset::from_relation(std::move(elements), std::move(kinds), std::move(less));
  return out;
}

Poset extend(const Poset& p, ExtendMode mode) {
  const std::size_t n = p.size();
  const bool add_bottom = mode != ExtendMode::Plus && !p.bottom();
  const bool add_top = mode != ExtendMode::Minus && !p.top();

  std::vector<std::string> names;
  std::vector<ElementKind> kinds;
  for (Index i = 0; i < n; ++i) {
    names.push_back(p.name(i));
    kinds.push_back(p.kind(i));
  }
  if (add_bottom) {
    names.emplace_back("-inf");
    kinds.push_back(ElementKind::Bottom);
  }
  if (add_top) {
    names.emplace_back("inf");
    kinds.push_back(ElementKind::Top);
  }
  const std::size_t m = names.size();

  std::vector<char> less(m * m, 0);
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      if (x == y) continue;
      if (x < n && y < n)
        less[x * m + y] = p.less(x, y) ? 1 : 0;
      else if ((x >= n && kinds[x] == ElementKind::Bottom) || (y >= n && kinds[y] == ElementKind::Top))
        less[x * m + y] = 1;
    }
  }
  return Poset::from_relation(std::move(names), std::move(kinds), std::move(less));
}

namespace {

// Sentinels are always available, whether or not p already carries them.
bool needs_sentinels(const Poset& p, const ExtendedElement& x, const ExtendedElement& y) {
  return !p.find(x) || !p.find(y);
}

}  // namespace

int interval_rank(const Poset& p, const ExtendedElement& x, const ExtendedElement& y) {
  if (needs_sentinels(p, x, y) && (x.kind != ElementKind::Plain || y.kind != ElementKind::Plain)) {
    const Poset pm = extend(p, ExtendMode::Both);
    return pm.rank(pm.index_of(x), pm.index_of(y));
  }
  return p.rank(p.index_of(x), p.index_of(y));
}

int interval_dist(const Poset& p, const ExtendedElement& x, const ExtendedElement& y) {
  if (needs_sentinels(p, x, y) && (x.kind != ElementKind::Plain || y.kind != ElementKind::Plain)) {
    const Poset pm = extend(p, ExtendMode::Both);
    return pm.dist(pm.index_of(x), pm.index_of(y));
  }
  return p.dist(p.index_of(x), p.index_of(y));
}

bool is_chain(const Poset& p, std::span<const Index> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j] || !p.comparable(elements[i], elements[j])) return false;
  return true;
}

Chain as_chain(const Poset& p, std::vector<Index> elements) {
  if (!is_chain(p, elements)) throw Error(ErrorKind::NotAChain, "elements are not totally ordered");
  std::sort(elements.begin(), elements.end(), [&](Index a, Index b) { return p.less(a, b); });
  return elements;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  if (p.empty()) {
    out.emplace_back();
    return out;
  }
  Chain cur;
  auto dfs = [&](auto&& self, Index x) -> void {
    cur.push_back(x);
    if (p.upper_covers(x).empty()) out.push_back(cur);
    for (Index y : p.upper_covers(x)) self(self, y);
    cur.pop_back();
  };
  for (Index x : p.minimal_elements()) dfs(dfs, x);
  return out;
}

void for_each_chain(const Poset& p, const std::function<void(const Chain&)>& visit) {
  Chain cur;
  auto dfs = [&](auto&& self) -> void {
    visit(cur);
    for (Index y = 0; y < p.size(); ++y) {
      if (!cur.empty() && !p.less(cur.back(), y)) continue;
      cur.push_back(y);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
}

std::vector<Chain> all_chains(const Poset& p) {
  std::vector<Chain> out;
  for_each_chain(p, [&](const Chain& c) { out.push_back(c); });
  return out;
}

std::vector<Index> star(const Poset& p, const Chain& c) {
  if (!is_chain(p, c)) throw Error(ErrorKind::NotAChain, "star of a non-chain");
  std::vector<Index> out;
  for (Index x = 0; x < p.size(); ++x) {
    bool ok = true;
    for (Index z : c)
      if (!p.comparable(x, z)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Index> link(const Poset& p, const Chain& c) {
  std::vector<Index> s = star(p, c);
  std::vector<Index> out;
  for (Index x : s)
    if (std::find(c.begin(), c.end(), x) == c.end()) out.push_back(x);
  return out;
}

bool is_pure_subset(const Poset& p, std::span<const Index> subset) {
  const std::size_t k = subset.size();
  if (k == 0) return true;
  // Covers of the induced order.
  std::vector<std::vector<std::size_t>> up(k);
  std::vector<char> has_down(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!p.less(subset[i], subset[j])) continue;
      bool cover = true;
      for (std::size_t l = 0; l < k && cover; ++l)
        if (p.less(subset[i], subset[l]) && p.less(subset[l], subset[j])) cover = false;
      if (cover) {
        up[i].push_back(j);
        has_down[j] = 1;
      }
    }
  }
  // Longest and shortest path to a sink, memoised.
  std::vector<int> lo(k, -1), hi(k, -1);
  auto solve = [&](auto&& self, std::size_t i) -> void {
    if (hi[i] >= 0) return;
    if (up[i].empty()) {
      lo[i] = hi[i] = 0;
      return;
    }
    int a = std::numeric_limits<int>::max(), b = 0;
    for (std::size_t j : up[i]) {
      self(self, j);
      a = std::min(a, lo[j] + 1);
      b = std::max(b, hi[j] + 1);
    }
    lo[i] = a;
    hi[i] = b;
  };
  int common = -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (has_down[i]) continue;
    solve(solve, i);
    if (lo[i] != hi[i]) return false;
    if (common < 0) common = hi[i];
    if (common != hi[i]) return false;
  }
  return true;
}

bool is_pure(const Poset& p) {
  std::vector<Index> all(p.size());
  std::iota(all.begin(), all.end(), Index{0});
  return is_pure_subset(p, all);
}

Poset induced_subposet(const Poset& p, std::span<const Index> subset) {
  const std::size_t k = subset.size();
  std::vector<std::string> names;
  std::vector<ElementKind> kinds;
  std::vector<char> less(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(p.name(subset[i]));
    kinds.push_back(p.kind(subset[i]));
    for (std::size_t j = 0; j < k; ++j) less[i * k + j] = p.less(subset[i], subset[j]) ? 1 : 0;
  }
  return Poset::from_relation(std::move(names), std::move(kinds), std::move(less));
}

CoveringRelationPoset covering_relation_poset(const Poset& p) {
  CoveringRelationPoset out;
  out.covers = p.cover_pairs();
  if (out.covers.empty()) throw Error(ErrorKind::IsAntichain, "poset has no covers");
  const std::size_t k = out.covers.size();
  std::vector<std::string> names;
  std::vector<ElementKind> kinds(k, ElementKind::Plain);
  std::vector<char> less(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [x1, y1] = out.covers[i];
    names.push_back("(" + p.display(x1) + "," + p.display(y1) + ")");
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.leq(y1, out.covers[j].first)) less[i * k + j] = 1;
  }
  out.poset = Poset::from_relation(std::move(names), std::move(kinds), std::move(less));
  return out;
}

Poset contract(const Poset& p, std::span<const Index> m) {
  const std::size_t n = p.size();
  std::vector<char> in_m(n, 0);
  for (Index x : m) in_m[x] = 1;
  std::vector<Index> rest;
  for (Index x = 0; x < n; ++x)
    if (!in_m[x]) rest.push_back(x);

  // below_m[x]: x < some element of M; above_m[x]: some element of M < x.
  std::vector<char> below_m(n, 0), above_m(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index z : m) {
      if (p.less(x, z)) below_m[x] = 1;
      if (p.less(z, x)) above_m[x] = 1;
    }

  const std::size_t k = rest.size() + 1;
  const std::size_t star_at = rest.size();
  std::vector<std::string> names;
  std::vector<ElementKind> kinds;
  for (Index x : rest) {
    names.push_back(p.name(x));
    kinds.push_back(p.kind(x));
  }
  names.emplace_back("*");
  kinds.push_back(ElementKind::Plain);

  std::vector<char> less(k * k, 0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Index a = rest[i];
    for (std::size_t j = 0; j < rest.size(); ++j) {
      Index b = rest[j];
      if (p.less(a, b) || (below_m[a] && above_m[b])) less[i * k + j] = 1;
    }
    if (below_m[a]) less[i * k + star_at] = 1;
    if (above_m[a]) less[star_at * k + i] = 1;
  }
  return Poset::from_relation(std::move(names), std::move(kinds), std::move(less));
}

namespace {

int star_slack(const Poset& q, const StarSequence& s) {
  const std::size_t u = s.a.size();
  int lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < u; ++i) {
    lhs += q.rank(s.a[i], s.b[i]);
    rhs += q.dist(s.a[(i + 1) % u], s.b[i]);
  }
  return lhs - rhs;
}

}  // namespace

bool satisfies_star(const Poset& q, const StarSequence& s) {
  const std::size_t u = s.a.size();
  if (u == 0 || s.b.size() != u) return false;
  for (std::size_t i = 0; i < u; ++i) {
    if (!q.less(s.a[i], s.b[i]) || !q.less(s.a[(i + 1) % u], s.b[i])) return false;
    for (std::size_t j = i + 1; j < u; ++j)
      if (q.comparable(s.a[i], s.a[j]) || q.comparable(s.b[i], s.b[j])) return false;
  }
  return star_slack(q, s) > 0;
}

std::vector<StarSequence> star_sequences(const Poset& q, std::size_t max_length) {
  std::vector<StarSequence> out;
  StarSequence cur;
  const std::size_t n = q.size();

  auto free_of = [&](const std::vector<Index>& xs, Index y) {
    for (Index x : xs)
      if (q.comparable(x, y)) return false;
    return true;
  };

  // cur holds a_1..a_k and b_1..b_{k-1}; pick b_k, maybe close, then extend.
  auto grow = [&](auto&& self) -> void {
    const Index ak = cur.a.back();
    for (Index bk = 0; bk < n; ++bk) {
      if (!q.less(ak, bk) || !free_of(cur.b, bk)) continue;
      cur.b.push_back(bk);
      if (q.less(cur.a.front(), bk) && star_slack(q, cur) > 0) out.push_back(cur);
      if (max_length == 0 || cur.a.size() < max_length) {
        for (Index next = cur.a.front() + 1; next < n; ++next) {
          if (!q.less(next, bk) || !free_of(cur.a, next)) continue;
          cur.a.push_back(next);
          self(self);
          cur.a.pop_back();
        }
      }
      cur.b.pop_back();
    }
  };

  for (Index a1 = 0; a1 < n; ++a1) {
    cur.a = {a1};
    cur.b.clear();
    grow(grow);
  }
  return out;
}

std::vector<Index> m_set(const Poset& q, const StarSequence& s) {
  std::vector<Index> out;
  for (Index x = 0; x < q.size(); ++x) {
    bool above = false, below = false;
    for (Index a : s.a) above = above || q.leq(a, x);
    for (Index b : s.b) below = below || q.leq(x, b);
    if (above && below) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Index>> connected_component_sets(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto root = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [x, y] : p.cover_pairs()) {
    Index a = root(x), b = root(y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> slot(n, n);
  for (Index x = 0; x < n; ++x) {
    Index r = root(x);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

std::vector<Poset> connected_components(const Poset& p) {
  std::vector<Poset> out;
  for (const auto& s : connected_component_sets(p)) out.push_back(induced_subposet(p, s));
  return out;
}

std::vector<std::vector<Index>> antichains(const Poset& p) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  auto dfs = [&](auto&& self, Index from) -> void {
    out.push_back(cur);
    for (Index x = from; x < p.size(); ++x) {
      bool free = true;
      for (Index y : cur)
        if (p.comparable(x, y)) {
          free = false;
          break;
        }
      if (!free) continue;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<std::vector<Index>> poset_ideals(const Poset& p) {
  std::vector<std::vector<Index>> out;
  for (const auto& a : antichains(p)) {
    std::vector<Index> ideal;
    for (Index x = 0; x < p.size(); ++x)
      for (Index y : a)
        if (p.leq(x, y)) {
          ideal.push_back(x);
          break;
        }
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace posetgor
