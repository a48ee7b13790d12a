#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetgor {

using Index = std::size_t;

// A chain is stored as element indices in strictly increasing order of the
// host poset.
using Chain = std::vector<Index>;

enum class ElementKind : std::uint8_t { Plain, Bottom, Top };

// An element of P, or one of the sentinels -inf / inf of P^-, P^+, P^pm.
struct ExtendedElement {
  ElementKind kind = ElementKind::Plain;
  std::string id;

  static ExtendedElement bottom() { return {ElementKind::Bottom, {}}; }
  static ExtendedElement top() { return {ElementKind::Top, {}}; }
  static ExtendedElement plain(std::string id) { return {ElementKind::Plain, std::move(id)}; }

  std::string display() const;

  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

// Finite poset held as its Hasse diagram plus the full strict order and
// all-pairs longest/shortest saturated chain lengths. Immutable after
// construction.
class Poset {
public:
  Poset() = default;

  // `less` is the strict order as an n*n row-major matrix; it must already be
  // transitively closed and irreflexive. Covers are derived.
  static Poset from_relation(std::vector<std::string> names, std::vector<ElementKind> kinds,
                             std::vector<char> less);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(Index i) const { return names_[i]; }
  ElementKind kind(Index i) const { return kinds_[i]; }
  std::string display(Index i) const;
  ExtendedElement element(Index i) const;

  // Number of elements that are not sentinels.
  std::size_t plain_count() const;
  std::optional<Index> bottom() const;
  std::optional<Index> top() const;

  std::optional<Index> find(std::string_view id) const;
  std::optional<Index> find(const ExtendedElement& e) const;
  // Throws UnknownElement.
  Index index_of(const ExtendedElement& e) const;
  Index index_of(std::string_view id) const;

  bool less(Index x, Index y) const { return less_[x * size() + y] != 0; }
  bool leq(Index x, Index y) const { return x == y || less(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  bool covers(Index x, Index y) const;

  const std::vector<Index>& upper_covers(Index x) const { return up_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return down_[x]; }
  std::vector<std::pair<Index, Index>> cover_pairs() const;
  std::size_t cover_count() const;

  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;
  // Linear extension; among available elements the smallest index goes first.
  const std::vector<Index>& linear_extension() const { return topo_; }

  // Longest / shortest saturated chain from x to y. Throws NotComparable
  // unless x <= y.
  int rank(Index x, Index y) const;
  int dist(Index x, Index y) const;

  // Length of the longest chain of the poset (-1 for the empty poset).
  int rank() const;

  const std::vector<char>& relation() const { return less_; }

private:
  std::vector<std::string> names_;
  std::vector<ElementKind> kinds_;
  std::vector<char> less_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
  std::vector<Index> topo_;
  std::vector<int> rank_;
  std::vector<int> dist_;
};

struct BuildResult {
  Poset poset;
  // Input covers dropped because a longer path implies them.
  std::vector<std::pair<std::string, std::string>> reduced_covers;
};

// Validates ids and the cover digraph, and replaces covers by their
// transitive reduction. Throws DuplicateElement, UnknownElementInCover,
// CycleDetected.
BuildResult build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& covers);

enum class ExtendMode { Plus, Minus, Both };

// Appends -inf and/or inf (in that order) after the existing elements, so
// plain indices are unchanged. Sentinels already present are kept.
Poset extend(const Poset& p, ExtendMode mode);

int interval_rank(const Poset& p, const ExtendedElement& x, const ExtendedElement& y);
int interval_dist(const Poset& p, const ExtendedElement& x, const ExtendedElement& y);

bool is_chain(const Poset& p, std::span<const Index> elements);
// Sorts a set of pairwise comparable elements into chain order; throws
// NotAChain otherwise.
Chain as_chain(const Poset& p, std::vector<Index> elements);

// Saturated chains from a minimal to a maximal element, in lexicographic
// order of their index sequences. The empty poset has one maximal chain, the
// empty one.
std::vector<Chain> maximal_chains(const Poset& p);

// Every chain including the empty one, in depth-first lexicographic order.
void for_each_chain(const Poset& p, const std::function<void(const Chain&)>& visit);
std::vector<Chain> all_chains(const Poset& p);

std::vector<Index> star(const Poset& p, const Chain& c);
std::vector<Index> link(const Poset& p, const Chain& c);
bool is_pure_subset(const Poset& p, std::span<const Index> subset);
bool is_pure(const Poset& p);

Poset induced_subposet(const Poset& p, std::span<const Index> subset);

struct CoveringRelationPoset {
  Poset poset;
  // covers[i] is the cover (x, y) of the source poset labelling element i.
  std::vector<std::pair<Index, Index>> covers;
};

// Throws IsAntichain when the poset has no covers.
CoveringRelationPoset covering_relation_poset(const Poset& p);

// Collapses M to a single new element "*" with the induced relation rules.
Poset contract(const Poset& p, std::span<const Index> m);

// Alternating cycle a1 < b1 > a2 < b2 > ... > au < bu > a1 whose a's (and
// b's) are pairwise incomparable and where
//   sum rank(a_i, b_i) > sum_{i<u} dist(a_{i+1}, b_i) + dist(a_1, b_u).
struct StarSequence {
  std::vector<Index> a;
  std::vector<Index> b;

  std::size_t length() const { return a.size(); }
  friend bool operator==(const StarSequence&, const StarSequence&) = default;
};

bool satisfies_star(const Poset& q, const StarSequence& s);

// Every such sequence of q, one per rotation class (a_1 has the smallest
// index among the a's). Reversed cycles pair ranks differently and are listed
// on their own. max_length = 0 means unbounded.
std::vector<StarSequence> star_sequences(const Poset& q, std::size_t max_length = 0);

// {x : a_i <= x <= b_j for some i, j}, ascending.
std::vector<Index> m_set(const Poset& q, const StarSequence& s);

std::vector<std::vector<Index>> connected_component_sets(const Poset& p);
std::vector<Poset> connected_components(const Poset& p);
std::vector<std::vector<Index>> antichains(const Poset& p);
std::vector<std::vector<Index>> poset_ideals(const Poset& p);

}  // namespace posetgor
