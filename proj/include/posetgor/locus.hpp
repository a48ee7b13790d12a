#pragma once

#include <cstdint>
#include <vector>

#include "posetgor/poset.hpp"

namespace posetgor {

// Chains C_1..C_u (max C_i = a_i) and C'_1..C'_u (min C'_i = b_i).
struct ChainTuple {
  std::vector<Chain> lower;
  std::vector<Chain> upper;
};

struct PrimeLabel {
  enum class Kind { OrderCycle, ChainStar, ChainCycle };
  Kind kind = Kind::OrderCycle;
  // OrderCycle: P^pm indices. ChainCycle: the sequence in P that was realized.
  StarSequence sequence;
  Chain chain;       // ChainStar
  ChainTuple tuple;  // ChainCycle
  int coheight = 0;
  int face_dim = -1;
  // Face vertices as subsets of P: poset ideals for the order polytope,
  // antichains for the chain polytope. Sorted.
  std::vector<std::uint64_t> vertices;
  bool minimal = true;
};

// Vertices of the order polytope (ideal indicators) and of the chain polytope
// (antichain indicators), as bit masks over P. Throws OutOfRange past 63
// elements.
std::vector<std::uint64_t> ideal_masks(const Poset& p);
std::vector<std::uint64_t> antichain_masks(const Poset& p);

// Dimension of the affine hull of 0/1 vectors given as masks; -1 when empty.
int affine_dimension(const std::vector<std::uint64_t>& masks, std::size_t n);

// Star sequences of P^pm; indices refer to extend(p, ExtendMode::Both).
std::vector<StarSequence> enumerate_star_sequences(const Poset& p);

// #P - #M + 2, for a sequence of pm = extend(p, Both).
int order_coheight(const Poset& pm, const StarSequence& s);
int order_face_dim_formula(const Poset& pm, const StarSequence& s);
std::vector<std::uint64_t> order_face_vertices(const Poset& pm, const StarSequence& s,
                                               const std::vector<std::uint64_t>& ideals);

// #P - #link(C) - 1.
int chain_star_face_dim_formula(const Poset& p, const Chain& c);
std::vector<std::uint64_t> chain_star_face_vertices(const Chain& c,
                                                    const std::vector<std::uint64_t>& antichains);
std::vector<std::uint64_t> chain_cycle_face_vertices(const ChainTuple& t,
                                                     const std::vector<std::uint64_t>& antichains);

// Chains for a star sequence of P with u >= 2 whose face has the largest
// possible dimension. Throws PreconditionViolated.
ChainTuple realize_chain_tuple(const Poset& p, const StarSequence& s);

// Dimension of the face attached to a label, from its vertex set.
int face_dimension(const Poset& p, const PrimeLabel& label);

// -1 when P is pure (the locus is empty).
int order_locus_dimension(const Poset& p);
int chain_locus_dimension(const Poset& p);

// Labels deduplicated by vertex set. With prune, labels whose face is strictly
// inside another label's face are dropped; otherwise they are kept with
// minimal = false.
std::vector<PrimeLabel> order_radical_decomposition(const Poset& p, bool prune = true);
std::vector<PrimeLabel> chain_radical_decomposition(const Poset& p, bool prune = true);

// (chain of n-m-2 elements + a point) followed by a chain of m elements.
// Throws OutOfRange unless 0 <= m <= n - 4.
Poset generate_poset(int n, int m);

}  // namespace posetgor
