#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "posetgor/poset.hpp"

namespace posetgor {

// Integer function on P with its value at -inf in `degree`; the value at inf
// is fixed to 0. values[i] belongs to element i of the host poset.
struct LatticePoint {
  std::int64_t degree = 0;
  std::vector<std::int64_t> values;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class Ring { Order, Chain };

std::int64_t sum_over(const LatticePoint& pt, std::span<const Index> elements);

// Throws DomainMismatch if pt is not defined on exactly the elements of p.
void check_domain(const Poset& p, const LatticePoint& pt);

// Membership in T^(n): cover differences on P^pm are at least n, with
// nu(inf) = 0 and nu(-inf) = degree.
bool in_T(const Poset& p, const LatticePoint& pt, std::int64_t n);

// Membership in S^(n). The default uses a weighted longest-chain DP; the
// explicit variant walks every maximal chain.
bool in_S(const Poset& p, const LatticePoint& pt, std::int64_t n);
bool in_S_explicit(const Poset& p, const LatticePoint& pt, std::int64_t n);

// Largest sum of values over a chain of p (0 for the empty poset).
std::int64_t max_chain_sum(const Poset& p, std::span<const std::int64_t> values);

// For each x the largest value-sum over chains with maximum x (down) or
// minimum x (up); x itself is included.
std::vector<std::int64_t> max_sum_ending_at(const Poset& p, std::span<const std::int64_t> values);
std::vector<std::int64_t> max_sum_starting_at(const Poset& p, std::span<const std::int64_t> values);

std::vector<Chain> level_chains(const Poset& p, const LatticePoint& pt, std::int64_t n);

// P^pm together with CR(P^pm).
struct ExtendedCR {
  Poset pm;
  CoveringRelationPoset cr;
};
ExtendedCR extended_cr(const Poset& p);

// Point on CR(P^pm); values follow ExtendedCR::cr.covers.
struct CRPoint {
  std::int64_t degree = 0;
  std::vector<std::int64_t> values;

  friend bool operator==(const CRPoint&, const CRPoint&) = default;
};

// Value of nu on an element of P^pm (pm indices).
std::int64_t extended_value(const ExtendedCR& ecr, const LatticePoint& nu, Index x);

CRPoint phi(const ExtendedCR& ecr, const LatticePoint& nu);
// Throws NotInG unless every saturated -inf..inf path has the same sum, equal
// to xi.degree.
LatticePoint psi(const ExtendedCR& ecr, const CRPoint& xi);

// Lattice points of the d-th dilate of the order (resp. chain) polytope.
void for_each_point(const Poset& p, Ring ring, std::int64_t d,
                    const std::function<void(const LatticePoint&)>& visit);
std::uint64_t count_points(const Poset& p, Ring ring, std::int64_t d);

}  // namespace posetgor
