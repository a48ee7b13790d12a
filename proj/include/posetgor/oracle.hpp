#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetgor/lattice.hpp"
#include "posetgor/poset.hpp"
#include "posetgor/rational.hpp"
#include "posetgor/trace.hpp"

namespace posetgor {

// coef . x >= rhs
struct LinearConstraint {
  std::vector<std::int64_t> coef;
  std::int64_t rhs = 0;
};

struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;
};

struct Feasibility {
  bool feasible = false;
  // A rational point satisfying every constraint, when feasible.
  std::vector<Rational> point;
};

// Exact Fourier-Motzkin elimination. The returned point is re-checked against
// the original constraints; a mismatch throws InternalInvariant.
Feasibility solve_feasibility(const LinearSystem& system);

// The systems the oracles solve; exposed for inspection and tests.
LinearSystem order_membership_system(const Poset& p, const LatticePoint& nu);
LinearSystem chain_membership_system(const Poset& p, const LatticePoint& xi);

bool lp_member_order(const Poset& p, const LatticePoint& nu);
bool lp_member_chain(const Poset& p, const LatticePoint& xi);
// Single entry point over both rings.
bool lp_member(const Poset& p, const LatticePoint& pt, Ring ring);

struct SearchOutcome {
  enum class Status { Found, Exhausted, TimedOut };
  Status status = Status::Exhausted;
  std::optional<Certificate> certificate;
  std::uint64_t nodes = 0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Tries every N in 1..n_max and every integer eta with |eta(x)| <= box.
// Exhausted does not prove nonmembership. Throws BoxTooLarge when the
// candidate space exceeds 1e8.
SearchOutcome bounded_search_certificate(const Poset& p, const LatticePoint& base, Ring ring,
                                         std::int64_t n_max, std::int64_t box,
                                         Deadline deadline = std::nullopt);

bool hilbert_equal(const Poset& p, std::int64_t d_max);

}  // namespace posetgor
