#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetgor/lattice.hpp"
#include "posetgor/poset.hpp"

namespace posetgor {

struct ChainWitness {
  enum class Kind { NonPureStar, BadCycle };
  Kind kind = Kind::NonPureStar;
  Chain chain;               // NonPureStar
  std::vector<Chain> lower;  // BadCycle: C_1..C_u, max C_i = a_i
  std::vector<Chain> upper;  // BadCycle: C'_1..C'_u, min C'_i = b_i
};

// Sequence is given in P^pm indices (plain indices coincide with P).
struct OrderWitness {
  StarSequence sequence;
};

struct ChainVerdict {
  bool member = false;
  std::optional<ChainWitness> witness;
};

struct OrderVerdict {
  bool member = false;
  std::optional<OrderWitness> witness;
};

// The combinatorial data the chain-side criterion quantifies over, computed
// once per poset so many points can be tested cheaply.
class ChainCriterion {
public:
  explicit ChainCriterion(Poset p);

  const Poset& poset() const { return p_; }
  const std::vector<Chain>& nonpure_star_chains() const { return nonpure_; }
  const std::vector<StarSequence>& cycles() const { return cycles_; }

  // Throws NotInS0.
  ChainVerdict evaluate(const LatticePoint& xi) const;

private:
  Poset p_;
  std::vector<Chain> nonpure_;
  std::vector<StarSequence> cycles_;
};

class OrderCriterion {
public:
  explicit OrderCriterion(const Poset& p);

  const Poset& extended() const { return pm_; }
  const std::vector<StarSequence>& sequences() const { return seqs_; }

  // Throws NotInT0.
  OrderVerdict evaluate(const LatticePoint& nu) const;

private:
  std::size_t plain_ = 0;
  Poset pm_;
  std::vector<StarSequence> seqs_;
};

ChainVerdict chain_member(const Poset& p, const LatticePoint& xi);
OrderVerdict order_member(const Poset& p, const LatticePoint& nu);

struct AdjustFunction {
  std::vector<std::int64_t> mu;
  std::int64_t level = 0;
};

// Builds mu on an arbitrary poset q for xi in S^(0)(q). Throws
// PreconditionViolated when the progress measure stalls, which happens only
// if the hypotheses of the construction fail.
AdjustFunction adjust_mu(const Poset& q, const LatticePoint& xi);

// Empty string when f satisfies the invariants, else a reason.
std::string check_adjust_function(const Poset& q, const LatticePoint& xi, const AdjustFunction& f);

// eta + zeta = N * base, with eta in the n = 1 slice and zeta in the n = -1
// slice of the relevant cone.
struct Certificate {
  Ring ring = Ring::Chain;
  std::int64_t N = 0;
  LatticePoint eta;
  LatticePoint zeta;
};

// Throw NotMember for nonmembers.
Certificate chain_certificate(const Poset& p, const LatticePoint& xi);
Certificate order_certificate(const Poset& p, const LatticePoint& nu);

// Empty string when the certificate is valid, else a reason.
std::string certificate_problem(const Poset& p, const LatticePoint& base, const Certificate& cert);
bool verify_certificate(const Poset& p, const LatticePoint& base, const Certificate& cert);

struct Classification {
  bool gorenstein = false;
  bool punctured_gorenstein = false;
  bool nearly_gorenstein = false;
  std::vector<int> component_ranks;
};

// Throws EmptyPoset.
Classification classify(const Poset& p);

}  // namespace posetgor
