#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "posetgor/error.hpp"
#include "posetgor/lattice.hpp"
#include "random_posets.hpp"

using namespace posetgor;

namespace {

Chain chain_of(const Poset& p, std::vector<std::string> ids) {
  std::vector<Index> xs;
  for (auto& i : ids) xs.push_back(p.index_of(i));
  return as_chain(p, xs);
}

LatticePoint bowtie_nu(const Poset& b) {
  return fx::point(b, 3, {{"a1", 2}, {"a2", 2}, {"x", 1}, {"b1", 0}, {"b2", 0}});
}

}  // namespace

TEST_CASE("chain sums") {
  auto p = fx::nx();
  auto xi = fx::xi_nx(p);
  CHECK(sum_over(xi, {}) == 0);
  CHECK(sum_over(xi, chain_of(p, {"d1", "a2", "b1"})) == 3);
  CHECK(sum_over(xi, chain_of(p, {"a1", "e1", "b1"})) == 2);
}

TEST_CASE("order cone membership") {
  auto c = fx::chain(3);
  CHECK(in_T(c, LatticePoint{0, {0, 0, 0}}, 0));
  auto b = fx::bowtie();
  CHECK(in_T(b, bowtie_nu(b), 0));
  CHECK_FALSE(in_T(b, bowtie_nu(b), 1));
  CHECK_THROWS_AS(in_T(b, LatticePoint{0, {0}}, 0), Error);
}

TEST_CASE("chain cone membership") {
  auto p = fx::nx();
  CHECK(in_S(p, fx::xi_nx(p), 0));
  CHECK(in_S(p, fx::eta_nx(p), 1));
  CHECK(in_S(p, fx::zeta_nx(p), -1));
  CHECK(in_S_explicit(p, fx::xi_nx(p), 0));
  CHECK(in_S_explicit(p, fx::eta_nx(p), 1));
  CHECK(in_S_explicit(p, fx::zeta_nx(p), -1));
  auto h = fx::hex();
  CHECK(in_S(h, fx::eta_hex(h), 1));
  CHECK(in_S(h, fx::zeta_hex(h), -1));
}

TEST_CASE("level chains") {
  auto p = fx::nx();
  auto lc = level_chains(p, fx::xi_nx(p), 3);
  CHECK(lc.size() == 6);
  for (const auto& c : lc) CHECK(c != chain_of(p, {"a1", "e1", "b1"}));
  CHECK(level_chains(p, fx::xi_nx(p), 7).empty());

  auto h = fx::hex();
  auto hc = level_chains(h, fx::xi_hex(h), 2);
  CHECK(hc.size() == 6);
  CHECK(hc == maximal_chains(h));
}

TEST_CASE("phi and psi") {
  auto c = fx::chain(2);
  auto e = extended_cr(c);
  auto x = phi(e, LatticePoint{2, {1, 0}});
  CHECK(x.degree == 2);
  REQUIRE(x.values.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    auto [u, v] = e.cr.covers[i];
    const auto lbl = e.pm.display(u) + "," + e.pm.display(v);
    if (lbl == "-inf,c0") CHECK(x.values[i] == 1);
    if (lbl == "c0,c1") CHECK(x.values[i] == 1);
    if (lbl == "c1,inf") CHECK(x.values[i] == 0);
  }
  auto zero = phi(e, LatticePoint{0, {0, 0}});
  for (auto v : zero.values) CHECK(v == 0);

  // A point that is not a potential difference.
  auto b = fx::bowtie();
  auto eb = extended_cr(b);
  CRPoint bad{1, std::vector<std::int64_t>(eb.cr.covers.size(), 0)};
  bad.values[0] = 1;
  CHECK_THROWS_AS(psi(eb, bad), Error);
}

TEST_CASE("property: psi inverts phi and phi maps T into the chain cone") {
  std::mt19937_64 rng(rp::seed() + 1);
  for (int t = 0; t < 40; ++t) {
    auto p = rp::random_poset(rng, 6);
    auto e = extended_cr(p);
    std::uniform_int_distribution<std::int64_t> val(-4, 4);
    LatticePoint nu{val(rng), {}};
    for (Index x = 0; x < p.size(); ++x) nu.values.push_back(val(rng));
    CHECK(psi(e, phi(e, nu)) == nu);
    // points of the order polytope dilate map to points of the chain side
    for_each_point(p, Ring::Order, 2, [&](const LatticePoint& q) {
      auto xi = phi(e, q);
      LatticePoint as_point{xi.degree, xi.values};
      CHECK(in_S(e.cr.poset, as_point, 0));
    });
  }
}

TEST_CASE("in_S matches the explicit chain walk") {
  std::mt19937_64 rng(rp::seed() + 2);
  for (int t = 0; t < 80; ++t) {
    auto p = rp::random_poset(rng, 7);
    std::uniform_int_distribution<std::int64_t> val(-2, 3);
    LatticePoint pt{val(rng) + 2, {}};
    for (Index x = 0; x < p.size(); ++x) pt.values.push_back(val(rng));
    for (std::int64_t n = -1; n <= 1; ++n) CHECK(in_S(p, pt, n) == in_S_explicit(p, pt, n));
  }
}

TEST_CASE("lattice point counts") {
  CHECK(count_points(fx::nx(), Ring::Order, 0) == 1);
  CHECK(count_points(fx::nx(), Ring::Chain, 0) == 1);
  CHECK(count_points(fx::antichain(2), Ring::Order, 1) == 4);
  CHECK(count_points(fx::antichain(2), Ring::Chain, 1) == 4);
  // 3-chain: order polytope is a simplex, d-th dilate has C(d+3,3) points
  CHECK(count_points(fx::chain(3), Ring::Order, 2) == 10);
  CHECK(count_points(fx::chain(3), Ring::Chain, 2) == 10);
  auto p = fx::nx();
  for (int d = 1; d <= 3; ++d) CHECK(count_points(p, Ring::Order, d) == count_points(p, Ring::Chain, d));
  std::uint64_t n = 0;
  for_each_point(p, Ring::Order, 2, [&](const LatticePoint& q) {
    CHECK(in_T(p, q, 0));
    ++n;
  });
  CHECK(n == count_points(p, Ring::Order, 2));
  for_each_point(p, Ring::Chain, 2, [&](const LatticePoint& q) { CHECK(in_S(p, q, 0)); });
}
