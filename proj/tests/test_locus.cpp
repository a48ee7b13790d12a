#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "posetgor/error.hpp"
#include "posetgor/locus.hpp"
#include "random_posets.hpp"

using namespace posetgor;

namespace {

Chain chain_of(const Poset& p, std::vector<std::string> ids) {
  std::vector<Index> xs;
  for (auto& i : ids) xs.push_back(p.index_of(i));
  return as_chain(p, xs);
}

StarSequence seq(const Poset& host, std::vector<std::string> a, std::vector<std::string> b) {
  auto idx = [&](const std::string& s) {
    if (s == "inf") return *host.top();
    if (s == "-inf") return *host.bottom();
    return host.index_of(s);
  };
  StarSequence s;
  for (auto& x : a) s.a.push_back(idx(x));
  for (auto& y : b) s.b.push_back(idx(y));
  return s;
}

PrimeLabel tuple_label(const Poset& p, ChainTuple t) {
  PrimeLabel l;
  l.kind = PrimeLabel::Kind::ChainCycle;
  l.tuple = std::move(t);
  return l;
}

}  // namespace

TEST_CASE("affine dimension") {
  CHECK(affine_dimension({}, 3) == -1);
  CHECK(affine_dimension({0b000}, 3) == 0);
  CHECK(affine_dimension({0b000, 0b001, 0b010, 0b100}, 3) == 3);
  CHECK(affine_dimension({0b001, 0b010, 0b100}, 3) == 2);
  CHECK(affine_dimension({0b011, 0b101, 0b110, 0b000}, 3) == 3);
}

TEST_CASE("vertex counts") {
  auto b = fx::bowtie();
  CHECK(ideal_masks(b).size() == 10);
  CHECK(antichain_masks(b).size() == 10);
  CHECK(affine_dimension(ideal_masks(b), b.size()) == 5);
  CHECK(affine_dimension(antichain_masks(b), b.size()) == 5);
}

TEST_CASE("order coheights") {
  auto b = fx::bowtie();
  auto bp = extend(b, ExtendMode::Both);
  CHECK(order_coheight(bp, seq(bp, {"a1", "a2"}, {"b1", "b2"})) == 2);
  CHECK(order_face_dim_formula(bp, seq(bp, {"a1", "a2"}, {"b1", "b2"})) == 1);

  auto c = fx::claw();
  auto cp = extend(c, ExtendMode::Both);
  CHECK(order_coheight(cp, seq(cp, {"a"}, {"inf"})) == 3);

  auto l = fx::ladder();
  auto lp = extend(l, ExtendMode::Both);
  CHECK(order_coheight(lp, seq(lp, {"a1", "a2"}, {"b1", "b2"})) == 6);
  CHECK(enumerate_star_sequences(fx::chain(4)).empty());
}

TEST_CASE("order faces match the formula") {
  for (auto p : {fx::bowtie(), fx::claw(), fx::ladder(), fx::ex54()}) {
    auto pm = extend(p, ExtendMode::Both);
    auto ideals = ideal_masks(p);
    for (const auto& s : enumerate_star_sequences(p)) {
      auto v = order_face_vertices(pm, s, ideals);
      CHECK(affine_dimension(v, p.size()) == order_face_dim_formula(pm, s));
      CHECK(order_face_dim_formula(pm, s) + 1 == order_coheight(pm, s));
    }
  }
}

TEST_CASE("chain star faces") {
  auto b = fx::bowtie();
  Chain a1 = chain_of(b, {"a1"});
  CHECK(chain_star_face_dim_formula(b, a1) == 1);
  CHECK(affine_dimension(chain_star_face_vertices(a1, antichain_masks(b)), b.size()) == 1);
}

TEST_CASE("chain tuple realization") {
  auto b = fx::bowtie();
  auto t = realize_chain_tuple(b, seq(b, {"a1", "a2"}, {"b1", "b2"}));
  CHECK(t.lower == std::vector<Chain>{chain_of(b, {"a1"}), chain_of(b, {"a2"})});
  CHECK(t.upper == std::vector<Chain>{chain_of(b, {"b1"}), chain_of(b, {"b2"})});
  CHECK_THROWS_AS(realize_chain_tuple(b, seq(b, {"a1"}, {"b1"})), Error);

  auto e = fx::ex54();
  ChainTuple naive{{chain_of(e, {"d1", "a1"}), chain_of(e, {"d2", "a2"})},
                   {chain_of(e, {"b1"}), chain_of(e, {"b2"})}};
  CHECK(face_dimension(e, tuple_label(e, naive)) == 2);
  auto real = realize_chain_tuple(e, seq(e, {"a1", "a2"}, {"b1", "b2"}));
  CHECK(face_dimension(e, tuple_label(e, real)) == 3);

  auto g = fx::big();
  auto rg = realize_chain_tuple(g, seq(g, {"a1", "a2", "a3", "a4"}, {"b1", "b2", "b3", "b4"}));
  CHECK(rg.lower == std::vector<Chain>{chain_of(g, {"a1", "d1", "d3", "d5"}), chain_of(g, {"a2", "d2", "d3", "d5"}),
                                       chain_of(g, {"a3", "d2", "d3", "d5"}), chain_of(g, {"a4", "d7"})});
  CHECK(face_dimension(g, tuple_label(g, rg)) == 9);
}

TEST_CASE("locus dimensions") {
  CHECK(order_locus_dimension(fx::chain(3)) == -1);
  CHECK(chain_locus_dimension(fx::chain(3)) == -1);
  CHECK(order_locus_dimension(fx::bowtie()) == 2);
  CHECK(chain_locus_dimension(fx::bowtie()) == 2);
  CHECK(order_locus_dimension(fx::claw()) == 3);
  CHECK(chain_locus_dimension(fx::claw()) == 3);
  CHECK(order_locus_dimension(fx::ladder()) == 6);
  CHECK(chain_locus_dimension(fx::ladder()) == 6);
}

TEST_CASE("decompositions") {
  auto b = fx::bowtie();
  auto cb = chain_radical_decomposition(b);
  REQUIRE(cb.size() == 3);
  int stars = 0, cycles = 0;
  for (const auto& l : cb) {
    if (l.kind == PrimeLabel::Kind::ChainStar) {
      ++stars;
      CHECK((l.chain == chain_of(b, {"a1"}) || l.chain == chain_of(b, {"b1"})));
    } else {
      ++cycles;
      CHECK(l.tuple.lower.size() == 2);
    }
  }
  CHECK(stars == 2);
  CHECK(cycles == 1);

  auto c = fx::claw();
  auto cc = chain_radical_decomposition(c);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0].chain == chain_of(c, {"c", "a"}));
  CHECK(cc[1].chain == chain_of(c, {"d", "a"}));
  auto oc = order_radical_decomposition(c);
  REQUIRE(oc.size() == 1);
  auto cp = extend(c, ExtendMode::Both);
  CHECK(oc[0].sequence == seq(cp, {"a"}, {"inf"}));

  auto l = fx::ladder();
  auto ol = order_radical_decomposition(l);
  REQUIRE(ol.size() == 3);
  std::vector<int> coh;
  for (const auto& x : ol) coh.push_back(x.coheight);
  std::sort(coh.begin(), coh.end());
  CHECK(coh == std::vector<int>{4, 4, 6});

  auto all = chain_radical_decomposition(b, false);
  CHECK(all.size() >= cb.size());
  for (const auto& x : all)
    if (!x.minimal) CHECK(std::none_of(cb.begin(), cb.end(), [&](const PrimeLabel& y) { return y.vertices == x.vertices; }));
}

TEST_CASE("generator") {
  auto g = generate_poset(4, 0);
  CHECK(g.size() == 3);
  CHECK_FALSE(is_pure(g));
  CHECK(order_locus_dimension(g) == 0);
  auto g2 = generate_poset(6, 2);
  CHECK(g2.size() == 5);
  CHECK(order_locus_dimension(g2) == 2);
  CHECK_THROWS_AS(generate_poset(5, 2), Error);
}

TEST_CASE("property: face dimension formulas agree with vertex sets") {
  std::mt19937_64 rng(rp::seed() + 4);
  for (int t = 0; t < 30; ++t) {
    auto p = rp::random_poset(rng, 7);
    for (const auto& l : order_radical_decomposition(p, false)) {
      CHECK(l.face_dim + 1 == l.coheight);
      CHECK(face_dimension(p, l) == l.face_dim);
    }
    for (const auto& l : chain_radical_decomposition(p, false)) {
      CHECK(l.face_dim + 1 == l.coheight);
      if (l.kind == PrimeLabel::Kind::ChainStar) CHECK(l.face_dim == chain_star_face_dim_formula(p, l.chain));
    }
    CHECK(order_locus_dimension(p) == chain_locus_dimension(p));
  }
}
