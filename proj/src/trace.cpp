#include "posetgor/trace.hpp"

#include <algorithm>
#include <cstdlib>

#include "posetgor/error.hpp"

namespace posetgor {

namespace {

// Walk an argmax path of the max-sum DP from x down to a minimal element.
Chain argmax_down(const Poset& p, const std::vector<std::int64_t>& best,
                  const std::vector<std::int64_t>& values, Index x) {
  Chain c{x};
  while (!p.lower_covers(c.back()).empty()) {
    Index cur = c.back();
    for (Index z : p.lower_covers(cur))
      if (best[z] == best[cur] - values[cur]) {
        c.push_back(z);
        break;
      }
    if (c.back() == cur) throw Error(ErrorKind::InternalInvariant, "broken max-sum table");
  }
  std::reverse(c.begin(), c.end());
  return c;
}

Chain argmax_up(const Poset& p, const std::vector<std::int64_t>& best,
                const std::vector<std::int64_t>& values, Index x) {
  Chain c{x};
  while (!p.upper_covers(c.back()).empty()) {
    Index cur = c.back();
    for (Index y : p.upper_covers(cur))
      if (best[y] == best[cur] - values[cur]) {
        c.push_back(y);
        break;
      }
    if (c.back() == cur) throw Error(ErrorKind::InternalInvariant, "broken max-sum table");
  }
  return c;
}

std::int64_t pm_value(const Poset& pm, const LatticePoint& nu, Index x) {
  switch (pm.kind(x)) {
    case ElementKind::Bottom: return nu.degree;
    case ElementKind::Top: return 0;
    case ElementKind::Plain: return nu.values[x];
  }
  return 0;
}

}  // namespace

ChainCriterion::ChainCriterion(Poset p) : p_(std::move(p)) {
  for_each_chain(p_, [&](const Chain& c) {
    if (!is_pure_subset(p_, star(p_, c))) nonpure_.push_back(c);
  });
  // shortest witnesses first
  std::stable_sort(nonpure_.begin(), nonpure_.end(),
                   [](const Chain& a, const Chain& b) { return a.size() < b.size(); });
  cycles_ = star_sequences(p_);
}

ChainVerdict ChainCriterion::evaluate(const LatticePoint& xi) const {
  if (!in_S(p_, xi, 0)) throw Error(ErrorKind::NotInS0, "point is not in S^(0)");
  const std::int64_t d = xi.degree;
  ChainVerdict v;
  for (const auto& c : nonpure_) {
    if (sum_over(xi, c) >= d) {
      v.witness = ChainWitness{ChainWitness::Kind::NonPureStar, c, {}, {}};
      return v;
    }
  }
  if (!cycles_.empty()) {
    auto down = max_sum_ending_at(p_, xi.values);
    auto up = max_sum_starting_at(p_, xi.values);
    for (const auto& s : cycles_) {
      std::int64_t w = 0;
      for (std::size_t i = 0; i < s.length(); ++i) w += down[s.a[i]] + up[s.b[i]];
      if (w < static_cast<std::int64_t>(s.length()) * d) continue;
      ChainWitness wit;
      wit.kind = ChainWitness::Kind::BadCycle;
      for (std::size_t i = 0; i < s.length(); ++i) {
        wit.lower.push_back(argmax_down(p_, down, xi.values, s.a[i]));
        wit.upper.push_back(argmax_up(p_, up, xi.values, s.b[i]));
      }
      v.witness = std::move(wit);
      return v;
    }
  }
  v.member = true;
  return v;
}

OrderCriterion::OrderCriterion(const Poset& p)
    : plain_(p.size()), pm_(extend(p, ExtendMode::Both)), seqs_(star_sequences(pm_)) {}

OrderVerdict OrderCriterion::evaluate(const LatticePoint& nu) const {
  if (nu.values.size() != plain_) throw Error(ErrorKind::DomainMismatch, "point does not match the poset");
  for (const auto& [x, y] : pm_.cover_pairs())
    if (pm_value(pm_, nu, x) < pm_value(pm_, nu, y))
      throw Error(ErrorKind::NotInT0, "point is not in T^(0)");
  OrderVerdict v;
  for (const auto& s : seqs_) {
    std::int64_t sa = 0, sb = 0;
    for (Index a : s.a) sa += pm_value(pm_, nu, a);
    for (Index b : s.b) sb += pm_value(pm_, nu, b);
    if (sa <= sb) {
      v.witness = OrderWitness{s};
      return v;
    }
  }
  v.member = true;
  return v;
}

ChainVerdict chain_member(const Poset& p, const LatticePoint& xi) {
  check_domain(p, xi);
  return ChainCriterion(p).evaluate(xi);
}

OrderVerdict order_member(const Poset& p, const LatticePoint& nu) {
  return OrderCriterion(p).evaluate(nu);
}

AdjustFunction adjust_mu(const Poset& q, const LatticePoint& xi) {
  check_domain(q, xi);
  if (!in_S(q, xi, 0)) throw Error(ErrorKind::NotInS0, "adjust_mu needs a point of S^(0)");
  const std::size_t n = q.size();
  std::vector<char> supp(n, 0);
  for (Index x = 0; x < n; ++x) supp[x] = xi.values[x] != 0;

  AdjustFunction f;
  f.mu.assign(n, 0);
  for (Index x = 0; x < n; ++x) f.mu[x] = supp[x] ? 0 : 1;

  const auto cd = level_chains(q, xi, xi.degree);
  if (cd.empty()) return f;

  std::vector<std::vector<char>> on(cd.size(), std::vector<char>(n, 0));
  for (std::size_t k = 0; k < cd.size(); ++k)
    for (Index x : cd[k]) on[k][x] = 1;

  // Covers of the order induced on supp xi.
  std::vector<char> scov(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    if (!supp[a]) continue;
    for (Index b = 0; b < n; ++b) {
      if (!supp[b] || !q.less(a, b)) continue;
      bool cover = true;
      for (Index z = 0; z < n && cover; ++z)
        if (supp[z] && q.less(a, z) && q.less(z, b)) cover = false;
      scov[a * n + b] = cover ? 1 : 0;
    }
  }

  auto chain_sums = [&](const std::vector<std::int64_t>& mu) {
    std::vector<std::int64_t> s(cd.size(), 0);
    for (std::size_t k = 0; k < cd.size(); ++k)
      for (Index x : cd[k]) s[k] += mu[x];
    return s;
  };
  auto prefix = [&](const Chain& c, Index x) {
    std::int64_t s = 0;
    for (Index z : c) {
      if (z == x) break;
      s += f.mu[z];
    }
    return s;
  };

  for (;;) {
    const auto sums = chain_sums(f.mu);
    const std::int64_t big = *std::max_element(sums.begin(), sums.end());
    const std::int64_t small = *std::min_element(sums.begin(), sums.end());
    if (big == small) {
      f.level = big;
      return f;
    }
    const auto at_big = std::count(sums.begin(), sums.end(), big);

    std::size_t k0 = 0;
    while (sums[k0] != big) ++k0;
    const Chain& c0 = cd[k0];
    std::vector<Index> c;
    for (Index x : c0)
      if (supp[x]) c.push_back(x);
    if (c.empty())
      throw Error(ErrorKind::PreconditionViolated, "a top-level chain misses the support");

    std::size_t s = 0;
    bool found = false;
    for (std::size_t l = c.size(); l-- > 0 && !found;) {
      const std::int64_t target = prefix(c0, c[l]);
      for (std::size_t k = 0; k < cd.size() && !found; ++k)
        if (sums[k] == small && on[k][c[l]] && prefix(cd[k], c[l]) == target) {
          s = l;
          found = true;
        }
    }

    std::vector<char> in_a(n, 0), in_b(n, 0);
    std::vector<Index> frontier{c[s]};
    in_a[c[s]] = 1;
    auto linked = [&](Index a, Index b, bool low_level) {
      if (!scov[a * n + b]) return false;
      for (std::size_t k = 0; k < cd.size(); ++k) {
        bool level_ok = low_level ? sums[k] == small : (sums[k] == big || sums[k] == big - 1);
        if (level_ok && on[k][a] && on[k][b]) return true;
      }
      return false;
    };
    while (!frontier.empty()) {
      std::vector<Index> new_b;
      for (Index b = 0; b < n; ++b) {
        if (!supp[b] || in_b[b]) continue;
        for (Index a : frontier)
          if (linked(a, b, true)) {
            new_b.push_back(b);
            break;
          }
      }
      for (Index b : new_b) in_b[b] = 1;
      std::vector<Index> new_a;
      for (Index a = 0; a < n; ++a) {
        if (!supp[a] || in_a[a]) continue;
        for (Index b : new_b)
          if (linked(a, b, false)) {
            new_a.push_back(a);
            break;
          }
      }
      for (Index a : new_a) in_a[a] = 1;
      frontier = std::move(new_a);
    }

    std::vector<std::int64_t> next = f.mu;
    for (Index x = 0; x < n; ++x) next[x] += (in_b[x] ? 1 : 0) - (in_a[x] ? 1 : 0);
    const auto nsums = chain_sums(next);
    const std::int64_t nbig = *std::max_element(nsums.begin(), nsums.end());
    const std::int64_t nsmall = *std::min_element(nsums.begin(), nsums.end());
    const auto nat_big = std::count(nsums.begin(), nsums.end(), big);
    if (nbig > big || nsmall < small || nat_big >= at_big)
      throw Error(ErrorKind::PreconditionViolated, "adjustment step made no progress");
    f.mu = std::move(next);
  }
}

std::string check_adjust_function(const Poset& q, const LatticePoint& xi, const AdjustFunction& f) {
  if (f.mu.size() != q.size() || xi.values.size() != q.size()) return "domain mismatch";
  for (Index x = 0; x < q.size(); ++x)
    if (xi.values[x] == 0 && f.mu[x] != 1) return "mu(" + q.display(x) + ") != 1 off the support";
  const auto cd = level_chains(q, xi, xi.degree);
  if (cd.empty()) return f.level == 0 ? "" : "level must be 0 when no chain reaches the degree";
  for (const auto& c : cd) {
    std::int64_t s = 0;
    for (Index x : c) s += f.mu[x];
    if (s != f.level) return "a top-level chain has mu-sum " + std::to_string(s);
  }
  return "";
}

namespace {

std::int64_t huge_multiplier(const AdjustFunction& f) {
  std::int64_t n = 1 + std::llabs(f.level);
  for (auto v : f.mu) n += std::llabs(v);
  return n;
}

}  // namespace

Certificate chain_certificate(const Poset& p, const LatticePoint& xi) {
  if (!chain_member(p, xi).member) throw Error(ErrorKind::NotMember, "point is not in the radical");
  const AdjustFunction f = adjust_mu(p, xi);
  const std::int64_t big = huge_multiplier(f);
  const std::int64_t d = xi.degree;
  Certificate cert;
  cert.ring = Ring::Chain;
  cert.N = 2 * big;
  cert.eta.degree = big * d + 1 + f.level;
  cert.zeta.degree = big * d - 1 - f.level;
  for (Index x = 0; x < p.size(); ++x) {
    cert.eta.values.push_back(big * xi.values[x] + f.mu[x]);
    cert.zeta.values.push_back(big * xi.values[x] - f.mu[x]);
  }
  if (auto why = certificate_problem(p, xi, cert); !why.empty())
    throw Error(ErrorKind::InternalInvariant, "constructed chain certificate fails: " + why);
  return cert;
}

Certificate order_certificate(const Poset& p, const LatticePoint& nu) {
  if (!order_member(p, nu).member) throw Error(ErrorKind::NotMember, "point is not in the radical");
  const ExtendedCR ecr = extended_cr(p);
  const CRPoint xi = phi(ecr, nu);
  const LatticePoint on_cr{xi.degree, xi.values};
  const AdjustFunction f = adjust_mu(ecr.cr.poset, on_cr);
  const std::int64_t big = huge_multiplier(f);
  const std::int64_t d = nu.degree;
  CRPoint eta{big * d + f.level, {}}, zeta{big * d - f.level, {}};
  for (std::size_t i = 0; i < xi.values.size(); ++i) {
    eta.values.push_back(big * xi.values[i] + f.mu[i]);
    zeta.values.push_back(big * xi.values[i] - f.mu[i]);
  }
  Certificate cert;
  cert.ring = Ring::Order;
  cert.N = 2 * big;
  cert.eta = psi(ecr, eta);
  cert.zeta = psi(ecr, zeta);
  if (auto why = certificate_problem(p, nu, cert); !why.empty())
    throw Error(ErrorKind::InternalInvariant, "constructed order certificate fails: " + why);
  return cert;
}

std::string certificate_problem(const Poset& p, const LatticePoint& base, const Certificate& cert) {
  if (cert.N < 1) return "N must be positive";
  const std::size_t n = p.size();
  if (base.values.size() != n || cert.eta.values.size() != n || cert.zeta.values.size() != n)
    return "domain mismatch";
  if (cert.eta.degree + cert.zeta.degree != cert.N * base.degree)
    return "eta + zeta != N * base at -inf";
  for (Index x = 0; x < n; ++x)
    if (cert.eta.values[x] + cert.zeta.values[x] != cert.N * base.values[x])
      return "eta + zeta != N * base at " + p.display(x);
  if (cert.ring == Ring::Chain) {
    if (!in_S(p, cert.eta, 1)) return "eta is not in S^(1)";
    if (!in_S(p, cert.zeta, -1)) return "zeta is not in S^(-1)";
  } else {
    if (!in_T(p, cert.eta, 1)) return "eta is not in T^(1)";
    if (!in_T(p, cert.zeta, -1)) return "zeta is not in T^(-1)";
  }
  return "";
}

bool verify_certificate(const Poset& p, const LatticePoint& base, const Certificate& cert) {
  return certificate_problem(p, base, cert).empty();
}

Classification classify(const Poset& p) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "classify needs a nonempty poset");
  Classification c;
  c.gorenstein = is_pure(p);
  c.punctured_gorenstein = true;
  for (const auto& comp : connected_components(p)) {
    c.component_ranks.push_back(comp.rank());
    if (!is_pure(comp)) c.punctured_gorenstein = false;
  }
  const auto [lo, hi] = std::minmax_element(c.component_ranks.begin(), c.component_ranks.end());
  c.nearly_gorenstein = c.punctured_gorenstein && *hi - *lo <= 1;
  return c;
}

}  // namespace posetgor
