#include "posetgor/oracle.hpp"

#include <algorithm>
#include <limits>

#include "posetgor/error.hpp"

namespace posetgor {

namespace {

constexpr double kSearchLimit = 1e8;

std::int64_t pm_value(const Poset& pm, const LatticePoint& nu, Index x) {
  switch (pm.kind(x)) {
    case ElementKind::Bottom: return nu.degree;
    case ElementKind::Top: return 0;
    case ElementKind::Plain: return nu.values[x];
  }
  return 0;
}

}  // namespace

// Variables: eta(x) for x in P, then eta(-inf), then N. eta(inf) = 0.
LinearSystem order_membership_system(const Poset& p, const LatticePoint& nu) {
  check_domain(p, nu);
  const Poset pm = extend(p, ExtendMode::Both);
  const std::size_t n = p.size();
  const std::size_t bottom_var = n, scale_var = n + 1, nv = n + 2;
  LinearSystem sys;
  for (Index x = 0; x < n; ++x) sys.variables.push_back("eta(" + p.name(x) + ")");
  sys.variables.emplace_back("eta(-inf)");
  sys.variables.emplace_back("N");

  auto var_of = [&](Index x) -> std::optional<std::size_t> {
    switch (pm.kind(x)) {
      case ElementKind::Bottom: return bottom_var;
      case ElementKind::Top: return std::nullopt;
      case ElementKind::Plain: return x;
    }
    return std::nullopt;
  };

  for (const auto& [x, y] : pm.cover_pairs()) {
    const auto vx = var_of(x), vy = var_of(y);
    // eta(x) - eta(y) >= 1
    LinearConstraint up{std::vector<std::int64_t>(nv, 0), 1};
    if (vx) up.coef[*vx] += 1;
    if (vy) up.coef[*vy] -= 1;
    sys.constraints.push_back(up);
    // N (nu(x) - nu(y)) - eta(x) + eta(y) >= -1
    LinearConstraint down{std::vector<std::int64_t>(nv, 0), -1};
    if (vx) down.coef[*vx] -= 1;
    if (vy) down.coef[*vy] += 1;
    down.coef[scale_var] = pm_value(pm, nu, x) - pm_value(pm, nu, y);
    sys.constraints.push_back(down);
  }
  LinearConstraint positive{std::vector<std::int64_t>(nv, 0), 1};
  positive.coef[scale_var] = 1;
  sys.constraints.push_back(positive);
  return sys;
}

// Variables: eta(x) for x in P, then eta(-inf), then N.
LinearSystem chain_membership_system(const Poset& p, const LatticePoint& xi) {
  check_domain(p, xi);
  const std::size_t n = p.size();
  const std::size_t bottom_var = n, scale_var = n + 1, nv = n + 2;
  LinearSystem sys;
  for (Index x = 0; x < n; ++x) sys.variables.push_back("eta(" + p.name(x) + ")");
  sys.variables.emplace_back("eta(-inf)");
  sys.variables.emplace_back("N");

  for (Index x = 0; x < n; ++x) {
    LinearConstraint lo{std::vector<std::int64_t>(nv, 0), 1};
    lo.coef[x] = 1;
    sys.constraints.push_back(lo);
    LinearConstraint hi{std::vector<std::int64_t>(nv, 0), -1};
    hi.coef[x] = -1;
    hi.coef[scale_var] = xi.values[x];
    sys.constraints.push_back(hi);
  }
  for (const auto& c : maximal_chains(p)) {
    // eta(-inf) - eta^+(C) >= 1
    LinearConstraint a{std::vector<std::int64_t>(nv, 0), 1};
    a.coef[bottom_var] = 1;
    for (Index x : c) a.coef[x] -= 1;
    sys.constraints.push_back(a);
    // N (d - xi^+(C)) - eta(-inf) + eta^+(C) >= -1
    LinearConstraint b{std::vector<std::int64_t>(nv, 0), -1};
    b.coef[bottom_var] = -1;
    for (Index x : c) b.coef[x] += 1;
    b.coef[scale_var] = xi.degree - sum_over(xi, c);
    sys.constraints.push_back(b);
  }
  LinearConstraint positive{std::vector<std::int64_t>(nv, 0), 1};
  positive.coef[scale_var] = 1;
  sys.constraints.push_back(positive);
  return sys;
}

bool lp_member_order(const Poset& p, const LatticePoint& nu) {
  if (!in_T(p, nu, 0)) throw Error(ErrorKind::NotInT0, "point is not in T^(0)");
  return solve_feasibility(order_membership_system(p, nu)).feasible;
}

bool lp_member_chain(const Poset& p, const LatticePoint& xi) {
  if (!in_S(p, xi, 0)) throw Error(ErrorKind::NotInS0, "point is not in S^(0)");
  return solve_feasibility(chain_membership_system(p, xi)).feasible;
}

bool lp_member(const Poset& p, const LatticePoint& pt, Ring ring) {
  return ring == Ring::Order ? lp_member_order(p, pt) : lp_member_chain(p, pt);
}

namespace {

struct SearchState {
  const Poset& p;
  const LatticePoint& base;
  Deadline deadline;
  std::uint64_t nodes = 0;
  bool timed_out = false;

  bool tick() {
    if ((++nodes & 0xFFF) == 0 && deadline && std::chrono::steady_clock::now() > *deadline)
      timed_out = true;
    return !timed_out;
  }
};

std::optional<Certificate> search_chain(SearchState& st, std::int64_t big, std::int64_t box) {
  const Poset& p = st.p;
  const std::size_t n = p.size();
  const auto& order = p.linear_extension();
  LatticePoint eta{0, std::vector<std::int64_t>(n, 0)};
  std::vector<std::int64_t> zeta_vals(n, 0);
  std::optional<Certificate> found;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (found || !st.tick()) return;
    if (i == n) {
      for (Index x = 0; x < n; ++x) zeta_vals[x] = big * st.base.values[x] - eta.values[x];
      const std::int64_t lo = max_chain_sum(p, eta.values) + 1;
      const std::int64_t hi = big * st.base.degree + 1 - max_chain_sum(p, zeta_vals);
      if (lo > hi) return;
      Certificate c;
      c.ring = Ring::Chain;
      c.N = big;
      c.eta = eta;
      c.eta.degree = lo;
      c.zeta = LatticePoint{big * st.base.degree - lo, zeta_vals};
      if (verify_certificate(p, st.base, c)) found = c;
      return;
    }
    const Index x = order[i];
    const std::int64_t top = std::min(box, big * st.base.values[x] + 1);
    for (std::int64_t v = std::max<std::int64_t>(1, -box); v <= top && !found; ++v) {
      eta.values[x] = v;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return found;
}

std::optional<Certificate> search_order(SearchState& st, std::int64_t big, std::int64_t box) {
  const Poset& p = st.p;
  const std::size_t n = p.size();
  const Poset pm = extend(p, ExtendMode::Both);
  const Index top = *pm.top();
  const auto& order = p.linear_extension();
  LatticePoint eta{0, std::vector<std::int64_t>(n, 0)};
  std::optional<Certificate> found;
  const auto& nu = st.base;

  // Top-down: eta(x) >= eta(y) + 1 and eta(x) <= eta(y) + N (nu(x) - nu(y)) + 1
  // for every upper cover y, with eta(inf) = nu(inf) = 0.
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (found || !st.tick()) return;
    if (i == n) {
      std::int64_t lo = 1, hi = big * nu.degree + 1;
      for (Index x : p.minimal_elements()) {
        lo = std::max(lo, eta.values[x] + 1);
        hi = std::min(hi, eta.values[x] + big * (nu.degree - nu.values[x]) + 1);
      }
      if (lo > hi) return;
      Certificate c;
      c.ring = Ring::Order;
      c.N = big;
      c.eta = eta;
      c.eta.degree = lo;
      c.zeta.degree = big * nu.degree - lo;
      for (Index x = 0; x < n; ++x) c.zeta.values.push_back(big * nu.values[x] - eta.values[x]);
      if (verify_certificate(p, nu, c)) found = c;
      return;
    }
    const Index x = order[n - 1 - i];
    std::int64_t lo = std::max(-box, static_cast<std::int64_t>(pm.rank(x, top)));
    std::int64_t hi = std::min(box, big * nu.values[x] + pm.dist(x, top));
    if (p.upper_covers(x).empty()) {
      lo = std::max<std::int64_t>(lo, 1);
      hi = std::min(hi, big * nu.values[x] + 1);
    }
    for (Index y : p.upper_covers(x)) {
      lo = std::max(lo, eta.values[y] + 1);
      hi = std::min(hi, eta.values[y] + big * (nu.values[x] - nu.values[y]) + 1);
    }
    for (std::int64_t v = lo; v <= hi && !found; ++v) {
      eta.values[x] = v;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace

SearchOutcome bounded_search_certificate(const Poset& p, const LatticePoint& base, Ring ring,
                                         std::int64_t n_max, std::int64_t box, Deadline deadline) {
  check_domain(p, base);
  if (ring == Ring::Chain && !in_S(p, base, 0)) throw Error(ErrorKind::NotInS0, "point is not in S^(0)");
  if (ring == Ring::Order && !in_T(p, base, 0)) throw Error(ErrorKind::NotInT0, "point is not in T^(0)");

  // Size guard on the unpruned candidate space.
  const Poset pm = extend(p, ExtendMode::Both);
  double space = 0;
  for (std::int64_t big = 1; big <= n_max; ++big) {
    double prod = 1;
    for (Index x = 0; x < p.size(); ++x) {
      std::int64_t lo, hi;
      if (ring == Ring::Chain) {
        lo = std::max<std::int64_t>(1, -box);
        hi = std::min(box, big * base.values[x] + 1);
      } else {
        lo = std::max<std::int64_t>(-box, pm.rank(x, *pm.top()));
        hi = std::min(box, big * base.values[x] + pm.dist(x, *pm.top()));
      }
      prod *= static_cast<double>(std::max<std::int64_t>(0, hi - lo + 1));
    }
    space += prod;
  }
  if (space > kSearchLimit)
    throw Error(ErrorKind::BoxTooLarge, "search space of about " + std::to_string(space) + " states");

  SearchState st{p, base, deadline};
  SearchOutcome out;
  for (std::int64_t big = 1; big <= n_max; ++big) {
    auto c = ring == Ring::Chain ? search_chain(st, big, box) : search_order(st, big, box);
    if (c) {
      out.status = SearchOutcome::Status::Found;
      out.certificate = std::move(c);
      break;
    }
    if (st.timed_out) {
      out.status = SearchOutcome::Status::TimedOut;
      break;
    }
  }
  out.nodes = st.nodes;
  return out;
}

bool hilbert_equal(const Poset& p, std::int64_t d_max) {
  for (std::int64_t d = 0; d <= d_max; ++d)
    if (count_points(p, Ring::Order, d) != count_points(p, Ring::Chain, d)) return false;
  return true;
}

}  // namespace posetgor
