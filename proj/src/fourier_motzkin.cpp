#include <algorithm>
#include <map>
#include <numeric>

#include "posetgor/error.hpp"
#include "posetgor/oracle.hpp"

namespace posetgor {

namespace {

struct Row {
  std::vector<std::int64_t> coef;
  std::int64_t rhs = 0;
  // Original constraints this row was combined from (Chernikov pruning).
  std::vector<std::uint64_t> history;
};

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorKind::InternalInvariant, "elimination coefficient overflow");
  return static_cast<std::int64_t>(v);
}

void normalize(Row& r) {
  std::int64_t g = 0;
  for (auto c : r.coef) g = std::gcd(g, c);
  g = std::gcd(g, r.rhs);
  if (g > 1) {
    for (auto& c : r.coef) c /= g;
    r.rhs /= g;
  }
}

bool is_constant(const Row& r) {
  return std::all_of(r.coef.begin(), r.coef.end(), [](std::int64_t c) { return c == 0; });
}

std::size_t history_size(const Row& r) {
  std::size_t s = 0;
  for (auto w : r.history) s += static_cast<std::size_t>(__builtin_popcountll(w));
  return s;
}

// Keeps the tightest row per coefficient vector. Returns false on a
// contradictory constant row.
bool tidy(std::vector<Row>& rows) {
  std::map<std::vector<std::int64_t>, std::size_t> best;
  std::vector<Row> out;
  for (auto& r : rows) {
    normalize(r);
    if (is_constant(r)) {
      if (r.rhs > 0) return false;
      continue;
    }
    auto [it, fresh] = best.emplace(r.coef, out.size());
    if (fresh)
      out.push_back(std::move(r));
    else if (r.rhs > out[it->second].rhs)
      out[it->second] = std::move(r);
  }
  rows = std::move(out);
  return true;
}

struct Stage {
  std::size_t variable;
  std::vector<Row> rows;
};

}  // namespace

Feasibility solve_feasibility(const LinearSystem& system) {
  const std::size_t nv = system.variables.size();
  const std::size_t words = (system.constraints.size() + 63) / 64;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    const auto& c = system.constraints[i];
    if (c.coef.size() != nv) throw Error(ErrorKind::InternalInvariant, "constraint width mismatch");
    Row r{c.coef, c.rhs, std::vector<std::uint64_t>(words, 0)};
    r.history[i / 64] |= std::uint64_t{1} << (i % 64);
    rows.push_back(std::move(r));
  }

  Feasibility out;
  if (!tidy(rows)) return out;

  std::vector<char> alive(nv, 1);
  std::vector<Stage> stages;
  for (std::size_t eliminated = 1; eliminated <= nv; ++eliminated) {
    // Greedy choice: the variable whose elimination creates the fewest rows.
    std::size_t pick = nv;
    long long best_cost = 0;
    for (std::size_t j = 0; j < nv; ++j) {
      if (!alive[j]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coef[j] > 0) ++pos;
        if (r.coef[j] < 0) ++neg;
      }
      long long cost = pos * neg - pos - neg;
      if (pick == nv || cost < best_cost) {
        pick = j;
        best_cost = cost;
      }
    }
    alive[pick] = 0;
    stages.push_back({pick, rows});

    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      if (r.coef[pick] > 0)
        pos.push_back(std::move(r));
      else if (r.coef[pick] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row r;
        r.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) r.history[w] = p.history[w] | q.history[w];
        if (history_size(r) > eliminated + 1) continue;
        const std::int64_t fp = -q.coef[pick], fq = p.coef[pick];
        r.coef.resize(nv);
        for (std::size_t j = 0; j < nv; ++j)
          r.coef[j] = checked(static_cast<__int128>(p.coef[j]) * fp + static_cast<__int128>(q.coef[j]) * fq);
        r.rhs = checked(static_cast<__int128>(p.rhs) * fp + static_cast<__int128>(q.rhs) * fq);
        next.push_back(std::move(r));
      }
    }
    if (!tidy(next)) return out;
    rows = std::move(next);
  }

  // Back substitution in reverse elimination order.
  std::vector<Rational> x(nv, Rational(0));
  for (auto st = stages.rbegin(); st != stages.rend(); ++st) {
    const std::size_t j = st->variable;
    std::optional<Rational> lo, hi;
    for (const auto& r : st->rows) {
      if (r.coef[j] == 0) continue;
      Rational rest(r.rhs);
      for (std::size_t k = 0; k < nv; ++k)
        if (k != j && r.coef[k] != 0) rest = rest - Rational(r.coef[k]) * x[k];
      Rational bound = rest / Rational(r.coef[j]);
      if (r.coef[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw Error(ErrorKind::InternalInvariant, "empty interval in back substitution");
    if (lo) {
      Rational up(lo->ceil());
      x[j] = (!hi || up <= *hi) ? up : *lo;
    } else if (hi) {
      x[j] = *hi < Rational(0) ? *hi : Rational(0);
    } else {
      x[j] = Rational(0);
    }
  }

  for (const auto& c : system.constraints) {
    Rational lhs(0);
    for (std::size_t k = 0; k < nv; ++k)
      if (c.coef[k] != 0) lhs = lhs + Rational(c.coef[k]) * x[k];
    if (lhs < Rational(c.rhs))
      throw Error(ErrorKind::InternalInvariant, "sample point violates an original constraint");
  }
  out.feasible = true;
  out.point = std::move(x);
  return out;
}

}  // namespace posetgor
