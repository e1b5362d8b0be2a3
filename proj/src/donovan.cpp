#include "spinblock/donovan.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinblock/lie.hpp"
#include "spinblock/scopes.hpp"

namespace spinblock {

bool is_irreducible(const CoreTuple& c, int w) {
  if (w < 0) throw DomainError("weight must be >= 0");
  long long rank = rank_from_tuple(c);
  for (int i = 0; i <= c.t(); ++i) {
    if (!is_w_allowed(i, c, w)) continue;
    if (rank_from_tuple(scopes_involution(i, c)) < rank) return false;
  }
  return true;
}

namespace {

struct Reducer {
  int w;
  CoreTuple cur;
  std::vector<ReductionStep> steps;

  // Apply one involution; identities are skipped without a trace entry.
  // Every recorded step must be w-allowed and rank-decreasing.
  void apply(int i) {
    CoreTuple next = scopes_involution(i, cur);
    if (next == cur) return;
    if (!is_w_allowed(i, cur, w))
      throw std::logic_error("reduction applied a non-allowed action");
    if (rank_from_tuple(next) >= rank_from_tuple(cur))
      throw std::logic_error("reduction applied a rank-increasing action");
    cur = next;
    steps.push_back({i, cur});
  }

  bool every_pair_at_least(int floor_value) const {
    for (const CorePair& q : cur.pairs())
      if (q.beads != 0 && q.beads < floor_value) return false;
    return true;
  }

  bool sides_sorted() const {
    // all low-side pairs before all high-side pairs
    bool seen_high = false;
    for (const CorePair& q : cur.pairs()) {
      if (q.side == 1) seen_high = true;
      else if (seen_high) return false;
    }
    return true;
  }

  bool any_high_with_beads() const {
    for (const CorePair& q : cur.pairs())
      if (q.side == 1 && q.beads > 0) return true;
    return false;
  }

  // Normalization sweep: sort sides low-first, then flip each bead-carrying
  // high pair through the last slot.  Valid whenever every nonzero pair has
  // at least w beads.
  void normalize_sides() {
    int t = cur.t();
    for (;;) {
      // bubble the first low-side pair sitting after a high-side pair
      bool moved = true;
      while (moved) {
        moved = false;
        int k = -1;
        for (int i = 1; i <= t; ++i)
          if (cur.pair(i).side == 1) {
            k = i;
            break;
          }
        if (k < 0) break;
        int j = -1;
        for (int i = k + 1; i <= t; ++i)
          if (cur.pair(i).side == 0) {
            j = i;
            break;
          }
        if (j < 0) break;
        for (int m = j - 1; m >= k; --m) apply(m);
        moved = true;
      }
      // carry the last bead-carrying high pair to the end and flip it
      int s = -1;
      for (int i = 1; i <= t; ++i)
        if (cur.pair(i).side == 1 && cur.pair(i).beads > 0) s = i;
      if (s < 0) break;
      for (int m = s; m <= t - 1; ++m) apply(m);
      apply(t);
    }
  }

  // Decrement rotation: with every nonzero pair above w and sides
  // normalized, rotate each low pair to the front and peel one bead off.
  void decrement_all() {
    normalize_sides();
    int r = 0;
    for (const CorePair& q : cur.pairs())
      if (q.side == 0) ++r;
    for (int q = 1; q <= r; ++q) {
      for (int m = q - 1; m >= 1; --m) apply(m);
      apply(0);
    }
    normalize_sides();
  }

  int lowest_decreasing_allowed() const {
    long long rank = rank_from_tuple(cur);
    for (int i = 0; i <= cur.t(); ++i) {
      if (!is_w_allowed(i, cur, w)) continue;
      if (rank_from_tuple(scopes_involution(i, cur)) < rank) return i;
    }
    return -1;
  }
};

} // namespace

ReductionTrace reduce_core(const CoreTuple& c, int w) {
  if (w < 0) throw DomainError("weight must be >= 0");
  Reducer red{w, c, {}};
  for (;;) {
    std::size_t before = red.steps.size();
    if (red.every_pair_at_least(std::max(w, 1)) &&
        (!red.sides_sorted() || red.any_high_with_beads())) {
      red.normalize_sides();
    } else if (red.every_pair_at_least(w + 1) &&
               rank_from_tuple(red.cur) > 0) {
      red.decrement_all();
    } else {
      int i = red.lowest_decreasing_allowed();
      if (i < 0) break;
      red.apply(i);
    }
    if (red.steps.size() == before)
      throw std::logic_error("reduction round made no progress");
  }
  if (!is_irreducible(red.cur, w))
    throw std::logic_error("reduction stopped at a reducible core");
  return {c, std::move(red.steps), red.cur};
}

CoreTuple rock_core(int p, int w) {
  require_odd_prime(p);
  if (w < 0) throw DomainError("weight must be >= 0");
  int t = (p - 1) / 2;
  std::vector<CorePair> pairs;
  pairs.reserve(t);
  for (int i = 1; i <= t; ++i) {
    if (w == 0)
      pairs.push_back({0, 1});
    else
      pairs.push_back({w + (i - 1) * (w - 1), 0});
  }
  return CoreTuple(std::move(pairs), p);
}

long long donovan_bound(int p, int w) {
  require_odd_prime(p);
  if (w < 0) throw DomainError("weight must be >= 0");
  if (w == 0) return 0;
  int t = (p - 1) / 2;
  long long sum = 0;
  for (long long i = 1; i <= t; ++i) sum += i * i * (w - 1) + i;
  long long twice = (static_cast<long long>(p) * (w - 1) + 2) * sum;
  if (twice % 2 != 0) throw std::logic_error("bound formula must be an integer");
  return static_cast<long long>(p) * w + twice / 2;
}

std::vector<Representative> enumerate_representatives(int p, int w, long long budget,
                                                      Exec exec) {
  require_odd_prime(p);
  if (w < 0) throw DomainError("weight must be >= 0");
  if (budget <= 0) throw DomainError("budget must be positive");
  int t = (p - 1) / 2;
  long long level_bound = level(coords_from_tuple(rock_core(p, w))) + w;

  // coordinate window: n(n-1)/2 <= bound on the positive side mirrors to
  // (1-n) on the negative side
  int hi = 1;
  while (static_cast<long long>(hi + 1) * hi / 2 <= level_bound) ++hi;
  int lo = 1 - hi;
  long long side = hi - lo + 1;
  long long cells = 1;
  for (int i = 0; i < t; ++i) {
    if (cells > budget / side)
      throw BudgetError("lattice scan of " + std::to_string(side) + "^" +
                        std::to_string(t) + " points exceeds budget");
    cells *= side;
  }

  auto point_at = [&](long long idx) {
    CoordVector v{std::vector<int>(t, 0)};
    for (int i = t - 1; i >= 0; --i) {
      v.n[i] = lo + static_cast<int>(idx % side);
      idx /= side;
    }
    return v;
  };
  auto scan_one = [&](long long idx, std::vector<Representative>& out) {
    CoordVector v = point_at(idx);
    long long lev = level(v);
    if (lev > level_bound) return;
    CoreTuple tuple = tuple_from_coords(v, p);
    if (!is_irreducible(tuple, w)) return;
    out.push_back({tuple, rank_from_tuple(tuple), lev});
  };

  std::vector<Representative> found;
  if (exec == Exec::Parallel) {
    const long long chunk = 256;
    long long chunks = (cells + chunk - 1) / chunk;
    std::vector<std::vector<Representative>> parts(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long k = 0; k < chunks; ++k)
      for (long long idx = k * chunk; idx < std::min(cells, (k + 1) * chunk); ++idx)
        scan_one(idx, parts[static_cast<std::size_t>(k)]);
    for (auto& part : parts)
      for (auto& rep : part) found.push_back(std::move(rep));
  } else {
    for (long long idx = 0; idx < cells; ++idx) scan_one(idx, found);
  }
  std::sort(found.begin(), found.end(), [](const Representative& a, const Representative& b) {
    return std::tie(a.rank, a.tuple) < std::tie(b.rank, b.tuple);
  });
  return found;
}

} // namespace spinblock
