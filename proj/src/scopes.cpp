#include "spinblock/scopes.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace spinblock {

namespace {

void require_index(int index, int t) {
  if (index < 0 || index > t)
    throw DomainError("involution index out of range 0.." + std::to_string(t));
}

} // namespace

PStrictPartition scopes_involution(int index, const PStrictPartition& lambda) {
  int p = lambda.p();
  int t = (p - 1) / 2;
  require_index(index, t);

  if (index == 0) {
    // Exchange parts ap+1 (a > 0) with parts bp-1 (b > 0) and toggle the
    // part 1.
    std::vector<int> keep, heights_a, heights_b;
    bool has_one = false;
    for (int part : lambda.parts()) {
      if (part == 1)
        has_one = true;
      else if (part % p == 1)
        heights_a.push_back(part / p);
      else if (part % p == p - 1)
        heights_b.push_back(part / p + 1);
      else
        keep.push_back(part);
    }
    for (int b : heights_b) keep.push_back(b * p + 1);
    for (int a : heights_a) keep.push_back(a * p - 1);
    if (!has_one) keep.push_back(1);
    std::sort(keep.rbegin(), keep.rend());
    return PStrictPartition(keep, p);
  }

  // Swap full runner contents: i <-> i+1 and p-i <-> p-i-1 (for index == t
  // these coincide with the single swap t <-> t+1).
  Abacus a = to_abacus(lambda);
  std::swap(a.runners[index], a.runners[index + 1]);
  if (index > 0 && index < t) std::swap(a.runners[p - index], a.runners[p - index - 1]);
  return from_abacus(a);
}

StrictPartition scopes_involution(int index, const StrictPartition& lambda, int p) {
  // Runner 0 is untouched, so strictness is preserved.
  return scopes_involution(index, PStrictPartition(lambda, p)).to_strict();
}

CoreTuple scopes_involution(int index, const CoreTuple& c) {
  int t = c.t();
  require_index(index, t);
  std::vector<CorePair> pairs = c.pairs();
  if (index == 0) {
    CorePair& q = pairs[0];
    int sign = q.side == 0 ? 1 : -1;
    q = {q.beads - sign, 1 - q.side};
    if (q.beads == 0) q.side = 1;
  } else if (index == t) {
    CorePair& q = pairs[t - 1];
    if (q.beads > 0) q.side = 1 - q.side;
  } else {
    std::swap(pairs[index - 1], pairs[index]);
  }
  return CoreTuple(std::move(pairs), c.p());
}

bool is_w_allowed(int index, const CoreTuple& c, int w) {
  int t = c.t();
  require_index(index, t);
  if (w < 0) throw DomainError("weight must be >= 0");
  if (index == 0) {
    const CorePair& q = c.pairs()[0];
    return w <= q.beads + q.side - 1;
  }
  if (index == t) {
    return w <= 2 * c.pairs()[t - 1].beads + 1;
  }
  const CorePair& a = c.pairs()[index - 1];
  const CorePair& b = c.pairs()[index];
  if (a.side == b.side) {
    int threshold = (b.beads - a.beads) * (a.side == 0 ? 1 : -1);
    return w <= threshold;
  }
  return w <= a.beads + b.beads;
}

AllowedComponent allowed_component(const CoreTuple& start, int w, long long budget) {
  if (budget <= 0) throw DomainError("budget must be positive");
  struct Parent {
    CoreTuple from;
    int action;
  };
  std::map<CoreTuple, Parent> parent; // start maps to itself
  parent.emplace(start, Parent{start, -1});
  std::deque<CoreTuple> queue{start};
  while (!queue.empty()) {
    CoreTuple cur = queue.front();
    queue.pop_front();
    for (int i = 0; i <= cur.t(); ++i) {
      if (!is_w_allowed(i, cur, w)) continue;
      CoreTuple next = scopes_involution(i, cur);
      if (next == cur) continue;
      if (parent.count(next)) continue;
      if (static_cast<long long>(parent.size()) >= budget)
        throw BudgetError("allowed component exceeded budget of " +
                          std::to_string(budget) + " tuples");
      parent.emplace(next, Parent{cur, i});
      queue.push_back(next);
    }
  }

  AllowedComponent out{start, w, {}, {}};
  for (const auto& [tuple, par] : parent) {
    ComponentMember m{tuple, rank_from_tuple(tuple), {}};
    CoreTuple walk = tuple;
    while (!(walk == start)) {
      const Parent& pr = parent.at(walk);
      m.trace.push_back({pr.action, pr.from, walk});
      walk = pr.from;
    }
    std::reverse(m.trace.begin(), m.trace.end());
    out.members.push_back(std::move(m));
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const ComponentMember& x, const ComponentMember& y) {
              return std::tie(x.rank, x.tuple) < std::tie(y.rank, y.tuple);
            });
  long long min_rank = out.members.front().rank;
  for (const ComponentMember& m : out.members) {
    if (m.rank != min_rank) break;
    out.min_rank_members.push_back(m.tuple);
  }
  return out;
}

Pairing crossover_pairing(const StrictPartition& nu, const StrictPartition& mu) {
  return parity(nu) == parity(mu) ? Pairing::SameFamily : Pairing::Crossover;
}

} // namespace spinblock
