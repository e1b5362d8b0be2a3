#include "spinblock/abacus.hpp"

#include <algorithm>
#include <sstream>

namespace spinblock {

void Abacus::validate() const {
  require_odd_prime(p);
  if (static_cast<int>(runners.size()) != p)
    throw DomainError("abacus needs exactly p runners");
  for (int b = 0; b < p; ++b) {
    const auto& r = runners[b];
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < (b == 0 ? 1 : 0)) throw DomainError("bead height out of range");
      if (i > 0 && r[i] < r[i - 1]) throw DomainError("runner heights must be sorted");
      if (i > 0 && b != 0 && r[i] == r[i - 1])
        throw DomainError("duplicate bead on runner " + std::to_string(b));
    }
  }
}

Abacus to_abacus(const PStrictPartition& lambda) {
  Abacus a{lambda.p(), std::vector<std::vector<int>>(lambda.p())};
  for (int part : lambda.parts()) a.runners[part % a.p].push_back(part / a.p);
  for (auto& r : a.runners) std::sort(r.begin(), r.end());
  return a;
}

PStrictPartition from_abacus(const Abacus& a) {
  a.validate();
  std::vector<int> parts;
  for (int b = 0; b < a.p; ++b)
    for (int h : a.runners[b]) parts.push_back(h * a.p + b);
  std::sort(parts.rbegin(), parts.rend());
  return PStrictPartition(parts, a.p);
}

namespace {

bool has_height(const std::vector<int>& runner, int h) {
  return std::binary_search(runner.begin(), runner.end(), h);
}

} // namespace

std::vector<BarRemoval> pbar_removals(const PStrictPartition& lambda) {
  Abacus a = to_abacus(lambda);
  int p = a.p;
  struct Move {
    int runner, height;
    BarMoveKind kind;
  };
  std::vector<Move> moves;
  // kind 2: a height-1 bead on runner 0 (the part p itself)
  if (has_height(a.runners[0], 1))
    moves.push_back({0, 1, BarMoveKind::RemoveRunnerZeroBead});
  // kind 1: lower one bead into a free slot (heights stay >= 1 on runner 0)
  for (int b = 0; b < p; ++b) {
    const auto& r = a.runners[b];
    int floor = b == 0 ? 1 : 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0 && r[i] == r[i - 1]) continue;
      int h = r[i];
      if (h - 1 >= floor && !has_height(r, h - 1))
        moves.push_back({b, h, BarMoveKind::LowerBead});
    }
  }
  // kind 3: height-0 beads on runners b and p-b
  for (int b = 1; b <= (p - 1) / 2; ++b)
    if (has_height(a.runners[b], 0) && has_height(a.runners[p - b], 0))
      moves.push_back({b, 0, BarMoveKind::RemovePair});

  std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
    return std::tie(x.runner, x.height) < std::tie(y.runner, y.height);
  });

  std::vector<BarRemoval> out;
  out.reserve(moves.size());
  for (const Move& m : moves) {
    Abacus b = a;
    auto& r = b.runners[m.runner];
    switch (m.kind) {
      case BarMoveKind::LowerBead:
        r.erase(std::find(r.begin(), r.end(), m.height));
        r.insert(std::lower_bound(r.begin(), r.end(), m.height - 1), m.height - 1);
        break;
      case BarMoveKind::RemoveRunnerZeroBead:
        r.erase(std::find(r.begin(), r.end(), 1));
        break;
      case BarMoveKind::RemovePair: {
        r.erase(std::find(r.begin(), r.end(), 0));
        auto& r2 = b.runners[b.p - m.runner];
        r2.erase(std::find(r2.begin(), r2.end(), 0));
        break;
      }
    }
    out.push_back({from_abacus(b), m.kind, m.runner, m.height});
  }
  return out;
}

CoreAndWeight pbar_core(const PStrictPartition& lambda) {
  PStrictPartition cur = lambda;
  int weight = 0;
  for (;;) {
    auto moves = pbar_removals(cur);
    if (moves.empty()) break;
    cur = moves.front().result;
    ++weight;
  }
  return {cur.to_strict(), weight};
}

CoreAndWeight pbar_core(const StrictPartition& lambda, int p) {
  return pbar_core(PStrictPartition(lambda, p));
}

bool is_pbar_core(const StrictPartition& lambda, int p) {
  return pbar_removals(PStrictPartition(lambda, p)).empty();
}

CoreTuple::CoreTuple(std::vector<CorePair> pairs, int p) : p_(p), pairs_(std::move(pairs)) {
  require_odd_prime(p);
  if (static_cast<int>(pairs_.size()) != (p - 1) / 2)
    throw DomainError("core tuple needs (p-1)/2 pairs");
  for (const CorePair& q : pairs_) {
    if (q.beads < 0) throw DomainError("core tuple bead count must be >= 0");
    if (q.side != 0 && q.side != 1) throw DomainError("core tuple side must be 0 or 1");
    if (q.beads == 0 && q.side != 1)
      throw DomainError("empty runner pair must be encoded (0, 1)");
  }
}

CoreTuple core_tuple(const StrictPartition& core, int p) {
  PStrictPartition lambda(core, p);
  if (!pbar_removals(lambda).empty())
    throw DomainError("not a core: " + to_string(core));
  Abacus a = to_abacus(lambda);
  int t = (p - 1) / 2;
  std::vector<CorePair> pairs(t);
  for (int i = 1; i <= t; ++i) {
    const auto& low = a.runners[i];
    const auto& high = a.runners[p - i];
    if (!low.empty())
      pairs[i - 1] = {static_cast<int>(low.size()), 0};
    else
      pairs[i - 1] = {static_cast<int>(high.size()), 1};
  }
  return CoreTuple(std::move(pairs), p);
}

StrictPartition core_from_tuple(const CoreTuple& c) {
  std::vector<int> parts;
  int p = c.p();
  for (int i = 1; i <= c.t(); ++i) {
    const CorePair& q = c.pairs()[i - 1];
    int runner = q.side == 0 ? i : p - i;
    for (int h = 0; h < q.beads; ++h) parts.push_back(h * p + runner);
  }
  std::sort(parts.rbegin(), parts.rend());
  return StrictPartition(parts);
}

long long rank_from_tuple(const CoreTuple& c) {
  long long total = 0;
  int p = c.p();
  for (int i = 1; i <= c.t(); ++i) {
    const CorePair& q = c.pairs()[i - 1];
    long long l = q.beads;
    long long runner = q.side == 0 ? i : p - i;
    total += l * runner + l * (l - 1) / 2 * p;
  }
  return total;
}

std::string to_string(const CoreTuple& c) {
  std::ostringstream os;
  for (int i = 0; i < c.t(); ++i) {
    if (i) os << ',';
    os << c.pairs()[i].beads << ':' << c.pairs()[i].side;
  }
  return os.str();
}

} // namespace spinblock
