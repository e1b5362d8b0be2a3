#include "spinblock/lie.hpp"

#include <algorithm>
#include <sstream>

namespace spinblock {

CartanData cartan_data(int p) {
  require_odd_prime(p);
  int t = (p - 1) / 2;
  CartanData d;
  d.t = t;
  d.C.assign(t + 1, std::vector<int>(t + 1, 0));
  if (t == 1) {
    // the two end arrows land on the same entry
    d.C = {{2, -4}, {-1, 2}};
  } else {
    for (int i = 0; i <= t; ++i) d.C[i][i] = 2;
    d.C[0][1] = -2;
    for (int i = 1; i <= t; ++i) d.C[i][i - 1] = -1;
    for (int i = 1; i < t - 1; ++i) d.C[i][i + 1] = -1;
    d.C[t - 1][t] = -2;
  }
  // symmetrize with diag(1/2, 1, ..., 1, 2)
  d.B = d.C;
  for (int j = 0; j <= t; ++j) {
    d.B[0][j] = d.C[0][j] / 2;
    d.B[t][j] = d.C[t][j] * 2;
  }
  d.delta.assign(t + 1, 2);
  d.delta[t] = 1;
  d.c.assign(t + 1, 2);
  d.c[0] = 1;
  return d;
}

CoordVector coords_from_tuple(const CoreTuple& c) {
  CoordVector v;
  v.n.reserve(c.t());
  for (const CorePair& q : c.pairs()) v.n.push_back(q.side == 0 ? q.beads : -q.beads);
  return v;
}

CoreTuple tuple_from_coords(const CoordVector& v, int p) {
  require_odd_prime(p);
  if (v.t() != (p - 1) / 2)
    throw DomainError("coordinate vector length must be (p-1)/2");
  std::vector<CorePair> pairs;
  pairs.reserve(v.n.size());
  for (int n : v.n) {
    if (n > 0)
      pairs.push_back({n, 0});
    else
      pairs.push_back({-n, 1});
  }
  return CoreTuple(std::move(pairs), p);
}

long long level(const CoordVector& v) {
  long long total = 0;
  for (long long n : v.n) total += n * (n - 1) / 2;
  return total;
}

CoordVector weyl_reflect(int index, const CoordVector& v) {
  int t = v.t();
  if (index < 0 || index > t)
    throw DomainError("reflection index out of range 0.." + std::to_string(t));
  CoordVector out = v;
  if (index == 0)
    out.n[0] = 1 - out.n[0];
  else if (index == t)
    out.n[t - 1] = -out.n[t - 1];
  else
    std::swap(out.n[index - 1], out.n[index]);
  return out;
}

long long LevelTable::at(const CoordVector& v) const {
  long long idx = 0;
  for (int x : v.n) {
    if (x < lo || x > hi) throw DomainError("coordinate outside table range");
    idx = idx * side() + (x - lo);
  }
  return values[static_cast<std::size_t>(idx)];
}

long long LevelTable::at2(int row, int col) const {
  if (t != 2) throw DomainError("matrix access needs t == 2");
  return values[static_cast<std::size_t>(row) * side() + col];
}

LevelTable level_table(int p, int lo, int hi, long long budget) {
  require_odd_prime(p);
  if (lo > hi) throw DomainError("invalid range: lo > hi");
  if (budget <= 0) throw DomainError("budget must be positive");
  int t = (p - 1) / 2;
  long long side = hi - lo + 1;
  long long cells = 1;
  for (int i = 0; i < t; ++i) {
    if (cells > budget / side)
      throw BudgetError("level table of " + std::to_string(side) + "^" +
                        std::to_string(t) + " cells exceeds budget");
    cells *= side;
  }
  LevelTable table{p, t, lo, hi, std::vector<long long>(cells, 0)};
  CoordVector v{std::vector<int>(t, lo)};
  for (long long idx = 0; idx < cells; ++idx) {
    table.values[idx] = level(v);
    for (int i = t - 1; i >= 0; --i) {
      if (v.n[i] < hi) {
        ++v.n[i];
        break;
      }
      v.n[i] = lo;
    }
  }
  return table;
}

Content block_weight_vector(const BlockLabel& b) {
  Content c = content(PStrictPartition(b.core, b.p));
  int t = (b.p - 1) / 2;
  for (int i = 0; i < t; ++i) c.counts[i] += 2LL * b.weight;
  c.counts[t] += b.weight;
  return c;
}

std::string to_string(const CoordVector& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.t(); ++i) {
    if (i) os << ',';
    os << v.n[i];
  }
  os << ')';
  return os.str();
}

} // namespace spinblock
