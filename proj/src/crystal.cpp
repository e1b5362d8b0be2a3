#include "spinblock/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinblock {

namespace {

struct Entry {
  bool addable = false;
  NodeGroup group;
  int row = 0;
  int col = 0; // anchor column for rim ordering
};

// Can row r (1-based) lose k boxes and stay a p-strict diagram?
bool can_remove(const std::vector<int>& parts, int p, int r, int k) {
  int v = parts[r - 1];
  if (v < k) return false;
  int below = r < static_cast<int>(parts.size()) ? parts[r] : 0;
  int nv = v - k;
  if (nv < below) return false;
  if (nv > 0 && nv == below && nv % p != 0) return false;
  return true;
}

// Can row r (1-based, len+1 opens a new row) gain k boxes?
bool can_add(const std::vector<int>& parts, int p, int r, int k) {
  int len = static_cast<int>(parts.size());
  int v = r <= len ? parts[r - 1] : 0;
  int nv = v + k;
  if (r >= 2) {
    int above = parts[r - 2];
    if (nv > above) return false;
    if (nv == above && nv % p != 0) return false;
  }
  return true;
}

std::vector<Entry> signature_entries(const PStrictPartition& lambda, int residue) {
  int p = lambda.p();
  int t = (p - 1) / 2;
  if (residue < 0 || residue > t)
    throw DomainError("residue out of range 0.." + std::to_string(t));
  const auto& parts = lambda.parts();
  int len = static_cast<int>(parts.size());
  auto col_res = [p](int col) { return pbar_residue(col - 1, p); };

  std::vector<Entry> entries;
  for (int r = 1; r <= len; ++r) {
    int v = parts[r - 1];
    if (col_res(v) == residue && can_remove(parts, p, r, 1))
      entries.push_back({false, {{{r, v}}}, r, v});
    // the inner box of an adjacent residue-0 pair counts once more
    if (residue == 0 && v >= 2 && col_res(v - 1) == 0 && col_res(v) == 0 &&
        can_remove(parts, p, r, 1) && can_remove(parts, p, r, 2))
      entries.push_back({false, {{{r, v - 1}, {r, v}}}, r, v - 1});
  }
  for (int r = 1; r <= len + 1; ++r) {
    int v = r <= len ? parts[r - 1] : 0;
    if (col_res(v + 1) == residue && can_add(parts, p, r, 1))
      entries.push_back({true, {{{r, v + 1}}}, r, v + 1});
    // ... and dually the outer box of an addable residue-0 pair
    if (residue == 0 && col_res(v + 1) == 0 && col_res(v + 2) == 0 &&
        can_add(parts, p, r, 1) && can_add(parts, p, r, 2))
      entries.push_back({true, {{{r, v + 1}, {r, v + 2}}}, r, v + 2});
  }
  // rim order: bottom left to top right
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.row != b.row) return a.row > b.row;
    return a.col < b.col;
  });
  return entries;
}

std::vector<Entry> reduce_entries(const std::vector<Entry>& entries) {
  std::vector<Entry> stack;
  for (const Entry& e : entries) {
    if (!e.addable && !stack.empty() && stack.back().addable)
      stack.pop_back();
    else
      stack.push_back(e);
  }
  return stack;
}

PStrictPartition with_box_removed(const PStrictPartition& lambda, NodePos box) {
  std::vector<int> parts = lambda.parts();
  parts[box.row - 1] -= 1;
  if (parts[box.row - 1] == 0) parts.erase(parts.begin() + (box.row - 1));
  return PStrictPartition(parts, lambda.p());
}

PStrictPartition with_box_added(const PStrictPartition& lambda, NodePos box) {
  std::vector<int> parts = lambda.parts();
  if (box.row == static_cast<int>(parts.size()) + 1)
    parts.push_back(1);
  else
    parts[box.row - 1] += 1;
  return PStrictPartition(parts, lambda.p());
}

} // namespace

std::vector<NodeGroup> i_removable_nodes(const PStrictPartition& lambda, int residue) {
  std::vector<NodeGroup> out;
  for (const Entry& e : signature_entries(lambda, residue))
    if (!e.addable) out.push_back(e.group);
  return out;
}

std::vector<NodeGroup> i_addable_nodes(const PStrictPartition& lambda, int residue) {
  std::vector<NodeGroup> out;
  for (const Entry& e : signature_entries(lambda, residue))
    if (e.addable) out.push_back(e.group);
  return out;
}

ReducedSignature reduced_signature(const PStrictPartition& lambda, int residue) {
  ReducedSignature sig;
  for (const Entry& e : reduce_entries(signature_entries(lambda, residue))) {
    if (e.addable)
      sig.conormals.push_back(e.group);
    else
      sig.normals.push_back(e.group);
  }
  return sig;
}

std::optional<PStrictPartition> apply_e(const PStrictPartition& lambda, int residue) {
  auto reduced = reduce_entries(signature_entries(lambda, residue));
  const Entry* good = nullptr;
  for (const Entry& e : reduced)
    if (!e.addable) good = &e;
  if (!good) return std::nullopt;
  // The inner box of a pair is never good while its partner is present.
  if (good->group.boxes.size() != 1)
    throw std::logic_error("good node is a pair entry; signature reduction broke");
  return with_box_removed(lambda, good->group.boxes.front());
}

std::optional<PStrictPartition> apply_f(const PStrictPartition& lambda, int residue) {
  auto reduced = reduce_entries(signature_entries(lambda, residue));
  for (const Entry& e : reduced) {
    if (!e.addable) continue;
    if (e.group.boxes.size() != 1)
      throw std::logic_error("cogood node is a pair entry; signature reduction broke");
    return with_box_added(lambda, e.group.boxes.front());
  }
  return std::nullopt;
}

BlockLabel block_of(const PStrictPartition& lambda) {
  CoreAndWeight cw = pbar_core(lambda);
  return BlockLabel{lambda.p(), cw.core, cw.weight};
}

namespace {

bool vertex_less(const BlockLabel& a, const BlockLabel& b) {
  return std::make_tuple(a.rank(), a.core, a.weight) <
         std::make_tuple(b.rank(), b.core, b.weight);
}

} // namespace

int BlockGraph::index_of(const BlockLabel& b) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), b, vertex_less);
  if (it == vertices.end() || !(*it == b)) return -1;
  return static_cast<int>(it - vertices.begin());
}

BlockGraph block_reduced_graph(int p, int max_rank, long long budget, Exec exec) {
  require_odd_prime(p);
  if (max_rank < 0) throw DomainError("max_rank must be >= 0");
  if (budget <= 0) throw DomainError("budget must be positive");
  int t = (p - 1) / 2;

  std::vector<PStrictPartition> layer{PStrictPartition(p)};
  std::set<BlockLabel> blocks{block_of(layer.front())};
  std::vector<std::tuple<BlockLabel, BlockLabel, int>> raw_edges;
  long long expanded = 0;

  for (int n = 0; n < max_rank && !layer.empty(); ++n) {
    expanded += static_cast<long long>(layer.size());
    if (expanded > budget)
      throw BudgetError("crystal generation exceeded budget of " +
                        std::to_string(budget) + " vertices");

    using Produced = std::pair<std::vector<std::tuple<BlockLabel, BlockLabel, int>>,
                               std::vector<PStrictPartition>>;
    auto expand_one = [&](const PStrictPartition& lam, Produced& out) {
      BlockLabel from = block_of(lam);
      for (int i = 0; i <= t; ++i) {
        auto next = apply_f(lam, i);
        if (!next) continue;
        out.first.emplace_back(from, block_of(*next), i);
        out.second.push_back(std::move(*next));
      }
    };

    std::vector<Produced> produced;
    if (exec == Exec::Parallel) {
      int m = static_cast<int>(layer.size());
      produced.resize(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
      for (int k = 0; k < m; ++k) expand_one(layer[k], produced[k]);
    } else {
      produced.resize(1);
      for (const auto& lam : layer) expand_one(lam, produced[0]);
    }

    std::vector<PStrictPartition> next_layer;
    for (auto& chunk : produced) {
      for (auto& e : chunk.first) raw_edges.push_back(std::move(e));
      for (auto& lam : chunk.second) next_layer.push_back(std::move(lam));
    }
    std::sort(next_layer.begin(), next_layer.end());
    next_layer.erase(std::unique(next_layer.begin(), next_layer.end()), next_layer.end());
    for (const auto& lam : next_layer) blocks.insert(block_of(lam));
    layer = std::move(next_layer);
  }

  BlockGraph g;
  g.p = p;
  g.max_rank = max_rank;
  g.vertices.assign(blocks.begin(), blocks.end());
  std::sort(g.vertices.begin(), g.vertices.end(), vertex_less);

  std::set<BlockGraph::Edge> edge_set;
  for (const auto& [lo, hi, res] : raw_edges) {
    int u = g.index_of(lo);
    int v = g.index_of(hi);
    assert(u >= 0 && v >= 0);
    if (hi.rank() != lo.rank() + 1)
      throw std::logic_error("crystal edge does not change the rank by one");
    edge_set.insert({u, v, res});
  }
  g.edges.assign(edge_set.begin(), edge_set.end());

  g.down.assign(g.vertices.size(), std::vector<int>(t + 1, -1));
  g.up.assign(g.vertices.size(), std::vector<int>(t + 1, -1));
  for (const auto& e : g.edges) {
    int& u_up = g.up[e.from][e.residue];
    int& v_down = g.down[e.to][e.residue];
    if ((u_up != -1 && u_up != e.to) || (v_down != -1 && v_down != e.from))
      throw std::logic_error("block has two distinct neighbors in one direction");
    u_up = e.to;
    v_down = e.from;
  }
  return g;
}

IString maximal_i_string(const BlockLabel& b, int residue, const BlockGraph& g) {
  int t = (g.p - 1) / 2;
  if (residue < 0 || residue > t)
    throw DomainError("residue out of range 0.." + std::to_string(t));
  int idx = g.index_of(b);
  if (idx < 0) throw DomainError("block " + to_string(b) + " is not in the graph");
  while (g.down[idx][residue] != -1) idx = g.down[idx][residue];
  IString s;
  for (;;) {
    s.blocks.push_back(g.vertices[idx]);
    int up = g.up[idx][residue];
    if (up == -1) break;
    idx = up;
  }
  s.upper_end_certain = s.blocks.back().rank() + 1 <= g.max_rank;
  return s;
}

std::string to_string(const BlockLabel& b) {
  std::ostringstream os;
  os << to_string(b.core) << '^' << b.weight;
  return os.str();
}

} // namespace spinblock
