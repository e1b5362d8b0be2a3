#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "spinblock/abacus.hpp"
#include "spinblock/exec.hpp"
#include "spinblock/partition.hpp"

namespace spinblock {

// One box of a Young diagram, 1-based.
struct NodePos {
  int row = 0;
  int col = 0;

  auto operator<=>(const NodePos&) const = default;
};

// One signature entry: a single addable/removable box, or the adjacent
// residue-0 pair whose inner (for removal) or outer (for addition) box also
// counts.  Boxes are listed left to right.
struct NodeGroup {
  std::vector<NodePos> boxes;

  auto operator<=>(const NodeGroup&) const = default;
};

// Removable node groups of residue `residue`, ordered along the rim from
// bottom left to top right.
std::vector<NodeGroup> i_removable_nodes(const PStrictPartition& lambda, int residue);
std::vector<NodeGroup> i_addable_nodes(const PStrictPartition& lambda, int residue);

struct ReducedSignature {
  std::vector<NodeGroup> normals;   // surviving minuses, in rim order
  std::vector<NodeGroup> conormals; // surviving pluses, in rim order
};

// Read the rim signature (minus for removable, plus for addable) and erase
// adjacent +- pairs until minuses precede pluses.
ReducedSignature reduced_signature(const PStrictPartition& lambda, int residue);

// Remove the good node (rightmost normal) / add the cogood node (leftmost
// conormal).  Empty optional when no such node exists.
std::optional<PStrictPartition> apply_e(const PStrictPartition& lambda, int residue);
std::optional<PStrictPartition> apply_f(const PStrictPartition& lambda, int residue);

// A block: core plus weight.
struct BlockLabel {
  int p = 3;
  StrictPartition core;
  int weight = 0;

  long long rank() const { return core.rank() + static_cast<long long>(p) * weight; }
  auto operator<=>(const BlockLabel&) const = default;
};

BlockLabel block_of(const PStrictPartition& lambda);

// Vertices are the blocks of all restricted partitions of rank <= max_rank;
// an i-edge joins two blocks whenever some restricted partition in one maps
// into the other under the residue-i operators.  Every edge joins blocks of
// adjacent rank.
struct BlockGraph {
  int p = 3;
  int max_rank = 0;
  std::vector<BlockLabel> vertices; // sorted by (rank, core, weight)

  struct Edge {
    int from = 0; // lower-rank vertex index
    int to = 0;   // higher-rank vertex index
    int residue = 0;

    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges; // sorted

  // Per vertex and residue: neighbor vertex index or -1.  At most one
  // neighbor exists in each direction.
  std::vector<std::vector<int>> down; // [vertex][residue]
  std::vector<std::vector<int>> up;

  int index_of(const BlockLabel& b) const; // -1 if absent
};

// Generate the crystal from the empty partition by closing under the f
// operators up to max_rank, and record its block-level image.  `budget`
// caps the number of crystal vertices expanded.
BlockGraph block_reduced_graph(int p, int max_rank, long long budget,
                               Exec exec = Exec::Serial);

struct IString {
  std::vector<BlockLabel> blocks; // ordered by rank
  // False when the top block sits at max_rank, where a further edge could
  // exist beyond the rank window.
  bool upper_end_certain = true;
};

// The maximal chain of residue-i edges through b.  Throws DomainError if b
// is not a vertex of g.
IString maximal_i_string(const BlockLabel& b, int residue, const BlockGraph& g);

std::string to_string(const BlockLabel& b);

} // namespace spinblock
