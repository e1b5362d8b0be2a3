#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spinblock/partition.hpp"

namespace spinblock {

// Bead model of a p-strict partition: part a*p + b is a bead at height a on
// runner b.  Runners 1..p-1 hold distinct heights >= 0; runner 0 holds
// heights >= 1 and may repeat (parts divisible by p may repeat).
struct Abacus {
  int p = 3;
  std::vector<std::vector<int>> runners; // runners[b] sorted ascending

  // Throws DomainError on any invariant violation.
  void validate() const;

  auto operator<=>(const Abacus&) const = default;
};

Abacus to_abacus(const PStrictPartition& lambda);
PStrictPartition from_abacus(const Abacus& a);

enum class BarMoveKind {
  LowerBead = 1,          // move one bead one place down into an empty slot
  RemoveRunnerZeroBead = 2, // remove a height-1 bead on runner 0
  RemovePair = 3,         // remove two height-0 beads on complementary runners
};

struct BarRemoval {
  PStrictPartition result;
  BarMoveKind kind;
  int runner; // runner acted on (the lower runner for RemovePair)
  int height; // height of the moved/removed bead (0 for RemovePair)
};

// All single-bar removals, each dropping the rank by exactly p.  Sorted by
// (runner, height).  Empty for a core.
std::vector<BarRemoval> pbar_removals(const PStrictPartition& lambda);

struct CoreAndWeight {
  StrictPartition core;
  int weight = 0;

  auto operator<=>(const CoreAndWeight&) const = default;
};

// Remove bars in a fixed order (lowest runner, then lowest height) until
// none remains.  The result is independent of the order taken.
CoreAndWeight pbar_core(const PStrictPartition& lambda);
CoreAndWeight pbar_core(const StrictPartition& lambda, int p);

bool is_pbar_core(const StrictPartition& lambda, int p);

// One runner pair {i, p-i} of a core: `beads` on runner i when side == 0,
// on runner p-i when side == 1.  No beads at all is encoded (0, 1).
struct CorePair {
  int beads = 0;
  int side = 1;

  auto operator<=>(const CorePair&) const = default;
};

// Compact encoding of a core by its t = (p-1)/2 runner pairs.
class CoreTuple {
public:
  CoreTuple(std::vector<CorePair> pairs, int p);

  int p() const { return p_; }
  int t() const { return static_cast<int>(pairs_.size()); }
  const std::vector<CorePair>& pairs() const { return pairs_; }
  const CorePair& pair(int i) const { return pairs_.at(i - 1); } // 1-based

  auto operator<=>(const CoreTuple&) const = default;

private:
  int p_;
  std::vector<CorePair> pairs_;
};

// Throws DomainError if lambda is not a core.
CoreTuple core_tuple(const StrictPartition& core, int p);
StrictPartition core_from_tuple(const CoreTuple& c);

// Rank of the encoded core: beads at heights 0..l-1 on runner i (or p-i)
// contribute l*i (or l*(p-i)) plus l(l-1)/2 * p.
long long rank_from_tuple(const CoreTuple& c);

std::string to_string(const CoreTuple& c);

} // namespace spinblock
