#pragma once

#include <vector>

#include "spinblock/abacus.hpp"
#include "spinblock/partition.hpp"

namespace spinblock {

// The runner-swapping involutions K_0..K_t on p-strict partitions.
// For 0 < i < t runners i,i+1 and p-i,p-i-1 are interchanged; for i = t
// runners t and t+1; K_0 interchanges the beads above the place for 1 on
// runner 1 with the beads on runner p-1 and toggles the part 1.  Runner 0
// is never touched.
PStrictPartition scopes_involution(int index, const PStrictPartition& lambda);
StrictPartition scopes_involution(int index, const StrictPartition& lambda, int p);

// Same involutions on core tuples: middle indices swap adjacent pairs,
// K_t flips the side of the last pair, K_0 maps (l, e) -> (l - (-1)^e, 1-e)
// in the first slot.
CoreTuple scopes_involution(int index, const CoreTuple& c);

// Threshold test for K_index acting on blocks of the given core at weight w:
//   K_0:       w <= l_1 + e_1 - 1
//   K_t:       w <= 2 l_t + 1
//   0 < i < t: w <= (l_{i+1} - l_i) * (-1)^{e_i}   when e_i == e_{i+1}
//              w <= l_i + l_{i+1}                  when e_i != e_{i+1}
bool is_w_allowed(int index, const CoreTuple& c, int w);

struct AllowedStep {
  int action = 0; // involution index applied
  CoreTuple from;
  CoreTuple to;
};

struct ComponentMember {
  CoreTuple tuple;
  long long rank = 0;
  std::vector<AllowedStep> trace; // one witnessing action sequence from the start
};

struct AllowedComponent {
  CoreTuple start;
  int w = 0;
  std::vector<ComponentMember> members;  // sorted by (rank, tuple)
  std::vector<CoreTuple> min_rank_members;
};

// Closure of the start tuple under w-allowed actions in both rank
// directions.  Throws BudgetError once more than `budget` tuples have been
// discovered (components can be infinite).
AllowedComponent allowed_component(const CoreTuple& start, int w, long long budget);

enum class Pairing { SameFamily, Crossover };

// Blocks pair within their family when the two cores have equal parity and
// across families otherwise.
Pairing crossover_pairing(const StrictPartition& nu, const StrictPartition& mu);

} // namespace spinblock
