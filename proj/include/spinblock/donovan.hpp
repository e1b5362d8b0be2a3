#pragma once

#include <vector>

#include "spinblock/abacus.hpp"
#include "spinblock/exec.hpp"

namespace spinblock {

struct ReductionStep {
  int action = 0;   // involution index applied
  CoreTuple tuple;  // state after the step
};

struct ReductionTrace {
  CoreTuple start;
  std::vector<ReductionStep> steps;
  CoreTuple end;
};

// True when no involution is simultaneously w-allowed and rank-decreasing.
bool is_irreducible(const CoreTuple& c, int w);

// Drive the core to an irreducible one through w-allowed rank-decreasing
// actions: the epsilon-normalization sweep and the decrement rotation run
// verbatim where their hypotheses hold, and a lowest-index greedy step
// covers the remaining reducible states.  Deterministic; every step is
// checked w-allowed at its pre-state.
ReductionTrace reduce_core(const CoreTuple& c, int w);

// The maximal-rank irreducible core: l_i = w + (i-1)(w-1) with all beads on
// the low runners.  w = 0 degenerates to the empty core.
CoreTuple rock_core(int p, int w);

// Sharp bound on the block rank of irreducible cores:
// p*w + (p(w-1)/2 + 1) * sum_{i=1..t} (i^2 (w-1) + i).
long long donovan_bound(int p, int w);

struct Representative {
  CoreTuple tuple;
  long long rank = 0;
  long long level = 0;
};

// All irreducible cores whose level is at most level(rock_core) + w, sorted
// by rank.  `budget` caps the number of lattice points scanned.
std::vector<Representative> enumerate_representatives(int p, int w, long long budget,
                                                      Exec exec = Exec::Serial);

} // namespace spinblock
