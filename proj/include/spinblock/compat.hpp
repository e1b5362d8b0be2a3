#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinblock/exec.hpp"
#include "spinblock/partition.hpp"

namespace spinblock {

// Number of ways to shrink `from` to `to` one box at a time with every
// intermediate shape a strict partition.  Zero when the diagram of `to` is
// not contained in `from`; one when they coincide.
std::uint64_t count_paths(const StrictPartition& from, const StrictPartition& to);

// Closed form for a core and its lower-rank involution image: alpha! for
// index > 0 and alpha!/2^((alpha-1)/2) for index 0, alpha the rank drop.
// Throws DomainError unless mu really is the image of nu and of lower rank.
std::uint64_t count_paths_closed(const StrictPartition& nu, const StrictPartition& mu,
                                 int index, int p);

// Moves needed to insert n bead pairs onto a complementary runner pair
// already holding `beads` beads on one side: n^2 + beads * n.
long long pair_insertion_cost(long long n_pairs, long long beads);

struct CompatibilityReport {
  int p = 3;
  int index = 0;
  int w = 0;
  StrictPartition nu;
  StrictPartition mu;
  bool trivial = false; // the involution fixed nu; nothing to check
  bool cond1 = false;   // involution maps the nu-side set bijectively onto the mu-side
  bool cond2 = false;   // path counts vanish off the matching and agree on it
  bool cond3 = false;   // parity sums agree with the core pair
  long long jn_size = 0;
  long long jm_size = 0;
  std::uint64_t core_paths = 0;
  long long pairs_checked = 0;

  struct PathFailure {
    StrictPartition lambda;
    StrictPartition chi;
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
  };
  std::vector<PathFailure> failures; // first few condition-2 counterexamples

  double elapsed_seconds = 0.0;

  bool passed() const { return trivial || (cond1 && cond2 && cond3); }
};

// Brute-force check of the three compatibility conditions for the core nu,
// involution index and weight w, by enumerating the full character sets on
// both sides.  Throws DomainError when the involution raises the rank and
// BudgetError when the pair count exceeds `budget`.
CompatibilityReport verify_w_compatible(const StrictPartition& nu, int index, int w,
                                        int p, long long budget,
                                        Exec exec = Exec::Serial);

// The double covers of the symmetric and alternating groups share the
// multiplicity formulas below; the flag names which family is meant.
enum class Family { Symmetric, Alternating };

// 2^((alpha - alpha%2 - eps_lambda - eps_chi)/2) * beta for alpha >= 2;
// alpha = 1 forces beta = 1 and returns 1.  Throws DomainError when the
// exponent is not a nonnegative integer.
long long branching_multiplicity(int alpha, int eps_alpha, int eps_lambda,
                                 int eps_chi, long long beta,
                                 Family family = Family::Symmetric);

// 2^((alpha - alpha%2)/2) * beta.
long long multiplicity_row_sum(int alpha, long long beta,
                               Family family = Family::Symmetric);

// 2^((alpha-1)/2) * beta for odd alpha, 2^(alpha/2) * beta for even.
long long idempotent_count(int alpha, long long beta,
                           Family family = Family::Symmetric);

} // namespace spinblock
