#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spinblock/errors.hpp"

namespace spinblock {

bool is_odd_prime(int p);

// Throws DomainError unless p is an odd prime >= 3.
void require_odd_prime(int p);

// Residue of the integer m folded into {0..(p-1)/2}: the plain residue r for
// r <= (p-1)/2, and p-1-r above.  For p=5 the values on 0,1,2,... read
// 0,1,2,1,0,0,1,2,1,0,...
int pbar_residue(long long m, int p);

// Partition with strictly decreasing positive parts.
class StrictPartition {
public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long rank() const;

  auto operator<=>(const StrictPartition&) const = default;

private:
  std::vector<int> parts_;
};

// Weakly decreasing positive parts where only parts divisible by p may
// repeat.  Carries its modulus.
class PStrictPartition {
public:
  explicit PStrictPartition(int p) : p_(p) { require_odd_prime(p); }
  PStrictPartition(std::vector<int> parts, int p);
  PStrictPartition(const StrictPartition& s, int p);

  int p() const { return p_; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long rank() const;

  // Throws DomainError if any part repeats.
  StrictPartition to_strict() const;

  auto operator<=>(const PStrictPartition&) const = default;

private:
  int p_ = 3;
  std::vector<int> parts_;
};

// Box counts per residue class, gamma_0..gamma_t.
struct Content {
  int p = 0;
  std::vector<long long> counts;

  long long total() const;
  auto operator<=>(const Content&) const = default;
};

// gamma_i = number of boxes of residue i; box (r, s) carries the residue of
// s-1, so each row reads 0,1,...,t,...,1,0 repeated.
Content content(const PStrictPartition& lambda);

// (rank + number of parts) mod 2.
int parity(const StrictPartition& lambda);

// Parity of the block core^weight: each added bar flips the core parity.
int block_parity(const StrictPartition& core, long long weight);

// Consecutive-part gaps at most p, with equality only for parts not
// divisible by p; the last part is compared against 0.
bool is_p_restricted(const PStrictPartition& lambda);

// All strict partitions of n in lexicographically decreasing order.
std::vector<StrictPartition> enumerate_strict(int n);

// All p-strict partitions of n, sorted.
std::vector<PStrictPartition> enumerate_p_strict(int n, int p);

std::string to_string(const StrictPartition& lambda);
std::string to_string(const PStrictPartition& lambda);

} // namespace spinblock
