#include "spinblock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinblock {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(int p) {
  if (!is_odd_prime(p))
    throw DomainError("modulus must be an odd prime, got " + std::to_string(p));
}

int pbar_residue(long long m, int p) {
  require_odd_prime(p);
  if (m < 0) throw DomainError("pbar_residue needs m >= 0");
  int r = static_cast<int>(m % p);
  return r <= (p - 1) / 2 ? r : p - 1 - r;
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("strict partition parts must be positive");
    if (i > 0 && parts_[i - 1] <= parts_[i])
      throw DomainError("strict partition parts must strictly decrease");
  }
}

long long StrictPartition::rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

PStrictPartition::PStrictPartition(std::vector<int> parts, int p)
    : p_(p), parts_(std::move(parts)) {
  require_odd_prime(p);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("p-strict partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw DomainError("p-strict partition parts must weakly decrease");
    if (i > 0 && parts_[i - 1] == parts_[i] && parts_[i] % p != 0)
      throw DomainError("repeated part " + std::to_string(parts_[i]) +
                        " not divisible by " + std::to_string(p));
  }
}

PStrictPartition::PStrictPartition(const StrictPartition& s, int p)
    : PStrictPartition(s.parts(), p) {}

long long PStrictPartition::rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

StrictPartition PStrictPartition::to_strict() const {
  return StrictPartition(parts_);
}

long long Content::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

Content content(const PStrictPartition& lambda) {
  int p = lambda.p();
  int t = (p - 1) / 2;
  Content c{p, std::vector<long long>(t + 1, 0)};
  // Residue counts of one full column period 0..p-1: residue 0 and each
  // middle residue occur twice, residue t once.
  for (int part : lambda.parts()) {
    long long q = part / p;
    int r = part % p;
    c.counts[0] += 2 * q;
    for (int i = 1; i < t; ++i) c.counts[i] += 2 * q;
    c.counts[t] += q;
    for (int s = 0; s < r; ++s) c.counts[pbar_residue(s, p)] += 1;
  }
  return c;
}

int parity(const StrictPartition& lambda) {
  return static_cast<int>((lambda.rank() + lambda.size()) % 2);
}

int block_parity(const StrictPartition& core, long long weight) {
  int e = parity(core);
  return weight % 2 == 0 ? e : 1 - e;
}

bool is_p_restricted(const PStrictPartition& lambda) {
  int p = lambda.p();
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int next = i + 1 < parts.size() ? parts[i + 1] : 0;
    int gap = parts[i] - next;
    if (gap > p) return false;
    if (gap == p && parts[i] % p == 0) return false;
  }
  return true;
}

namespace {

void strict_rec(int n, int max_part, std::vector<int>& acc,
                std::vector<StrictPartition>& out) {
  if (n == 0) {
    out.push_back(StrictPartition(acc));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    // remaining n-k must be expressible with distinct parts < k
    if (n - k > (k - 1) * k / 2) break;
    acc.push_back(k);
    strict_rec(n - k, k - 1, acc, out);
    acc.pop_back();
  }
}

void p_strict_rec(int n, int max_part, int p, std::vector<int>& acc,
                  std::vector<PStrictPartition>& out) {
  if (n == 0) {
    out.push_back(PStrictPartition(acc, p));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    acc.push_back(k);
    // a part divisible by p may repeat, anything else may not
    p_strict_rec(n - k, k % p == 0 ? k : k - 1, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<StrictPartition> enumerate_strict(int n) {
  if (n < 0) throw DomainError("enumerate_strict needs n >= 0");
  std::vector<StrictPartition> out;
  std::vector<int> acc;
  strict_rec(n, n, acc, out);
  return out;
}

std::vector<PStrictPartition> enumerate_p_strict(int n, int p) {
  require_odd_prime(p);
  if (n < 0) throw DomainError("enumerate_p_strict needs n >= 0");
  std::vector<PStrictPartition> out;
  std::vector<int> acc;
  p_strict_rec(n, n, p, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string parts_string(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

} // namespace

std::string to_string(const StrictPartition& lambda) { return parts_string(lambda.parts()); }
std::string to_string(const PStrictPartition& lambda) { return parts_string(lambda.parts()); }

} // namespace spinblock
