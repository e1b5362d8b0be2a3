#include "spinblock/compat.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "spinblock/abacus.hpp"
#include "spinblock/scopes.hpp"

namespace spinblock {

namespace {

bool contains_diagram(const std::vector<int>& outer, const std::vector<int>& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t r = 0; r < inner.size(); ++r)
    if (inner[r] > outer[r]) return false;
  return true;
}

std::uint64_t count_rec(const std::vector<int>& cur, const std::vector<int>& target,
                        std::map<std::vector<int>, std::uint64_t>& memo) {
  if (cur == target) return 1;
  auto it = memo.find(cur);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < cur.size(); ++r) {
    int floor_r = r < target.size() ? target[r] : 0;
    if (cur[r] <= floor_r) continue;
    int below = r + 1 < cur.size() ? cur[r + 1] : 0;
    int nv = cur[r] - 1;
    // stay a strict partition: equal neighbors are never allowed
    if (nv != 0 && nv <= below) continue;
    std::vector<int> next = cur;
    if (nv == 0)
      next.erase(next.begin() + static_cast<long>(r));
    else
      next[r] = nv;
    total += count_rec(next, target, memo);
  }
  memo[cur] = total;
  return total;
}

std::uint64_t factorial_checked(int n) {
  if (n < 0 || n > 20) throw BudgetError("factorial argument must be in 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

} // namespace

std::uint64_t count_paths(const StrictPartition& from, const StrictPartition& to) {
  if (!contains_diagram(from.parts(), to.parts())) return 0;
  std::map<std::vector<int>, std::uint64_t> memo;
  return count_rec(from.parts(), to.parts(), memo);
}

std::uint64_t count_paths_closed(const StrictPartition& nu, const StrictPartition& mu,
                                 int index, int p) {
  if (!(scopes_involution(index, nu, p) == mu))
    throw DomainError("mu is not the involution image of nu");
  long long drop = nu.rank() - mu.rank();
  if (drop <= 0) throw DomainError("closed path count needs a rank-decreasing pair");
  int alpha = static_cast<int>(drop);
  std::uint64_t f = factorial_checked(alpha);
  if (index != 0) return f;
  if (alpha % 2 == 0)
    throw DomainError("index-0 rank drop must be odd");
  for (int k = 0; k < (alpha - 1) / 2; ++k) f /= 2;
  return f;
}

long long pair_insertion_cost(long long n_pairs, long long beads) {
  if (n_pairs < 0 || beads < 0) throw DomainError("insertion cost needs nonnegative arguments");
  return n_pairs * n_pairs + beads * n_pairs;
}

CompatibilityReport verify_w_compatible(const StrictPartition& nu, int index, int w,
                                        int p, long long budget, Exec exec) {
  auto t0 = std::chrono::steady_clock::now();
  require_odd_prime(p);
  if (w < 0) throw DomainError("weight must be >= 0");
  if (budget <= 0) throw DomainError("budget must be positive");
  if (!is_pbar_core(nu, p)) throw DomainError("nu must be a core");

  CompatibilityReport rep;
  rep.p = p;
  rep.index = index;
  rep.w = w;
  rep.nu = nu;
  rep.mu = scopes_involution(index, nu, p);

  if (rep.mu == nu) {
    rep.trivial = true;
    return rep;
  }
  if (rep.mu.rank() >= nu.rank())
    throw DomainError("involution must not raise the rank here");

  long long n = nu.rank() + static_cast<long long>(p) * w;
  long long m = rep.mu.rank() + static_cast<long long>(p) * w;
  if (n > 64)
    throw BudgetError("rank " + std::to_string(n) + " too large to enumerate");

  auto members_of = [p](const StrictPartition& core, long long size) {
    std::vector<StrictPartition> out;
    for (const StrictPartition& lam : enumerate_strict(static_cast<int>(size))) {
      CoreAndWeight cw = pbar_core(lam, p);
      if (cw.core == core) out.push_back(lam);
    }
    return out;
  };
  std::vector<StrictPartition> jn = members_of(nu, n);
  std::vector<StrictPartition> jm = members_of(rep.mu, m);
  rep.jn_size = static_cast<long long>(jn.size());
  rep.jm_size = static_cast<long long>(jm.size());

  // condition 1: the involution restricts to a bijection between the sets
  std::vector<StrictPartition> images;
  images.reserve(jn.size());
  for (const StrictPartition& lam : jn) images.push_back(scopes_involution(index, lam, p));
  std::vector<StrictPartition> image_sorted = images;
  std::sort(image_sorted.begin(), image_sorted.end());
  std::vector<StrictPartition> jm_sorted = jm;
  std::sort(jm_sorted.begin(), jm_sorted.end());
  rep.cond1 = image_sorted == jm_sorted;

  // condition 3: parity sums match the core pair
  int core_sum = (parity(nu) + parity(rep.mu)) % 2;
  rep.cond3 = true;
  for (std::size_t k = 0; k < jn.size(); ++k)
    if ((parity(jn[k]) + parity(images[k])) % 2 != core_sum) {
      rep.cond3 = false;
      break;
    }

  // condition 2: path counts vanish off the matching and equal the core
  // count on it
  rep.core_paths = count_paths(nu, rep.mu);
  long long pairs = static_cast<long long>(jn.size()) * static_cast<long long>(jm.size());
  if (pairs > budget)
    throw BudgetError("pair count " + std::to_string(pairs) + " exceeds budget");
  rep.pairs_checked = pairs;
  rep.cond2 = true;

  int jn_count = static_cast<int>(jn.size());
  std::vector<std::vector<CompatibilityReport::PathFailure>> fails(
      std::max(jn_count, 1));
  bool ok = true;
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int a = 0; a < jn_count; ++a) {
      for (const StrictPartition& chi : jm) {
        std::uint64_t expected = chi == images[a] ? rep.core_paths : 0;
        std::uint64_t got = count_paths(jn[a], chi);
        if (got != expected) fails[a].push_back({jn[a], chi, got, expected});
      }
    }
    for (const auto& part : fails)
      if (!part.empty()) ok = false;
  } else {
    for (int a = 0; a < jn_count; ++a)
      for (const StrictPartition& chi : jm) {
        std::uint64_t expected = chi == images[a] ? rep.core_paths : 0;
        std::uint64_t got = count_paths(jn[a], chi);
        if (got != expected) {
          fails[a].push_back({jn[a], chi, got, expected});
          ok = false;
        }
      }
  }
  rep.cond2 = ok;
  for (const auto& part : fails)
    for (const auto& f : part)
      if (rep.failures.size() < 16) rep.failures.push_back(f);

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

long long power_of_two_times(int exponent, long long beta) {
  if (exponent < 0) throw DomainError("inconsistent parities: negative exponent");
  if (exponent > 62) throw BudgetError("multiplicity exponent too large");
  return (1LL << exponent) * beta;
}

} // namespace

long long branching_multiplicity(int alpha, int eps_alpha, int eps_lambda,
                                 int eps_chi, long long beta, Family family) {
  (void)family; // both families follow the same counts
  if (beta < 0) throw DomainError("beta must be >= 0");
  if (eps_lambda != 0 && eps_lambda != 1) throw DomainError("eps_lambda must be 0 or 1");
  if (eps_chi != 0 && eps_chi != 1) throw DomainError("eps_chi must be 0 or 1");
  if (alpha == 1) {
    if (beta != 1) throw DomainError("a single-box step forces beta = 1");
    return 1;
  }
  if (alpha < 1) throw DomainError("alpha must be >= 1");
  if (eps_alpha != alpha % 2) throw DomainError("eps_alpha must equal alpha mod 2");
  int numerator = alpha - eps_alpha - eps_lambda - eps_chi;
  if (numerator % 2 != 0)
    throw DomainError("inconsistent parities: odd multiplicity exponent");
  return power_of_two_times(numerator / 2, beta);
}

long long multiplicity_row_sum(int alpha, long long beta, Family family) {
  (void)family;
  if (alpha < 1 || beta < 1) throw DomainError("alpha and beta must be >= 1");
  return power_of_two_times((alpha - alpha % 2) / 2, beta);
}

long long idempotent_count(int alpha, long long beta, Family family) {
  (void)family;
  if (alpha < 1 || beta < 1) throw DomainError("alpha and beta must be >= 1");
  int exponent = alpha % 2 == 1 ? (alpha - 1) / 2 : alpha / 2;
  return power_of_two_times(exponent, beta);
}

} // namespace spinblock
