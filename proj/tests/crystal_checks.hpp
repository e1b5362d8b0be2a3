#pragma once

// Shared crystal/block-graph coherence checks, used by the unit tests at
// small sizes and by the acceptance suite at the documented sizes.  Every
// violation is reported as a line in `errors`.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinblock/crystal.hpp"
#include "spinblock/lie.hpp"
#include "spinblock/scopes.hpp"

namespace spinblock::checks {

struct Result {
  long long checked = 0;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
  void fail(const std::string& msg) {
    if (errors.size() < 32) errors.push_back(msg);
  }
};

// All restricted p-strict partitions of rank <= max_rank.
inline std::vector<PStrictPartition> restricted_up_to(int p, int max_rank) {
  std::vector<PStrictPartition> out;
  for (int n = 0; n <= max_rank; ++n)
    for (const auto& lam : enumerate_p_strict(n, p))
      if (is_p_restricted(lam)) out.push_back(lam);
  return out;
}

// The f-closure of the empty partition is exactly the restricted set, and
// e/f are partial inverses with the expected bookkeeping.
inline Result check_crystal_operators(int p, int max_rank) {
  Result res;
  int t = (p - 1) / 2;

  std::set<PStrictPartition> reached{PStrictPartition(p)};
  std::vector<PStrictPartition> layer{PStrictPartition(p)};
  for (int n = 0; n < max_rank; ++n) {
    std::vector<PStrictPartition> next;
    for (const auto& lam : layer)
      for (int i = 0; i <= t; ++i)
        if (auto up = apply_f(lam, i); up && reached.insert(*up).second)
          next.push_back(*up);
    layer = std::move(next);
  }
  std::vector<PStrictPartition> expected = restricted_up_to(p, max_rank);
  if (reached.size() != expected.size())
    res.fail("f-closure has " + std::to_string(reached.size()) + " vertices, " +
             std::to_string(expected.size()) + " restricted partitions exist");
  for (const auto& lam : expected)
    if (!reached.count(lam))
      res.fail("restricted partition " + to_string(lam) + " not reached from ()");

  CartanData cartan = cartan_data(p);
  for (const auto& lam : expected) {
    Content gamma = content(lam);
    for (int i = 0; i <= t; ++i) {
      ++res.checked;
      ReducedSignature sig = reduced_signature(lam, i);
      long long eps = static_cast<long long>(sig.normals.size());
      long long phi = static_cast<long long>(sig.conormals.size());

      // phi - eps equals the pairing of the weight with the coroot
      long long pairing = (i == 0 ? 1 : 0);
      for (int j = 0; j <= t; ++j) pairing -= gamma.counts[j] * cartan.C[i][j];
      if (phi - eps != pairing)
        res.fail("signature count off at " + to_string(lam) + " residue " +
                 std::to_string(i));

      auto down = apply_e(lam, i);
      if (down.has_value() != (eps > 0))
        res.fail("removal defined iff a normal node exists: " + to_string(lam));
      if (down) {
        if (!is_p_restricted(*down))
          res.fail("removal left the restricted set: " + to_string(lam));
        auto back = apply_f(*down, i);
        if (!back || !(*back == lam))
          res.fail("add after remove lost " + to_string(lam));
        // exactly one box of residue i leaves
        Content dgamma = content(*down);
        for (int j = 0; j <= t; ++j) {
          long long want = j == i ? 1 : 0;
          if (gamma.counts[j] - dgamma.counts[j] != want)
            res.fail("content bookkeeping off at " + to_string(lam));
        }
        if (lam.rank() - down->rank() != 1)
          res.fail("removal changed the rank by more than one box");
      }
      auto up = apply_f(lam, i);
      if (up.has_value() != (phi > 0))
        res.fail("addition defined iff a conormal node exists: " + to_string(lam));
      if (up && up->rank() <= max_rank) {
        if (!is_p_restricted(*up))
          res.fail("addition left the restricted set: " + to_string(lam));
        auto back = apply_e(*up, i);
        if (!back || !(*back == lam))
          res.fail("remove after add lost " + to_string(lam));
      }

      // nilpotency: repeated removal terminates within rank steps
      PStrictPartition cur = lam;
      long long steps = 0;
      while (auto next = apply_e(cur, i)) {
        cur = *next;
        if (++steps > lam.rank()) {
          res.fail("removal chain did not terminate at " + to_string(lam));
          break;
        }
      }
    }
  }

  // blocks see well-defined edges: two partitions in one block map into one
  // block
  std::map<std::pair<BlockLabel, int>, BlockLabel> edge_image;
  for (const auto& lam : expected) {
    BlockLabel b = block_of(lam);
    for (int i = 0; i <= t; ++i) {
      auto down = apply_e(lam, i);
      if (!down) continue;
      BlockLabel image = block_of(*down);
      auto [it, inserted] = edge_image.try_emplace({b, i}, image);
      if (!inserted && !(it->second == image))
        res.fail("block maps to two blocks under residue " + std::to_string(i));
    }
  }
  return res;
}

// String extremality against the involution thresholds.
inline Result check_string_extremality(const BlockGraph& g) {
  Result res;
  int t = (g.p - 1) / 2;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const BlockLabel& b = g.vertices[v];
    CoreTuple c = core_tuple(b.core, g.p);
    for (int i = 0; i <= t; ++i) {
      ++res.checked;
      CoreTuple image = scopes_involution(i, c);
      long long change = rank_from_tuple(image) - rank_from_tuple(c);
      bool allowed = is_w_allowed(i, c, b.weight);
      bool has_down = g.down[v][i] != -1;
      bool has_up = g.up[v][i] != -1;
      bool up_certain = b.rank() + 1 <= g.max_rank;

      // interior blocks never pass the threshold
      if (has_down && has_up && allowed)
        res.fail("interior block " + to_string(b) + " passes threshold " +
                 std::to_string(i));
      if (change == 0) {
        // trivial action: allowed exactly on blocks isolated in direction i
        if (allowed && (has_down || has_up))
          res.fail("trivial action allowed on non-isolated " + to_string(b));
        if (up_certain && !has_down && !has_up && !allowed)
          res.fail("isolated block fails trivial threshold " + to_string(b));
        continue;
      }
      if (change < 0) {
        // the involution exits through the top of the string
        if (allowed && has_up)
          res.fail("threshold holds above an upward edge at " + to_string(b));
        if (up_certain && !has_up && !allowed)
          res.fail("rank-larger string end fails its threshold: " + to_string(b) +
                   " direction " + std::to_string(i));
        if (up_certain && !has_up) {
          // the opposite end is the involution image at the same weight
          IString s = maximal_i_string(b, i, g);
          BlockLabel other = s.blocks.front();
          if (!(other.core == core_from_tuple(image)) || other.weight != b.weight)
            res.fail("string through " + to_string(b) + " does not end at the image");
        }
      } else {
        // rank-increasing involutions exit through the bottom
        if (allowed && has_down)
          res.fail("threshold holds below a downward edge at " + to_string(b));
        // the threshold detects the bottom end except in the one-sided
        // middle case with equal sides
        bool two_sided =
            i == 0 || i == t || c.pairs()[i - 1].side != c.pairs()[i].side;
        if (two_sided && !has_down && !allowed)
          res.fail("rank-smaller string end fails its threshold: " + to_string(b) +
                   " direction " + std::to_string(i));
        if (!has_down) {
          IString s = maximal_i_string(b, i, g);
          if (s.upper_end_certain) {
            BlockLabel other = s.blocks.back();
            if (!(other.core == core_from_tuple(image)) || other.weight != b.weight)
              res.fail("string through " + to_string(b) +
                       " does not end at the image");
          }
        }
      }
    }
  }
  return res;
}

} // namespace spinblock::checks
