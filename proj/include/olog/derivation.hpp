#pragma once

#include <cstddef>
#include <vector>

#include "olog/schema.hpp"

namespace olog {

// One rewrite: at `position` (arrow offset) the subpath matching one side of
// equation `equation` (0-based index into schema.equations) is replaced by
// the other side. `forward` means lhs was replaced by rhs.
struct RewriteStep {
  std::size_t equation = 0;
  bool forward = true;
  std::size_t position = 0;
  Path result;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

enum class Derivability { Holds, Unknown };

struct Derivation {
  Derivability verdict = Derivability::Unknown;
  // When Holds: the rewrite sequence taking p to q (empty if p == q).
  std::vector<RewriteStep> witness;
  // Distinct paths visited by the search.
  std::size_t explored = 0;
  // True when every path reachable from p was visited without meeting q.
  // The verdict is still Unknown; callers may report the class as closed.
  bool exhausted = false;
};

// Default cap on distinct paths the search may hold in memory.
inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Bounded bidirectional rewriting with the declared equations. Holds iff q is
// reachable from p within max_steps rewrites; never claims inequality.
// Throws ENDPOINT_MISMATCH if p and q do not share both endpoints.
Derivation derive_equality(const OlogSchema& schema, const Path& p, const Path& q,
                           std::size_t max_steps, std::size_t state_cap = kDefaultStateCap);

// All single-step rewrites of `p`, in deterministic order.
std::vector<RewriteStep> rewrites_of(const OlogSchema& schema, const Path& p);

// Re-applies a witness from `p`; true iff every step is a legal rewrite and
// the last result equals `q`.
bool replay_witness(const OlogSchema& schema, const Path& p, const Path& q,
                    const std::vector<RewriteStep>& witness);

}  // namespace olog
