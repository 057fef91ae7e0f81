#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olog/graph.hpp"

namespace olog {

enum class BlockKind { Brick, Glue, Lifeline };
enum class Domain { Protein, Social };
enum class Classification { Brittle, Ductile, Neither };

std::string_view to_string(BlockKind k);
std::string_view to_string(Domain d);
std::string_view to_string(Classification c);

struct BuildingBlock {
  std::string id;
  BlockKind kind = BlockKind::Brick;
  double failure_extension = 0;  // may be +inf
  double resting_extension = 0;
};

struct Segment {
  BuildingBlock glue;
  std::optional<BuildingBlock> lifeline;
};

// brick, segment, brick, ..., brick
struct ChainSystem {
  std::vector<BuildingBlock> bricks;
  std::vector<Segment> segments;
  Domain domain = Domain::Protein;

  bool has_lifelines() const;
};

// Throws INVALID_CHAIN when slot kinds, counts or extensions are wrong.
void validate_chain(const ChainSystem& chain);

struct Comparators {
  double eps_rel = 0.25;
  double kappa = 3.0;
};

// Throws PARAM_CONSTRAINT unless 0 < eps_rel < 1 and kappa > 1.
void validate_comparators(const Comparators& c);

// |R - r| <= eps_rel * max(|R|, |r|). Throws NONFINITE_INPUT.
bool roughly_equal(double R, double r, const Comparators& c);

// R = +inf, or R >= kappa * r with R > 0. Throws NONFINITE_r for r
// infinite, NaN or negative.
bool much_greater(double R, double r, const Comparators& c);

enum class Connector { Glue, Lifeline };

// Nodes are brick ids, edges follow the segments head to tail. Throws
// NO_LIFELINE if a segment lacks the requested connector.
Graph structure_graph(const ChainSystem& chain, Connector connector);

// Weakest link: each segment holds until both its connectors fail, the
// chain fails at the lowest brick or segment threshold.
double system_failure_extension(const ChainSystem& chain);

// Lowest glue failure extension.
double glue_failure_extension(const ChainSystem& chain);

// Throws INCONSISTENT_COMPARATORS if both predicates fire.
Classification classify(const ChainSystem& chain, const Comparators& c);

// Per-letter error probability at which a message of L letters arrives
// intact with probability tau: 1 - tau^(1/L). Throws DOMAIN.
double link_failure_noise(double tau, int L);

// Bisection on the empirical intact-message rate. Throws DOMAIN for
// trials < 10^4 or bad tau/L.
double estimate_link_failure_noise_mc(int L, double tau, std::int64_t trials, std::uint64_t seed);

}  // namespace olog
