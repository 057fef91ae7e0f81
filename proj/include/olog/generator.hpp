#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "olog/chain.hpp"
#include "olog/instance.hpp"
#include "olog/schema.hpp"

namespace olog {

struct SimParams {
  int brick_count = 9;
  double glue_failure = 20.6;
  bool lifeline_present = true;
  double lifeline_resting = 23.45;
  double lifeline_failure = 100;
  double brick_failure = std::numeric_limits<double>::infinity();
  Domain domain = Domain::Protein;
  std::uint64_t seed = 0;
};

// Alpha-helix reading: extensions in Angstrom.
SimParams protein_defaults();
// 100 rooms; glue failure is the per-letter noise at which a 50-letter
// message gets through half the time; bricks and passageways never fail.
SimParams social_defaults();
// The protein numbers reinterpreted as noise levels, 9 rooms.
SimParams matched_social_defaults();

// Draws parameters satisfying the brick/glue, brick/strong-glue and
// lifeline constraints. Deterministic in `seed`.
SimParams random_params(std::uint64_t seed, bool lifeline, Domain domain, const Comparators& c);

// The chain the parameters describe. Throws PARAM_CONSTRAINT.
ChainSystem make_chain(const SimParams& params);

// Throws PARAM_CONSTRAINT naming the box whose constraint fails: N (brick
// much greater than glue) and I (lifeline rest roughly equal to glue
// failure). Brick/lifeline pairs that are not roughly equal are allowed;
// they leave L, K and I empty.
void check_params(const SimParams& params, const Comparators& c);

struct GeneratedInstance {
  Instance instance;
  ChainSystem chain;
  double system_failure = 0;
  double glue_failure = 0;
  Classification classification = Classification::Neither;
};

// Populates every box of the bundled schema for one chain system. Fiber
// product boxes are built as canonical pullbacks, and the result is
// checked against every equation and fiber product before returning.
// Throws PARAM_CONSTRAINT, or CONJECTURE_FAILED when a lifeline chain is
// not ductile or a lifeline-free chain is not brittle.
GeneratedInstance generate_instance(const SimParams& params, const OlogSchema& schema,
                                    const Comparators& c = {}, std::string name = "");

}  // namespace olog
