#pragma once

#include <cstddef>
#include <string>

#include "olog/instance.hpp"
#include "olog/schema.hpp"

namespace olog {

enum class IsoVerdict { Found, NotFound };

std::string_view to_string(IsoVerdict v);

// Per-box bijection: box -> (element of a -> element of b).
using InstanceBijection = IdMap<IdMap<ElementId>>;

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotFound;
  InstanceBijection bijections;  // when Found
  std::string failure_reason;    // when NotFound
  std::size_t search_nodes = 0;  // candidate assignments tried
};

// Natural isomorphism search between two instances of one schema. Payload
// values are never compared; payload kinds per box must agree.
//
// Pipeline: cardinality and payload-kind pre-checks, joint colour
// refinement of both instances (box, images and preimage multisets per
// arrow), then backtracking over colour classes with forward propagation
// along every arrow. Deterministic: candidates are tried in element order.
// Throws SCHEMA_MISMATCH if either instance names another schema.
IsoResult check_instance_isomorphism(const OlogSchema& schema, const Instance& a,
                                     const Instance& b,
                                     std::size_t search_budget = 50'000'000);

// True iff `beta` is total and bijective on every box and commutes with
// every arrow table. On failure `why` (if given) names the first problem.
bool is_natural_isomorphism(const OlogSchema& schema, const Instance& a, const Instance& b,
                            const InstanceBijection& beta, std::string* why = nullptr);

}  // namespace olog
