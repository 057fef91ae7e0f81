#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olog/instance.hpp"
#include "olog/schema.hpp"

namespace olog {

// Folds the arrow tables along p starting at e. Identity paths return e.
// Throws ELEMENT_NOT_IN_SOURCE, MALFORMED_PATH, or MISSING_IMAGE when the
// instance is not total along p.
ElementId eval_path(const OlogSchema& schema, const Instance& inst, const Path& p,
                    const ElementId& e);

enum class EquationVerdict { AllHold, Counterexample };

struct EquationWitness {
  ElementId element;
  ElementId lhs_result;
  ElementId rhs_result;
  friend bool operator==(const EquationWitness&, const EquationWitness&) = default;
};

struct EquationReport {
  PathEquation equation;
  EquationVerdict verdict = EquationVerdict::AllHold;
  std::optional<EquationWitness> witness;
};

// First counterexample in element order, or AllHold.
EquationReport check_equation(const OlogSchema& schema, const Instance& inst,
                              const PathEquation& eq);

// check_equation over schema.equations in declaration order.
std::vector<EquationReport> check_all_equations(const OlogSchema& schema, const Instance& inst);

using ElementPair = std::pair<ElementId, ElementId>;

struct PullbackResult {
  BoxId left_box;   // X, source of leg1
  BoxId right_box;  // Y, source of leg2
  BoxId base_box;   // Z
  // {(x, y) | leg1(x) = leg2(y)}, sorted by x then y.
  std::vector<ElementPair> pairs;
};

// Canonical fiber product of X --leg1--> Z <--leg2-- Y. Throws
// COSPAN_MISMATCH if the legs have different targets.
PullbackResult compute_pullback(const OlogSchema& schema, const Instance& inst,
                                const ArrowId& leg1, const ArrowId& leg2);

enum class FiberProductVerdict { Pass, Fail };
enum class FiberProductFailure { None, Collision, MissingPair, OutsidePullback };

struct FiberProductReport {
  FiberProductDecl decl;
  FiberProductVerdict verdict = FiberProductVerdict::Pass;
  FiberProductFailure failure = FiberProductFailure::None;
  // Collision: two apex elements with the same pair.
  // MissingPair: the pullback pair no apex element realises.
  // OutsidePullback: an apex element whose pair does not agree in Z.
  std::vector<ElementId> apex_elements;
  std::optional<ElementPair> pair;

  std::string describe() const;
};

// PASS iff e |-> (proj1(e), proj2(e)) is injective on the apex and its image
// is exactly the canonical pullback of the legs.
FiberProductReport verify_fiber_product(const OlogSchema& schema, const Instance& inst,
                                        const FiberProductDecl& decl);

std::string_view to_string(EquationVerdict v);
std::string_view to_string(FiberProductVerdict v);
std::string_view to_string(FiberProductFailure f);

}  // namespace olog
