#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "olog/error.hpp"
#include "olog/graph.hpp"
#include "olog/natural_order.hpp"
#include "olog/schema.hpp"

namespace olog {

using ElementId = std::string;

struct RealPair {
  double x = 0;
  double y = 0;
  friend bool operator==(const RealPair&, const RealPair&) = default;
  friend auto operator<=>(const RealPair&, const RealPair&) = default;
};

struct Text {
  std::string value;
  friend bool operator==(const Text&, const Text&) = default;
  friend auto operator<=>(const Text&, const Text&) = default;
};

// Optional literal attached to an element. Reals may be +inf (an
// unbreakable building block).
using Payload = std::variant<std::monostate, double, RealPair, Graph, Text>;

enum class PayloadKind { None, Real, Pair, Graph, Text };

PayloadKind kind_of(const Payload& p);
std::string_view to_string(PayloadKind k);

using ElementSet = IdMap<Payload>;
using FunctionTable = IdMap<ElementId>;

struct Instance {
  std::string name;
  std::string schema_name;
  // Boxes with no entry are empty sets.
  IdMap<ElementSet> sets;
  // Arrows with no entry have empty tables.
  IdMap<FunctionTable> functions;

  const ElementSet& set(std::string_view box) const;
  const FunctionTable& table(std::string_view arrow) const;
  bool contains(std::string_view box, std::string_view element) const;
  // Image of `element` under `arrow`, or nullptr if the table has no entry.
  const ElementId* image(std::string_view arrow, std::string_view element) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Diagnostics for totality (MISSING_IMAGE), codomain (IMAGE_NOT_IN_TARGET),
// stray entries (EXTRA_ENTRY), undeclared boxes/arrows and payload
// discipline (PAYLOAD_MIXED). Empty iff valid. Throws SCHEMA_MISMATCH if
// the instance names another schema.
std::vector<Diagnostic> validate_instance(const OlogSchema& schema, const Instance& inst);

// Kind shared by every element of the box, None for an empty box; nullopt
// when mixed.
std::optional<PayloadKind> box_payload_kind(const Instance& inst, std::string_view box);

}  // namespace olog
