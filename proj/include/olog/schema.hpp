#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olog/error.hpp"
#include "olog/natural_order.hpp"

namespace olog {

using BoxId = std::string;
using ArrowId = std::string;

// Metadata tags carried by declarations in the text format.
inline constexpr std::string_view kTagConjecture = "conjecture";
inline constexpr std::string_view kTagReconstructed = "reconstructed";

struct BoxDecl {
  BoxId id;
  std::string label;
  std::vector<std::string> tags;

  friend bool operator==(const BoxDecl&, const BoxDecl&) = default;
};

struct ArrowDecl {
  ArrowId id;
  BoxId src;
  BoxId dst;
  std::string label;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;

  friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

// A composable arrow sequence. An empty arrow list is the identity at start.
struct Path {
  BoxId start;
  std::vector<ArrowId> arrows;

  static Path identity(BoxId box) { return Path{std::move(box), {}}; }
  bool is_identity() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct PathEquation {
  Path lhs;
  Path rhs;
  std::string note;

  friend bool operator==(const PathEquation&, const PathEquation&) = default;
};

// apex --proj1--> X --leg1--> Z <--leg2-- Y <--proj2-- apex
struct FiberProductDecl {
  BoxId apex;
  ArrowId proj1;
  ArrowId proj2;
  ArrowId leg1;
  ArrowId leg2;

  // The square proj1;leg1 = proj2;leg2 that the declaration presupposes.
  PathEquation square() const;

  friend bool operator==(const FiberProductDecl&, const FiberProductDecl&) = default;
};

class OlogSchema {
 public:
  std::string name;
  std::vector<BoxDecl> boxes;
  std::vector<ArrowDecl> arrows;
  std::vector<PathEquation> equations;
  std::vector<FiberProductDecl> fiber_products;

  const BoxDecl* find_box(std::string_view id) const;
  const ArrowDecl* find_arrow(std::string_view id) const;

  // Appends the commuting square of every fiber product that is not already
  // among the equations (in either orientation). Returns how many were added.
  std::size_t add_missing_fiber_product_squares();

  // True if `eq` (or its mirror) is declared.
  bool declares_equation(const Path& a, const Path& b) const;

  friend bool operator==(const OlogSchema&, const OlogSchema&) = default;
};

// Returns one Diagnostic per violated invariant; empty iff the schema is
// well formed. Pure: the schema is not modified.
std::vector<Diagnostic> validate_schema(const OlogSchema& schema);

// (start, end) of a path. Throws MALFORMED_PATH if the arrows do not chain
// or an arrow is unknown.
std::pair<BoxId, BoxId> path_endpoints(const OlogSchema& schema, const Path& p);

// Concatenation p;q. Throws ENDPOINT_MISMATCH if p does not end where q starts.
Path compose(const OlogSchema& schema, const Path& p, const Path& q);

// "A → 3 → D → 9 → H" style rendering used in reports.
std::string to_string(const OlogSchema& schema, const Path& p);
// "[3,9]" rendering used by the text format.
std::string arrow_list(const Path& p);

}  // namespace olog
