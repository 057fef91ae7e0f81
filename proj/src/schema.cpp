#include "olog/schema.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace olog {

bool ArrowDecl::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

PathEquation FiberProductDecl::square() const {
  return PathEquation{Path{apex, {proj1, leg1}}, Path{apex, {proj2, leg2}},
                      "fiber product square"};
}

const BoxDecl* OlogSchema::find_box(std::string_view id) const {
  auto it = std::find_if(boxes.begin(), boxes.end(),
                         [&](const BoxDecl& b) { return b.id == id; });
  return it == boxes.end() ? nullptr : &*it;
}

const ArrowDecl* OlogSchema::find_arrow(std::string_view id) const {
  auto it = std::find_if(arrows.begin(), arrows.end(),
                         [&](const ArrowDecl& a) { return a.id == id; });
  return it == arrows.end() ? nullptr : &*it;
}

bool OlogSchema::declares_equation(const Path& a, const Path& b) const {
  return std::any_of(equations.begin(), equations.end(), [&](const PathEquation& eq) {
    return (eq.lhs == a && eq.rhs == b) || (eq.lhs == b && eq.rhs == a);
  });
}

std::size_t OlogSchema::add_missing_fiber_product_squares() {
  std::size_t added = 0;
  for (const auto& fp : fiber_products) {
    PathEquation sq = fp.square();
    if (!declares_equation(sq.lhs, sq.rhs)) {
      equations.push_back(std::move(sq));
      ++added;
    }
  }
  return added;
}

std::pair<BoxId, BoxId> path_endpoints(const OlogSchema& schema, const Path& p) {
  if (schema.find_box(p.start) == nullptr) {
    throw OlogError(codes::kMalformedPath, "path starts at undeclared box '" + p.start + "'");
  }
  BoxId at = p.start;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    const ArrowDecl* a = schema.find_arrow(p.arrows[k]);
    if (a == nullptr) {
      throw OlogError(codes::kMalformedPath, "unknown arrow '" + p.arrows[k] + "'");
    }
    if (a->src != at) {
      std::ostringstream msg;
      msg << "arrow " << a->id << " starts at " << a->src << ", expected " << at
          << " (position " << k + 1 << ")";
      throw OlogError(codes::kMalformedPath, msg.str());
    }
    at = a->dst;
  }
  return {p.start, at};
}

Path compose(const OlogSchema& schema, const Path& p, const Path& q) {
  BoxId p_end;
  try {
    p_end = path_endpoints(schema, p).second;
    path_endpoints(schema, q);
  } catch (const OlogError& e) {
    throw OlogError(codes::kEndpointMismatch, e.what());
  }
  if (p_end != q.start) {
    throw OlogError(codes::kEndpointMismatch,
                    "first path ends at " + p_end + " but second starts at " + q.start);
  }
  Path out = p;
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

std::string to_string(const OlogSchema& schema, const Path& p) {
  std::string out = p.start;
  for (const auto& id : p.arrows) {
    out += " -> " + id + " -> ";
    const ArrowDecl* a = schema.find_arrow(id);
    out += a ? a->dst : std::string("?");
  }
  return out;
}

std::string arrow_list(const Path& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ",";
    out += p.arrows[i];
  }
  return out + "]";
}

namespace {

Diagnostic error(std::string_view code, std::string location, std::string message) {
  return Diagnostic{Severity::Error, std::string(code), std::move(message), std::move(location)};
}

// Checks one path; returns its endpoints when well formed.
std::optional<std::pair<BoxId, BoxId>> check_path(const OlogSchema& schema, const Path& p,
                                                  const std::string& where,
                                                  std::vector<Diagnostic>& out) {
  if (schema.find_box(p.start) == nullptr) {
    out.push_back(error(codes::kUnknownBox, where, "path starts at undeclared box '" + p.start + "'"));
    return std::nullopt;
  }
  for (const auto& id : p.arrows) {
    if (schema.find_arrow(id) == nullptr) {
      out.push_back(error(codes::kUnknownArrow, where, "path uses undeclared arrow '" + id + "'"));
      return std::nullopt;
    }
  }
  try {
    return path_endpoints(schema, p);
  } catch (const OlogError& e) {
    out.push_back(error(codes::kMalformedPath, where, e.what()));
    return std::nullopt;
  }
}

}  // namespace

std::vector<Diagnostic> validate_schema(const OlogSchema& schema) {
  std::vector<Diagnostic> out;

  std::unordered_set<std::string> seen;
  for (const auto& b : schema.boxes) {
    if (!seen.insert(b.id).second) {
      out.push_back(error(codes::kDuplicateId, b.id, "box id declared more than once"));
    }
    if (b.label.empty()) {
      out.push_back(error(codes::kEmptyLabel, b.id, "box label is empty"));
    }
  }

  seen.clear();
  for (const auto& a : schema.arrows) {
    if (!seen.insert(a.id).second) {
      out.push_back(error(codes::kDuplicateId, a.id, "arrow id declared more than once"));
    }
    std::vector<std::string> missing;
    if (schema.find_box(a.src) == nullptr) missing.push_back("source '" + a.src + "'");
    if (schema.find_box(a.dst) == nullptr) missing.push_back("target '" + a.dst + "'");
    if (!missing.empty()) {
      std::string msg = "undeclared ";
      for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? " and " : "") + missing[i];
      out.push_back(error(codes::kDanglingArrow, a.id, msg));
    }
  }

  for (std::size_t i = 0; i < schema.equations.size(); ++i) {
    const auto& eq = schema.equations[i];
    const std::string where = "eq " + std::to_string(i + 1);
    auto l = check_path(schema, eq.lhs, where, out);
    auto r = check_path(schema, eq.rhs, where, out);
    if (l && r && *l != *r) {
      out.push_back(error(codes::kEqEndpointMismatch, where,
                          "lhs runs " + l->first + ".." + l->second + " but rhs runs " +
                              r->first + ".." + r->second));
    }
  }

  for (const auto& fp : schema.fiber_products) {
    const std::string where = "pullback " + fp.apex;
    if (schema.find_box(fp.apex) == nullptr) {
      out.push_back(error(codes::kUnknownBox, where, "apex '" + fp.apex + "' is not a declared box"));
      continue;
    }
    const ArrowDecl* p1 = schema.find_arrow(fp.proj1);
    const ArrowDecl* p2 = schema.find_arrow(fp.proj2);
    const ArrowDecl* l1 = schema.find_arrow(fp.leg1);
    const ArrowDecl* l2 = schema.find_arrow(fp.leg2);
    bool unknown = false;
    for (const auto* id : {&fp.proj1, &fp.proj2, &fp.leg1, &fp.leg2}) {
      if (schema.find_arrow(*id) == nullptr) {
        out.push_back(error(codes::kUnknownArrow, where, "undeclared arrow '" + *id + "'"));
        unknown = true;
      }
    }
    if (unknown) continue;
    std::vector<std::string> problems;
    if (p1->src != fp.apex) problems.push_back("proj " + p1->id + " does not start at the apex");
    if (p2->src != fp.apex) problems.push_back("proj " + p2->id + " does not start at the apex");
    if (p1->dst != l1->src) problems.push_back("proj " + p1->id + " does not meet leg " + l1->id);
    if (p2->dst != l2->src) problems.push_back("proj " + p2->id + " does not meet leg " + l2->id);
    if (l1->dst != l2->dst) problems.push_back("legs " + l1->id + " and " + l2->id + " do not share a target");
    if (!problems.empty()) {
      std::string msg;
      for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? "; " : "") + problems[i];
      out.push_back(error(codes::kFpNotSquare, where, msg));
      continue;
    }
    const PathEquation sq = fp.square();
    if (!schema.declares_equation(sq.lhs, sq.rhs)) {
      out.push_back(error(codes::kFpSquareMissing, where,
                          "square " + arrow_list(sq.lhs) + " = " + arrow_list(sq.rhs) +
                              " is not among the path equations"));
    }
  }
  return out;
}

}  // namespace olog
