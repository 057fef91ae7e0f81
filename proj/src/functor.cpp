#include "olog/functor.hpp"

#include "olog/derivation.hpp"

namespace olog {

SchemaFunctor SchemaFunctor::identity(const OlogSchema& s) {
  SchemaFunctor f{s, s, {}, {}};
  for (const auto& b : s.boxes) f.box_map[b.id] = b.id;
  for (const auto& a : s.arrows) f.arrow_map[a.id] = a.id;
  return f;
}

std::optional<Path> SchemaFunctor::map_path(const Path& p) const {
  auto b = box_map.find(p.start);
  if (b == box_map.end()) return std::nullopt;
  Path out{b->second, {}};
  for (const auto& a : p.arrows) {
    auto it = arrow_map.find(a);
    if (it == arrow_map.end()) return std::nullopt;
    out.arrows.push_back(it->second);
  }
  return out;
}

std::vector<Diagnostic> check_functor(const SchemaFunctor& f, std::size_t max_steps) {
  std::vector<Diagnostic> out;
  auto err = [&](std::string_view code, std::string loc, std::string msg) {
    out.push_back(Diagnostic{Severity::Error, std::string(code), std::move(msg), std::move(loc)});
  };

  for (const auto& b : f.source.boxes) {
    auto it = f.box_map.find(b.id);
    if (it == f.box_map.end()) {
      err(codes::kUnmappedBox, b.id, "source box has no image");
    } else if (f.target.find_box(it->second) == nullptr) {
      err(codes::kUnknownBox, b.id, "image '" + it->second + "' is not a target box");
    }
  }

  bool structural_ok = true;
  for (const auto& a : f.source.arrows) {
    auto it = f.arrow_map.find(a.id);
    if (it == f.arrow_map.end()) {
      err(codes::kUnmappedArrow, a.id, "source arrow has no image");
      structural_ok = false;
      continue;
    }
    const ArrowDecl* img = f.target.find_arrow(it->second);
    if (img == nullptr) {
      err(codes::kUnknownArrow, a.id, "image '" + it->second + "' is not a target arrow");
      structural_ok = false;
      continue;
    }
    auto src = f.box_map.find(a.src);
    auto dst = f.box_map.find(a.dst);
    if (src == f.box_map.end() || dst == f.box_map.end()) {
      structural_ok = false;
      continue;
    }
    if (src->second != img->src || dst->second != img->dst) {
      err(codes::kEndpointViolation, a.id,
          "maps " + a.src + "->" + a.dst + " to arrow " + img->id + " : " + img->src + "->" +
              img->dst + ", expected " + src->second + "->" + dst->second);
      structural_ok = false;
    }
  }
  if (!structural_ok) return out;

  for (std::size_t i = 0; i < f.source.equations.size(); ++i) {
    const auto& eq = f.source.equations[i];
    auto l = f.map_path(eq.lhs);
    auto r = f.map_path(eq.rhs);
    if (!l || !r) continue;
    bool holds = false;
    try {
      holds = derive_equality(f.target, *l, *r, max_steps).verdict == Derivability::Holds;
    } catch (const OlogError&) {
      holds = false;
    }
    if (!holds) {
      out.push_back(Diagnostic{Severity::Warning, std::string(codes::kEqImageUnknown),
                               "image " + arrow_list(*l) + " = " + arrow_list(*r) +
                                   " not derived within " + std::to_string(max_steps) +
                                   " rewrites",
                               "eq " + std::to_string(i + 1)});
    }
  }
  return out;
}

}  // namespace olog
