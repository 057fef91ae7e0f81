#include "olog/instance.hpp"

namespace olog {

PayloadKind kind_of(const Payload& p) {
  return static_cast<PayloadKind>(p.index());
}

std::string_view to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::None: return "none";
    case PayloadKind::Real: return "real";
    case PayloadKind::Pair: return "pair";
    case PayloadKind::Graph: return "graph";
    case PayloadKind::Text: return "text";
  }
  return "?";
}

namespace {
const ElementSet kEmptySet;
const FunctionTable kEmptyTable;
}  // namespace

const ElementSet& Instance::set(std::string_view box) const {
  auto it = sets.find(box);
  return it == sets.end() ? kEmptySet : it->second;
}

const FunctionTable& Instance::table(std::string_view arrow) const {
  auto it = functions.find(arrow);
  return it == functions.end() ? kEmptyTable : it->second;
}

bool Instance::contains(std::string_view box, std::string_view element) const {
  const auto& s = set(box);
  return s.find(element) != s.end();
}

const ElementId* Instance::image(std::string_view arrow, std::string_view element) const {
  const auto& t = table(arrow);
  auto it = t.find(element);
  return it == t.end() ? nullptr : &it->second;
}

std::optional<PayloadKind> box_payload_kind(const Instance& inst, std::string_view box) {
  const auto& s = inst.set(box);
  if (s.empty()) return PayloadKind::None;
  const PayloadKind k = kind_of(s.begin()->second);
  for (const auto& [id, payload] : s) {
    if (kind_of(payload) != k) return std::nullopt;
  }
  return k;
}

std::vector<Diagnostic> validate_instance(const OlogSchema& schema, const Instance& inst) {
  if (inst.schema_name != schema.name) {
    throw OlogError(codes::kSchemaMismatch, "instance '" + inst.name + "' is of schema '" +
                                                inst.schema_name + "', not '" + schema.name + "'");
  }
  std::vector<Diagnostic> out;
  auto err = [&](std::string_view code, std::string loc, std::string msg) {
    out.push_back(Diagnostic{Severity::Error, std::string(code), std::move(msg), std::move(loc)});
  };

  for (const auto& [box, elements] : inst.sets) {
    if (schema.find_box(box) == nullptr) {
      err(codes::kUnknownBox, box, "set given for undeclared box");
      continue;
    }
    if (!box_payload_kind(inst, box)) {
      const PayloadKind first = kind_of(elements.begin()->second);
      for (const auto& [id, payload] : elements) {
        if (kind_of(payload) != first) {
          err(codes::kPayloadMixed, box + "/" + id,
              "payload " + std::string(to_string(kind_of(payload))) + " differs from " +
                  std::string(to_string(first)) + " used by " + elements.begin()->first);
        }
      }
    }
  }
  for (const auto& [arrow, table] : inst.functions) {
    if (schema.find_arrow(arrow) == nullptr) {
      err(codes::kUnknownArrow, arrow, "table given for undeclared arrow");
    }
  }

  for (const auto& a : schema.arrows) {
    const auto& src = inst.set(a.src);
    const auto& dst = inst.set(a.dst);
    const auto& t = inst.table(a.id);
    for (const auto& [x, payload] : src) {
      auto it = t.find(x);
      if (it == t.end()) {
        err(codes::kMissingImage, a.id + "/" + x,
            "arrow " + a.id + " has no image for " + a.src + " element " + x);
      } else if (dst.find(it->second) == dst.end()) {
        err(codes::kImageNotInTarget, a.id + "/" + x,
            "arrow " + a.id + " sends " + x + " to " + it->second + ", which is not in " + a.dst);
      }
    }
    for (const auto& [x, y] : t) {
      if (src.find(x) == src.end()) {
        err(codes::kExtraEntry, a.id + "/" + x,
            "arrow " + a.id + " has an entry for " + x + ", which is not in " + a.src);
      }
    }
  }
  return out;
}

}  // namespace olog
