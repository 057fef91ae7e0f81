#include "olog/evaluation.hpp"

#include <map>

namespace olog {

std::string_view to_string(EquationVerdict v) {
  return v == EquationVerdict::AllHold ? "AllHold" : "Counterexample";
}

std::string_view to_string(FiberProductVerdict v) {
  return v == FiberProductVerdict::Pass ? "PASS" : "FAIL";
}

std::string_view to_string(FiberProductFailure f) {
  switch (f) {
    case FiberProductFailure::None: return "none";
    case FiberProductFailure::Collision: return "collision";
    case FiberProductFailure::MissingPair: return "missing-pair";
    case FiberProductFailure::OutsidePullback: return "outside-pullback";
  }
  return "?";
}

ElementId eval_path(const OlogSchema& schema, const Instance& inst, const Path& p,
                    const ElementId& e) {
  const BoxId start = path_endpoints(schema, p).first;
  if (!inst.contains(start, e)) {
    throw OlogError(codes::kElementNotInSource, "'" + e + "' is not an element of " + start);
  }
  ElementId at = e;
  for (const auto& a : p.arrows) {
    const ElementId* next = inst.image(a, at);
    if (next == nullptr) {
      throw OlogError(codes::kMissingImage, "arrow " + a + " has no image for " + at);
    }
    at = *next;
  }
  return at;
}

EquationReport check_equation(const OlogSchema& schema, const Instance& inst,
                              const PathEquation& eq) {
  EquationReport report{eq, EquationVerdict::AllHold, std::nullopt};
  for (const auto& [e, payload] : inst.set(eq.lhs.start)) {
    ElementId l = eval_path(schema, inst, eq.lhs, e);
    ElementId r = eval_path(schema, inst, eq.rhs, e);
    if (l != r) {
      report.verdict = EquationVerdict::Counterexample;
      report.witness = EquationWitness{e, std::move(l), std::move(r)};
      break;
    }
  }
  return report;
}

std::vector<EquationReport> check_all_equations(const OlogSchema& schema, const Instance& inst) {
  std::vector<EquationReport> out;
  out.reserve(schema.equations.size());
  for (const auto& eq : schema.equations) out.push_back(check_equation(schema, inst, eq));
  return out;
}

PullbackResult compute_pullback(const OlogSchema& schema, const Instance& inst,
                                const ArrowId& leg1, const ArrowId& leg2) {
  const ArrowDecl* f = schema.find_arrow(leg1);
  const ArrowDecl* g = schema.find_arrow(leg2);
  if (f == nullptr || g == nullptr) {
    throw OlogError(codes::kCospanMismatch,
                    "unknown leg '" + (f == nullptr ? leg1 : leg2) + "'");
  }
  if (f->dst != g->dst) {
    throw OlogError(codes::kCospanMismatch, "leg " + leg1 + " lands in " + f->dst + " but leg " +
                                                leg2 + " lands in " + g->dst);
  }
  PullbackResult out{f->src, g->src, f->dst, {}};

  // group Y by image in Z, preserving element order within each fiber
  std::map<ElementId, std::vector<const ElementId*>, NaturalLess> fibers;
  for (const auto& [y, payload] : inst.set(g->src)) {
    if (const ElementId* z = inst.image(leg2, y)) fibers[*z].push_back(&y);
  }
  for (const auto& [x, payload] : inst.set(f->src)) {
    const ElementId* z = inst.image(leg1, x);
    if (z == nullptr) continue;
    auto it = fibers.find(*z);
    if (it == fibers.end()) continue;
    for (const ElementId* y : it->second) out.pairs.emplace_back(x, *y);
  }
  return out;
}

std::string FiberProductReport::describe() const {
  std::string s = "pullback " + decl.apex + ": " + std::string(to_string(verdict));
  if (verdict == FiberProductVerdict::Pass) return s;
  s += " (" + std::string(to_string(failure)) + ")";
  if (!apex_elements.empty()) {
    s += " apex";
    for (const auto& e : apex_elements) s += " " + e;
  }
  if (pair) s += " pair (" + pair->first + ", " + pair->second + ")";
  return s;
}

FiberProductReport verify_fiber_product(const OlogSchema& schema, const Instance& inst,
                                        const FiberProductDecl& decl) {
  FiberProductReport report{decl, FiberProductVerdict::Pass, FiberProductFailure::None, {}, {}};
  auto fail = [&](FiberProductFailure why, std::vector<ElementId> apex,
                  std::optional<ElementPair> pair) {
    report.verdict = FiberProductVerdict::Fail;
    report.failure = why;
    report.apex_elements = std::move(apex);
    report.pair = std::move(pair);
    return report;
  };

  const PullbackResult canonical = compute_pullback(schema, inst, decl.leg1, decl.leg2);
  std::map<ElementPair, bool> in_pullback;
  for (const auto& pr : canonical.pairs) in_pullback.emplace(pr, false);

  std::map<ElementPair, ElementId> realised;
  for (const auto& [e, payload] : inst.set(decl.apex)) {
    const ElementId* x = inst.image(decl.proj1, e);
    const ElementId* y = inst.image(decl.proj2, e);
    if (x == nullptr || y == nullptr) {
      return fail(FiberProductFailure::OutsidePullback, {e}, std::nullopt);
    }
    ElementPair pr{*x, *y};
    auto [it, fresh] = realised.emplace(pr, e);
    if (!fresh) return fail(FiberProductFailure::Collision, {it->second, e}, pr);
    auto hit = in_pullback.find(pr);
    if (hit == in_pullback.end()) return fail(FiberProductFailure::OutsidePullback, {e}, pr);
    hit->second = true;
  }
  for (const auto& pr : canonical.pairs) {
    if (!in_pullback.at(pr)) return fail(FiberProductFailure::MissingPair, {}, pr);
  }
  return report;
}

}  // namespace olog
