#include "olog/generator.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "olog/dsl.hpp"
#include "olog/evaluation.hpp"

namespace olog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Names {
  const char* brick;
  const char* glue;
  const char* lifeline;
};

Names names_for(Domain d) {
  if (d == Domain::Protein) return {"cluster", "hbond", "backbone"};
  return {"transceiver", "wifi", "passage"};
}

[[noreturn]] void constraint(const std::string& box, const std::string& why) {
  throw OlogError(codes::kParamConstraint, "box " + box + ": " + why);
}

// roughly_equal extended so that two unbreakable blocks count as equal
bool roughly_equal_ext(double R, double r, const Comparators& c) {
  if (std::isinf(R) || std::isinf(r)) return std::isinf(R) && std::isinf(r);
  return roughly_equal(R, r, c);
}

std::string num(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

class Builder {
 public:
  Builder(const OlogSchema& schema, Instance& inst) : schema_(schema), inst_(inst) {
    for (const auto& b : schema.boxes) inst_.sets[b.id];
    for (const auto& a : schema.arrows) inst_.functions[a.id];
  }

  void add(const std::string& box, const std::string& id, Payload p = {}) {
    inst_.sets.at(box).emplace(id, std::move(p));
  }
  void map(const std::string& arrow, const std::string& from, const std::string& to) {
    inst_.functions.at(arrow).insert_or_assign(from, to);
  }
  const std::string& at(const std::string& arrow, const std::string& from) const {
    return inst_.functions.at(arrow).at(from);
  }

  // Apex elements numbered in pullback order, with both projections.
  std::vector<std::string> pullback(const std::string& apex, const std::string& prefix) {
    const FiberProductDecl* decl = nullptr;
    for (const auto& fp : schema_.fiber_products) {
      if (fp.apex == apex) decl = &fp;
    }
    if (decl == nullptr) throw OlogError(codes::kParamConstraint, "schema lacks pullback " + apex);
    const PullbackResult pb = compute_pullback(schema_, inst_, decl->leg1, decl->leg2);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < pb.pairs.size(); ++i) {
      std::string id = num(prefix, i + 1);
      add(apex, id);
      map(decl->proj1, id, pb.pairs[i].first);
      map(decl->proj2, id, pb.pairs[i].second);
      ids.push_back(std::move(id));
    }
    return ids;
  }

 private:
  const OlogSchema& schema_;
  Instance& inst_;
};

}  // namespace

SimParams protein_defaults() { return SimParams{}; }

SimParams social_defaults() {
  SimParams p;
  p.brick_count = 100;
  p.glue_failure = link_failure_noise(0.5, 50);
  p.lifeline_present = true;
  p.lifeline_resting = p.glue_failure;
  p.lifeline_failure = kInf;
  p.brick_failure = kInf;
  p.domain = Domain::Social;
  return p;
}

SimParams matched_social_defaults() {
  SimParams p = protein_defaults();
  p.domain = Domain::Social;
  return p;
}

SimParams random_params(std::uint64_t seed, bool lifeline, Domain domain, const Comparators& c) {
  validate_comparators(c);
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  for (;;) {
    SimParams p;
    p.domain = domain;
    p.seed = seed;
    p.lifeline_present = lifeline;
    p.brick_count = std::uniform_int_distribution<int>(2, 12)(rng);
    p.glue_failure = uniform(0.5, 50.0);
    p.lifeline_resting = p.glue_failure * (1 + c.eps_rel * uniform(-0.4, 0.8));
    if (uniform(0, 1) < 0.25) {
      p.lifeline_failure = kInf;
      p.brick_failure = kInf;
    } else {
      p.lifeline_failure = p.glue_failure * c.kappa * uniform(1.3, 5.0);
      p.brick_failure = p.lifeline_failure * (1 + c.eps_rel * uniform(-0.3, 0.8));
    }
    const bool ok = much_greater(p.brick_failure, p.glue_failure, c) &&
                    roughly_equal_ext(p.brick_failure, p.lifeline_failure, c) &&
                    roughly_equal(p.lifeline_resting, p.glue_failure, c) &&
                    much_greater(p.lifeline_failure, p.glue_failure, c) &&
                    p.lifeline_resting <= p.lifeline_failure;
    if (ok) return p;
  }
}

void check_params(const SimParams& p, const Comparators& c) {
  validate_comparators(c);
  if (p.brick_count < 2) constraint("R", "a chain needs at least 2 bricks");
  if (!std::isfinite(p.glue_failure) || p.glue_failure < 0) {
    constraint("S", "glue failure extension must be finite and nonnegative");
  }
  if (std::isnan(p.brick_failure) || p.brick_failure < 0) {
    constraint("R", "brick failure extension must be nonnegative");
  }
  if (!much_greater(p.brick_failure, p.glue_failure, c)) {
    constraint("N", "brick failure " + format_real(p.brick_failure) +
                        " is not much greater than glue failure " +
                        format_real(p.glue_failure));
  }
  if (!p.lifeline_present) return;
  if (!std::isfinite(p.lifeline_resting) || p.lifeline_resting < 0) {
    constraint("T", "lifeline resting extension must be finite and nonnegative");
  }
  if (std::isnan(p.lifeline_failure) || p.lifeline_failure < p.lifeline_resting) {
    constraint("T", "lifeline fails before reaching its resting extension");
  }
  if (!roughly_equal(p.lifeline_resting, p.glue_failure, c)) {
    constraint("I", "lifeline resting extension is not roughly equal to glue failure");
  }
}

ChainSystem make_chain(const SimParams& p) {
  if (p.brick_count < 2) constraint("R", "a chain needs at least 2 bricks");
  const Names n = names_for(p.domain);
  ChainSystem chain;
  chain.domain = p.domain;
  for (int i = 1; i <= p.brick_count; ++i) {
    chain.bricks.push_back({num(n.brick, i), BlockKind::Brick, p.brick_failure, 0});
  }
  for (int i = 1; i < p.brick_count; ++i) {
    Segment s{{num(n.glue, i), BlockKind::Glue, p.glue_failure, 0}, std::nullopt};
    if (p.lifeline_present) {
      s.lifeline = BuildingBlock{num(n.lifeline, i), BlockKind::Lifeline, p.lifeline_failure,
                                 p.lifeline_resting};
    }
    chain.segments.push_back(std::move(s));
  }
  try {
    validate_chain(chain);
  } catch (const OlogError& e) {
    throw OlogError(codes::kParamConstraint, e.what());
  }
  return chain;
}

GeneratedInstance generate_instance(const SimParams& params, const OlogSchema& schema,
                                    const Comparators& c, std::string name) {
  check_params(params, c);
  GeneratedInstance out;
  out.chain = make_chain(params);
  const ChainSystem& chain = out.chain;
  out.system_failure = system_failure_extension(chain);
  out.glue_failure = glue_failure_extension(chain);
  out.classification = classify(chain, c);

  if (chain.has_lifelines() && out.classification != Classification::Ductile) {
    throw OlogError(codes::kConjectureFailed,
                    "lifeline chain classified " + std::string(to_string(out.classification)) +
                        ", so arrow 1 cannot be tabulated");
  }
  if (!chain.has_lifelines() && out.classification != Classification::Brittle) {
    throw OlogError(codes::kConjectureFailed,
                    "lifeline-free chain classified " +
                        std::string(to_string(out.classification)) +
                        ", so arrow 5 cannot be tabulated");
  }

  Instance& inst = out.instance;
  inst.name = name.empty() ? std::string(to_string(params.domain)) : std::move(name);
  inst.schema_name = schema.name;
  Builder b(schema, inst);

  // blocks
  std::map<std::string, const BuildingBlock*, NaturalLess> blocks;
  for (const auto& x : chain.bricks) blocks[x.id] = &x;
  for (const auto& s : chain.segments) {
    blocks[s.glue.id] = &s.glue;
    if (s.lifeline) blocks[s.lifeline->id] = &*s.lifeline;
  }

  // (B1, B2): each connector with the bricks on either side of it
  struct PairPlan {
    const BuildingBlock* first;
    const BuildingBlock* second;
    RealPair value() const { return {first->failure_extension, second->failure_extension}; }
  };
  std::vector<PairPlan> pairs;
  for (std::size_t i = 0; i < chain.segments.size(); ++i) {
    const auto& s = chain.segments[i];
    pairs.push_back({&chain.bricks[i], &s.glue});
    pairs.push_back({&chain.bricks[i + 1], &s.glue});
    if (s.lifeline) {
      pairs.push_back({&chain.bricks[i], &*s.lifeline});
      pairs.push_back({&chain.bricks[i + 1], &*s.lifeline});
    }
  }

  // real pairs that the arrows into M, O and Q will produce
  const RealPair system_pair{out.system_failure, out.glue_failure};
  std::set<RealPair> o_vals;
  std::set<RealPair> m_vals;
  if (out.classification == Classification::Ductile) o_vals.insert(system_pair);
  if (out.classification == Classification::Brittle) m_vals.insert(system_pair);
  for (const auto& pr : pairs) {
    const RealPair v = pr.value();
    if (pr.second->kind == BlockKind::Glue && much_greater(v.x, v.y, c)) o_vals.insert(v);
    if (pr.second->kind == BlockKind::Lifeline && roughly_equal_ext(v.x, v.y, c)) m_vals.insert(v);
  }
  std::set<RealPair> k_vals;
  for (const auto& n : pairs) {
    if (!o_vals.count(n.value())) continue;
    for (const auto& l : pairs) {
      if (!m_vals.count(l.value()) || l.first != n.first) continue;
      const RealPair v{l.second->resting_extension, n.second->failure_extension};
      if (!roughly_equal(v.x, v.y, c)) constraint("I", "lifeline rest not roughly equal to glue failure");
      k_vals.insert(v);
    }
  }
  m_vals.insert(k_vals.begin(), k_vals.end());
  std::set<RealPair> q_vals(k_vals);
  q_vals.insert(system_pair);
  for (const auto& pr : pairs) q_vals.insert(pr.value());

  // V and W
  std::set<double> reals;
  std::set<double> rests;
  for (const auto& [id, blk] : blocks) {
    reals.insert(blk->failure_extension);
    if (blk->kind == BlockKind::Lifeline) {
      reals.insert(blk->resting_extension);
      rests.insert(blk->resting_extension);
    }
  }
  std::map<double, std::string> v_id;
  for (double r : reals) {
    v_id[r] = num("v", v_id.size() + 1);
    b.add("V", v_id[r], r);
  }
  std::map<double, std::string> w_id;
  for (double r : rests) {
    w_id[r] = num("w", w_id.size() + 1);
    b.add("W", w_id[r], r);
    b.map("21", w_id[r], v_id.at(r));
  }

  // R, S, T, U
  for (const auto& [id, blk] : blocks) {
    b.add("U", id);
    b.map("42", id, v_id.at(blk->failure_extension));
    switch (blk->kind) {
      case BlockKind::Brick:
        b.add("R", id);
        b.map("39", id, id);
        break;
      case BlockKind::Glue:
        b.add("S", id);
        b.map("40", id, id);
        break;
      case BlockKind::Lifeline:
        b.add("T", id);
        b.map("41", id, id);
        b.map("16", id, w_id.at(blk->resting_extension));
        break;
    }
  }

  // Q, M, O
  std::map<RealPair, std::string> q_id;
  for (const auto& v : q_vals) {
    const std::string id = num("q", q_id.size() + 1);
    q_id[v] = id;
    b.add("Q", id, v);
    b.map("37", id, v_id.at(v.x));
    b.map("38", id, v_id.at(v.y));
  }
  std::size_t k = 0;
  for (const auto& v : m_vals) {
    const std::string id = num("m", ++k);
    b.add("M", id, v);
    b.map("28", id, q_id.at(v));
  }
  k = 0;
  for (const auto& v : o_vals) {
    const std::string id = num("o", ++k);
    b.add("O", id, v);
    b.map("33", id, q_id.at(v));
  }

  // P
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string id = num("p", i + 1);
    b.add("P", id);
    b.map("35", id, pairs[i].first->id);
    b.map("36", id, pairs[i].second->id);
    b.map("34", id, q_id.at(pairs[i].value()));
  }

  // graphs and systems
  const std::string graph = "chain";
  const std::string system = "system";
  const Graph shape = structure_graph(chain, Connector::Glue);
  b.add("H", graph, shape);
  b.add("D", graph, shape);
  b.map("9", graph, graph);
  b.add("J", system);
  b.map("20", system, graph);
  if (chain.has_lifelines()) {
    b.add("G", system);
    b.map("15", system, graph);
  } else {
    b.add("B", system);
  }

  const auto f_ids = b.pullback("F", "f");
  for (const auto& f : f_ids) b.map("14", f, q_id.at(system_pair));
  auto f_of = [&](const std::string& sys) -> std::string {
    for (const auto& f : f_ids) {
      if (b.at("13", f) == sys) return f;
    }
    throw OlogError(codes::kParamConstraint, "box F: system is not one-dimensional");
  };
  const auto a_ids = b.pullback("A", "a");
  for (const auto& a : a_ids) b.map("2", a, f_of(b.at("4", a)));
  if (!chain.has_lifelines()) b.map("6", system, f_of(system));

  const auto c_ids = b.pullback("C", "c");
  const auto e_ids = b.pullback("E", "e");
  auto lift = [&](const std::vector<std::string>& apex, const std::string& to_f,
                  const std::string& f) -> std::string {
    for (const auto& x : apex) {
      if (b.at(to_f, x) == f) return x;
    }
    throw OlogError(codes::kConjectureFailed, "system " + f + " has no certified classification");
  };
  for (const auto& a : a_ids) b.map("1", a, lift(e_ids, "10", b.at("2", a)));
  if (!chain.has_lifelines()) b.map("5", system, lift(c_ids, "7", b.at("6", system)));

  // tuples of building blocks
  for (const auto& n : b.pullback("N", "n")) {
    const std::string& p = b.at("32", n);
    const std::string& second = b.at("36", p);
    if (blocks.at(second)->kind != BlockKind::Glue) {
      constraint("N", "pair " + p + " certified as brick/glue but its connector is " + second);
    }
    b.map("30", n, b.at("35", p));
    b.map("31", n, second);
  }
  for (const auto& l : b.pullback("L", "l")) b.map("27", l, b.at("35", b.at("26", l)));
  for (const auto& kk : b.pullback("K", "k")) {
    const auto& strong = *blocks.at(b.at("36", b.at("26", b.at("23", kk))));
    const auto& glue = *blocks.at(b.at("31", b.at("24", kk)));
    b.map("22", kk, q_id.at(RealPair{strong.resting_extension, glue.failure_extension}));
  }
  for (const auto& i : b.pullback("I", "i")) {
    b.map("19", i, b.at("36", b.at("26", b.at("23", b.at("18", i)))));
  }

  // self-check against the schema
  const auto diags = validate_instance(schema, inst);
  if (!diags.empty()) {
    throw OlogError(codes::kParamConstraint, "generated instance is invalid: " + diags.front().message);
  }
  for (const auto& r : check_all_equations(schema, inst)) {
    if (r.verdict != EquationVerdict::AllHold) {
      throw OlogError(codes::kParamConstraint, "generated instance breaks " +
                                                   arrow_list(r.equation.lhs) + " = " +
                                                   arrow_list(r.equation.rhs));
    }
  }
  for (const auto& fp : schema.fiber_products) {
    const auto r = verify_fiber_product(schema, inst, fp);
    if (r.verdict != FiberProductVerdict::Pass) {
      throw OlogError(codes::kParamConstraint, "generated instance: " + r.describe());
    }
  }
  return out;
}

}  // namespace olog
