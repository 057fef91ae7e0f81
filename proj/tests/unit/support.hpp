#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "olog/dsl.hpp"
#include "olog/instance.hpp"
#include "olog/schema.hpp"

namespace olog::testing {

inline std::string data_path(const std::string& name) { return std::string(OLOG_DATA_DIR) + "/" + name; }

inline OlogSchema bundled_olog() {
  return parse_schema(read_text_file(data_path("paper.olog")), "paper.olog").schema;
}

inline Path path(BoxId start, std::vector<ArrowId> arrows) {
  return Path{std::move(start), std::move(arrows)};
}

// Small deterministic generator wrapper.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random well-formed schema: boxes X1..Xn, arrows a1..am with random
// endpoints, and equations between random walks that share endpoints.
inline OlogSchema random_schema(Gen& g, int max_boxes = 6, int max_arrows = 10) {
  OlogSchema s;
  s.name = "random";
  const int n = g.range(1, max_boxes);
  for (int i = 1; i <= n; ++i) s.boxes.push_back({"X" + std::to_string(i), "box " + std::to_string(i), {}});
  const int m = g.range(0, max_arrows);
  for (int i = 1; i <= m; ++i) {
    s.arrows.push_back({"a" + std::to_string(i), g.pick(s.boxes).id, g.pick(s.boxes).id,
                        "arrow " + std::to_string(i), {}});
  }
  auto walk = [&](const BoxId& start, int len) {
    Path p{start, {}};
    BoxId at = start;
    for (int k = 0; k < len; ++k) {
      std::vector<const ArrowDecl*> out;
      for (const auto& a : s.arrows) {
        if (a.src == at) out.push_back(&a);
      }
      if (out.empty()) break;
      const ArrowDecl* a = g.pick(out);
      p.arrows.push_back(a->id);
      at = a->dst;
    }
    return std::make_pair(p, at);
  };
  const int eqs = g.range(0, 3);
  for (int k = 0; k < eqs * 6 && static_cast<int>(s.equations.size()) < eqs; ++k) {
    const BoxId start = g.pick(s.boxes).id;
    auto [p, pe] = walk(start, g.range(0, 3));
    auto [q, qe] = walk(start, g.range(0, 3));
    if (pe == qe && p != q) s.equations.push_back({p, q, ""});
  }
  return s;
}

// Random instance of `s` that is total and well typed (equations are not
// enforced). Sets have up to max_size elements; every set targeted by an
// arrow out of a nonempty set is nonempty.
inline Instance random_instance(Gen& g, const OlogSchema& s, int max_size = 5,
                                const std::string& prefix = "e") {
  Instance inst;
  inst.name = "random";
  inst.schema_name = s.name;
  IdMap<int> size;
  for (const auto& b : s.boxes) size[b.id] = g.range(0, max_size);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : s.arrows) {
      if (size[a.src] > 0 && size[a.dst] == 0) {
        size[a.dst] = 1;
        changed = true;
      }
    }
  }
  for (const auto& b : s.boxes) {
    auto& set = inst.sets[b.id];
    for (int i = 1; i <= size[b.id]; ++i) set.emplace(prefix + b.id + "_" + std::to_string(i), Payload{});
  }
  for (const auto& a : s.arrows) {
    auto& table = inst.functions[a.id];
    std::vector<ElementId> targets;
    for (const auto& [e, p] : inst.sets[a.dst]) targets.push_back(e);
    for (const auto& [e, p] : inst.sets[a.src]) table[e] = g.pick(targets);
  }
  return inst;
}

// Renames every element of every box by a random permutation of fresh ids.
inline Instance shuffled_copy(Gen& g, const OlogSchema& s, const Instance& inst) {
  Instance out;
  out.name = inst.name + "-shuffled";
  out.schema_name = inst.schema_name;
  IdMap<IdMap<ElementId>> rename;
  for (const auto& [box, set] : inst.sets) {
    std::vector<ElementId> fresh;
    for (std::size_t i = 0; i < set.size(); ++i) fresh.push_back("z" + box + "_" + std::to_string(i));
    std::shuffle(fresh.begin(), fresh.end(), g.engine());
    std::size_t i = 0;
    auto& dst = out.sets[box];
    for (const auto& [e, payload] : set) {
      rename[box][e] = fresh[i];
      dst.emplace(fresh[i], payload);
      ++i;
    }
  }
  for (const auto& a : s.arrows) {
    auto& table = out.functions[a.id];
    for (const auto& [from, to] : inst.table(a.id)) table[rename[a.src].at(from)] = rename[a.dst].at(to);
  }
  return out;
}

}  // namespace olog::testing
