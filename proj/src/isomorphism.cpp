#include "olog/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace olog {

std::string_view to_string(IsoVerdict v) {
  return v == IsoVerdict::Found ? "Found" : "NotFound";
}

namespace {

constexpr int kNone = -1;

// Dense view of one instance: node ids, per-arrow image arrays, and
// per-arrow preimage lists.
struct Dense {
  std::vector<std::size_t> box_of;  // node -> box index
  std::vector<const ElementId*> name;
  std::vector<std::vector<int>> image;  // arrow -> node -> node
  std::vector<std::vector<std::vector<int>>> preimage;  // arrow -> node -> nodes
  std::vector<std::vector<int>> nodes_of_box;
};

Dense densify(const OlogSchema& schema, const Instance& inst) {
  Dense d;
  std::unordered_map<std::string, std::size_t> box_index;
  std::vector<std::unordered_map<std::string, int>> node_index(schema.boxes.size());
  d.nodes_of_box.resize(schema.boxes.size());
  for (std::size_t bi = 0; bi < schema.boxes.size(); ++bi) {
    box_index.emplace(schema.boxes[bi].id, bi);
    for (const auto& [id, payload] : inst.set(schema.boxes[bi].id)) {
      const int n = static_cast<int>(d.box_of.size());
      d.box_of.push_back(bi);
      d.name.push_back(&id);
      node_index[bi].emplace(id, n);
      d.nodes_of_box[bi].push_back(n);
    }
  }
  const std::size_t nodes = d.box_of.size();
  d.image.assign(schema.arrows.size(), std::vector<int>(nodes, kNone));
  d.preimage.assign(schema.arrows.size(), std::vector<std::vector<int>>(nodes));
  for (std::size_t ai = 0; ai < schema.arrows.size(); ++ai) {
    const ArrowDecl& a = schema.arrows[ai];
    const std::size_t sb = box_index.at(a.src);
    const std::size_t tb = box_index.at(a.dst);
    for (int n : d.nodes_of_box[sb]) {
      const ElementId* img = inst.image(a.id, *d.name[n]);
      if (img == nullptr) continue;
      auto it = node_index[tb].find(*img);
      if (it == node_index[tb].end()) continue;
      d.image[ai][n] = it->second;
      d.preimage[ai][it->second].push_back(n);
    }
  }
  return d;
}

// Joint colour refinement over the disjoint union of both instances.
// Returns colours for a's nodes followed by b's nodes.
std::vector<int> refine(const OlogSchema& schema, const Dense& da, const Dense& db) {
  const std::size_t na = da.box_of.size();
  const std::size_t nb = db.box_of.size();
  std::vector<int> colour(na + nb);
  for (std::size_t i = 0; i < na; ++i) colour[i] = static_cast<int>(da.box_of[i]);
  for (std::size_t i = 0; i < nb; ++i) colour[na + i] = static_cast<int>(db.box_of[i]);

  auto classes = [](const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  };
  std::size_t count = classes(colour);

  for (std::size_t round = 0; round <= na + nb; ++round) {
    std::map<std::vector<int>, int> palette;
    std::vector<std::vector<int>> sig(na + nb);
    auto signature = [&](const Dense& d, std::size_t offset, std::size_t n) {
      std::vector<int> s{colour[offset + n]};
      for (std::size_t ai = 0; ai < schema.arrows.size(); ++ai) {
        const int img = d.image[ai][n];
        s.push_back(img == kNone ? kNone : colour[offset + img]);
        std::vector<int> pre;
        for (int p : d.preimage[ai][n]) pre.push_back(colour[offset + p]);
        std::sort(pre.begin(), pre.end());
        s.push_back(static_cast<int>(pre.size()));
        s.insert(s.end(), pre.begin(), pre.end());
      }
      return s;
    };
    for (std::size_t i = 0; i < na; ++i) sig[i] = signature(da, 0, i);
    for (std::size_t i = 0; i < nb; ++i) sig[na + i] = signature(db, na, i);
    for (const auto& s : sig) palette.emplace(s, 0);
    int next = 0;
    for (auto& [s, c] : palette) c = next++;
    for (std::size_t i = 0; i < na + nb; ++i) colour[i] = palette.at(sig[i]);
    const std::size_t refined = classes(colour);
    if (refined == count) break;
    count = refined;
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const OlogSchema& schema, const Dense& a, const Dense& b, std::vector<int> colour,
          std::size_t budget)
      : schema_(schema), a_(a), b_(b), budget_(budget) {
    const std::size_t na = a.box_of.size();
    colour_a_.assign(colour.begin(), colour.begin() + static_cast<long>(na));
    colour_b_.assign(colour.begin() + static_cast<long>(na), colour.end());
    fwd_.assign(na, kNone);
    used_.assign(b.box_of.size(), false);
    for (std::size_t i = 0; i < colour_b_.size(); ++i) by_colour_[colour_b_[i]].push_back(static_cast<int>(i));
  }

  bool run() { return search(); }
  bool exhausted_budget() const { return budget_hit_; }
  std::size_t tried() const { return tried_; }
  const std::vector<int>& mapping() const { return fwd_; }

 private:
  // Assigns x -> y and everything it forces; false on conflict.
  bool assign(int x, int y) {
    std::vector<std::pair<int, int>> work{{x, y}};
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (fwd_[u] != kNone) {
        if (fwd_[u] != v) return false;
        continue;
      }
      if (used_[v] || colour_a_[u] != colour_b_[v]) return false;
      fwd_[u] = v;
      used_[v] = true;
      trail_.push_back(u);
      for (std::size_t ai = 0; ai < schema_.arrows.size(); ++ai) {
        const int iu = a_.image[ai][u];
        if (iu == kNone) continue;
        const int iv = b_.image[ai][v];
        if (iv == kNone) return false;
        work.emplace_back(iu, iv);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int u = trail_.back();
      trail_.pop_back();
      used_[fwd_[u]] = false;
      fwd_[u] = kNone;
    }
  }

  bool search() {
    int pick = kNone;
    std::vector<int> best;
    for (std::size_t u = 0; u < fwd_.size(); ++u) {
      if (fwd_[u] != kNone) continue;
      std::vector<int> cands;
      for (int v : by_colour_[colour_a_[u]]) {
        if (!used_[v]) cands.push_back(v);
      }
      if (pick == kNone || cands.size() < best.size()) {
        pick = static_cast<int>(u);
        best = std::move(cands);
        if (best.size() <= 1) break;
      }
    }
    if (pick == kNone) return true;
    for (int v : best) {
      if (++tried_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (assign(pick, v) && search()) return true;
      undo(mark);
      if (budget_hit_) return false;
    }
    return false;
  }

  const OlogSchema& schema_;
  const Dense& a_;
  const Dense& b_;
  std::vector<int> colour_a_;
  std::vector<int> colour_b_;
  std::map<int, std::vector<int>> by_colour_;
  std::vector<int> fwd_;
  std::vector<bool> used_;
  std::vector<int> trail_;
  std::size_t budget_;
  std::size_t tried_ = 0;
  bool budget_hit_ = false;
};

IsoResult not_found(std::string why, std::size_t tried = 0) {
  IsoResult r;
  r.verdict = IsoVerdict::NotFound;
  r.failure_reason = std::move(why);
  r.search_nodes = tried;
  return r;
}

}  // namespace

IsoResult check_instance_isomorphism(const OlogSchema& schema, const Instance& a,
                                     const Instance& b, std::size_t search_budget) {
  for (const Instance* inst : {&a, &b}) {
    if (inst->schema_name != schema.name) {
      throw OlogError(codes::kSchemaMismatch, "instance '" + inst->name + "' is of schema '" +
                                                  inst->schema_name + "', not '" + schema.name + "'");
    }
  }
  for (const Instance* inst : {&a, &b}) {
    auto diags = validate_instance(schema, *inst);
    if (has_errors(diags)) {
      std::ostringstream os;
      os << "instance '" << inst->name << "' is not valid: " << diags.front();
      return not_found(os.str());
    }
  }

  for (const auto& box : schema.boxes) {
    const std::size_t na = a.set(box.id).size();
    const std::size_t nb = b.set(box.id).size();
    if (na != nb) {
      return not_found("cardinality: box " + box.id + " has " + std::to_string(na) + " elements in '" +
                       a.name + "' but " + std::to_string(nb) + " in '" + b.name + "'");
    }
    const auto ka = box_payload_kind(a, box.id);
    const auto kb = box_payload_kind(b, box.id);
    if (na > 0 && ka != kb) {
      return not_found("payload kind: box " + box.id + " carries " +
                       std::string(to_string(ka.value_or(PayloadKind::None))) + " in '" + a.name +
                       "' but " + std::string(to_string(kb.value_or(PayloadKind::None))) +
                       " in '" + b.name + "'");
    }
  }

  const Dense da = densify(schema, a);
  const Dense db = densify(schema, b);
  std::vector<int> colour = refine(schema, da, db);

  {
    const std::size_t na = da.box_of.size();
    std::map<int, std::pair<std::size_t, std::size_t>> sizes;
    for (std::size_t i = 0; i < na; ++i) ++sizes[colour[i]].first;
    for (std::size_t i = 0; i < db.box_of.size(); ++i) ++sizes[colour[na + i]].second;
    for (const auto& [c, n] : sizes) {
      if (n.first != n.second) {
        // name a representative element for the certificate
        std::string who;
        for (std::size_t i = 0; i < colour.size(); ++i) {
          if (colour[i] != c) continue;
          const bool in_a = i < na;
          const Dense& d = in_a ? da : db;
          const std::size_t n_i = in_a ? i : i - na;
          who = "box " + schema.boxes[d.box_of[n_i]].id + " element " + *d.name[n_i] + " of '" +
                (in_a ? a.name : b.name) + "'";
          break;
        }
        return not_found("refinement: the arrow neighbourhood class of " + who + " has " +
                         std::to_string(n.first) + " members in '" + a.name + "' but " +
                         std::to_string(n.second) + " in '" + b.name + "'");
      }
    }
  }

  Matcher m(schema, da, db, std::move(colour), search_budget);
  if (!m.run()) {
    if (m.exhausted_budget()) {
      return not_found("search budget of " + std::to_string(search_budget) + " assignments exhausted",
                       m.tried());
    }
    return not_found("exhausted search: no arrow-consistent bijection exists", m.tried());
  }

  IsoResult r;
  r.verdict = IsoVerdict::Found;
  r.search_nodes = m.tried();
  for (const auto& box : schema.boxes) r.bijections[box.id];
  const auto& fwd = m.mapping();
  for (std::size_t u = 0; u < fwd.size(); ++u) {
    r.bijections[schema.boxes[da.box_of[u]].id][*da.name[u]] = *db.name[fwd[u]];
  }
  return r;
}

bool is_natural_isomorphism(const OlogSchema& schema, const Instance& a, const Instance& b,
                            const InstanceBijection& beta, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (const auto& box : schema.boxes) {
    const auto& sa = a.set(box.id);
    const auto& sb = b.set(box.id);
    auto it = beta.find(box.id);
    static const IdMap<ElementId> kEmpty;
    const auto& m = it == beta.end() ? kEmpty : it->second;
    if (m.size() != sa.size()) return fail("box " + box.id + ": map is not total");
    if (sa.size() != sb.size()) return fail("box " + box.id + ": cardinalities differ");
    IdSet hit;
    for (const auto& [x, y] : m) {
      if (!sa.count(x)) return fail("box " + box.id + ": " + x + " is not in '" + a.name + "'");
      if (!sb.count(y)) return fail("box " + box.id + ": " + y + " is not in '" + b.name + "'");
      if (!hit.insert(y).second) return fail("box " + box.id + ": " + y + " hit twice");
    }
  }
  for (const auto& arrow : schema.arrows) {
    const auto& msrc = beta.at(arrow.src);
    const auto& mdst = beta.at(arrow.dst);
    for (const auto& [x, payload] : a.set(arrow.src)) {
      const ElementId* fx = a.image(arrow.id, x);
      const ElementId* fbx = b.image(arrow.id, msrc.at(x));
      if (fx == nullptr || fbx == nullptr) return fail("arrow " + arrow.id + ": table not total");
      if (mdst.at(*fx) != *fbx) {
        return fail("arrow " + arrow.id + ": naturality fails at " + x);
      }
    }
  }
  return true;
}

}  // namespace olog
