#include "olog/derivation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace olog {

namespace {

// Box reached after the first k arrows of p. Assumes p is well formed.
std::vector<BoxId> boxes_along(const OlogSchema& schema, const Path& p) {
  std::vector<BoxId> out{p.start};
  for (const auto& id : p.arrows) out.push_back(schema.find_arrow(id)->dst);
  return out;
}

bool equation_usable(const OlogSchema& schema, const PathEquation& eq) {
  try {
    return path_endpoints(schema, eq.lhs) == path_endpoints(schema, eq.rhs);
  } catch (const OlogError&) {
    return false;
  }
}

std::string key_of(const Path& p) {
  std::string k;
  for (const auto& a : p.arrows) {
    k += a;
    k += '\x1f';
  }
  return k;
}

}  // namespace

std::vector<RewriteStep> rewrites_of(const OlogSchema& schema, const Path& p) {
  std::vector<RewriteStep> out;
  const std::vector<BoxId> along = boxes_along(schema, p);
  const std::size_t n = p.arrows.size();
  for (std::size_t e = 0; e < schema.equations.size(); ++e) {
    const PathEquation& eq = schema.equations[e];
    if (!equation_usable(schema, eq)) continue;
    for (bool forward : {true, false}) {
      const Path& from = forward ? eq.lhs : eq.rhs;
      const Path& to = forward ? eq.rhs : eq.lhs;
      if (from == to) continue;
      const std::size_t len = from.arrows.size();
      if (len > n) continue;
      for (std::size_t k = 0; k + len <= n; ++k) {
        if (along[k] != from.start) continue;
        if (!std::equal(from.arrows.begin(), from.arrows.end(), p.arrows.begin() + k)) continue;
        Path next{p.start, {}};
        next.arrows.reserve(n - len + to.arrows.size());
        next.arrows.insert(next.arrows.end(), p.arrows.begin(), p.arrows.begin() + k);
        next.arrows.insert(next.arrows.end(), to.arrows.begin(), to.arrows.end());
        next.arrows.insert(next.arrows.end(), p.arrows.begin() + k + len, p.arrows.end());
        out.push_back(RewriteStep{e, forward, k, std::move(next)});
      }
    }
  }
  return out;
}

Derivation derive_equality(const OlogSchema& schema, const Path& p, const Path& q,
                           std::size_t max_steps, std::size_t state_cap) {
  std::pair<BoxId, BoxId> ep;
  std::pair<BoxId, BoxId> eq;
  try {
    ep = path_endpoints(schema, p);
    eq = path_endpoints(schema, q);
  } catch (const OlogError& e) {
    throw OlogError(codes::kEndpointMismatch, e.what());
  }
  if (ep != eq) {
    throw OlogError(codes::kEndpointMismatch,
                    "paths run " + ep.first + ".." + ep.second + " and " + eq.first + ".." +
                        eq.second);
  }

  Derivation result;
  if (p == q) {
    result.verdict = Derivability::Holds;
    result.explored = 1;
    return result;
  }

  struct Node {
    Path path;
    std::size_t parent;
    RewriteStep via;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> frontier;

  nodes.push_back(Node{p, 0, {}, 0});
  seen.emplace(key_of(p), 0);
  frontier.push_back(0);
  const std::string target = key_of(q);
  bool capped = false;
  bool depth_limited = false;

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    if (nodes[cur].depth >= max_steps) {
      depth_limited = true;
      continue;
    }
    for (auto& step : rewrites_of(schema, nodes[cur].path)) {
      std::string k = key_of(step.result);
      if (seen.count(k)) continue;
      if (nodes.size() >= state_cap) {
        capped = true;
        break;
      }
      const std::size_t idx = nodes.size();
      Path next = step.result;
      nodes.push_back(Node{std::move(next), cur, std::move(step), nodes[cur].depth + 1});
      seen.emplace(k, idx);
      if (k == target) {
        std::vector<RewriteStep> steps;
        for (std::size_t at = idx; at != 0; at = nodes[at].parent) steps.push_back(nodes[at].via);
        std::reverse(steps.begin(), steps.end());
        result.verdict = Derivability::Holds;
        result.witness = std::move(steps);
        result.explored = nodes.size();
        return result;
      }
      frontier.push_back(idx);
    }
    if (capped) break;
  }
  result.explored = nodes.size();
  result.exhausted = !capped && !depth_limited;
  return result;
}

bool replay_witness(const OlogSchema& schema, const Path& p, const Path& q,
                    const std::vector<RewriteStep>& witness) {
  Path at = p;
  for (const auto& step : witness) {
    auto options = rewrites_of(schema, at);
    auto hit = std::find(options.begin(), options.end(), step);
    if (hit == options.end()) return false;
    at = hit->result;
  }
  return at == q;
}

}  // namespace olog
