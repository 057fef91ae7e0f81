#include "olog/graph.hpp"

#include <map>

namespace olog {

void Graph::add_edge(const std::string& from, const std::string& to) {
  nodes.insert(from);
  nodes.insert(to);
  edges.emplace_back(from, to);
}

bool is_chain(const Graph& g) {
  if (g.nodes.empty()) return false;
  if (g.edges.size() + 1 != g.nodes.size()) return false;

  std::map<std::string, std::string> next;
  std::map<std::string, int> indegree;
  for (const auto& [from, to] : g.edges) {
    if (!g.nodes.count(from) || !g.nodes.count(to)) return false;
    if (!next.emplace(from, to).second) return false;  // out-degree 2
    if (++indegree[to] > 1) return false;
  }
  std::string head;
  int heads = 0;
  for (const auto& n : g.nodes) {
    if (!indegree.count(n)) {
      head = n;
      ++heads;
    }
  }
  if (heads != 1) return false;

  std::size_t visited = 1;
  for (auto it = next.find(head); it != next.end(); it = next.find(it->second)) {
    if (++visited > g.nodes.size()) return false;
  }
  return visited == g.nodes.size();
}

}  // namespace olog
