#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "olog/natural_order.hpp"

namespace olog {

// Finite directed graph. Edge order is significant for equality.
struct Graph {
  IdSet nodes;
  std::vector<std::pair<std::string, std::string>> edges;

  // Adds an edge, registering both endpoints as nodes.
  void add_edge(const std::string& from, const std::string& to);

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph& a, const Graph& b) {
    if (auto c = std::lexicographical_compare_three_way(a.nodes.begin(), a.nodes.end(),
                                                        b.nodes.begin(), b.nodes.end());
        c != 0)
      return c;
    return a.edges <=> b.edges;
  }
};

// True iff the nodes admit a linear order n1->n2->...->nk that exactly
// covers the edge list. A single node without edges is a chain; the empty
// graph is not.
bool is_chain(const Graph& g);

}  // namespace olog
