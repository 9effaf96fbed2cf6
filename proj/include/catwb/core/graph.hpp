#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/core/errors.hpp"

namespace catwb {

/// Finite undirected graph; loops allowed, parallel edges are not.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  FiniteGraph(std::vector<std::string> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : vertices_(std::move(vertices)) {
    for (auto [a, b] : edges) {
      if (a >= vertices_.size() || b >= vertices_.size())
        throw StructuralError("graph edge references an unknown vertex");
      if (!edges_.insert(normalize(a, b)).second) throw StructuralError("duplicate graph edge");
    }
  }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  bool adjacent(std::size_t a, std::size_t b) const { return edges_.count(normalize(a, b)) != 0; }

  friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

 private:
  static std::pair<std::size_t, std::size_t> normalize(std::size_t a, std::size_t b) {
    return {std::min(a, b), std::max(a, b)};
  }

  std::vector<std::string> vertices_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Vertex maps sending edges to edges.
inline std::vector<std::vector<std::size_t>> enumerate_graph_homs(const FiniteGraph& g, const FiniteGraph& h,
                                                                  EnumerationCap cap = {}) {
  CapCounter counter(cap, "enumerate_graph_homs");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> map(g.num_vertices());
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == g.num_vertices()) {
      out.push_back(map);
      return;
    }
    for (std::size_t w = 0; w < h.num_vertices(); ++w) {
      counter.tick();
      map[v] = w;
      bool ok = true;
      for (std::size_t u = 0; u <= v && ok; ++u)
        if (g.adjacent(u, v) && !h.adjacent(map[u], w)) ok = false;
      if (ok) go(v + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace catwb
