#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "distnum/bitset64.hpp"
#include "distnum/perm.hpp"

namespace distnum {

using Vertex = std::uint32_t;

// Finite simple graph on vertices 0..n-1 with bit-set adjacency rows.
// Symmetric and irreflexive by construction; all operations are pure.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  const Bitset64& neighbors(Vertex v) const { return adj_[v]; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

  bool operator==(const Graph& rhs) const { return adj_ == rhs.adj_; }

  // BFS distances from src; unreachable vertices get no value.
  std::vector<std::optional<std::uint32_t>> distances_from(Vertex src) const;

  bool is_connected() const;
  std::size_t max_degree() const;

  // True iff p maps edges to edges and non-edges to non-edges.
  bool is_automorphism(const Perm& p) const;

private:
  std::vector<Bitset64> adj_;
};

// Relates vertices of a derived graph back to the graph it came from.
// to_host[new_id] = original id. Injective by construction.
struct VertexMap {
  std::vector<Vertex> to_host;

  Vertex host(Vertex derived) const { return to_host[derived]; }
  std::size_t size() const { return to_host.size(); }
  std::optional<Vertex> derived_of(Vertex host_vertex) const;
};

struct BallResult {
  Graph graph;
  VertexMap map;
  Vertex center_host;     // center in host ids
  Vertex center_derived;  // center in ball ids
  std::uint32_t radius;
};

// Subgraph induced by `vertices` (host ids, any order; deduplicated and
// sorted ascending so derived ids are deterministic).
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g,
                                             const std::vector<Vertex>& vertices);

// Ball-graph of radius r centered at x: subgraph induced by all vertices
// at BFS distance <= r. Unreachable vertices are excluded, so disconnected
// hosts are fine.
BallResult ball(const Graph& g, Vertex x, std::uint32_t r);

Graph complement(const Graph& g);

// Disjoint union of m >= 1 copies; copy i occupies ids [i*n, (i+1)*n).
Graph disjoint_copies(const Graph& g, std::size_t m);

// One vertex per cell; distinct cells adjacent iff some edge of g joins
// them. The partition must cover the vertex set with disjoint nonempty cells.
Graph quotient_graph(const Graph& g, const std::vector<std::vector<Vertex>>& cells);

// Convenience constructors used across tests and the strip family.
Graph complete_graph(std::size_t n);
Graph null_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace distnum
