#include "distnum/graph.hpp"

#include <algorithm>
#include <queue>

#include "distnum/errors.hpp"

namespace distnum {

Graph::Graph(std::size_t n) : adj_(n, Bitset64(n)) {}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size())
    throw precondition_error("edge endpoint out of range");
  if (u == v) throw precondition_error("self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < adj_.size(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, Vertex(v));
    });
  return out;
}

std::vector<std::optional<std::uint32_t>> Graph::distances_from(Vertex src) const {
  std::vector<std::optional<std::uint32_t>> dist(adj_.size());
  if (src >= adj_.size()) throw precondition_error("vertex out of range");
  dist[src] = 0;
  std::queue<Vertex> q;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    adj_[u].for_each([&](std::size_t v) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        q.push(Vertex(v));
      }
    });
  }
  return dist;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  auto dist = distances_from(0);
  return std::all_of(dist.begin(), dist.end(),
                     [](const auto& d) { return d.has_value(); });
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.count());
  return d;
}

bool Graph::is_automorphism(const Perm& p) const {
  if (p.degree() != adj_.size()) return false;
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v = u + 1; v < adj_.size(); ++v)
      if (adjacent(u, v) != adjacent(p[u], p[v])) return false;
  return true;
}

std::optional<Vertex> VertexMap::derived_of(Vertex host_vertex) const {
  for (Vertex i = 0; i < to_host.size(); ++i)
    if (to_host[i] == host_vertex) return i;
  return std::nullopt;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g,
                                             const std::vector<Vertex>& vertices) {
  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (Vertex v : vs)
    if (v >= g.vertex_count()) throw precondition_error("vertex id out of range");

  Graph sub(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) sub.add_edge(Vertex(i), Vertex(j));
  return {std::move(sub), VertexMap{std::move(vs)}};
}

BallResult ball(const Graph& g, Vertex x, std::uint32_t r) {
  auto dist = g.distances_from(x);
  std::vector<Vertex> in_ball;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] && *dist[v] <= r) in_ball.push_back(v);
  auto [sub, map] = induced_subgraph(g, in_ball);
  Vertex center_derived = *map.derived_of(x);
  return BallResult{std::move(sub), std::move(map), x, center_derived, r};
}

Graph complement(const Graph& g) {
  Graph c(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_copies(const Graph& g, std::size_t m) {
  if (m < 1) throw precondition_error("disjoint_copies requires m >= 1");
  std::size_t n = g.vertex_count();
  Graph out(n * m);
  for (std::size_t copy = 0; copy < m; ++copy)
    for (const auto& [u, v] : g.edges())
      out.add_edge(Vertex(copy * n + u), Vertex(copy * n + v));
  return out;
}

Graph quotient_graph(const Graph& g,
                     const std::vector<std::vector<Vertex>>& cells) {
  std::vector<std::int64_t> cell_of(g.vertex_count(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw precondition_error("quotient cell is empty");
    for (Vertex v : cells[c]) {
      if (v >= g.vertex_count()) throw precondition_error("cell vertex out of range");
      if (cell_of[v] != -1) throw precondition_error("quotient cells overlap");
      cell_of[v] = std::int64_t(c);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (cell_of[v] == -1)
      throw precondition_error("quotient partition does not cover the vertex set");

  Graph q(cells.size());
  for (const auto& [u, v] : g.edges())
    if (cell_of[u] != cell_of[v])
      q.add_edge(Vertex(cell_of[u]), Vertex(cell_of[v]));
  return q;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph null_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n < 2) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, Vertex((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace distnum
