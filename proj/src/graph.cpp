#include "lexconn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexconn {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::uint64_t ExtendedNat::value() const {
  if (!value_) throw std::domain_error("ExtendedNat: value() on infinity");
  return *value_;
}

std::string to_string(const ExtendedNat& e) {
  return e.is_finite() ? std::to_string(e.value()) : "infinity";
}

Graph::Graph(std::size_t order) : adj_(order) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adj_(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw std::domain_error("vertex id out of range: " + std::to_string(std::max(u, v)));
  if (u == v) throw std::domain_error("self-loop on vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adj_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.ids().back() >= g.order())
    throw std::domain_error("vertex id " + std::to_string(s.ids().back()) +
                            " out of range for graph of order " +
                            std::to_string(g.order()));
}

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.order() == 0) throw std::domain_error(std::string(what) + ": empty graph");
}

}  // namespace

VertexSet isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return VertexSet(std::move(out));
}

std::size_t min_degree(const Graph& g) {
  require_nonempty(g, "min_degree");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  require_nonempty(g, "connected_components");
  std::vector<int> seen(g.order(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members{root};
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        members.push_back(w);
        stack.push_back(w);
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_complete(const Graph& g) {
  require_nonempty(g, "is_complete");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

}  // namespace lexconn
