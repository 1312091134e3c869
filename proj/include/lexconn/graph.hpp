#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lexconn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids. Ordering is lexicographic on
/// the sorted id sequence, which is the tie-break order used by every
/// cut search in the library.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  VertexSet united(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

std::string to_string(const VertexSet& s);

/// Natural number or infinity. Infinity compares greater than every finite
/// value.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr explicit ExtendedNat(std::uint64_t value) : value_(value) {}

  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::domain_error on infinity.
  std::uint64_t value() const;

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a,
                                                    const ExtendedNat& b) {
    if (a.is_finite() && b.is_finite()) return *a.value_ <=> *b.value_;
    if (a.is_finite()) return std::strong_ordering::less;
    if (b.is_finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<std::uint64_t> value_{0};
};

/// "infinity" or the decimal value.
std::string to_string(const ExtendedNat& e);

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted, so adjacency queries are logarithmic and iteration is ordered.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges);

  /// Idempotent. Throws std::domain_error on self-loops or ids out of range.
  void add_edge(Vertex u, Vertex v);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Named graphs used by fixtures and examples.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}, center 0
Graph disjoint_union(const Graph& a, const Graph& b);

/// Throws std::domain_error if any id is >= g.order().
void check_vertex_set(const Graph& g, const VertexSet& s);

VertexSet isolated_vertices(const Graph& g);
std::size_t min_degree(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace lexconn
