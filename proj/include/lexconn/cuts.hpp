#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lexconn/graph.hpp"

namespace lexconn {

// Brute-force cut predicates and oracles. Everything here works by subset
// enumeration over a 64-bit vertex mask and is independent of the max-flow
// code in connectivity.hpp. Graphs larger than kMaxOracleOrder are rejected
// with std::domain_error.

inline constexpr std::size_t kMaxOracleOrder = 64;

struct CutCertificate {
  VertexSet cut;
  bool disconnects = false;
  bool reduces_to_trivial = false;
  VertexSet isolated_after;
  bool is_minimum = false;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

/// Evaluates every flag of `cut` against `g`. `is_minimum` is set when the
/// cut is a vertex cut of size `kappa` (computed with the oracle if absent).
CutCertificate certify_cut(const Graph& g, const VertexSet& cut,
                           std::optional<std::size_t> kappa = std::nullopt);

/// True iff G-S is disconnected or a single vertex. S = V(G) is not a cut.
bool is_vertex_cut(const Graph& g, const VertexSet& s);

/// A vertex cut that disconnects G and leaves no isolated vertex.
bool is_k1_vertex_cut(const Graph& g, const VertexSet& s);

std::size_t vertex_connectivity_oracle(const Graph& g);

/// Lexicographically first vertex cut of minimum size.
VertexSet first_min_vertex_cut_oracle(const Graph& g);

struct K1Search {
  ExtendedNat value;
  std::optional<VertexSet> witness;  // lexicographically first minimum k1-cut
};

/// Minimum k1-vertex-cut by enumeration over sizes 0..n-4; infinity if none.
K1Search k1_search(const Graph& g);
ExtendedNat k1_connectivity(const Graph& g);

/// All minimum vertex cuts in (size, lexicographic) order. Requires a
/// connected non-complete graph on at least 3 vertices.
std::vector<CutCertificate> enumerate_min_vertex_cuts(const Graph& g);

enum class SuperReason { computed, disconnected, complete_convention };
std::string_view to_string(SuperReason r);

struct SuperVerdict {
  bool super_connected;
  SuperReason reason;

  friend bool operator==(const SuperVerdict&, const SuperVerdict&) = default;
};

/// Disconnected graphs are reported not super connected and complete graphs
/// (including K1) super connected, each with the matching reason code.
SuperVerdict super_connectivity(const Graph& g);
bool is_super_connected(const Graph& g);

/// A super-connectivity violation: a minimum cut that disconnects the graph
/// without isolating any vertex. Nullopt when the graph is super connected
/// or outside the computed regime.
std::optional<CutCertificate> non_isolating_min_cut(const Graph& g);

struct OptimalCut {
  CutCertificate certificate;
  std::size_t isolated_count;
};

/// Among minimum vertex cuts, the one leaving the fewest isolated vertices,
/// ties broken lexicographically. Requires connected non-complete input.
OptimalCut select_optimal_min_cut(const Graph& g);

/// Same selection over vertex cuts of every size (smaller cuts first on
/// ties). Requires connected non-complete input.
OptimalCut select_optimal_cut_any_size(const Graph& g);

}  // namespace lexconn
