#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexconn/cuts.hpp"
#include "lexconn/graph.hpp"

namespace lexconn {

enum class Invariant { k, k1, super, delta, v0 };

inline constexpr Invariant kAllInvariants[] = {Invariant::k, Invariant::k1, Invariant::super,
                                               Invariant::delta, Invariant::v0};

std::string_view to_string(Invariant i);
std::optional<Invariant> parse_invariant(std::string_view name);

/// Per-graph bundle of the requested invariants. Fields that were not
/// requested stay empty.
struct InvariantReport {
  std::optional<std::size_t> k;
  std::optional<ExtendedNat> k1;
  std::optional<SuperVerdict> super;
  std::optional<std::size_t> delta;
  std::optional<VertexSet> v0;
  // Filled only when witnesses are requested.
  std::optional<VertexSet> k_cut;
  std::optional<VertexSet> k1_cut;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// k comes from max flow; k1 and super from cut enumeration, so those two
/// are limited to graphs the oracle accepts.
InvariantReport compute_invariants(const Graph& g, std::span<const Invariant> wanted,
                                   bool with_witnesses = false);

}  // namespace lexconn
