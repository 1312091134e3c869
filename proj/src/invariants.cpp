#include "lexconn/invariants.hpp"

#include <algorithm>

#include "lexconn/connectivity.hpp"

namespace lexconn {

std::string_view to_string(Invariant i) {
  switch (i) {
    case Invariant::k: return "k";
    case Invariant::k1: return "k1";
    case Invariant::super: return "super";
    case Invariant::delta: return "delta";
    case Invariant::v0: return "v0";
  }
  return "?";
}

std::optional<Invariant> parse_invariant(std::string_view name) {
  for (auto i : kAllInvariants)
    if (to_string(i) == name) return i;
  return std::nullopt;
}

InvariantReport compute_invariants(const Graph& g, std::span<const Invariant> wanted,
                                   bool with_witnesses) {
  auto want = [&](Invariant i) { return std::find(wanted.begin(), wanted.end(), i) != wanted.end(); };
  InvariantReport r;
  if (want(Invariant::k)) {
    r.k = vertex_connectivity(g);
    if (with_witnesses) r.k_cut = minimum_vertex_cut(g);
  }
  if (want(Invariant::k1)) {
    auto search = k1_search(g);
    r.k1 = search.value;
    if (with_witnesses) r.k1_cut = search.witness;
  }
  if (want(Invariant::super)) r.super = super_connectivity(g);
  if (want(Invariant::delta)) r.delta = min_degree(g);
  if (want(Invariant::v0)) r.v0 = isolated_vertices(g);
  return r;
}

}  // namespace lexconn
