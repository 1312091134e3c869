#include "lexconn/lexprod.hpp"

#include <stdexcept>
#include <vector>

#include "lexconn/connectivity.hpp"

namespace lexconn {

ProductIndex::ProductIndex(std::size_t n1, std::size_t m) : n1_(n1), m_(m) {
  if (n1 == 0 || m == 0) throw std::domain_error("product index: empty factor");
}

Vertex ProductIndex::pair(Vertex i, Vertex j) const {
  if (i >= n1_ || j >= m_) throw std::domain_error("product index out of range");
  return static_cast<Vertex>(i * m_ + j);
}

std::pair<Vertex, Vertex> ProductIndex::unpair(Vertex v) const {
  if (v >= size()) throw std::domain_error("product vertex out of range");
  return {static_cast<Vertex>(v / m_), static_cast<Vertex>(v % m_)};
}

Graph lex_product(const Graph& g1, const Graph& g2) {
  const ProductIndex idx(g1.order(), g2.order());
  const auto m = static_cast<Vertex>(g2.order());
  Graph p(idx.size());
  for (Vertex i = 0; i < g1.order(); ++i)
    for (auto [a, b] : g2.edges()) p.add_edge(idx.pair(i, a), idx.pair(i, b));
  for (auto [i, k] : g1.edges())
    for (Vertex j = 0; j < m; ++j)
      for (Vertex q = 0; q < m; ++q) p.add_edge(idx.pair(i, j), idx.pair(k, q));
  return p;
}

VertexSet lift_min_cut(const VertexSet& x, std::size_t m) {
  std::vector<Vertex> ids;
  ids.reserve(x.size() * m);
  for (Vertex i : x)
    for (std::size_t j = 0; j < m; ++j) ids.push_back(static_cast<Vertex>(i * m + j));
  return VertexSet(std::move(ids));
}

VertexSet lift_k1_cut(const Graph& g1, const Graph& g2, const VertexSet& x) {
  if (!is_vertex_cut(g1, x)) throw std::domain_error("lift_k1_cut: X is not a vertex cut of G1");
  const auto m = g2.order();
  const auto v0 = isolated_vertices(g2);
  std::vector<Vertex> extra;
  for (Vertex b = 0; b < g1.order(); ++b) {
    if (x.contains(b)) continue;
    bool stranded = true;
    for (Vertex w : g1.neighbors(b))
      if (!x.contains(w)) {
        stranded = false;
        break;
      }
    if (!stranded) continue;
    for (Vertex y : v0) extra.push_back(static_cast<Vertex>(b * m + y));
  }
  return lift_min_cut(x, m).united(VertexSet(std::move(extra)));
}

std::size_t lex_connectivity(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0)
    throw std::domain_error("lex_connectivity: empty factor");
  if (!is_connected(g1)) return 0;
  const auto m = g2.order();
  if (is_complete(g1)) return (g1.order() - 1) * m + vertex_connectivity(g2);
  return vertex_connectivity(g1) * m;
}

std::string_view to_string(CutReading r) {
  return r == CutReading::min_cuts_only ? "min_cuts_only" : "all_cuts";
}

std::optional<CutReading> parse_cut_reading(std::string_view s) {
  if (s == "min_cuts_only") return CutReading::min_cuts_only;
  if (s == "all_cuts") return CutReading::all_cuts;
  return std::nullopt;
}

std::string_view to_string(K1Branch b) {
  switch (b) {
    case K1Branch::thm22: return "thm22";
    case K1Branch::thm23: return "thm23";
    case K1Branch::cor24: return "cor24";
    case K1Branch::oracle_fallback: return "oracle_fallback";
  }
  return "?";
}

std::string_view to_string(SuperBranch b) {
  switch (b) {
    case SuperBranch::part1: return "part1";
    case SuperBranch::part2: return "part2";
    case SuperBranch::part3: return "part3";
    case SuperBranch::iso_m1: return "iso_m1";
    case SuperBranch::oracle_fallback: return "oracle_fallback";
  }
  return "?";
}

LexK1Formula lex_k1_formula(const Graph& g1, const Graph& g2, CutReading reading) {
  if (g1.order() == 0 || g2.order() == 0) throw std::domain_error("lex_k1: empty factor");
  if (!is_connected(g1)) throw std::domain_error("lex_k1: G1 is disconnected");
  if (is_complete(g1)) throw std::domain_error("lex_k1: no closed form for complete G1");

  const auto m = g2.order();
  const auto kappa = vertex_connectivity(g1);
  const auto k1 = k1_search(g1);
  const auto product_kappa = lex_connectivity(g1, g2);

  LexK1Formula f;
  if (k1.value == ExtendedNat(kappa)) {
    f.branch = K1Branch::thm22;
    f.value = ExtendedNat(product_kappa);
    f.lifted_k1_cut = lift_min_cut(*k1.witness, m);
    return f;
  }

  const auto chosen = reading == CutReading::min_cuts_only ? select_optimal_min_cut(g1)
                                                           : select_optimal_cut_any_size(g1);
  f.isolated_count = chosen.isolated_count;
  f.augmented_cut = lift_k1_cut(g1, g2, chosen.certificate.cut);
  const ExtendedNat via_cut(product_kappa + chosen.isolated_count * isolated_vertices(g2).size());

  if (k1.value.is_infinite()) {
    f.branch = K1Branch::cor24;
    f.value = via_cut;
    return f;
  }
  f.branch = K1Branch::thm23;
  f.lifted_k1_cut = lift_min_cut(*k1.witness, m);
  f.value = std::min(ExtendedNat(k1.value.value() * m), via_cut);
  return f;
}

namespace {

LexK1Result from_oracle(const Graph& product, std::string reason) {
  auto search = k1_search(product);
  return {search.value, K1Branch::oracle_fallback, search.witness, std::move(reason)};
}

}  // namespace

LexK1Result lex_k1_connectivity(const Graph& g1, const Graph& g2, CutReading reading) {
  if (g1.order() == 0 || g2.order() == 0) throw std::domain_error("lex_k1: empty factor");
  if (!is_connected(g1)) throw std::domain_error("lex_k1: G1 is disconnected");
  const auto product = lex_product(g1, g2);
  if (is_complete(g1)) return from_oracle(product, "complete first factor");

  const auto f = lex_k1_formula(g1, g2, reading);
  std::optional<VertexSet> witness;
  auto sized = [&](const std::optional<VertexSet>& c) {
    return c && f.value.is_finite() && c->size() == f.value.value();
  };
  // The smaller candidate; lifted S wins ties.
  if (sized(f.lifted_k1_cut))
    witness = f.lifted_k1_cut;
  else if (sized(f.augmented_cut))
    witness = f.augmented_cut;

  if (!witness) return from_oracle(product, "no formula candidate matches the formula value");
  if (!is_k1_vertex_cut(product, *witness))
    return from_oracle(product, "formula witness " + to_string(*witness) +
                                    " is not a k1-vertex-cut of the product");
  return {f.value, f.branch, std::move(witness), std::nullopt};
}

LexSuperResult lex_super_connected(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw std::domain_error("lex_super: empty factor");
  if (!is_connected(g1))
    return {false, SuperBranch::oracle_fallback, "disconnected"};
  if (is_complete(g1)) {
    auto v = super_connectivity(lex_product(g1, g2));
    return {v.super_connected, SuperBranch::oracle_fallback, std::string(to_string(v.reason))};
  }
  if (g2.order() == 1) return {is_super_connected(g1), SuperBranch::iso_m1, std::nullopt};
  if (is_connected(g2)) return {false, SuperBranch::part1, std::nullopt};
  if (isolated_vertices(g2).empty()) return {false, SuperBranch::part2, std::nullopt};
  if (is_super_connected(g1)) return {true, SuperBranch::part3, std::nullopt};
  auto v = super_connectivity(lex_product(g1, g2));
  return {v.super_connected, SuperBranch::oracle_fallback, std::string(to_string(v.reason))};
}

}  // namespace lexconn
