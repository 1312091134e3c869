#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lexconn/cuts.hpp"
#include "lexconn/graph.hpp"

namespace lexconn {

/// Row-major indexing of V(G1) x V(G2): (i, j) <-> i*m + j.
class ProductIndex {
 public:
  ProductIndex(std::size_t n1, std::size_t m);

  std::size_t n1() const { return n1_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return n1_ * m_; }

  Vertex pair(Vertex i, Vertex j) const;
  std::pair<Vertex, Vertex> unpair(Vertex v) const;

 private:
  std::size_t n1_;
  std::size_t m_;
};

/// (i,j) ~ (p,q) iff ip is an edge of G1, or i == p and jq is an edge of G2.
Graph lex_product(const Graph& g1, const Graph& g2);

/// X x V(G2) under ProductIndex.
VertexSet lift_min_cut(const VertexSet& x, std::size_t m);

/// (X x V(G2)) u (B x V0(G2)), where B holds the vertices outside X whose
/// whole neighborhood lies inside X. X must be a vertex cut of G1.
VertexSet lift_k1_cut(const Graph& g1, const Graph& g2, const VertexSet& x);

/// Closed-form connectivity of G1 o G2: kappa(G1)*m for non-complete G1,
/// (n-1)*m + kappa(G2) for G1 = K_n, and 0 for disconnected G1.
std::size_t lex_connectivity(const Graph& g1, const Graph& g2);

/// How the cut X in the k1 formula is quantified: over minimum vertex cuts
/// of G1 only, or over vertex cuts of every size.
enum class CutReading { min_cuts_only, all_cuts };
std::string_view to_string(CutReading r);
std::optional<CutReading> parse_cut_reading(std::string_view s);

enum class K1Branch { thm22, thm23, cor24, oracle_fallback };
std::string_view to_string(K1Branch b);

/// Raw value of the k1 closed form with the candidate cuts it is built from.
/// No verification happens here; the harness compares this against the
/// brute-force oracle.
struct LexK1Formula {
  ExtendedNat value;
  K1Branch branch;               // oracle_fallback when G1 is complete
  std::size_t isolated_count = 0;  // |V0(G1 - X)| for the selected X
  std::optional<VertexSet> lifted_k1_cut;  // S x V(G2), when k1(G1) is finite
  std::optional<VertexSet> augmented_cut;  // lift_k1_cut of the selected X
};

/// Requires connected G1 (throws std::domain_error otherwise).
LexK1Formula lex_k1_formula(const Graph& g1, const Graph& g2,
                            CutReading reading = CutReading::min_cuts_only);

struct LexK1Result {
  ExtendedNat value;
  K1Branch branch;
  std::optional<VertexSet> witness;
  std::optional<std::string> fallback_reason;
};

/// k1(G1 o G2) through the closed form. Every finite answer carries a witness
/// that has been checked to be a k1-vertex-cut of the product of exactly the
/// reported size; when the formula cannot produce one, the answer comes from
/// the brute-force oracle with branch oracle_fallback.
LexK1Result lex_k1_connectivity(const Graph& g1, const Graph& g2,
                                CutReading reading = CutReading::min_cuts_only);

enum class SuperBranch { part1, part2, part3, iso_m1, oracle_fallback };
std::string_view to_string(SuperBranch b);

struct LexSuperResult {
  bool super_connected;
  SuperBranch branch;
  std::optional<std::string> reason;
};

LexSuperResult lex_super_connected(const Graph& g1, const Graph& g2);

}  // namespace lexconn
