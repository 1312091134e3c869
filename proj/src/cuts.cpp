#include "lexconn/cuts.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace lexconn {

namespace {

using Mask = std::uint64_t;

class BitGraph {
 public:
  explicit BitGraph(const Graph& g) : n_(g.order()), rows_(g.order(), 0) {
    if (n_ == 0) throw std::domain_error("cut oracle: empty graph");
    if (n_ > kMaxOracleOrder)
      throw std::domain_error("cut oracle: graph of order " + std::to_string(n_) +
                              " exceeds " + std::to_string(kMaxOracleOrder));
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) rows_[v] |= Mask{1} << w;
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::size_t order() const { return n_; }
  Mask all() const { return all_; }

  // True iff the vertices in `rem` induce a connected subgraph (rem != 0).
  bool connected(Mask rem) const {
    Mask reach = rem & -rem;
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
      next &= rem & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach == rem;
  }

  Mask isolated(Mask rem) const {
    Mask out = 0;
    for (Mask r = rem; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if ((rows_[v] & rem) == 0) out |= Mask{1} << v;
    }
    return out;
  }

  bool is_cut(Mask removed) const {
    Mask rem = all_ & ~removed;
    if (rem == 0) return false;
    if ((rem & (rem - 1)) == 0) return true;
    return !connected(rem);
  }

  bool is_k1_cut(Mask removed) const {
    Mask rem = all_ & ~removed;
    if (std::popcount(rem) < 4) return false;
    if (isolated(rem) != 0) return false;
    return !connected(rem);
  }

 private:
  std::size_t n_;
  std::vector<Mask> rows_;
  Mask all_ = 0;
};

VertexSet to_set(Mask m) {
  std::vector<Vertex> ids;
  for (; m; m &= m - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(ids));
}

// Visits all `size`-subsets of 0..n-1 in lexicographic order. Stops early
// when `visit` returns true; returns whether it stopped.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    if (visit(m)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct MinCutScan {
  std::size_t size;
  Mask first;
};

MinCutScan scan_min_cut(const BitGraph& bg) {
  const auto n = bg.order();
  for (std::size_t s = 0; s < n; ++s) {
    Mask found = 0;
    if (for_each_subset(n, s, [&](Mask m) {
          if (!bg.is_cut(m)) return false;
          found = m;
          return true;
        }))
      return {s, found};
  }
  // Unreachable: removing n-1 vertices always leaves K1.
  return {n - 1, 0};
}

void require_connected_noncomplete(const Graph& g, const char* what) {
  if (g.order() == 0) throw std::domain_error(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw std::domain_error(std::string(what) + ": graph is disconnected");
  if (is_complete(g)) throw std::domain_error(std::string(what) + ": graph is complete");
}

CutCertificate certify(const BitGraph& bg, Mask removed, std::size_t kappa) {
  CutCertificate c;
  c.cut = to_set(removed);
  Mask rem = bg.all() & ~removed;
  c.reduces_to_trivial = std::popcount(rem) == 1;
  c.disconnects = std::popcount(rem) >= 2 && !bg.connected(rem);
  c.isolated_after = to_set(bg.isolated(rem));
  c.is_minimum = (c.disconnects || c.reduces_to_trivial) && c.cut.size() == kappa;
  return c;
}

// Shape of G - S for arbitrary order, used by the public predicates.
struct Remainder {
  std::size_t remaining = 0;
  std::size_t components = 0;
  VertexSet isolated;
};

Remainder analyze(const Graph& g, const VertexSet& s) {
  if (g.order() == 0) throw std::domain_error("cut predicate: empty graph");
  check_vertex_set(g, s);
  std::vector<char> state(g.order(), 0);  // 1 removed, 2 visited
  for (Vertex v : s) state[v] = 1;
  Remainder r;
  r.remaining = g.order() - s.size();
  std::vector<Vertex> isolated, stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (state[root]) continue;
    ++r.components;
    state[root] = 2;
    stack.push_back(root);
    std::size_t members = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++members;
      for (Vertex w : g.neighbors(u)) {
        if (state[w]) continue;
        state[w] = 2;
        stack.push_back(w);
      }
    }
    if (members == 1) isolated.push_back(root);
  }
  r.isolated = VertexSet(std::move(isolated));
  return r;
}

}  // namespace

CutCertificate certify_cut(const Graph& g, const VertexSet& cut,
                           std::optional<std::size_t> kappa) {
  auto r = analyze(g, cut);
  CutCertificate c;
  c.cut = cut;
  c.reduces_to_trivial = r.remaining == 1;
  c.disconnects = r.components >= 2;
  c.isolated_after = r.isolated;
  const auto k = kappa ? *kappa : vertex_connectivity_oracle(g);
  c.is_minimum = (c.disconnects || c.reduces_to_trivial) && cut.size() == k;
  return c;
}

bool is_vertex_cut(const Graph& g, const VertexSet& s) {
  auto r = analyze(g, s);
  return r.remaining == 1 || r.components >= 2;
}

bool is_k1_vertex_cut(const Graph& g, const VertexSet& s) {
  auto r = analyze(g, s);
  return r.components >= 2 && r.isolated.empty();
}

std::size_t vertex_connectivity_oracle(const Graph& g) { return scan_min_cut(BitGraph(g)).size; }

VertexSet first_min_vertex_cut_oracle(const Graph& g) {
  return to_set(scan_min_cut(BitGraph(g)).first);
}

K1Search k1_search(const Graph& g) {
  BitGraph bg(g);
  const auto n = bg.order();
  for (std::size_t s = 0; s + 4 <= n; ++s) {
    Mask found = 0;
    if (for_each_subset(n, s, [&](Mask m) {
          if (!bg.is_k1_cut(m)) return false;
          found = m;
          return true;
        }))
      return {ExtendedNat(s), to_set(found)};
  }
  return {ExtendedNat::infinity(), std::nullopt};
}

ExtendedNat k1_connectivity(const Graph& g) { return k1_search(g).value; }

std::vector<CutCertificate> enumerate_min_vertex_cuts(const Graph& g) {
  require_connected_noncomplete(g, "enumerate_min_vertex_cuts");
  BitGraph bg(g);
  const auto kappa = scan_min_cut(bg).size;
  std::vector<CutCertificate> out;
  for_each_subset(bg.order(), kappa, [&](Mask m) {
    if (bg.is_cut(m)) out.push_back(certify(bg, m, kappa));
    return false;
  });
  return out;
}

std::string_view to_string(SuperReason r) {
  switch (r) {
    case SuperReason::computed: return "computed";
    case SuperReason::disconnected: return "disconnected";
    case SuperReason::complete_convention: return "complete_convention";
  }
  return "?";
}

SuperVerdict super_connectivity(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("super_connectivity: empty graph");
  if (!is_connected(g)) return {false, SuperReason::disconnected};
  if (is_complete(g)) return {true, SuperReason::complete_convention};
  return {!non_isolating_min_cut(g).has_value(), SuperReason::computed};
}

bool is_super_connected(const Graph& g) { return super_connectivity(g).super_connected; }

std::optional<CutCertificate> non_isolating_min_cut(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || is_complete(g)) return std::nullopt;
  for (auto& c : enumerate_min_vertex_cuts(g))
    if (c.isolated_after.empty() && !c.reduces_to_trivial) return c;
  return std::nullopt;
}

OptimalCut select_optimal_min_cut(const Graph& g) {
  auto cuts = enumerate_min_vertex_cuts(g);
  // Non-complete connected graphs always have at least one minimum cut.
  const CutCertificate* best = &cuts.front();
  for (const auto& c : cuts)
    if (c.isolated_after.size() < best->isolated_after.size()) best = &c;
  return {*best, best->isolated_after.size()};
}

OptimalCut select_optimal_cut_any_size(const Graph& g) {
  require_connected_noncomplete(g, "select_optimal_cut_any_size");
  BitGraph bg(g);
  const auto n = bg.order();
  const auto kappa = scan_min_cut(bg).size;
  std::optional<Mask> best;
  std::size_t best_iso = 0;
  for (std::size_t s = kappa; s < n; ++s) {
    for_each_subset(n, s, [&](Mask m) {
      if (!bg.is_cut(m)) return false;
      auto iso = static_cast<std::size_t>(std::popcount(bg.isolated(bg.all() & ~m)));
      if (!best || iso < best_iso) {
        best = m;
        best_iso = iso;
      }
      return false;
    });
    if (best && best_iso == 0) break;
  }
  return {certify(bg, *best, kappa), best_iso};
}

}  // namespace lexconn
