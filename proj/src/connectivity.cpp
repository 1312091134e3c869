#include "lexconn/connectivity.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lexconn {

namespace {

// Dinic max flow on the split graph: vertex v becomes in-node 2v and
// out-node 2v+1 joined by a unit arc; each undirected edge uv becomes
// out(u)->in(v) and out(v)->in(u) with unbounded capacity.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : nodes_(2 * g.order()), head_(nodes_, -1) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(in(v), out(v), 1);
    for (auto [u, v] : g.edges()) {
      add_arc(out(u), in(v), kInf);
      add_arc(out(v), in(u), kInf);
    }
    base_cap_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) base_cap_[i] = arcs_[i].cap;
  }

  // Flow from out(s) to in(t), stopping once `limit` is reached.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = base_cap_[i];
    source_ = out(s);
    sink_ = in(t);
    std::size_t flow = 0;
    while (flow < limit && bfs()) {
      iter_ = head_;
      while (flow < limit) {
        auto pushed = dfs(source_, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // After a complete max_flow run: vertices whose in-node is reachable from
  // the source in the residual graph while their out-node is not.
  VertexSet residual_cut() const {
    std::vector<char> seen(nodes_, 0);
    std::vector<int> stack{source_};
    seen[source_] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    std::vector<Vertex> cut;
    for (int v = 0; v < nodes_ / 2; ++v)
      if (seen[in(v)] && !seen[out(v)]) cut.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(cut));
  }

 private:
  struct Arc {
    int to;
    int next;
    std::size_t cap;
  };
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

  static int in(Vertex v) { return static_cast<int>(2 * v); }
  static int out(Vertex v) { return static_cast<int>(2 * v + 1); }

  void add_arc(int from, int to, std::size_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  bool bfs() {
    level_.assign(nodes_, -1);
    std::queue<int> q;
    level_[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  std::size_t dfs(int u, std::size_t want) {
    if (u == sink_) return want;
    for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap == 0 || level_[arc.to] != level_[u] + 1) continue;
      auto got = dfs(arc.to, std::min(want, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  int nodes_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> base_cap_;
  std::vector<int> level_;
  std::vector<int> iter_;
  int source_ = 0;
  int sink_ = 0;
};

struct CutSearch {
  std::size_t value;
  VertexSet cut;
};

CutSearch search_min_cut(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::domain_error("vertex_connectivity: empty graph");
  if (n == 1 || !is_connected(g)) return {0, {}};
  if (is_complete(g)) {
    std::vector<Vertex> ids(n - 1);
    for (Vertex v = 0; v + 1 < n; ++v) ids[v] = v;
    return {n - 1, VertexSet(std::move(ids))};
  }

  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  // N(v) separates v from any non-neighbor, so it is a valid starting cut.
  CutSearch best{g.degree(v), VertexSet(std::vector<Vertex>(g.neighbors(v).begin(),
                                                            g.neighbors(v).end()))};
  SplitFlow flow(g);
  auto try_pair = [&](Vertex s, Vertex t) {
    if (best.value == 0) return;
    auto f = flow.max_flow(s, t, best.value);
    if (f < best.value) best = {f, flow.residual_cut()};
  };

  for (Vertex w = 0; w < n; ++w)
    if (w != v && !g.adjacent(v, w)) try_pair(v, w);
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) try_pair(nbrs[i], nbrs[j]);
  return best;
}

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s >= g.order() || t >= g.order()) throw std::domain_error("vertex id out of range");
  if (s == t || g.adjacent(s, t))
    throw std::domain_error("local connectivity needs distinct non-adjacent vertices");
  SplitFlow flow(g);
  return flow.max_flow(s, t, g.order());
}

std::size_t vertex_connectivity(const Graph& g) { return search_min_cut(g).value; }

VertexSet minimum_vertex_cut(const Graph& g) { return search_min_cut(g).cut; }

}  // namespace lexconn
