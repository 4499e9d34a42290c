#include "gfa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

std::pair<std::size_t, std::size_t> unordered_key(std::size_t i, std::size_t j) {
  return {std::min(i, j), std::max(i, j)};
}

std::string edge_name(std::size_t u, std::size_t v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph WeightedGraph::from_edges(ScalarDomain domain, std::size_t n, const std::vector<EdgeSpec>& edges,
                                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ParseError("labels has " + std::to_string(labels.size()) + " entries, expected " + std::to_string(n));
  }
  WeightedGraph g(domain, n);
  g.labels_ = std::move(labels);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (e.u >= n || e.v >= n) throw ParseError(where + ": node index out of range");
    if (e.u == e.v) throw ParseError(where + ": self-loop at node " + std::to_string(e.u));
    const auto key = unordered_key(e.u, e.v);
    if (g.w_.contains(key)) throw ParseError(where + ": duplicate edge " + edge_name(e.u, e.v));
    const bool has_w = e.w.has_value();
    const bool has_gamma = e.gamma_uv.has_value() || e.gamma_vu.has_value();
    if (has_w == has_gamma) throw ParseError(where + ": exactly one of w or the gamma pair must be given");
    auto check_domain = [&](const Scalar& s, const char* field) {
      if (!(s.domain() == domain)) {
        throw ParseError(where + "." + field + ": value in " + s.domain().name() + ", graph is " + domain.name());
      }
    };
    if (has_w) {
      check_domain(*e.w, "w");
      if (e.w->is_zero()) throw ParseError(where + ".w: edge weight must be nonzero");
      g.w_.emplace(key, *e.w);
      continue;
    }
    const Scalar guv = e.gamma_uv.value_or(domain.zero());
    const Scalar gvu = e.gamma_vu.value_or(domain.zero());
    check_domain(guv, "gamma_uv");
    check_domain(gvu, "gamma_vu");
    const Scalar w = guv * guv + gvu * gvu;
    if (w.is_zero()) throw ParseError(where + ": derived weight gamma_uv^2 + gamma_vu^2 is zero");
    g.w_.emplace(key, w);
    if (!guv.is_zero()) g.gamma_.emplace(std::pair{e.u, e.v}, guv);
    if (!gvu.is_zero()) g.gamma_.emplace(std::pair{e.v, e.u}, gvu);
    g.gamma_edges_.insert(key);
  }
  g.build_adjacency();
  return g;
}

WeightedGraph WeightedGraph::from_weights(ScalarDomain domain, std::size_t n, const std::vector<WeightedEdge>& edges,
                                          std::vector<std::string> labels) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& e : edges) specs.push_back({e.u, e.v, e.weight, std::nullopt, std::nullopt});
  return from_edges(domain, n, specs, std::move(labels));
}

void WeightedGraph::build_adjacency() {
  adjacency_.assign(n_, {});
  for (const auto& [key, w] : w_) {
    adjacency_[key.first].push_back({key.second, w});
    adjacency_[key.second].push_back({key.first, w});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

void WeightedGraph::check_node(std::size_t i) const {
  if (i >= n_) throw ContractError("node index " + std::to_string(i) + " out of range (n = " + std::to_string(n_) + ")");
}

Scalar WeightedGraph::weight(std::size_t i, std::size_t j) const {
  check_node(i);
  check_node(j);
  const auto it = w_.find(unordered_key(i, j));
  return it == w_.end() ? domain_.zero() : it->second;
}

bool WeightedGraph::adjacent(std::size_t i, std::size_t j) const {
  check_node(i);
  check_node(j);
  return w_.contains(unordered_key(i, j));
}

const std::vector<Neighbor>& WeightedGraph::neighbors(std::size_t i) const {
  check_node(i);
  return adjacency_[i];
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(w_.size());
  for (const auto& [key, w] : w_) out.push_back({key.first, key.second, w});
  return out;
}

bool WeightedGraph::has_gamma() const { return gamma_edges_.size() == w_.size(); }

bool WeightedGraph::edge_from_gamma(std::size_t i, std::size_t j) const {
  return gamma_edges_.contains(unordered_key(i, j));
}

Scalar WeightedGraph::gamma(std::size_t i, std::size_t j) const {
  if (!has_gamma()) {
    throw ContractError("the difference operator needs directed weights gamma on every edge; this graph gives only w");
  }
  return stored_gamma(i, j);
}

Scalar WeightedGraph::stored_gamma(std::size_t i, std::size_t j) const {
  check_node(i);
  check_node(j);
  const auto it = gamma_.find({i, j});
  return it == gamma_.end() ? domain_.zero() : it->second;
}

WeightedGraph WeightedGraph::reweighted(const std::map<std::pair<std::size_t, std::size_t>, Scalar>& weights) const {
  std::vector<WeightedEdge> edges;
  for (const auto& [key, w] : weights) {
    if (!w_.contains(unordered_key(key.first, key.second))) {
      throw ContractError("reweighting names non-edge " + edge_name(key.first, key.second));
    }
    if (!w.is_zero()) edges.push_back({key.first, key.second, w});
  }
  return from_weights(domain_, n_, edges, labels_);
}

// ---------------------------------------------------------------------------
// Builders

WeightedGraph complete_graph(std::size_t n, const Scalar& w) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  return WeightedGraph::from_weights(w.domain(), n, edges);
}

WeightedGraph path_graph(std::size_t n, const Scalar& w) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, w});
  return WeightedGraph::from_weights(w.domain(), n, edges);
}

WeightedGraph cycle_graph(std::size_t n, const Scalar& w) {
  if (n < 3) throw ContractError("cycle needs at least 3 nodes");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n), w});
  return WeightedGraph::from_weights(w.domain(), n, edges);
}

WeightedGraph edgeless_graph(ScalarDomain domain, std::size_t n) { return WeightedGraph::from_weights(domain, n, {}); }

// ---------------------------------------------------------------------------
// Structural queries

Scalar node_strength(const WeightedGraph& g, std::size_t i) {
  Scalar s = g.domain().zero();
  for (const auto& nb : g.neighbors(i)) s += nb.weight;
  return s;
}

AdjacencyList adjacency_list(const WeightedGraph& g) {
  AdjacencyList adj(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) adj[i].push_back(nb.node);
  return adj;
}

std::vector<std::optional<std::size_t>> bfs_distances(const AdjacencyList& adj, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(adj.size());
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    for (auto y : adj[x]) {
      if (dist[y]) continue;
      dist[y] = *dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

std::optional<std::size_t> girth(const AdjacencyList& adj) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
  const std::size_t n = adj.size();
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t s = 0; s < n && best > 3; ++s) {
    std::fill(dist.begin(), dist.end(), kNone);
    std::queue<std::size_t> q;
    dist[s] = 0;
    parent[s] = kNone;
    q.push(s);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      // No shorter cycle can be discovered past this depth.
      if (2 * dist[x] + 1 >= best) break;
      for (auto y : adj[x]) {
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return best;
}

StructureReport triangles_girth_distance(const WeightedGraph& g) {
  StructureReport r;
  const auto adj = adjacency_list(g);
  const std::size_t n = g.node_count();
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : adj[i]) {
      if (j <= i) continue;
      for (auto k : adj[j])
        if (k > j && g.adjacent(i, k)) r.triangles.push_back({i, j, k});
    }
  std::sort(r.triangles.begin(), r.triangles.end());
  r.girth = girth(adj);
  r.distance.reserve(n);
  for (std::size_t s = 0; s < n; ++s) r.distance.push_back(bfs_distances(adj, s));
  return r;
}

// ---------------------------------------------------------------------------
// Independent sets

const char* to_string(IndependenceVariant v) {
  return v == IndependenceVariant::independent ? "independent" : "two-packing";
}

namespace {

// Conflict relation: adjacency, plus a shared neighbour for 2-packings.
std::vector<std::vector<bool>> conflict_matrix(const WeightedGraph& g, IndependenceVariant variant) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : g.neighbors(i)) {
      c[i][a.node] = true;
      if (variant == IndependenceVariant::two_packing) {
        for (const auto& b : g.neighbors(a.node))
          if (b.node != i) c[i][b.node] = true;
      }
    }
  }
  return c;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const std::vector<std::vector<bool>>& conflicts) : n_(conflicts.size()) {
    conflict_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (conflicts[i][j]) conflict_[i] |= bit(j);
  }

  std::vector<std::size_t> run() {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    search(all, 0, 0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (best_ & bit(i)) out.push_back(i);
    return out;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Greedy clique cover of the candidate set: an upper bound on any
  // independent subset of it.
  std::size_t bound(std::uint64_t cand) const {
    std::size_t cliques = 0;
    while (cand) {
      const auto v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= ~bit(v);
      std::uint64_t common = conflict_[v] & cand;
      while (common) {
        const auto u = static_cast<std::size_t>(std::countr_zero(common));
        cand &= ~bit(u);
        common &= conflict_[u] & ~bit(u);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(std::uint64_t cand, std::uint64_t current, std::size_t size) {
    if (cand == 0) {
      if (!found_ || size > best_size_) {
        best_size_ = size;
        best_ = current;
        found_ = true;
      }
      return;
    }
    if (found_ && size + bound(cand) <= best_size_) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    search(cand & ~conflict_[v] & ~bit(v), current | bit(v), size + 1);
    search(cand & ~bit(v), current, size);
  }

  std::size_t n_;
  std::vector<std::uint64_t> conflict_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
  bool found_ = false;
};

}  // namespace

std::vector<std::size_t> max_independent_set(const WeightedGraph& g, IndependenceVariant variant) {
  if (g.node_count() > kMaxExactIndependentSetNodes) {
    throw SizeError("exact independent-set search is capped at " + std::to_string(kMaxExactIndependentSetNodes) +
                    " nodes (graph has " + std::to_string(g.node_count()) + "); use the greedy fallback (--greedy)");
  }
  return IndependentSetSearch(conflict_matrix(g, variant)).run();
}

std::vector<std::size_t> greedy_independent_set(const WeightedGraph& g, IndependenceVariant variant) {
  const auto c = conflict_matrix(g, variant);
  const std::size_t n = g.node_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> out;
  for (;;) {
    std::size_t pick = n, pick_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      std::size_t deg = 0;
      for (std::size_t j = 0; j < n; ++j) deg += (alive[j] && c[i][j]) ? 1 : 0;
      if (pick == n || deg < pick_deg) {
        pick = i;
        pick_deg = deg;
      }
    }
    if (pick == n) break;
    out.push_back(pick);
    alive[pick] = false;
    for (std::size_t j = 0; j < n; ++j)
      if (c[pick][j]) alive[j] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Line graph

LineGraphResult line_graph(const WeightedGraph& g) {
  const auto edges = g.edges();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<std::string> labels;
  auto label_of = [&](std::size_t i) { return g.labels().empty() ? std::to_string(i) : g.labels()[i]; };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    index[{edges[k].u, edges[k].v}] = k;
    origin.emplace_back(edges[k].u, edges[k].v);
    labels.push_back(label_of(edges[k].u) + "-" + label_of(edges[k].v));
  }

  std::vector<WeightedEdge> new_edges;
  std::vector<std::pair<std::size_t, std::size_t>> vanishing;
  const Scalar two = g.domain().from_int(2);
  for (std::size_t j = 0; j < g.node_count(); ++j) {
    const auto& nbs = g.neighbors(j);
    for (std::size_t x = 0; x < nbs.size(); ++x) {
      for (std::size_t y = x + 1; y < nbs.size(); ++y) {
        const auto& a = nbs[x];
        const auto& b = nbs[y];
        const std::size_t ea = index.at({std::min(a.node, j), std::max(a.node, j)});
        const std::size_t eb = index.at({std::min(b.node, j), std::max(b.node, j)});
        const Scalar denom = a.weight + b.weight;
        if (!denom.is_unit()) {
          throw DomainError("line-graph weight denominator w" + edge_name(a.node, j) + " + w" + edge_name(j, b.node) +
                            " = " + denom.to_string() + " is not invertible");
        }
        const Scalar w = two * a.weight * b.weight / denom;
        const auto u = std::min(ea, eb), v = std::max(ea, eb);
        if (w.is_zero()) {
          vanishing.emplace_back(u, v);
          continue;
        }
        new_edges.push_back({u, v, w});
      }
    }
  }
  std::sort(new_edges.begin(), new_edges.end(),
            [](const WeightedEdge& p, const WeightedEdge& q) { return std::pair(p.u, p.v) < std::pair(q.u, q.v); });
  return {WeightedGraph::from_weights(g.domain(), edges.size(), new_edges, std::move(labels)), std::move(origin),
          std::move(vanishing)};
}

}  // namespace gfa
