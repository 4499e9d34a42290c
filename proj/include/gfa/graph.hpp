#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gfa/scalar.hpp"

namespace gfa {

/// One edge entry as supplied by a caller: either a symmetric weight w or the
/// directed pair (gamma_uv, gamma_vu).
struct EdgeSpec {
  std::size_t u;
  std::size_t v;
  std::optional<Scalar> w;
  std::optional<Scalar> gamma_uv;
  std::optional<Scalar> gamma_vu;
};

struct Neighbor {
  std::size_t node;
  Scalar weight;
};

struct WeightedEdge {
  std::size_t u;  // u < v
  std::size_t v;
  Scalar weight;
};

/// Finite simple graph with symmetric weights w and optional directed weights
/// gamma. When an edge is given through gamma, w_uv = gamma_uv^2 + gamma_vu^2.
/// Immutable after construction.
class WeightedGraph {
 public:
  /// Validates and builds; throws ParseError on self-loops, duplicate edges,
  /// out-of-range nodes, zero weights and domain mismatches.
  static WeightedGraph from_edges(ScalarDomain domain, std::size_t n, const std::vector<EdgeSpec>& edges,
                                  std::vector<std::string> labels = {});
  static WeightedGraph from_weights(ScalarDomain domain, std::size_t n, const std::vector<WeightedEdge>& edges,
                                    std::vector<std::string> labels = {});

  const ScalarDomain& domain() const { return domain_; }
  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return w_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// w_ij; zero for non-edges and i == j.
  Scalar weight(std::size_t i, std::size_t j) const;
  bool adjacent(std::size_t i, std::size_t j) const;
  const std::vector<Neighbor>& neighbors(std::size_t i) const;
  std::size_t degree(std::size_t i) const { return neighbors(i).size(); }
  /// Edges sorted by (u, v) with u < v.
  std::vector<WeightedEdge> edges() const;

  /// True when every edge carries directed weights.
  bool has_gamma() const;
  bool edge_from_gamma(std::size_t i, std::size_t j) const;
  /// gamma_ij; ContractError when the graph lacks directed weights.
  Scalar gamma(std::size_t i, std::size_t j) const;
  /// Stored gamma_ij regardless of whether every edge has directed weights.
  Scalar stored_gamma(std::size_t i, std::size_t j) const;

  /// Same topology with new symmetric weights (directed weights dropped).
  /// Edges whose new weight is zero are removed.
  WeightedGraph reweighted(const std::map<std::pair<std::size_t, std::size_t>, Scalar>& weights) const;

 private:
  WeightedGraph(ScalarDomain domain, std::size_t n) : domain_(domain), n_(n) {}
  void check_node(std::size_t i) const;
  void build_adjacency();

  ScalarDomain domain_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> w_;      // key (min, max)
  std::map<std::pair<std::size_t, std::size_t>, Scalar> gamma_;  // ordered keys, nonzero only
  std::set<std::pair<std::size_t, std::size_t>> gamma_edges_;    // key (min, max)
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Helpers for small test graphs.
WeightedGraph complete_graph(std::size_t n, const Scalar& w);
WeightedGraph path_graph(std::size_t n, const Scalar& w);
WeightedGraph cycle_graph(std::size_t n, const Scalar& w);
WeightedGraph edgeless_graph(ScalarDomain domain, std::size_t n);

/// w_i = sum_j w_ij.
Scalar node_strength(const WeightedGraph& g, std::size_t i);

using AdjacencyList = std::vector<std::vector<std::size_t>>;

AdjacencyList adjacency_list(const WeightedGraph& g);

/// Length of the shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const AdjacencyList& adj);

/// Unweighted hop distances from one source; nullopt when unreachable.
std::vector<std::optional<std::size_t>> bfs_distances(const AdjacencyList& adj, std::size_t source);

struct StructureReport {
  std::vector<std::array<std::size_t, 3>> triangles;  // ascending triples, lexicographic
  std::optional<std::size_t> girth;
  std::vector<std::vector<std::optional<std::size_t>>> distance;
};

StructureReport triangles_girth_distance(const WeightedGraph& g);

enum class IndependenceVariant { independent, two_packing };

const char* to_string(IndependenceVariant v);

/// Largest node count the exact search accepts.
inline constexpr std::size_t kMaxExactIndependentSetNodes = 40;

/// Exact maximum independent set (or 2-packing) by branch and bound. Among
/// maximum sets, the lexicographically smallest ascending sequence is returned.
/// SizeError when the graph has more than 40 nodes.
std::vector<std::size_t> max_independent_set(const WeightedGraph& g, IndependenceVariant variant);

/// Greedy minimum-degree heuristic; no size cap, no optimality guarantee.
std::vector<std::size_t> greedy_independent_set(const WeightedGraph& g, IndependenceVariant variant);

struct LineGraphResult {
  WeightedGraph graph;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // new node -> original edge (u < v)
  /// Adjacent line-graph node pairs whose harmonic weight is zero in the domain
  /// (possible in Z_n); they are not stored as edges.
  std::vector<std::pair<std::size_t, std::size_t>> vanishing;
};

/// Nodes are the edges of g; edges sharing an endpoint j are joined with
/// weight 2 w_ij w_jk / (w_ij + w_jk). DomainError on a zero or non-unit denominator.
LineGraphResult line_graph(const WeightedGraph& g);

}  // namespace gfa
