#include "gfa/ring_weights.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "gfa/errors.hpp"
#include "gfa/lie.hpp"
#include "gfa/parallel.hpp"

namespace gfa {

namespace {

// Above this many edges the all-sources BFS gets slow; switch to divisor classes.
constexpr std::uint64_t kBfsGirthEdgeLimit = 200'000;

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct DivisorClass {
  std::uint64_t d;
  std::uint64_t size;  // phi(n / d)
  bool clique;         // n | d^2
};

std::vector<DivisorClass> divisor_classes(std::uint64_t n) {
  std::vector<DivisorClass> out;
  for (auto d : proper_divisors(n)) out.push_back({d, euler_phi(n / d), (d * d) % n == 0});
  return out;
}

bool classes_adjacent(std::uint64_t n, std::uint64_t d, std::uint64_t e) { return (d * e) % n == 0; }

std::uint64_t zdg_edge_count(std::uint64_t n, const std::vector<DivisorClass>& cls) {
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].clique) edges += cls[i].size * (cls[i].size - 1) / 2;
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (classes_adjacent(n, cls[i].d, cls[j].d)) edges += cls[i].size * cls[j].size;
  }
  return edges;
}

void check_modulus(std::uint64_t n) {
  if (n < 2 || n > kMaxZdgModulus) {
    throw DomainError("modulus " + std::to_string(n) + " outside [2, " + std::to_string(kMaxZdgModulus) + "]");
  }
}

}  // namespace

std::optional<std::size_t> zdg_girth_from_divisors(std::uint64_t n) {
  check_modulus(n);
  const auto cls = divisor_classes(n);
  const std::size_t k = cls.size();
  // A triangle uses one class three times, one class twice, or three classes.
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = cls[i];
    if (a.clique && a.size >= 3) return 3;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && a.clique && a.size >= 2 && classes_adjacent(n, a.d, cls[j].d)) return 3;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!classes_adjacent(n, a.d, cls[j].d)) continue;
      for (std::size_t l = j + 1; l < k; ++l)
        if (classes_adjacent(n, a.d, cls[l].d) && classes_adjacent(n, cls[j].d, cls[l].d)) return 3;
    }
  }
  std::uint64_t vertices = 0;
  for (const auto& c : cls) vertices += c.size;
  // The zero-divisor graph is connected, and once it has a cycle its girth is
  // at most 4 (Anderson and Livingston). A connected graph has a cycle iff E >= V.
  if (vertices == 0 || zdg_edge_count(n, cls) < vertices) return std::nullopt;
  return 4;
}

ZdgReport zero_divisor_graph(std::uint64_t n, bool include_edges) {
  check_modulus(n);
  ZdgReport r{n, {}, {}, std::nullopt, true};
  for (const auto& [p, e] : factorize(n))
    if (e > 1) r.all_non_nilpotent = false;

  std::vector<std::size_t> index(n, 0);
  for (std::uint64_t x = 1; x < n; ++x) {
    if (gcd_u64(x, n) > 1) {
      index[x] = r.vertices.size();
      r.vertices.push_back(x);
    }
  }
  const auto cls = divisor_classes(n);
  const bool use_bfs = zdg_edge_count(n, cls) <= kBfsGirthEdgeLimit;

  AdjacencyList adj;
  if (use_bfs) adj.resize(r.vertices.size());
  if (include_edges || use_bfs) {
    for (auto x : r.vertices) {
      const std::uint64_t step = n / gcd_u64(x, n);
      for (std::uint64_t y = (x / step + 1) * step; y < n; y += step) {
        if (include_edges) r.edges.emplace_back(x, y);
        if (use_bfs) {
          adj[index[x]].push_back(index[y]);
          adj[index[y]].push_back(index[x]);
        }
      }
    }
  }
  r.girth = use_bfs ? girth(adj) : zdg_girth_from_divisors(n);
  return r;
}

ModulusReport modulus_qualifies(std::uint64_t n) {
  if (n < 2) throw DomainError("modulus must be at least 2");
  ModulusReport r{false, factorize(n), 0};
  r.c = r.factorization.size();
  r.qualifies = r.c >= 3;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct TripleConstraint {
  std::size_t ab, ac, bc;  // edge index or kNoEdge
};

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

class WeighingProblem {
 public:
  WeighingProblem(const WeightedGraph& g, std::uint64_t n, bool include_nilpotent) : n_(n) {
    ScalarDomain::zmod(n);  // validates the modulus range
    for (std::uint64_t x = 1; x < n; ++x) {
      const auto c = zmod_classify(n, x);
      if (c.cls == ResidueClass::zero_divisor && (include_nilpotent || !c.nilpotent)) candidates_.push_back(x);
    }
    for (const auto& e : g.edges()) edges_.emplace_back(e.u, e.v);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (std::size_t k = 0; k < edges_.size(); ++k) edge_index[edges_[k]] = k;
    auto idx = [&](std::size_t u, std::size_t v) {
      const auto it = edge_index.find({std::min(u, v), std::max(u, v)});
      return it == edge_index.end() ? kNoEdge : it->second;
    };

    // Only triples spanning at least two edges can carry a nonzero Jacobiator.
    std::set<std::array<std::size_t, 3>> seen;
    by_last_edge_.resize(edges_.size());
    for (std::size_t b = 0; b < g.node_count(); ++b) {
      const auto& nb = g.neighbors(b);
      for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
          std::array<std::size_t, 3> t{b, nb[x].node, nb[y].node};
          std::sort(t.begin(), t.end());
          if (!seen.insert(t).second) continue;
          TripleConstraint c{idx(t[0], t[1]), idx(t[0], t[2]), idx(t[1], t[2])};
          std::size_t last = 0;
          for (auto e : {c.ab, c.ac, c.bc})
            if (e != kNoEdge) last = std::max(last, e);
          by_last_edge_[last].push_back(c);
        }
      }
    }
  }

  const std::vector<std::uint64_t>& candidates() const { return candidates_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  bool satisfied(const std::vector<std::uint64_t>& w, std::size_t k) const {
    for (const auto& c : by_last_edge_[k])
      if (!triple_ok(w, c)) return false;
    return true;
  }

  // Appends solutions whose first residue is candidates_[first] in ascending
  // order; stops after cap solutions.
  void search_subtree(std::size_t first, std::size_t cap, std::vector<std::vector<std::uint64_t>>& out) const {
    std::vector<std::uint64_t> w(edges_.size(), 0);
    w[0] = candidates_[first];
    if (!satisfied(w, 0)) return;
    descend(w, 1, cap, out);
  }

 private:
  std::uint64_t value(const std::vector<std::uint64_t>& w, std::size_t e) const { return e == kNoEdge ? 0 : w[e]; }

  bool triple_ok(const std::vector<std::uint64_t>& w, const TripleConstraint& c) const {
    const std::uint64_t ab = value(w, c.ab), ac = value(w, c.ac), bc = value(w, c.bc);
    auto term = [&](std::uint64_t coeff, std::uint64_t x, std::uint64_t y) { return coeff * ((x + n_ - y) % n_) % n_; };
    return term(bc, ab, ac) == 0 && term(ac, bc, ab) == 0 && term(ab, ac, bc) == 0;
  }

  void descend(std::vector<std::uint64_t>& w, std::size_t k, std::size_t cap,
               std::vector<std::vector<std::uint64_t>>& out) const {
    if (out.size() >= cap) return;
    if (k == edges_.size()) {
      out.push_back(w);
      return;
    }
    for (auto r : candidates_) {
      w[k] = r;
      if (satisfied(w, k)) descend(w, k + 1, cap, out);
      if (out.size() >= cap) break;
    }
    w[k] = 0;
  }

  std::uint64_t n_;
  std::vector<std::uint64_t> candidates_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<TripleConstraint>> by_last_edge_;
};

WeighingSolution to_solution(const WeighingProblem& p, const std::vector<std::uint64_t>& w, std::uint64_t n) {
  WeighingSolution s{{}, n};
  for (std::size_t k = 0; k < p.edge_count(); ++k) s.assignment[p.edges()[k]] = w[k];
  return s;
}

void verify(const WeightedGraph& g, const WeighingSolution& s) {
  if (!jacobi_admissibility(apply_weighing(g, s), JacobiMode::full).admissible) {
    throw std::logic_error("weighing passed the pruning constraints but failed the full Jacobi check");
  }
}

}  // namespace

WeightedGraph apply_weighing(const WeightedGraph& g, const WeighingSolution& s) {
  const auto dom = ScalarDomain::zmod(s.modulus);
  std::vector<WeightedEdge> edges;
  for (const auto& [e, r] : s.assignment) edges.push_back({e.first, e.second, Scalar::zmod_residue(r, s.modulus)});
  return WeightedGraph::from_weights(dom, g.node_count(), edges, g.labels());
}

WeighingResult weighing_search(const WeightedGraph& g, std::uint64_t n, const WeighingOptions& options) {
  if (g.edge_count() > kMaxWeighingEdges) {
    throw SizeError("exhaustive weighing search is capped at " + std::to_string(kMaxWeighingEdges) +
                    " edges (graph has " + std::to_string(g.edge_count()) + "); use --sample N for random sampling");
  }
  const WeighingProblem p(g, n, options.include_nilpotent);
  WeighingResult r{p.candidates(), {}, false};
  if (p.edge_count() == 0) {
    r.solutions.push_back({{}, n});
    return r;
  }
  const std::size_t cap = options.limit ? *options.limit + 1 : static_cast<std::size_t>(-1);
  std::vector<std::vector<std::vector<std::uint64_t>>> per_first(p.candidates().size());
  parallel_for_chunks(p.candidates().size(), options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) p.search_subtree(i, cap, per_first[i]);
  });
  for (const auto& subtree : per_first) {
    for (const auto& w : subtree) {
      if (options.limit && r.solutions.size() == *options.limit) {
        r.truncated = true;
        break;
      }
      r.solutions.push_back(to_solution(p, w, n));
    }
    if (r.truncated) break;
  }
  for (const auto& s : r.solutions) verify(g, s);
  return r;
}

WeighingResult weighing_sample(const WeightedGraph& g, std::uint64_t n, std::size_t samples, std::uint64_t seed,
                               bool include_nilpotent) {
  const WeighingProblem p(g, n, include_nilpotent);
  WeighingResult r{p.candidates(), {}, false};
  if (p.candidates().empty() && p.edge_count() > 0) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, p.candidates().empty() ? 0 : p.candidates().size() - 1);
  std::set<std::vector<std::uint64_t>> found;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::uint64_t> w(p.edge_count());
    for (auto& x : w) x = p.candidates()[pick(rng)];
    bool ok = true;
    for (std::size_t k = 0; k < w.size() && ok; ++k) ok = p.satisfied(w, k);
    if (ok) found.insert(std::move(w));
  }
  for (const auto& w : found) {
    r.solutions.push_back(to_solution(p, w, n));
    verify(g, r.solutions.back());
  }
  return r;
}

}  // namespace gfa
