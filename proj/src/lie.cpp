#include "gfa/lie.hpp"

#include <algorithm>
#include <mutex>

#include "gfa/calculus.hpp"
#include "gfa/errors.hpp"
#include "gfa/parallel.hpp"

namespace gfa {

namespace {

void require_function(const WeightedGraph& g, const NodeFunction& f) {
  if (!(f.domain() == g.domain())) throw DomainError("function domain " + f.domain().name() + " differs from graph domain " + g.domain().name());
  if (f.size() != g.node_count()) throw ContractError("function length does not match node count");
}

bool restricted_distance(const std::optional<std::size_t>& d) { return !d || *d == 1 || *d > 2; }

}  // namespace

NodeFunction bracket(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h) {
  require_function(g, f);
  require_function(g, h);
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out[i] += nb.weight * (f[i] * h[nb.node] - f[nb.node] * h[i]);
#ifndef NDEBUG
  if (g.domain().is_exact() && !(out == bracket_laplacian_form(g, f, h))) {
    throw DomainError("bracket sum form and Laplacian form disagree");
  }
#endif
  return out;
}

NodeFunction bracket_laplacian_form(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h) {
  return laplacian_apply(g, f) * h - f * laplacian_apply(g, h);
}

DenseMatrix ad_matrix(const WeightedGraph& g, const NodeFunction& f) {
  require_function(g, f);
  DenseMatrix m(g.domain(), g.node_count(), g.node_count());
  for (std::size_t b = 0; b < g.node_count(); ++b) m.set_column(b, bracket(g, f, base_function(g, b)).values());
  return m;
}

NodeFunction jacobiator(const WeightedGraph& g, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) throw ContractError("jacobiator needs three distinct nodes");
  const Scalar wab = g.weight(a, b), wac = g.weight(a, c), wbc = g.weight(b, c);
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  out[a] = wbc * (wab - wac);
  out[b] = wac * (wbc - wab);
  out[c] = wab * (wac - wbc);
  return out;
}

NodeFunction jacobiator_brute_force(const WeightedGraph& g, const NodeFunction& x, const NodeFunction& y,
                                    const NodeFunction& z) {
  return bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) + bracket(g, z, bracket(g, x, y));
}

const char* to_string(JacobiMode m) { return m == JacobiMode::full ? "full" : "restricted"; }

JacobiReport jacobi_admissibility(const WeightedGraph& g, JacobiMode mode, unsigned threads) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::optional<std::size_t>>> dist;
  if (mode == JacobiMode::restricted) dist = triangles_girth_distance(g).distance;

  std::mutex merge;
  std::vector<JacobiViolation> violations;
  std::size_t checked = 0;
  parallel_for_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<JacobiViolation> local;
    std::size_t local_checked = 0;
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (mode == JacobiMode::restricted && !restricted_distance(dist[a][b])) continue;
        for (std::size_t c = b + 1; c < n; ++c) {
          if (mode == JacobiMode::restricted &&
              (!restricted_distance(dist[a][c]) || !restricted_distance(dist[b][c]))) {
            continue;
          }
          ++local_checked;
          NodeFunction jac = jacobiator(g, a, b, c);
          if (!jac.is_zero()) local.push_back({{a, b, c}, std::move(jac)});
        }
      }
    }
    std::lock_guard lock(merge);
    checked += local_checked;
    for (auto& v : local) violations.push_back(std::move(v));
  });
  std::sort(violations.begin(), violations.end(),
            [](const JacobiViolation& p, const JacobiViolation& q) { return p.triple < q.triple; });

  JacobiReport r{mode, violations.empty(), checked, std::move(violations), {}};
  r.convention = mode == JacobiMode::full
                     ? "all triples of distinct nodes"
                     : "triples whose pairwise hop distances are each 1 or greater than 2 (distance-2 pairs excluded)";
  return r;
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(const WeightedGraph& g) : domain_(g.domain()) {
  for (const auto& e : g.edges()) entries_.emplace(std::pair{e.u, e.v}, std::pair{e.weight, -e.weight});
}

Scalar StructureConstants::coefficient(std::size_t a, std::size_t b, std::size_t c) const {
  if (a == b) return domain_.zero();
  const bool swapped = a > b;
  const auto it = entries_.find({std::min(a, b), std::max(a, b)});
  if (it == entries_.end()) return domain_.zero();
  Scalar v = domain_.zero();
  if (c == std::min(a, b)) v = it->second.first;
  else if (c == std::max(a, b)) v = it->second.second;
  return swapped ? -v : v;
}

// ---------------------------------------------------------------------------

namespace {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

std::vector<SparseEntry> nonzeros(const DenseMatrix& m) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j)});
  return out;
}

}  // namespace

KillingReport killing_form(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n > kMaxKillingNodes) {
    throw SizeError("Killing form is capped at " + std::to_string(kMaxKillingNodes) + " nodes (graph has " +
                    std::to_string(n) + ")");
  }
  std::vector<std::vector<SparseEntry>> ads;
  std::vector<DenseMatrix> dense;
  ads.reserve(n);
  dense.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    dense.push_back(ad_matrix(g, base_function(g, a)));
    ads.push_back(nonzeros(dense.back()));
  }
  DenseMatrix b(g.domain(), n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      // trace(A B) = sum_{i,k} A_ik B_ki
      Scalar t = g.domain().zero();
      for (const auto& e : ads[x]) t += e.value * dense[y](e.col, e.row);
      b(x, y) = t;
      b(y, x) = t;
    }
  }
  Scalar det = determinant(b);
  bool nondegenerate;
  if (g.domain().is_exact()) {
    nondegenerate = !det.is_zero();
  } else {
    nondegenerate = n == 0 || null_space(b).empty();
  }
  return {std::move(b), std::move(det), nondegenerate};
}

std::vector<NodeFunction> center(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  DenseMatrix stacked(g.domain(), n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const NodeFunction basis_k = base_function(g, k);
    for (std::size_t b = 0; b < n; ++b) {
      const NodeFunction col = bracket(g, basis_k, base_function(g, b));
      for (std::size_t i = 0; i < n; ++i) stacked(b * n + i, k) = col[i];
    }
  }
  std::vector<NodeFunction> out;
  for (auto& v : null_space(stacked)) out.emplace_back(g.domain(), std::move(v));
  return out;
}

NodeFunction second_order_leibniz_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p,
                                        const NodeFunction& q) {
  auto ad = [&](const NodeFunction& x) { return bracket(g, f, x); };
  const NodeFunction lhs = ad(ad(bracket(g, p, q)));
  const NodeFunction rhs = bracket(g, ad(ad(p)), q) + bracket(g, ad(p), ad(q)).scaled(g.domain().from_int(2)) +
                           bracket(g, p, ad(ad(q)));
  return lhs - rhs;
}

// ---------------------------------------------------------------------------

namespace {

WeightedGraph split_reweight(const WeightedGraph& g, const std::set<std::pair<std::size_t, std::size_t>>& part_a) {
  std::set<std::pair<std::size_t, std::size_t>> normalized;
  for (const auto& [u, v] : part_a) {
    if (u >= g.node_count() || v >= g.node_count() || !g.adjacent(u, v)) {
      throw ContractError("edge set A contains non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    normalized.insert({std::min(u, v), std::max(u, v)});
  }
  std::map<std::pair<std::size_t, std::size_t>, Scalar> weights;
  for (const auto& e : g.edges()) weights.emplace(std::pair{e.u, e.v}, normalized.contains({e.u, e.v}) ? e.weight : -e.weight);
  return g.reweighted(weights);
}

}  // namespace

SplitBracket::SplitBracket(const WeightedGraph& g, const std::set<std::pair<std::size_t, std::size_t>>& part_a)
    : reweighted_(split_reweight(g, part_a)) {}

NodeFunction SplitBracket::operator()(const NodeFunction& f, const NodeFunction& h) const {
  return bracket(reweighted_, f, h);
}

}  // namespace gfa
