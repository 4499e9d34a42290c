#include "gfa/calculus.hpp"

#include "gfa/errors.hpp"

namespace gfa {

namespace {

void require_function(const WeightedGraph& g, const NodeFunction& f, const char* name) {
  if (!(f.domain() == g.domain())) {
    throw DomainError(std::string(name) + " is over " + f.domain().name() + ", graph is over " + g.domain().name());
  }
  if (f.size() != g.node_count()) {
    throw ContractError(std::string(name) + " has " + std::to_string(f.size()) + " values, graph has " +
                        std::to_string(g.node_count()) + " nodes");
  }
}

}  // namespace

NodeFunction base_function(const WeightedGraph& g, std::size_t a) {
  if (a >= g.node_count()) throw ContractError("base function index " + std::to_string(a) + " out of range");
  NodeFunction f = NodeFunction::zeros(g.domain(), g.node_count());
  f[a] = g.domain().one();
  return f;
}

EdgeFunction difference_d(const WeightedGraph& g, const NodeFunction& f) {
  require_function(g, f, "f");
  EdgeFunction out(g.domain());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out.set(i, nb.node, g.gamma(i, nb.node) * (f[nb.node] - f[i]));
  return out;
}

NodeFunction codifference_dstar(const WeightedGraph& g, const EdgeFunction& F) {
  if (!(F.domain() == g.domain())) throw DomainError("edge function domain differs from graph domain");
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (const auto& nb : g.neighbors(i)) {
      const auto j = nb.node;
      out[i] += F.get(j, i) * g.gamma(j, i) - F.get(i, j) * g.gamma(i, j);
    }
  }
  return out;
}

DenseMatrix laplacian(const WeightedGraph& g) {
  DenseMatrix m(g.domain(), g.node_count(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (const auto& nb : g.neighbors(i)) {
      m(i, i) += nb.weight;
      m(i, nb.node) = -nb.weight;
    }
  }
  return m;
}

NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f) {
  require_function(g, f, "f");
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out[i] += nb.weight * (f[i] - f[nb.node]);
  return out;
}

DenseMatrix dstar_d_matrix(const WeightedGraph& g) {
  DenseMatrix m(g.domain(), g.node_count(), g.node_count());
  for (std::size_t b = 0; b < g.node_count(); ++b) {
    const auto col = codifference_dstar(g, difference_d(g, base_function(g, b)));
    m.set_column(b, col.values());
  }
  return m;
}

EdgeFunction leibniz_defect_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h) {
  require_function(g, f, "f");
  require_function(g, h, "h");
  const EdgeFunction df = difference_d(g, f);
  const EdgeFunction dh = difference_d(g, h);
  const EdgeFunction dfh = difference_d(g, f * h);
  EdgeFunction residual(g.domain());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (const auto& nb : g.neighbors(i)) {
      const auto j = nb.node;
      const Scalar gamma = g.gamma(i, j);
      if (!gamma.is_unit()) {
        throw DomainError("gamma(" + std::to_string(i) + "," + std::to_string(j) + ") = " + gamma.to_string() +
                          " is not invertible in " + g.domain().name());
      }
      const Scalar rhs = f[i] * dh.get(i, j) + h[i] * df.get(i, j) + gamma.inverse() * df.get(i, j) * dh.get(i, j);
      residual.set(i, j, dfh.get(i, j) - rhs);
    }
  }
  return residual;
}

}  // namespace gfa
