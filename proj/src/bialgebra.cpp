#include "gfa/bialgebra.hpp"

#include <algorithm>

#include "gfa/calculus.hpp"
#include "gfa/errors.hpp"
#include "gfa/lie.hpp"

namespace gfa {

namespace {

void require_function(const WeightedGraph& g, const NodeFunction& f, const char* name) {
  if (!(f.domain() == g.domain())) {
    throw DomainError(std::string(name) + " is over " + f.domain().name() + ", graph is over " + g.domain().name());
  }
  if (f.size() != g.node_count()) throw ContractError(std::string(name) + " length does not match node count");
}

}  // namespace

EdgeFunction cobracket(const WeightedGraph& g, const NodeFunction& h) {
  require_function(g, h, "h");
  EdgeFunction out(g.domain());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out.set(i, nb.node, nb.weight * (h[i] - h[nb.node]));
  return out;
}

EdgeFunction tensor_on_edges(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p) {
  require_function(g, f, "f");
  require_function(g, p, "p");
  EdgeFunction out(g.domain());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out.set(i, nb.node, f[i] * p[nb.node]);
  return out;
}

Scalar pairing_duality_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p,
                             const NodeFunction& h) {
  return inner(bracket(g, f, p), h) - inner(tensor_on_edges(g, f, p), cobracket(g, h));
}

NodeFunction bracket_from_cobrackets(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p) {
  const EdgeFunction cf = cobracket(g, f);
  const EdgeFunction cp = cobracket(g, p);
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (const auto& nb : g.neighbors(i)) out[i] += cf.get(i, nb.node) * p[i] - f[i] * cp.get(i, nb.node);
  return out;
}

// ---------------------------------------------------------------------------

Tensor3::Tensor3(ScalarDomain domain, std::size_t n) : domain_(domain), n_(n), data_(n * n * n, domain.zero()) {}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  Tensor3 out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

bool Tensor3::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

double Tensor3::max_magnitude() const {
  double m = 0.0;
  for (const auto& s : data_) m = std::max(m, magnitude(s));
  return m;
}

namespace {

struct RTerm {
  NodeFunction x;
  NodeFunction y;
};

// t += u (x) v (x) z
void add_outer(Tensor3& t, const NodeFunction& u, const NodeFunction& v, const NodeFunction& z) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!z[k].is_zero()) t.at(i, j, k) += uv * z[k];
    }
  }
}

}  // namespace

YbeReport ybe_check(const WeightedGraph& g, std::size_t a, std::size_t b) {
  const std::size_t n = g.node_count();
  if (a >= n || b >= n) throw ContractError("YBE basis node out of range");
  if (a == b) throw ContractError("YBE needs two distinct basis nodes");
  if (n > kMaxYbeNodes) {
    throw SizeError("YBE check is capped at " + std::to_string(kMaxYbeNodes) + " nodes (graph has " +
                    std::to_string(n) + ")");
  }
  const NodeFunction ea = base_function(g, a);
  const NodeFunction eb = base_function(g, b);
  // r = 1_a (x) 1_b - 1_b (x) 1_a; the sign is folded into the first factor.
  const std::vector<RTerm> r{{ea, eb}, {-eb, ea}};

  const auto& dom = g.domain();
  YbeReport rep{a, b, Tensor3(dom, n), Tensor3(dom, n), Tensor3(dom, n), Tensor3(dom, n), 0.0, false};
  for (const auto& s : r) {
    for (const auto& t : r) {
      add_outer(rep.r12_r13, bracket(g, s.x, t.x), s.y, t.y);
      add_outer(rep.r12_r23, s.x, bracket(g, s.y, t.x), t.y);
      add_outer(rep.r13_r23, s.x, t.x, bracket(g, s.y, t.y));
    }
  }
  rep.sum = rep.r12_r13 + rep.r12_r23 + rep.r13_r23;
  rep.max_magnitude = rep.sum.max_magnitude();
  rep.vanishes = dom.is_exact() ? rep.sum.is_zero() : rep.max_magnitude <= 1e-12;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// out_i = v_i sum_j w_ij s_j - sum_j w_ij s_j v_j: Laplacian of v with weights w_ij s_j.
NodeFunction reweighted_laplacian(const WeightedGraph& g, const NodeFunction& s, const NodeFunction& v) {
  NodeFunction out = NodeFunction::zeros(g.domain(), g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    Scalar acc = g.domain().zero();
    for (const auto& nb : g.neighbors(i)) acc += nb.weight * s[nb.node] * (v[i] - v[nb.node]);
    out[i] = acc;
  }
  return out;
}

}  // namespace

CoadjointResult coadjoint_actions(const WeightedGraph& g, const NodeFunction& x, const DualNodeFunction& xi) {
  require_function(g, x, "x");
  require_function(g, xi.coeffs, "xi");
  return {DualNodeFunction{reweighted_laplacian(g, x, xi.coeffs)}, reweighted_laplacian(g, xi.coeffs, x)};
}

ManinBracket manin_bracket(const WeightedGraph& g, const NodeFunction& x, const DualNodeFunction& xi) {
  auto co = coadjoint_actions(g, x, xi);
  return {-co.ad_xi_x, std::move(co.ad_x_xi)};
}

}  // namespace gfa
