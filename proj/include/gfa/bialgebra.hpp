#pragma once

#include <vector>

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"

namespace gfa {

/// Coefficients over the dual basis 1*_i, paired with node functions by
/// <1_i, 1*_j> = delta_ij.
struct DualNodeFunction {
  NodeFunction coeffs;
};

/// [h]_ij = w_ij (h_i - h_j) on every ordered adjacent pair.
EdgeFunction cobracket(const WeightedGraph& g, const NodeFunction& h);

/// (f (x) p)_ij = f_i p_j on every ordered adjacent pair.
EdgeFunction tensor_on_edges(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p);

/// <[f,p], h>_V - <f (x) p, [h]>_E. Zero for every symmetric weighting.
Scalar pairing_duality_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p,
                             const NodeFunction& h);

/// The bracket rebuilt from cobrackets: [f,p](i) = sum_j ([f]_ij p_i - f_i [p]_ij).
NodeFunction bracket_from_cobrackets(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p);

/// Dense n x n x n coefficient array over the node basis.
class Tensor3 {
 public:
  Tensor3(ScalarDomain domain, std::size_t n);

  std::size_t size() const { return n_; }
  const ScalarDomain& domain() const { return domain_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  Tensor3 operator+(const Tensor3& o) const;
  bool is_zero() const;
  double max_magnitude() const;

 private:
  ScalarDomain domain_;
  std::size_t n_;
  std::vector<Scalar> data_;
};

inline constexpr std::size_t kMaxYbeNodes = 32;

struct YbeReport {
  std::size_t a, b;
  Tensor3 r12_r13;  // [r12, r13]
  Tensor3 r12_r23;  // [r12, r23]
  Tensor3 r13_r23;  // [r13, r23]
  Tensor3 sum;
  double max_magnitude;
  bool vanishes;  // exact for exact domains, max_magnitude <= 1e-12 otherwise
};

/// Classical Yang-Baxter residual for r = 1_a (x) 1_b - 1_b (x) 1_a.
/// ContractError when a == b; SizeError past kMaxYbeNodes nodes.
YbeReport ybe_check(const WeightedGraph& g, std::size_t a, std::size_t b);

struct CoadjointResult {
  DualNodeFunction ad_x_xi;  // ad*_x xi
  NodeFunction ad_xi_x;      // ad*_xi x
};

/// (ad*_x xi)(i) = xi_i sum_j w_ij x_j - sum_j w_ij x_j xi_j
/// (ad*_xi x)(i) = x_i sum_j w_ij xi_j - sum_j w_ij xi_j x_j
CoadjointResult coadjoint_actions(const WeightedGraph& g, const NodeFunction& x, const DualNodeFunction& xi);

struct ManinBracket {
  NodeFunction g_part;         // -ad*_xi x
  DualNodeFunction dual_part;  // +ad*_x xi
};

/// [x, xi] in the double g + g*.
ManinBracket manin_bracket(const WeightedGraph& g, const NodeFunction& x, const DualNodeFunction& xi);

}  // namespace gfa
