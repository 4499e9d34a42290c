#pragma once

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"
#include "gfa/matrix.hpp"

namespace gfa {

/// Indicator 1_a.
NodeFunction base_function(const WeightedGraph& g, std::size_t a);

/// (df)(i, j) = gamma_ij (f_j - f_i) on every ordered adjacent pair.
/// ContractError if the graph has no directed weights.
EdgeFunction difference_d(const WeightedGraph& g, const NodeFunction& f);

/// (d*F)(i) = sum_j (F_ji gamma_ji - F_ij gamma_ij), the adjoint of d.
NodeFunction codifference_dstar(const WeightedGraph& g, const EdgeFunction& F);

/// Delta f_i = sum_j w_ij (f_i - f_j) as a matrix.
DenseMatrix laplacian(const WeightedGraph& g);
NodeFunction laplacian_apply(const WeightedGraph& g, const NodeFunction& f);

/// Matrix of d* composed with d, built column by column from base functions.
DenseMatrix dstar_d_matrix(const WeightedGraph& g);

/// Residual, per ordered edge, of
///   d(fh)_ij = f_i dh_ij + h_i df_ij + gamma_ij^{-1} df_ij dh_ij.
/// DomainError when some gamma_ij on an ordered adjacent pair is not invertible.
EdgeFunction leibniz_defect_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h);

}  // namespace gfa
