#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"
#include "gfa/matrix.hpp"

namespace gfa {

/// [f, h]_i = sum_j w_ij (f_i h_j - f_j h_i).
NodeFunction bracket(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h);

/// [f, h]_i = (Delta f)_i h_i - f_i (Delta h)_i.
NodeFunction bracket_laplacian_form(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& h);

/// Matrix of h -> [f, h] in the basis 1_0 .. 1_{n-1}; column b is [f, 1_b].
DenseMatrix ad_matrix(const WeightedGraph& g, const NodeFunction& f);

/// Closed form
///   Jac(1_a,1_b,1_c) = w_bc(w_ab - w_ac) 1_a + w_ac(w_bc - w_ab) 1_b + w_ab(w_ac - w_bc) 1_c.
/// ContractError on repeated nodes.
NodeFunction jacobiator(const WeightedGraph& g, std::size_t a, std::size_t b, std::size_t c);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] evaluated with the bracket. This cyclic
/// sum is the one the closed form above equals (it is the negative of
/// [[x,y],z] + cyclic, which vanishes on exactly the same triples).
NodeFunction jacobiator_brute_force(const WeightedGraph& g, const NodeFunction& x, const NodeFunction& y,
                                    const NodeFunction& z);

enum class JacobiMode { full, restricted };

const char* to_string(JacobiMode m);

struct JacobiViolation {
  std::array<std::size_t, 3> triple;  // ascending
  NodeFunction jacobiator;
};

struct JacobiReport {
  JacobiMode mode;
  bool admissible;
  std::size_t triples_checked;
  std::vector<JacobiViolation> violations;  // sorted by triple
  std::string convention;
};

/// Full mode checks every triple of distinct nodes. Restricted mode keeps only
/// triples whose three pairwise hop distances are each 1 or greater than 2
/// (unreachable counts as greater than 2).
JacobiReport jacobi_admissibility(const WeightedGraph& g, JacobiMode mode, unsigned threads = 1);

/// f_ab^a = w_ab, f_ab^b = -w_ab for adjacent a < b.
class StructureConstants {
 public:
  explicit StructureConstants(const WeightedGraph& g);

  /// (a, b) with a < b -> (f_ab^a, f_ab^b).
  const std::map<std::pair<std::size_t, std::size_t>, std::pair<Scalar, Scalar>>& entries() const { return entries_; }
  /// f_ab^c for any ordered a, b; zero when absent.
  Scalar coefficient(std::size_t a, std::size_t b, std::size_t c) const;

 private:
  ScalarDomain domain_;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Scalar, Scalar>> entries_;
};

struct KillingReport {
  DenseMatrix matrix;  // B_ab = trace(ad_{1_a} ad_{1_b})
  Scalar determinant;
  bool nondegenerate;
};

inline constexpr std::size_t kMaxKillingNodes = 64;

/// Exact determinant for exact domains; for floating domains nondegenerate
/// means full numerical rank (threshold 1e-10 * sigma_max).
KillingReport killing_form(const WeightedGraph& g);

/// Basis of the null space of f -> ([f, 1_b])_b. Empty means trivial center.
std::vector<NodeFunction> center(const WeightedGraph& g);

/// Residual of ad_f^2 [p, q] = [ad_f^2 p, q] + 2 [ad_f p, ad_f q] + [p, ad_f^2 q].
NodeFunction second_order_leibniz_check(const WeightedGraph& g, const NodeFunction& f, const NodeFunction& p,
                                        const NodeFunction& q);

/// [,]_{A-B} = [,]_A - [,]_B for an edge partition A, B = E \ A, realized as the
/// bracket of the graph reweighted with +w on A and -w on B.
class SplitBracket {
 public:
  /// ContractError if A names a non-edge.
  SplitBracket(const WeightedGraph& g, const std::set<std::pair<std::size_t, std::size_t>>& part_a);

  const WeightedGraph& reweighted() const { return reweighted_; }
  NodeFunction operator()(const NodeFunction& f, const NodeFunction& h) const;

 private:
  WeightedGraph reweighted_;
};

}  // namespace gfa
