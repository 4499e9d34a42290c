#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"
#include "gfa/matrix.hpp"

namespace gfa {

/// Drift a and diffusion b over the graph's domain (real or rational).
struct FpCoefficients {
  NodeFunction drift;
  NodeFunction diffusion;

  /// ContractError unless every entry is strictly positive.
  static FpCoefficients positive(NodeFunction drift, NodeFunction diffusion);
};

enum class Delta2Coefficient { one_eighth, one_quarter };

const char* to_string(Delta2Coefficient c);
Scalar delta2_value(const ScalarDomain& d, Delta2Coefficient c);

/// phi_i = w_i 1_i - sum_{j != i} w_ij 1_j, as reals.
std::vector<double> phi(const WeightedGraph& g, std::size_t i);

struct FpVariant {
  enum class Kind { standard, scaled, modified } kind = Kind::standard;
  double sigma = 1.0;
  double mu = 0.0;
  std::size_t anchor = 0;  // the i of phi_i, modified only
};

/// standard: -1/2 Delta; scaled: -1/(2 sigma^2) Delta; modified:
/// -1/(2 sigma^2) D Delta with D_kk = 1 - mu / phi_i(k). DomainError naming
/// (i, k) when mu != 0 and phi_i(k) = 0.
DenseMatrix fp_operator(const WeightedGraph& g, const FpVariant& variant);

struct AnsatzParams {
  double sigma = 1.0;
  double mu = 0.0;
};

struct Ansatz {
  std::vector<double> unnormalized;
  double normalization;        // N(i) or N_ik
  std::vector<double> values;  // unnormalized / normalization
};

/// One point: exp(-phi_i(m)^2 / (2 sigma^2)) / N(i). Two point:
/// exp(-(phi_i(m) - mu)(phi_k(m) - mu) / (2 sigma^2)) / N_ik.
Ansatz gaussian_ansatz(const WeightedGraph& g, const AnsatzParams& params, std::size_t i,
                       std::optional<std::size_t> k = std::nullopt);

/// M = 1/2 Delta diag(a) + c2 Delta^2 diag(b), c2 = 1/8 or 1/4.
DenseMatrix fp_matrix(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion,
                      Delta2Coefficient c2 = Delta2Coefficient::one_eighth);

struct TriangleFormulas {
  Scalar b;                  // closed form of tr M
  Scalar c;                  // closed form of sym2(M)
  Scalar c_as_printed;       // same with a3 b1 repeated in the 3/16 group
};

/// Closed forms for three nodes labelled 1, 2, 3 = 0, 1, 2. Missing edges count as 0.
TriangleFormulas triangle_formulas(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion);

/// Entrywise transcription of the printed triangle matrix, with the (3,2)
/// entry in the form symmetric with the others.
DenseMatrix triangle_matrix_printed(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion);

struct StabilityReport {
  DenseMatrix matrix;
  Scalar det;
  Scalar trace_b;
  Scalar sym2_c;
  std::optional<Scalar> paper_b;
  std::optional<Scalar> paper_c;
  std::optional<bool> paper_b_agrees;
  std::optional<bool> paper_c_agrees;
  std::vector<std::complex<double>> eigenvalues;  // sorted by real part, then imaginary part
  bool stationary;
  bool stable;
  bool discriminant_ok;      // b^2 > 4c strictly
  bool marginal_degenerate;  // b^2 == 4c
  std::vector<std::string> notes;
};

StabilityReport stationarity_and_stability(const WeightedGraph& g, const FpCoefficients& coeffs,
                                           Delta2Coefficient c2 = Delta2Coefficient::one_eighth);

struct ConstantWeightAnalysis {
  double mu;         // doubly degenerate nonzero eigenvalue
  bool stable;       // mu > 0
  double threshold;  // value of a where mu changes sign
  bool stable_above;  // true: stable iff a > threshold (w > 0); false: iff a < threshold
  double paper_threshold;  // -(63/40) b w
};

/// Triangle with every weight w and uniform a, b. DomainError when w = 0.
ConstantWeightAnalysis constant_weight_analysis(double w, double a, double b,
                                                Delta2Coefficient c2 = Delta2Coefficient::one_eighth);

/// Sign changes of f over a uniform grid of `steps` points on [lo, hi], each
/// refined by bisection to an interval of width <= tol. Grid points where f is
/// exactly zero are reported directly.
std::vector<double> bisect_roots(const std::function<double(double)>& f, double lo, double hi, std::size_t steps,
                                 double tol = 1e-10);

struct WeightScan {
  std::vector<std::pair<double, double>> samples;  // (weight, det M)
  std::vector<double> roots;
  bool identically_singular;  // |det M| <= 1e-10 scale(M) at every sample
  std::vector<double> stability_boundaries;  // sign changes of sym2(M)
};

/// det M along w_uv in [lo, hi]. ContractError unless lo < hi and steps >= 2.
WeightScan weight_scan(const WeightedGraph& g, const FpCoefficients& coeffs, std::pair<std::size_t, std::size_t> edge,
                       double lo, double hi, std::size_t steps, Delta2Coefficient c2 = Delta2Coefficient::one_eighth,
                       unsigned threads = 1);

/// max |M_ij|^n, the magnitude a determinant is compared against.
double determinant_scale(const DenseMatrix& m);

}  // namespace gfa
