#include "gfa/fokker_planck.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gfa/calculus.hpp"
#include "gfa/errors.hpp"
#include "gfa/parallel.hpp"

namespace gfa {

namespace {

void require_real_like(const ScalarDomain& d) {
  if (d.kind() != ScalarKind::real && d.kind() != ScalarKind::rational) {
    throw DomainError("Fokker-Planck quantities must be real or rational, got " + d.name());
  }
}

bool is_positive(const Scalar& s) {
  if (s.domain().kind() == ScalarKind::rational) return s.as_rational() > 0;
  return s.to_double() > 0.0;
}

void require_coefficients(const WeightedGraph& g, const NodeFunction& a, const NodeFunction& b) {
  require_real_like(g.domain());
  for (const auto* f : {&a, &b}) {
    if (!(f->domain() == g.domain())) throw DomainError("coefficients must share the graph domain " + g.domain().name());
    if (f->size() != g.node_count()) throw ContractError("coefficient length does not match node count");
  }
}

DenseMatrix diag(const NodeFunction& f) {
  DenseMatrix d(f.domain(), f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d(i, i) = f[i];
  return d;
}

}  // namespace

FpCoefficients FpCoefficients::positive(NodeFunction drift, NodeFunction diffusion) {
  for (std::size_t i = 0; i < drift.size(); ++i)
    if (!is_positive(drift[i])) throw ContractError("drift a_" + std::to_string(i) + " must be positive");
  for (std::size_t i = 0; i < diffusion.size(); ++i)
    if (!is_positive(diffusion[i])) throw ContractError("diffusion b_" + std::to_string(i) + " must be positive");
  return {std::move(drift), std::move(diffusion)};
}

const char* to_string(Delta2Coefficient c) { return c == Delta2Coefficient::one_eighth ? "1/8" : "1/4"; }

Scalar delta2_value(const ScalarDomain& d, Delta2Coefficient c) {
  return d.from_fraction(1, c == Delta2Coefficient::one_eighth ? 8 : 4);
}

std::vector<double> phi(const WeightedGraph& g, std::size_t i) {
  if (i >= g.node_count()) throw ContractError("node " + std::to_string(i) + " out of range");
  std::vector<double> out(g.node_count(), 0.0);
  for (const auto& nb : g.neighbors(i)) {
    const double w = nb.weight.to_double();
    out[i] += w;
    out[nb.node] = -w;
  }
  return out;
}

DenseMatrix fp_operator(const WeightedGraph& g, const FpVariant& v) {
  require_real_like(g.domain());
  const Eigen::MatrixXd L = to_eigen_real(laplacian(g));
  if (v.kind == FpVariant::Kind::standard) return from_eigen_real(-0.5 * L);
  if (!(v.sigma > 0.0)) throw ContractError("sigma must be positive");
  const double s = -1.0 / (2.0 * v.sigma * v.sigma);
  if (v.kind == FpVariant::Kind::scaled) return from_eigen_real(s * L);

  const auto p = phi(g, v.anchor);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.node_count()));
  if (v.mu != 0.0) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0.0) {
        throw DomainError("modified operator is singular: phi_" + std::to_string(v.anchor) + "(" + std::to_string(k) +
                          ") = 0");
      }
      d(static_cast<Eigen::Index>(k)) = 1.0 - v.mu / p[k];
    }
  }
  return from_eigen_real(s * d.asDiagonal() * L);
}

Ansatz gaussian_ansatz(const WeightedGraph& g, const AnsatzParams& params, std::size_t i, std::optional<std::size_t> k) {
  if (!(params.sigma > 0.0)) throw ContractError("sigma must be positive");
  const auto pi = phi(g, i);
  const auto pk = k ? phi(g, *k) : pi;
  const double s2 = 2.0 * params.sigma * params.sigma;
  Ansatz out{{}, 0.0, {}};
  for (std::size_t m = 0; m < g.node_count(); ++m) {
    const double e = k ? (pi[m] - params.mu) * (pk[m] - params.mu) : pi[m] * pi[m];
    out.unnormalized.push_back(std::exp(-e / s2));
    out.normalization += out.unnormalized.back();
  }
  for (double u : out.unnormalized) out.values.push_back(u / out.normalization);
  return out;
}

DenseMatrix fp_matrix(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion,
                      Delta2Coefficient c2) {
  require_coefficients(g, drift, diffusion);
  const auto& d = g.domain();
  const DenseMatrix L = laplacian(g);
  return (L * diag(drift)).scaled(d.from_fraction(1, 2)) + (L * L * diag(diffusion)).scaled(delta2_value(d, c2));
}

namespace {

struct Triangle {
  Scalar w12, w13, w23, a1, a2, a3, b1, b2, b3;
};

Triangle triangle_of(const WeightedGraph& g, const NodeFunction& a, const NodeFunction& b) {
  if (g.node_count() != 3) throw ContractError("closed triangle formulas need exactly three nodes");
  require_coefficients(g, a, b);
  return {g.weight(0, 1), g.weight(0, 2), g.weight(1, 2), a[0], a[1], a[2], b[0], b[1], b[2]};
}

}  // namespace

TriangleFormulas triangle_formulas(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion) {
  const auto [w12, w13, w23, a1, a2, a3, b1, b2, b3] = triangle_of(g, drift, diffusion);
  const auto& d = g.domain();
  auto q = [&](std::int64_t p, std::int64_t r) { return d.from_fraction(p, r); };

  const Scalar b = q(1, 4) * (b1 * (w12 * w12 + w12 * w13 + w13 * w13) + b2 * (w12 * w12 + w12 * w23 + w23 * w23) +
                              b3 * (w13 * w13 + w13 * w23 + w23 * w23)) +
                   q(1, 2) * (a1 * (w12 + w13) + a2 * (w12 + w23) + a3 * (w13 + w23));

  const Scalar w123 = w12 * w13 * w23;
  const Scalar common =
      q(1, 4) * (w12 * w13 + w12 * w23 + w13 * w23) * (a1 * a2 + a1 * a3 + a2 * a3) +
      q(3, 32) *
          (w123 * (w12 + w13 + w23) +
           q(1, 2) * (w12 * w12 * w13 * w13 + w12 * w12 * w23 * w23 + w13 * w13 * w23 * w23)) *
          (b1 * b2 + b1 * b3 + b2 * b3) +
      q(1, 8) * (w12 * w12 * w13 + w12 * w12 * w23) * (q(1, 2) * (a1 * b2 + a2 * b1) + a3 * (b1 + b2)) +
      q(1, 8) * (w12 * w13 * w13 + w13 * w13 * w23) * (q(1, 2) * (a1 * b3 + a3 * b1) + a2 * (b1 + b3)) +
      q(1, 8) * (w12 * w23 * w23 + w13 * w23 * w23) * (q(1, 2) * (a2 * b3 + a3 * b2) + a1 * (b2 + b3));
  const Scalar mixed = a1 * b2 + a2 * b1 + a1 * b3 + a3 * b1 + a2 * b3;
  return {b, common + q(3, 16) * w123 * (mixed + a3 * b2), common + q(3, 16) * w123 * (mixed + a3 * b1)};
}

DenseMatrix triangle_matrix_printed(const WeightedGraph& g, const NodeFunction& drift, const NodeFunction& diffusion) {
  const auto [w12, w13, w23, a1, a2, a3, b1, b2, b3] = triangle_of(g, drift, diffusion);
  const auto& d = g.domain();
  const Scalar e = d.from_fraction(1, 8), h = d.from_fraction(1, 2);
  const Scalar w1 = w12 + w13, w2 = w12 + w23, w3 = w13 + w23;
  DenseMatrix m(d, 3, 3);
  m(0, 0) = e * (w1 * w1 + w12 * w12 + w13 * w13) * b1 + h * a1 * w1;
  m(0, 1) = -e * ((w1 + w2) * w12 - w13 * w23) * b2 - h * a2 * w12;
  m(0, 2) = -e * ((w1 + w3) * w13 - w12 * w23) * b3 - h * a3 * w13;
  m(1, 0) = -e * ((w1 + w2) * w12 - w13 * w23) * b1 - h * a1 * w12;
  m(1, 1) = e * (w12 * w12 + w2 * w2 + w23 * w23) * b2 + h * a2 * w2;
  m(1, 2) = -e * ((w2 + w3) * w23 - w12 * w13) * b3 - h * a3 * w23;
  m(2, 0) = -e * ((w1 + w3) * w13 - w12 * w23) * b1 - h * a1 * w13;
  m(2, 1) = -e * ((w2 + w3) * w23 - w12 * w13) * b2 - h * a2 * w23;
  m(2, 2) = e * (w13 * w13 + w23 * w23 + w3 * w3) * b3 + h * a3 * w3;
  return m;
}

double determinant_scale(const DenseMatrix& m) {
  double mx = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, magnitude(m(i, j)));
  return std::pow(mx, static_cast<double>(m.rows()));
}

namespace {

bool scalars_agree(const Scalar& x, const Scalar& y) {
  if (x.domain().is_exact()) return x == y;
  const double a = x.to_double(), b = y.to_double();
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

int compare_to_zero(const Scalar& s, double rel_scale) {
  if (s.domain().kind() == ScalarKind::rational) {
    const auto& r = s.as_rational();
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
  }
  const double v = s.to_double();
  if (std::abs(v) <= 1e-9 * rel_scale) return 0;
  return v > 0 ? 1 : -1;
}

}  // namespace

StabilityReport stationarity_and_stability(const WeightedGraph& g, const FpCoefficients& coeffs, Delta2Coefficient c2) {
  DenseMatrix m = fp_matrix(g, coeffs.drift, coeffs.diffusion, c2);
  const std::size_t n = m.rows();
  StabilityReport r{m, determinant(m), m.trace(), second_symmetric_function(m), {}, {}, {}, {}, {},
                    false, false, false, false, {}};
  r.notes.push_back(
      "stability is read from M: nonzero eigenvalues of M with positive real part are decaying modes of the "
      "evolution operator -M");

  const double scale = determinant_scale(m);
  if (g.domain().is_exact()) {
    r.stationary = r.det.is_zero();
  } else {
    r.stationary = std::abs(r.det.to_double()) <= 1e-10 * scale;
  }

  if (n > 0) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen_real(m), false);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) r.eigenvalues.push_back(es.eigenvalues()(k));
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](const auto& x, const auto& y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
  }
  double norm_m = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm_m = std::max(norm_m, magnitude(m(i, j)));
  r.stable = true;
  for (const auto& ev : r.eigenvalues) {
    if (std::abs(ev) <= 1e-9 * std::max(1.0, norm_m)) continue;
    if (!(ev.real() > 0.0)) r.stable = false;
  }

  const Scalar disc = r.trace_b * r.trace_b - r.sym2_c.domain().from_int(4) * r.sym2_c;
  const double disc_scale = std::max({1.0, std::pow(r.trace_b.to_double(), 2), std::abs(4.0 * r.sym2_c.to_double())});
  const int sign = compare_to_zero(disc, disc_scale);
  r.discriminant_ok = sign > 0;
  r.marginal_degenerate = sign == 0;
  if (r.marginal_degenerate) {
    r.notes.push_back("b^2 = 4c: the two nonzero eigenvalues coincide (marginal-degenerate), so b^2 > 4c fails");
  }

  if (n == 3 && c2 == Delta2Coefficient::one_eighth) {
    const auto f = triangle_formulas(g, coeffs.drift, coeffs.diffusion);
    r.paper_b = f.b;
    r.paper_c = f.c;
    r.paper_b_agrees = scalars_agree(f.b, r.trace_b);
    r.paper_c_agrees = scalars_agree(f.c, r.sym2_c);
    r.notes.push_back("closed form of c uses a3*b2 in the 3/16 group; the printed repetition of a3*b1 does not match sym2(M)");
  } else if (n == 3) {
    r.notes.push_back("closed triangle forms assume the 1/8 coefficient on Delta^2 and were not compared");
  } else {
    r.notes.push_back("closed triangle forms apply to three nodes only and were not compared");
  }
  return r;
}

ConstantWeightAnalysis constant_weight_analysis(double w, double a, double b, Delta2Coefficient c2) {
  if (w == 0.0) throw DomainError("constant weight must be nonzero");
  const double c = c2 == Delta2Coefficient::one_eighth ? 0.125 : 0.25;
  // On the triangle Delta = w (3I - J), whose nonzero eigenvalue 3w is doubly degenerate.
  ConstantWeightAnalysis r;
  r.mu = 1.5 * a * w + 9.0 * c * b * w * w;
  r.stable = r.mu > 0.0;
  r.threshold = -6.0 * c * b * w;
  r.stable_above = w > 0.0;
  r.paper_threshold = -(63.0 / 40.0) * b * w;
  return r;
}

std::vector<double> bisect_roots(const std::function<double(double)>& f, double lo, double hi, std::size_t steps,
                                 double tol) {
  if (!(lo < hi) || steps < 2) throw ContractError("scan needs lo < hi and at least two steps");
  std::vector<double> xs, fs;
  for (std::size_t s = 0; s < steps; ++s) {
    const double x = lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(steps - 1);
    xs.push_back(x);
    fs.push_back(f(x));
  }
  std::vector<double> roots;
  for (std::size_t s = 0; s < steps; ++s) {
    if (fs[s] == 0.0) {
      roots.push_back(xs[s]);
      continue;
    }
    if (s + 1 == steps || fs[s + 1] == 0.0 || (fs[s] > 0.0) == (fs[s + 1] > 0.0)) continue;
    double a = xs[s], b = xs[s + 1], fa = fs[s];
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      const double fm = f(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm > 0.0) == (fa > 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

WeightScan weight_scan(const WeightedGraph& g, const FpCoefficients& coeffs, std::pair<std::size_t, std::size_t> edge,
                       double lo, double hi, std::size_t steps, Delta2Coefficient c2, unsigned threads) {
  if (!(lo < hi) || steps < 2) throw ContractError("scan needs lo < hi and at least two steps");
  auto [u, v] = edge;
  if (u > v) std::swap(u, v);
  if (v >= g.node_count() || u == v) throw ContractError("scan edge is not a node pair of the graph");
  if (g.domain().kind() != ScalarKind::real) throw DomainError("weight scans run over real graphs");

  auto matrix_at = [&](double x) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> weights;
    for (const auto& e : g.edges()) weights.emplace(std::pair{e.u, e.v}, e.weight);
    weights.insert_or_assign({u, v}, Scalar::real(x));
    return fp_matrix(g.reweighted(weights), coeffs.drift, coeffs.diffusion, c2);
  };
  auto det_at = [&](double x) { return determinant(matrix_at(x)).to_double(); };
  auto sym2_at = [&](double x) { return second_symmetric_function(matrix_at(x)).to_double(); };

  WeightScan r{{}, {}, true, {}};
  r.samples.resize(steps);
  std::vector<char> singular(steps, 0);
  parallel_for_chunks(steps, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t s = begin; s < end; ++s) {
      const double x = lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(steps - 1);
      const DenseMatrix m = matrix_at(x);
      const double det = determinant(m).to_double();
      r.samples[s] = {x, det};
      singular[s] = std::abs(det) <= 1e-10 * determinant_scale(m);
    }
  });
  r.identically_singular = std::all_of(singular.begin(), singular.end(), [](char c) { return c != 0; });
  // A determinant that vanishes identically has no isolated roots to refine.
  if (!r.identically_singular) r.roots = bisect_roots(det_at, lo, hi, steps);
  r.stability_boundaries = bisect_roots(sym2_at, lo, hi, steps);
  return r;
}

}  // namespace gfa
