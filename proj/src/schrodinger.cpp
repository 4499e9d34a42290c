#include "gfa/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gfa/calculus.hpp"
#include "gfa/errors.hpp"

namespace gfa {

namespace {

constexpr cplx kI{0.0, 1.0};

WeightedGraph magnitude_graph(const WeightedGraph& g) {
  std::vector<WeightedEdge> edges;
  switch (g.domain().kind()) {
    case ScalarKind::real:
      return g;
    case ScalarKind::complex:
      for (const auto& e : g.edges()) {
        const cplx w = e.weight.as_complex();
        if (std::abs(w.real()) > 1e-12 * std::abs(w)) {
          throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not purely imaginary; supply real magnitudes u or weights i*u");
        }
        edges.push_back({e.u, e.v, Scalar::real(w.imag())});
      }
      return WeightedGraph::from_weights(ScalarDomain::real(), g.node_count(), edges, g.labels());
    default:
      throw DomainError("quantum weights must be real magnitudes or purely imaginary complex numbers, got " +
                        g.domain().name());
  }
}

void check_node(const QuantumParams& p, std::size_t a) {
  if (a >= p.node_count()) throw ContractError("node " + std::to_string(a) + " out of range");
}

Eigen::MatrixXd laplacian_u(const QuantumParams& p) { return to_eigen_real(laplacian(p.magnitudes())); }

}  // namespace

QuantumParams::QuantumParams(const WeightedGraph& g, double hbar, double mass)
    : hbar_(hbar), mass_(mass), u_(magnitude_graph(g)) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ContractError("hbar must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw ContractError("mass must be positive");
}

double QuantumParams::u(std::size_t a, std::size_t b) const { return u_.weight(a, b).as_real(); }

double QuantumParams::strength(std::size_t a) const {
  double s = 0.0;
  for (const auto& nb : u_.neighbors(a)) s += nb.weight.as_real();
  return s;
}

PlaneWave plane_wave(const QuantumParams& p, std::size_t a) {
  check_node(p, a);
  const auto& g = p.magnitudes();
  const std::size_t deg = g.degree(a);
  if (deg == 0) throw ContractError("plane wave anchor " + std::to_string(a) + " is isolated");
  PlaneWave w{a, std::vector<double>(p.node_count(), 0.0), 1.0 / std::sqrt(static_cast<double>(deg)), {}, 0.0, 0.0};
  w.wavevector[a] = p.strength(a);
  for (const auto& nb : g.neighbors(a)) w.wavevector[nb.node] = -nb.weight.as_real();
  for (std::size_t j = 0; j < p.node_count(); ++j) {
    w.values.push_back(w.amplitude * std::exp(kI * w.wavevector[j]));
    const double m2 = std::norm(w.values.back());
    w.full_norm_sq += m2;
    if (j != a && g.adjacent(a, j)) w.neighbor_norm_sq += m2;
  }
  return w;
}

FormalAction formal_laplacian_action(const QuantumParams& p, std::size_t a) {
  const PlaneWave w = plane_wave(p, a);
  const std::size_t n = p.node_count();
  const double h2 = p.hbar() * p.hbar();
  FormalAction out;
  for (std::size_t j = 0; j < n; ++j) {
    const double k = j == a ? p.strength(a) : p.u(a, j);
    const double sign = j == a ? 1.0 : -1.0;
    out.formal.push_back(sign * kI * k * w.values[j]);
    out.momentum_squared.push_back(sign * h2 * k * k * w.values[j]);
  }
  const Eigen::MatrixXd L = laplacian_u(p);
  Eigen::VectorXcd f(n);
  for (std::size_t j = 0; j < n; ++j) f(j) = w.values[j];
  const Eigen::VectorXcd action = kI * (L.cast<cplx>() * f);
  double r2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    out.matrix_action.push_back(action(j));
    out.residual.push_back(out.formal[j] - action(j));
    r2 += std::norm(out.residual.back());
  }
  out.residual_norm = std::sqrt(r2);
  return out;
}

DenseMatrix hamiltonian(const QuantumParams& p) {
  const Eigen::MatrixXd L = laplacian_u(p);
  const double c = p.hbar() * p.hbar() / (2.0 * p.mass());
  return from_eigen_real(c * L * L);
}

SpectralSolution spectral_solve(const QuantumParams& p) {
  const std::size_t n = p.node_count();
  if (n > kMaxSpectralNodes) {
    throw SizeError("spectral solve is capped at " + std::to_string(kMaxSpectralNodes) + " nodes (graph has " +
                    std::to_string(n) + ")");
  }
  SpectralSolution sol{p.hbar(), {}, {}};
  if (n == 0) return sol;
  const Eigen::MatrixXd H = to_eigen_real(hamiltonian(p));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double e = es.eigenvalues()(k);
    // H is PSD; round-off below zero is clipped.
    if (e < 0.0 && e > -1e-9 * scale) e = 0.0;
    sol.energies.push_back(e);
  }
  sol.modes = es.eigenvectors();
  return sol;
}

std::vector<double> formal_energies(const QuantumParams& p) {
  std::vector<double> e;
  for (std::size_t a = 0; a < p.node_count(); ++a) {
    const double ua = p.strength(a);
    e.push_back(p.hbar() * p.hbar() * ua * ua / (2.0 * p.mass()));
  }
  return e;
}

double norm(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector evolve(const SpectralSolution& sol, const ComplexVector& psi0, double t) {
  const auto n = static_cast<std::size_t>(sol.modes.rows());
  if (psi0.size() != n) throw ContractError("psi0 length does not match node count");
  if (std::abs(norm(psi0) - 1.0) > 1e-9) throw ContractError("psi0 must have unit norm");
  Eigen::VectorXcd psi(n);
  for (std::size_t j = 0; j < n; ++j) psi(j) = psi0[j];
  const Eigen::MatrixXcd V = sol.modes.cast<cplx>();
  Eigen::VectorXcd c = V.adjoint() * psi;
  for (std::size_t k = 0; k < n; ++k) c(k) *= std::exp(-kI * sol.energies[k] * t / sol.hbar);
  const Eigen::VectorXcd out = V * c;
  return {out.data(), out.data() + n};
}

ComplexVector plane_wave_superposition(const QuantumParams& p, const std::vector<WaveCoefficients>& coeffs,
                                       double t) {
  const std::size_t n = p.node_count();
  if (coeffs.size() != n) throw ContractError("one (A, B) pair per node is required");
  double total = 0.0;
  for (const auto& c : coeffs) total += std::norm(c.A) + std::norm(c.B);
  if (std::abs(total - 1.0) > 1e-9) throw ContractError("coefficients must satisfy sum |A_b|^2 + |B_b|^2 = 1");
  const auto energies = formal_energies(p);
  ComplexVector psi(n, cplx{0.0, 0.0});
  for (std::size_t b = 0; b < n; ++b) {
    if (coeffs[b].A == cplx{} && coeffs[b].B == cplx{}) continue;
    if (p.magnitudes().degree(b) == 0) {
      throw ContractError("isolated node " + std::to_string(b) + " has no plane wave but carries a coefficient");
    }
    const PlaneWave f = plane_wave(p, b);
    const cplx phase = std::exp(-kI * energies[b] * t / p.hbar());
    for (std::size_t a = 0; a < n; ++a) psi[a] += (coeffs[b].A * f.values[a] + coeffs[b].B * std::conj(f.values[a])) * phase;
  }
  return psi;
}

const char* to_string(DirichletFamily f) {
  switch (f) {
    case DirichletFamily::none: return "none";
    case DirichletFamily::half_pi_odd: return "half-pi-odd";
    case DirichletFamily::pi_multiple: return "pi-multiple";
  }
  return "none";
}

DirichletReport dirichlet_check(const QuantumParams& p, const std::vector<WaveCoefficients>& coeffs, std::size_t c) {
  check_node(p, c);
  if (coeffs.size() != p.node_count()) throw ContractError("one (A, B) pair per node is required");
  constexpr double tol = 1e-9;
  const auto& nbs = p.magnitudes().neighbors(c);
  if (nbs.empty()) return {DirichletFamily::none, "node has no neighbours"};

  auto is_integer = [](double x) { return std::abs(x - std::round(x)) <= tol; };
  bool odd_half_pi = true, pi_multiple = true;
  for (const auto& nb : nbs) {
    const double u = nb.weight.as_real();
    const double halves = u / (std::numbers::pi / 2.0);
    const long long rh = std::llround(halves);
    if (!is_integer(halves) || rh <= 0 || rh % 2 == 0) odd_half_pi = false;
    const double wholes = u / std::numbers::pi;
    if (!is_integer(wholes) || std::llround(wholes) < 0) pi_multiple = false;
  }
  bool a_eq_b = true, a_eq_minus_b = true;
  for (const auto& w : coeffs) {
    if (std::abs(w.A - w.B) > tol) a_eq_b = false;
    if (std::abs(w.A + w.B) > tol) a_eq_minus_b = false;
  }
  const bool odd_degree = nbs.size() % 2 == 1;
  if (odd_half_pi && odd_degree && a_eq_b) {
    return {DirichletFamily::half_pi_odd, "every u_bc is an odd multiple of pi/2, deg(c) is odd and A_b = B_b"};
  }
  if (pi_multiple && a_eq_minus_b) return {DirichletFamily::pi_multiple, "every u_bc is a multiple of pi and A_b = -B_b"};
  std::string why;
  if (!odd_half_pi && !pi_multiple) why = "edge angles are neither odd multiples of pi/2 nor multiples of pi";
  else if (odd_half_pi && !odd_degree) why = "angles are odd multiples of pi/2 but deg(c) is even";
  else why = "angles qualify but the A_b/B_b relation does not hold";
  return {DirichletFamily::none, why};
}

NeumannReport neumann_relation(const QuantumParams& p, const ComplexVector& psi, std::size_t c) {
  check_node(p, c);
  if (psi.size() != p.node_count()) throw ContractError("psi length does not match node count");
  const auto& nbs = p.magnitudes().neighbors(c);
  if (nbs.empty()) return {true, cplx{}, cplx{}, true};
  double uc = 0.0, scale = 0.0;
  cplx weighted{};
  for (const auto& nb : nbs) {
    const double u = nb.weight.as_real();
    uc += u;
    scale = std::max(scale, std::abs(u));
    weighted += u * psi[nb.node];
  }
  if (std::abs(uc) <= 1e-12 * scale) return {false, cplx{}, weighted, false};
  return {true, weighted / uc, cplx{}, false};
}

PolarizationReport polarization_condition(const QuantumParams& p) {
  PolarizationReport r{true, {}};
  const auto& g = p.magnitudes();
  for (std::size_t a = 0; a < p.node_count(); ++a) {
    double q = 0.0;
    const auto& nbs = g.neighbors(a);
    for (const auto& b : nbs) q += b.weight.as_real() * b.weight.as_real();
    for (const auto& b : nbs)
      for (const auto& c : nbs)
        if (b.node != c.node) q += b.weight.as_real() * c.weight.as_real();
    r.q.push_back(q);
  }
  if (!r.q.empty()) {
    const auto [lo, hi] = std::minmax_element(r.q.begin(), r.q.end());
    const double scale = std::max(std::abs(*lo), std::abs(*hi));
    r.constant = *hi - *lo <= 1e-12 * std::max(1.0, scale);
  }
  return r;
}

}  // namespace gfa
