#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gfa/graph.hpp"
#include "gfa/matrix.hpp"

namespace gfa {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// hbar, mass and the real weight magnitudes u. The operator weights are
/// w = i u; plane-wave phases use u directly.
class QuantumParams {
 public:
  /// u comes from a real graph, or from the imaginary parts of a complex graph
  /// whose weights are purely imaginary. ContractError when hbar or mass <= 0;
  /// DomainError for other weight domains.
  QuantumParams(const WeightedGraph& g, double hbar, double mass);

  double hbar() const { return hbar_; }
  double mass() const { return mass_; }
  std::size_t node_count() const { return u_.node_count(); }
  /// The graph carrying u as real weights.
  const WeightedGraph& magnitudes() const { return u_; }
  double u(std::size_t a, std::size_t b) const;
  /// u_a = sum_b u_ab.
  double strength(std::size_t a) const;

 private:
  double hbar_;
  double mass_;
  WeightedGraph u_;
};

struct PlaneWave {
  std::size_t anchor;
  std::vector<double> wavevector;  // k(a) = u_a, k(b) = -u_ab
  double amplitude;                // 1 / sqrt(deg a)
  ComplexVector values;            // amplitude * exp(i k(j))
  double full_norm_sq;             // sum over all nodes = n / deg(a)
  double neighbor_norm_sq;         // sum over b != a restricted to neighbours = 1
};

/// ContractError for an isolated anchor.
PlaneWave plane_wave(const QuantumParams& p, std::size_t a);

struct FormalAction {
  ComplexVector formal;            // i u_a f(a) at a, -i u_ab f(b) elsewhere
  ComplexVector momentum_squared;  // hbar^2 u_a^2 f(a) at a, -hbar^2 u_ab^2 f(b) elsewhere
  ComplexVector matrix_action;     // (i L_u) f
  ComplexVector residual;          // formal - matrix_action
  double residual_norm;
};

/// The first-order derivation rule applied to f_a, next to the matrix action.
FormalAction formal_laplacian_action(const QuantumParams& p, std::size_t a);

/// H = (hbar^2 / 2m) L_u^2, real symmetric positive semidefinite.
DenseMatrix hamiltonian(const QuantumParams& p);

inline constexpr std::size_t kMaxSpectralNodes = 256;

struct SpectralSolution {
  double hbar;
  std::vector<double> energies;  // ascending, nonnegative
  Eigen::MatrixXd modes;         // orthonormal columns
};

/// SizeError past kMaxSpectralNodes nodes.
SpectralSolution spectral_solve(const QuantumParams& p);

/// E_a = hbar^2 u_a^2 / (2m).
std::vector<double> formal_energies(const QuantumParams& p);

/// Psi(t) = sum_k <v_k, psi0> v_k exp(-i E_k t / hbar). ContractError unless
/// psi0 has unit norm (1e-9).
ComplexVector evolve(const SpectralSolution& sol, const ComplexVector& psi0, double t);

double norm(const ComplexVector& v);

struct WaveCoefficients {
  cplx A;
  cplx B;
};

/// Psi(a,t) = sum_b (A_b f_b + B_b conj(f_b)) exp(-i E_b t / hbar) with the
/// formal energies. ContractError unless sum |A_b|^2 + |B_b|^2 = 1 (1e-9), or
/// when an isolated node carries a nonzero coefficient.
ComplexVector plane_wave_superposition(const QuantumParams& p, const std::vector<WaveCoefficients>& coeffs, double t);

enum class DirichletFamily { none, half_pi_odd, pi_multiple };

const char* to_string(DirichletFamily f);

struct DirichletReport {
  DirichletFamily family;
  std::string details;
};

/// Which vanishing family, if any, applies at node c (angle tolerance 1e-9).
DirichletReport dirichlet_check(const QuantumParams& p, const std::vector<WaveCoefficients>& coeffs, std::size_t c);

struct NeumannReport {
  bool determined;
  cplx value;     // weighted neighbour average when determined
  cplx residual;  // sum_b u_bc Psi(b) when u_c = 0
  bool empty_sum;  // isolated node
};

NeumannReport neumann_relation(const QuantumParams& p, const ComplexVector& psi, std::size_t c);

struct PolarizationReport {
  bool constant;
  std::vector<double> q;
};

/// q_a = sum_{b != a} u_ab^2 + sum over ordered b != c (both != a) of u_ab u_ac.
PolarizationReport polarization_condition(const QuantumParams& p);

}  // namespace gfa
