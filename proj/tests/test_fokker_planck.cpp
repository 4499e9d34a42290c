#include <doctest.h>

#include <cmath>

#include "gfa/errors.hpp"
#include "gfa/fokker_planck.hpp"
#include "support.hpp"

using namespace gfa;
using namespace gfa_test;

namespace {

WeightedGraph triangle(const Scalar& w12, const Scalar& w13, const Scalar& w23) {
  return graph_from_weights(w12.domain(), 3, {{0, 1, w12}, {0, 2, w13}, {1, 2, w23}});
}

// Nonzero eigenvalue of largest magnitude of the constant-weight triangle
// matrix, straight from the eigensolver.
double dominant_eigenvalue(double w, double a, double b) {
  const auto g = triangle(r(w), r(w), r(w));
  const auto m = fp_matrix(g, real_function({a, a, a}), real_function({b, b, b}));
  const Eigen::VectorXcd ev = to_eigen_real(m).eigenvalues();
  double best = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i).real()) > std::abs(best)) best = ev(i).real();
  return best;
}

}  // namespace

TEST_CASE("M is singular for every constant-weight triangle") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pos(0.1, 5.0);
  for (double w : {-2.0, -1.0, 0.5, 1.0, 3.0}) {
    for (int k = 0; k < 20; ++k) {
      const auto g = triangle(r(w), r(w), r(w));
      const auto a = real_function({pos(rng), pos(rng), pos(rng)});
      const auto b = real_function({pos(rng), pos(rng), pos(rng)});
      const auto m = fp_matrix(g, a, b);
      CHECK(std::abs(determinant(m).as_real()) <= 1e-10 * determinant_scale(m));
      CHECK(stationarity_and_stability(g, FpCoefficients::positive(a, b)).stationary);
    }
  }
}

TEST_CASE("trace and second symmetric function match the closed forms") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 100; ++k) {
    const auto g = triangle(Scalar::rational(random_rational(rng)), Scalar::rational(random_rational(rng)),
                            Scalar::rational(random_rational(rng)));
    const auto a = rational_function({random_positive_rational(rng), random_positive_rational(rng), random_positive_rational(rng)});
    const auto b = rational_function({random_positive_rational(rng), random_positive_rational(rng), random_positive_rational(rng)});
    const auto m = fp_matrix(g, a, b);
    const auto f = triangle_formulas(g, a, b);
    CHECK(m.trace() == f.b);
    CHECK(second_symmetric_function(m) == f.c);
    CHECK(determinant(m) == q(0));
    CHECK(triangle_matrix_printed(g, a, b) == m);
    const auto rep = stationarity_and_stability(g, FpCoefficients::positive(a, b));
    REQUIRE(rep.paper_b.has_value());
    CHECK(*rep.paper_b_agrees);
    CHECK(*rep.paper_c_agrees);
  }
}

TEST_CASE("the printed c differs from sym2 when a3 b1 and a3 b2 differ") {
  const auto g = triangle(q(1), q(2), q(3));
  const auto a = rational_function({1, 2, 3});
  const auto b = rational_function({5, 7, 11});
  const auto f = triangle_formulas(g, a, b);
  CHECK(f.c == second_symmetric_function(fp_matrix(g, a, b)));
  CHECK_FALSE(f.c_as_printed == f.c);
}

TEST_CASE("constant triangle w = a = b = 1 is marginal-degenerate") {
  const auto g = triangle(q(1), q(1), q(1));
  const auto one = rational_function({1, 1, 1});
  const auto rep = stationarity_and_stability(g, FpCoefficients::positive(one, one));
  REQUIRE(rep.eigenvalues.size() == 3);
  CHECK(std::abs(rep.eigenvalues[0]) <= 1e-10);
  CHECK(std::abs(rep.eigenvalues[1] - 21.0 / 8) <= 1e-10);
  CHECK(std::abs(rep.eigenvalues[2] - 21.0 / 8) <= 1e-10);
  CHECK(rep.marginal_degenerate);
  CHECK_FALSE(rep.discriminant_ok);
  CHECK(rep.stable);
  CHECK(rep.trace_b == q(21, 4));
  CHECK(rep.sym2_c == q(441, 64));
  CHECK(rep.matrix == triangle_matrix_printed(g, one, one));
}

TEST_CASE("negative-weight threshold agrees with eigenvalue bisection") {
  for (double w : {-2.0, -1.0, -0.5}) {
    for (double b : {0.5, 1.0, 3.0}) {
      const auto cw = constant_weight_analysis(w, 1.0, b);
      CHECK(cw.threshold == doctest::Approx(0.75 * b * std::abs(w)).epsilon(1e-14));
      CHECK_FALSE(cw.stable_above);
      CHECK(cw.paper_threshold == doctest::Approx(1.575 * b * std::abs(w)));
      // Bisection on the sign of the dominant eigenvalue in a.
      double lo = 1e-6, hi = 10.0 * b * std::abs(w);
      REQUIRE(dominant_eigenvalue(w, lo, b) > 0);
      REQUIRE(dominant_eigenvalue(w, hi, b) < 0);
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (dominant_eigenvalue(w, mid, b) > 0 ? lo : hi) = mid;
      }
      CHECK(std::abs(0.5 * (lo + hi) - cw.threshold) <= 1e-6);
    }
  }
  CHECK(constant_weight_analysis(-1.0, 0.5, 1.0).stable);
  CHECK_FALSE(constant_weight_analysis(-1.0, 1.0, 1.0).stable);
  CHECK(constant_weight_analysis(1.0, 1.0, 1.0).mu == doctest::Approx(21.0 / 8));
  CHECK_THROWS_AS(constant_weight_analysis(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("weight scan finds no isolated determinant roots") {
  const auto g = triangle(r(1.0), r(1.0), r(1.0));
  const auto c = FpCoefficients::positive(real_function({1, 2, 3}), real_function({1, 1, 2}));
  const auto s = weight_scan(g, c, {0, 1}, -3.0, 3.0, 61);
  CHECK(s.identically_singular);
  CHECK(s.roots.empty());
  CHECK(s.samples.size() == 61);
  CHECK_FALSE(s.stability_boundaries.empty());
  const auto s4 = weight_scan(g, c, {0, 1}, -3.0, 3.0, 61, Delta2Coefficient::one_eighth, 4);
  CHECK(s4.samples == s.samples);
  CHECK_THROWS_AS(weight_scan(g, c, {0, 1}, 1.0, 1.0, 5), ContractError);
}

TEST_CASE("Delta squared coefficient switch") {
  const auto g = triangle(q(1), q(1), q(1));
  const auto one = rational_function({1, 1, 1});
  const auto m8 = fp_matrix(g, one, one, Delta2Coefficient::one_eighth);
  const auto m4 = fp_matrix(g, one, one, Delta2Coefficient::one_quarter);
  // Delta^2 = 3 Delta on K3, so the diagonal is 1 + 6 c2.
  CHECK(m8(0, 0) == q(7, 4));
  CHECK(m4(0, 0) == q(5, 2));
}

TEST_CASE("coefficients must be positive") {
  CHECK_THROWS_AS(FpCoefficients::positive(rational_function({1, 0, 1}), rational_function({1, 1, 1})), ContractError);
  CHECK_THROWS_AS(FpCoefficients::positive(rational_function({1, 1, 1}), rational_function({1, -1, 1})), ContractError);
}

TEST_CASE("operator variants and ansatz") {
  const auto g = path_graph(3, r(1.0));
  const auto std_op = fp_operator(g, {});
  CHECK(std_op(0, 0).as_real() == -0.5);
  FpVariant scaled{FpVariant::Kind::scaled, 2.0, 0.0, 0};
  CHECK(fp_operator(g, scaled)(0, 0).as_real() == doctest::Approx(-1.0 / 8));
  // phi_0 = (1, -1, 0) vanishes at node 2.
  CHECK(phi(g, 0) == std::vector<double>{1, -1, 0});
  FpVariant modified{FpVariant::Kind::modified, 1.0, 0.5, 0};
  CHECK_THROWS_AS(fp_operator(g, modified), DomainError);

  const auto an = gaussian_ansatz(g, {1.0, 0.0}, 1);
  double total = 0.0;
  for (double v : an.values) total += v;
  CHECK(total == doctest::Approx(1.0));
  const auto two = gaussian_ansatz(g, {1.0, 0.2}, 0, 2);
  CHECK(two.values.size() == 3);
}

TEST_CASE("bisection root finder") {
  const auto roots = bisect_roots([](double x) { return x * x - 2.0; }, -3.0, 3.0, 7);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
  CHECK(roots[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}
