#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"

namespace gfa_test {

using gfa::Rational;
using gfa::Scalar;
using gfa::ScalarDomain;

inline Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar::rational(Rational(p, d)); }
inline Scalar r(double v) { return Scalar::real(v); }
inline Scalar zm(std::int64_t v, std::uint64_t n) { return Scalar::zmod(v, n); }

// Nonzero rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng, bool nonzero = true) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (;;) {
    Rational v(num(rng), den(rng));
    if (!nonzero || v != 0) return v;
  }
}

inline Rational random_positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline gfa::NodeFunction random_function(std::mt19937_64& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::rational(random_rational(rng, false)));
  return gfa::NodeFunction(ScalarDomain::rational(), v);
}

inline gfa::NodeFunction real_function(const std::vector<double>& xs) {
  std::vector<Scalar> v;
  for (double x : xs) v.push_back(Scalar::real(x));
  return gfa::NodeFunction(ScalarDomain::real(), v);
}

inline gfa::NodeFunction rational_function(const std::vector<Rational>& xs) {
  std::vector<Scalar> v;
  for (const auto& x : xs) v.push_back(Scalar::rational(x));
  return gfa::NodeFunction(ScalarDomain::rational(), v);
}

// Random simple graph on n nodes with edge probability p. With gamma true every
// edge carries nonzero directed weights, otherwise a nonzero symmetric weight.
inline gfa::WeightedGraph random_rational_graph(std::mt19937_64& rng, std::size_t n, double p, bool gamma) {
  std::bernoulli_distribution coin(p);
  std::vector<gfa::EdgeSpec> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      gfa::EdgeSpec e{u, v, std::nullopt, std::nullopt, std::nullopt};
      if (gamma) {
        e.gamma_uv = Scalar::rational(random_rational(rng));
        e.gamma_vu = Scalar::rational(random_rational(rng));
      } else {
        e.w = Scalar::rational(random_rational(rng));
      }
      edges.push_back(e);
    }
  return gfa::WeightedGraph::from_edges(ScalarDomain::rational(), n, edges);
}

inline gfa::WeightedGraph random_real_graph(std::mt19937_64& rng, std::size_t n, double p, bool gamma) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> val(0.1, 3.0);
  std::bernoulli_distribution neg(0.3);
  std::vector<gfa::EdgeSpec> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      gfa::EdgeSpec e{u, v, std::nullopt, std::nullopt, std::nullopt};
      auto draw = [&] { return Scalar::real(neg(rng) ? -val(rng) : val(rng)); };
      if (gamma) {
        e.gamma_uv = draw();
        e.gamma_vu = draw();
      } else {
        e.w = draw();
      }
      edges.push_back(e);
    }
  return gfa::WeightedGraph::from_edges(ScalarDomain::real(), n, edges);
}

inline gfa::WeightedGraph graph_from_weights(const ScalarDomain& d, std::size_t n,
                                             const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& es) {
  std::vector<gfa::EdgeSpec> edges;
  for (const auto& [u, v, w] : es) edges.push_back({u, v, w, std::nullopt, std::nullopt});
  return gfa::WeightedGraph::from_edges(d, n, edges);
}

// The Z_30 triangle with weights 6, 10, 15.
inline gfa::WeightedGraph z30_triangle() {
  return graph_from_weights(ScalarDomain::zmod(30), 3, {{0, 1, zm(6, 30)}, {1, 2, zm(10, 30)}, {0, 2, zm(15, 30)}});
}

}  // namespace gfa_test
