#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gfa/scalar.hpp"

namespace gfa {

/// Dense function on graph nodes.
class NodeFunction {
 public:
  NodeFunction(ScalarDomain domain, std::vector<Scalar> values);
  static NodeFunction zeros(ScalarDomain domain, std::size_t n);
  static NodeFunction constant(const Scalar& c, std::size_t n);

  const ScalarDomain& domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  Scalar& operator[](std::size_t i) { return values_[i]; }
  std::span<const Scalar> values() const { return values_; }

  NodeFunction operator+(const NodeFunction& o) const;
  NodeFunction operator-(const NodeFunction& o) const;
  NodeFunction operator-() const;
  NodeFunction scaled(const Scalar& s) const;
  /// Pointwise product.
  NodeFunction operator*(const NodeFunction& o) const;

  bool is_zero() const;
  bool operator==(const NodeFunction& o) const;

 private:
  void require_compatible(const NodeFunction& o, const char* op) const;

  ScalarDomain domain_;
  std::vector<Scalar> values_;
};

/// Ordered node pair (i, j); both orientations of an edge are distinct keys.
using EdgeKey = std::pair<std::size_t, std::size_t>;

/// Sparse function on ordered adjacent node pairs. Absent keys read as zero.
class EdgeFunction {
 public:
  explicit EdgeFunction(ScalarDomain domain) : domain_(domain) {}

  const ScalarDomain& domain() const { return domain_; }
  const std::map<EdgeKey, Scalar>& values() const { return values_; }

  void set(std::size_t i, std::size_t j, Scalar v);
  Scalar get(std::size_t i, std::size_t j) const;
  bool contains(std::size_t i, std::size_t j) const { return values_.contains({i, j}); }

  EdgeFunction operator-(const EdgeFunction& o) const;
  bool is_zero() const;
  bool operator==(const EdgeFunction& o) const;

 private:
  ScalarDomain domain_;
  std::map<EdgeKey, Scalar> values_;
};

/// <f, g>_V = sum_i f_i g_i.
Scalar inner(const NodeFunction& f, const NodeFunction& g);
/// <F, G>_E = sum over ordered pairs F_ij G_ij.
Scalar inner(const EdgeFunction& f, const EdgeFunction& g);

}  // namespace gfa
