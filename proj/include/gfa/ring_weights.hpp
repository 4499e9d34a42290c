#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gfa/graph.hpp"

namespace gfa {

inline constexpr std::uint64_t kMaxZdgModulus = 1'000'000;

struct ZdgReport {
  std::uint64_t modulus;
  std::vector<std::uint64_t> vertices;  // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // x < y, lexicographic
  std::optional<std::size_t> girth;     // nullopt: no cycle
  bool all_non_nilpotent;
};

/// Beck's zero-divisor graph of Z_n for 2 <= n <= 10^6. With include_edges
/// false the edge list is left empty (the girth is still computed).
ZdgReport zero_divisor_graph(std::uint64_t n, bool include_edges = true);

/// Girth from the divisor classes of Z_n. x and y are adjacent iff
/// n | gcd(x,n) gcd(y,n), so the graph is a blow-up of a small quotient.
/// Used for large n, where the BFS over all vertices is too slow.
std::optional<std::size_t> zdg_girth_from_divisors(std::uint64_t n);

struct ModulusReport {
  bool qualifies;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization;
  std::size_t c;  // number of distinct primes
};

/// qualifies iff n has at least three distinct prime factors.
ModulusReport modulus_qualifies(std::uint64_t n);

struct WeighingSolution {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> assignment;  // edge (u < v) -> residue
  std::uint64_t modulus;
};

struct WeighingOptions {
  std::optional<std::size_t> limit;  // unlimited when empty
  bool include_nilpotent = false;    // non-conforming exploration mode
  unsigned threads = 1;
};

struct WeighingResult {
  std::vector<std::uint64_t> candidates;
  std::vector<WeighingSolution> solutions;  // ascending residue tuples in edge order
  bool truncated;
};

inline constexpr std::size_t kMaxWeighingEdges = 16;

/// Exhaustive backtracking over zero-divisor weighings of the topology of g.
/// Each emitted solution has been re-verified with the full Jacobi check.
/// SizeError past kMaxWeighingEdges edges.
WeighingResult weighing_search(const WeightedGraph& g, std::uint64_t n, const WeighingOptions& options = {});

/// Random assignments from the same candidate set, kept only when they pass the
/// full Jacobi check. No edge cap. Deterministic for a fixed seed.
WeighingResult weighing_sample(const WeightedGraph& g, std::uint64_t n, std::size_t samples, std::uint64_t seed,
                               bool include_nilpotent = false);

/// g's topology carrying the given residues over Z_n.
WeightedGraph apply_weighing(const WeightedGraph& g, const WeighingSolution& s);

}  // namespace gfa
