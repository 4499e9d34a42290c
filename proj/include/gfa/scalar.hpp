#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfa {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class ScalarKind { real, complex, zmod, rational };

class Scalar;

/// The commutative ring all values of a graph, function or matrix live in.
/// Moduli are capped at 2^32 so residue products fit in 64 bits.
class ScalarDomain {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  static ScalarDomain real() { return ScalarDomain(ScalarKind::real, 0); }
  static ScalarDomain complex() { return ScalarDomain(ScalarKind::complex, 0); }
  static ScalarDomain rational() { return ScalarDomain(ScalarKind::rational, 0); }
  static ScalarDomain zmod(std::uint64_t modulus);

  ScalarKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }

  bool is_exact() const { return kind_ == ScalarKind::zmod || kind_ == ScalarKind::rational; }
  bool is_floating() const { return !is_exact(); }
  /// True when every nonzero element is invertible (Z_p for prime p counts).
  bool is_field() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// p/q mapped into the domain; in Z_n the denominator must be a unit.
  Scalar from_fraction(std::int64_t p, std::int64_t q) const;
  Scalar from_double(double v) const;

  /// "real", "complex", "rational" or "zmod(30)".
  std::string name() const;
  /// The JSON "kind" tag: "real" | "complex" | "zmod" | "rational".
  std::string kind_tag() const;

  bool operator==(const ScalarDomain&) const = default;

 private:
  ScalarDomain(ScalarKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  ScalarKind kind_;
  std::uint64_t modulus_;
};

/// An element of a ScalarDomain. Immutable; every operation returns a new value.
/// Mixing domains in one operation raises DomainError.
class Scalar {
 public:
  static Scalar real(double v);
  static Scalar complex(std::complex<double> v);
  static Scalar zmod(std::int64_t v, std::uint64_t modulus);
  static Scalar zmod_residue(std::uint64_t residue, std::uint64_t modulus);
  static Scalar rational(Rational v);

  const ScalarDomain& domain() const { return domain_; }

  bool is_zero() const;
  bool is_one() const;
  /// Invertible in the domain: nonzero for fields, gcd(x, n) = 1 in Z_n.
  bool is_unit() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar conj() const;

  /// Exact structural equality; floating kinds compare bit-for-bit values.
  bool operator==(const Scalar& o) const;

  double as_real() const;
  std::complex<double> as_complex() const;
  std::uint64_t residue() const;
  const Rational& as_rational() const;

  /// Real view: real and rational convert, complex requires zero imaginary part.
  double to_double() const;
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  using Payload = std::variant<double, std::complex<double>, std::uint64_t, Rational>;
  Scalar(ScalarDomain d, Payload p) : domain_(d), value_(std::move(p)) {}
  void require_same(const Scalar& o, const char* op) const;

  ScalarDomain domain_;
  Payload value_;
};

/// Tolerance comparison for floating kinds, exact comparison for exact ones.
bool approx_equal(const Scalar& a, const Scalar& b, double eps);

/// |x| for real/complex/rational; distance to zero (min(r, n - r)) for Z_n.
double magnitude(const Scalar& x);

// ---------------------------------------------------------------------------
// Integer helpers for Z_n.

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

enum class ResidueClass { zero, unit, zero_divisor };

struct ZmodClassification {
  ResidueClass cls;
  bool nilpotent;
};

/// Classifies x in Z_n. Nilpotent iff every prime of n divides x.
ZmodClassification zmod_classify(std::uint64_t n, std::uint64_t x);

const char* to_string(ResidueClass c);

}  // namespace gfa
