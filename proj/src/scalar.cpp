#include "gfa/scalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = v % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

// Inverse of a modulo n via extended Euclid; caller guarantees gcd(a, n) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, n);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// ScalarDomain

ScalarDomain ScalarDomain::zmod(std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(modulus));
  if (modulus > kMaxModulus) throw DomainError("modulus exceeds 2^32: " + std::to_string(modulus));
  return ScalarDomain(ScalarKind::zmod, modulus);
}

bool ScalarDomain::is_field() const {
  if (kind_ != ScalarKind::zmod) return true;
  const auto f = factorize(modulus_);
  return f.size() == 1 && f.front().second == 1;
}

Scalar ScalarDomain::zero() const { return from_int(0); }
Scalar ScalarDomain::one() const { return from_int(1); }

Scalar ScalarDomain::from_int(std::int64_t v) const {
  switch (kind_) {
    case ScalarKind::real: return Scalar::real(static_cast<double>(v));
    case ScalarKind::complex: return Scalar::complex({static_cast<double>(v), 0.0});
    case ScalarKind::zmod: return Scalar::zmod(v, modulus_);
    case ScalarKind::rational: return Scalar::rational(Rational(v));
  }
  throw DomainError("unknown scalar kind");
}

Scalar ScalarDomain::from_fraction(std::int64_t p, std::int64_t q) const {
  if (q == 0) throw DomainError("zero denominator in fraction literal");
  if (kind_ == ScalarKind::rational) return Scalar::rational(Rational(p, q));
  return from_int(p) / from_int(q);
}

Scalar ScalarDomain::from_double(double v) const {
  switch (kind_) {
    case ScalarKind::real: return Scalar::real(v);
    case ScalarKind::complex: return Scalar::complex({v, 0.0});
    case ScalarKind::rational: return Scalar::rational(Rational(v));
    case ScalarKind::zmod:
      if (v != std::floor(v)) throw DomainError("non-integer value in Z_n: " + format_double(v));
      return Scalar::zmod(static_cast<std::int64_t>(v), modulus_);
  }
  throw DomainError("unknown scalar kind");
}

std::string ScalarDomain::name() const {
  if (kind_ == ScalarKind::zmod) return "zmod(" + std::to_string(modulus_) + ")";
  return kind_tag();
}

std::string ScalarDomain::kind_tag() const {
  switch (kind_) {
    case ScalarKind::real: return "real";
    case ScalarKind::complex: return "complex";
    case ScalarKind::zmod: return "zmod";
    case ScalarKind::rational: return "rational";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::real(double v) { return {ScalarDomain::real(), v}; }
Scalar Scalar::complex(std::complex<double> v) { return {ScalarDomain::complex(), v}; }
Scalar Scalar::zmod(std::int64_t v, std::uint64_t modulus) {
  const auto d = ScalarDomain::zmod(modulus);
  return {d, reduce(v, modulus)};
}
Scalar Scalar::zmod_residue(std::uint64_t residue, std::uint64_t modulus) {
  const auto d = ScalarDomain::zmod(modulus);
  return {d, residue % modulus};
}
Scalar Scalar::rational(Rational v) { return {ScalarDomain::rational(), std::move(v)}; }

void Scalar::require_same(const Scalar& o, const char* op) const {
  if (!(domain_ == o.domain_)) {
    throw DomainError(std::string("scalar domain mismatch in ") + op + ": " + domain_.name() + " vs " +
                      o.domain_.name());
  }
}

bool Scalar::is_zero() const {
  switch (domain_.kind()) {
    case ScalarKind::real: return std::get<double>(value_) == 0.0;
    case ScalarKind::complex: return std::get<std::complex<double>>(value_) == std::complex<double>{};
    case ScalarKind::zmod: return std::get<std::uint64_t>(value_) == 0;
    case ScalarKind::rational: return std::get<Rational>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == domain_.one(); }

bool Scalar::is_unit() const {
  if (domain_.kind() == ScalarKind::zmod) return gcd_u64(residue(), domain_.modulus()) == 1;
  return !is_zero();
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o, "+");
  switch (domain_.kind()) {
    case ScalarKind::real: return real(as_real() + o.as_real());
    case ScalarKind::complex: return complex(as_complex() + o.as_complex());
    case ScalarKind::zmod: {
      const auto n = domain_.modulus();
      return {domain_, (residue() + o.residue()) % n};
    }
    case ScalarKind::rational: return rational(as_rational() + o.as_rational());
  }
  throw DomainError("unknown scalar kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o, "-");
  return *this + (-o);
}

Scalar Scalar::operator-() const {
  switch (domain_.kind()) {
    case ScalarKind::real: return real(-as_real());
    case ScalarKind::complex: return complex(-as_complex());
    case ScalarKind::zmod: {
      const auto n = domain_.modulus();
      return {domain_, (n - residue()) % n};
    }
    case ScalarKind::rational: return rational(-as_rational());
  }
  throw DomainError("unknown scalar kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o, "*");
  switch (domain_.kind()) {
    case ScalarKind::real: return real(as_real() * o.as_real());
    case ScalarKind::complex: return complex(as_complex() * o.as_complex());
    case ScalarKind::zmod: return {domain_, mulmod(residue(), o.residue(), domain_.modulus())};
    case ScalarKind::rational: return rational(as_rational() * o.as_rational());
  }
  throw DomainError("unknown scalar kind");
}

Scalar Scalar::inverse() const {
  if (domain_.kind() == ScalarKind::zmod) {
    if (!is_unit()) {
      throw DomainError("residue " + std::to_string(residue()) + " is not a unit in Z_" +
                        std::to_string(domain_.modulus()));
    }
    return {domain_, invmod(residue(), domain_.modulus())};
  }
  if (is_zero()) throw DomainError("division by zero in " + domain_.name());
  switch (domain_.kind()) {
    case ScalarKind::real: return real(1.0 / as_real());
    case ScalarKind::complex: return complex(1.0 / as_complex());
    case ScalarKind::rational: return rational(Rational(1) / as_rational());
    default: break;
  }
  throw DomainError("unknown scalar kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o, "/");
  return *this * o.inverse();
}

Scalar Scalar::conj() const {
  if (domain_.kind() == ScalarKind::complex) return complex(std::conj(as_complex()));
  return *this;
}

bool Scalar::operator==(const Scalar& o) const { return domain_ == o.domain_ && value_ == o.value_; }

double Scalar::as_real() const { return std::get<double>(value_); }
std::complex<double> Scalar::as_complex() const { return std::get<std::complex<double>>(value_); }
std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(value_); }
const Rational& Scalar::as_rational() const { return std::get<Rational>(value_); }

double Scalar::to_double() const {
  switch (domain_.kind()) {
    case ScalarKind::real: return as_real();
    case ScalarKind::rational: return static_cast<double>(as_rational());
    case ScalarKind::complex:
      if (as_complex().imag() != 0.0) throw DomainError("complex value has nonzero imaginary part");
      return as_complex().real();
    case ScalarKind::zmod: throw DomainError("residues have no real value");
  }
  throw DomainError("unknown scalar kind");
}

std::complex<double> Scalar::to_complex() const {
  if (domain_.kind() == ScalarKind::complex) return as_complex();
  return {to_double(), 0.0};
}

std::string Scalar::to_string() const {
  switch (domain_.kind()) {
    case ScalarKind::real: return format_double(as_real());
    case ScalarKind::complex: {
      const auto c = as_complex();
      return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
    }
    case ScalarKind::zmod: return std::to_string(residue());
    case ScalarKind::rational: {
      const auto& q = as_rational();
      return numerator(q).str() + "/" + denominator(q).str();
    }
  }
  return "?";
}

bool approx_equal(const Scalar& a, const Scalar& b, double eps) {
  if (!(a.domain() == b.domain())) return false;
  if (a.domain().is_exact()) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= eps;
}

double magnitude(const Scalar& x) {
  switch (x.domain().kind()) {
    case ScalarKind::real: return std::abs(x.as_real());
    case ScalarKind::complex: return std::abs(x.as_complex());
    case ScalarKind::rational: return std::abs(static_cast<double>(x.as_rational()));
    case ScalarKind::zmod: {
      const auto r = x.residue(), n = x.domain().modulus();
      return static_cast<double>(std::min(r, n - r));
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Integer helpers

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

ZmodClassification zmod_classify(std::uint64_t n, std::uint64_t x) {
  if (n < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(n));
  if (x >= n) throw ContractError("residue " + std::to_string(x) + " not reduced mod " + std::to_string(n));
  bool nilpotent = true;
  for (const auto& [p, e] : factorize(n)) {
    if (x % p != 0) {
      nilpotent = false;
      break;
    }
  }
  ResidueClass cls = ResidueClass::zero_divisor;
  if (x == 0) cls = ResidueClass::zero;
  else if (std::gcd(x, n) == 1) cls = ResidueClass::unit;
  return {cls, nilpotent};
}

const char* to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::zero: return "zero";
    case ResidueClass::unit: return "unit";
    case ResidueClass::zero_divisor: return "zero-divisor";
  }
  return "?";
}

}  // namespace gfa
