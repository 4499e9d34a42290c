#include <doctest.h>

#include "gfa/errors.hpp"
#include "gfa/json_io.hpp"
#include "gfa/scalar.hpp"
#include "support.hpp"

using namespace gfa;
using namespace gfa_test;

TEST_CASE("zmod arithmetic wraps and divides only by units") {
  const auto a = zm(7, 30), b = zm(29, 30);
  CHECK((a + b).residue() == 6);
  CHECK((a * b).residue() == 23);
  CHECK(zm(-1, 30).residue() == 29);
  CHECK((zm(1, 30) / zm(7, 30)).residue() == 13);  // 7 * 13 = 91 = 1 mod 30
  CHECK_THROWS_AS(zm(1, 30) / zm(6, 30), DomainError);
  CHECK_THROWS_AS(zm(6, 30).inverse(), DomainError);
  CHECK(zm(7, 30).is_unit());
  CHECK_FALSE(zm(10, 30).is_unit());
}

TEST_CASE("zmod modulus limits") {
  CHECK_THROWS_AS(ScalarDomain::zmod(1), DomainError);
  CHECK_THROWS_AS(ScalarDomain::zmod((std::uint64_t{1} << 32) + 1), DomainError);
  CHECK_NOTHROW(ScalarDomain::zmod(std::uint64_t{1} << 32));
  // Products of residues near the cap must not overflow.
  const std::uint64_t n = std::uint64_t{1} << 32;
  const auto x = Scalar::zmod_residue(n - 1, n);
  CHECK((x * x).residue() == 1);
}

TEST_CASE("rationals stay reduced and divide by nonzero") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK((q(3, 4) / q(3, 2)) == q(1, 2));
  CHECK_THROWS_AS(q(1) / q(0), DomainError);
  CHECK(q(-6, 4).to_string() == "-3/2");
}

TEST_CASE("mixing domains is rejected") {
  CHECK_THROWS_AS(q(1) + r(1.0), DomainError);
  CHECK_THROWS_AS(zm(1, 30) * zm(1, 7), DomainError);
}

TEST_CASE("floating division by zero is a domain error") {
  CHECK_THROWS_AS(r(1.0) / r(0.0), DomainError);
  CHECK_THROWS_AS(Scalar::complex({1, 0}) / Scalar::complex({0, 0}), DomainError);
}

TEST_CASE("residue classification") {
  CHECK(zmod_classify(30, 0).cls == ResidueClass::zero);
  CHECK(zmod_classify(30, 7).cls == ResidueClass::unit);
  const auto c = zmod_classify(12, 6);
  CHECK(c.cls == ResidueClass::zero_divisor);
  CHECK(c.nilpotent);
  CHECK_FALSE(zmod_classify(12, 4).nilpotent);
  CHECK(euler_phi(30) == 8);
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("ring axioms on random rationals") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto a = Scalar::rational(random_rational(rng, false));
    const auto b = Scalar::rational(random_rational(rng, false));
    const auto c = Scalar::rational(random_rational(rng, false));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("scalar literals round-trip through JSON") {
  CHECK(scalar_to_json(q(3, 4)) == "3/4");
  CHECK(scalar_from_json(json("-5/10"), ScalarDomain::rational()) == q(-1, 2));
  CHECK(scalar_from_json(json(3), ScalarDomain::rational()) == q(3));
  CHECK(scalar_from_json(json(29), ScalarDomain::zmod(30)).residue() == 29);
  CHECK_THROWS_AS(scalar_from_json(json(-1), ScalarDomain::zmod(30)), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json(30), ScalarDomain::zmod(30)), ParseError);
  CHECK(scalar_to_json(Scalar::complex({1.5, -2})) == json::array({1.5, -2.0}));
  CHECK_THROWS_AS(scalar_from_json(json("1/0"), ScalarDomain::rational()), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json("abc"), ScalarDomain::rational()), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json::array({1}), ScalarDomain::complex()), ParseError);
}

TEST_CASE("canonical dump prints 17 significant digits and sorted keys") {
  const json j = {{"b", 0.1}, {"a", 1.0 / 3.0}};
  CHECK(canonical_dump(j) == "{\"a\":0.33333333333333331,\"b\":0.10000000000000001}");
}
