#include <doctest.h>

#include "cayley/r8.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

namespace {
SplitOctonion e(int i) { return SplitOctonion::basis(i); }
R8Point plus_e1() { return R8Point::make(Rational(1, 2), ImVector::basis(1), R8Region::plus); }
R8Point minus_e4() { return R8Point::make(Rational(0), ImVector::basis(4), R8Region::minus); }
} // namespace

TEST_CASE("region validation") {
  CHECK_THROWS_AS(R8Point::make(Rational(0), ImVector::basis(1) + ImVector::basis(4),
                                R8Region::plus),
                  std::invalid_argument);  // null cone
  CHECK_THROWS_AS(R8Point::make(Rational(0), ImVector::basis(4), R8Region::plus),
                  std::invalid_argument);  // wrong sign
  CHECK_THROWS_AS(R8Point::make(Rational(0), ImVector::basis(1), R8Region::minus),
                  std::invalid_argument);
}

TEST_CASE("unit normal field") {
  CHECK(n2_field(plus_e1()) == e(1));
  CHECK(n2_field(minus_e4()) == e(4));
  // N0 = 25 is a perfect square.
  const R8Point u = R8Point::make(
      Rational(0), Rational(3) * ImVector::basis(1) + Rational(4) * ImVector::basis(2),
      R8Region::plus);
  CHECK(n2_field(u) == Rational(3, 5) * e(1) + Rational(4, 5) * e(2));
  // N0 = 2 is not a square: the exact path refuses.
  const R8Point bad = R8Point::make(Rational(0), ImVector::basis(1) + ImVector::basis(2),
                                    R8Region::plus);
  CHECK_THROWS_AS(n2_field(bad), std::domain_error);
}

TEST_CASE("structure squares per region") {
  const R8Point up = plus_e1();
  CHECK(structure8_apply(up, SplitOctonion::one()) == e(1));
  CHECK(structure8_apply(up, structure8_apply(up, SplitOctonion::one())) ==
        -SplitOctonion::one());
  CHECK(structure8_apply(up, e(2)) == e(3));

  const R8Point um = minus_e4();
  CHECK(structure8_apply(um, SplitOctonion::one()) == e(4));
  CHECK(structure8_apply(um, structure8_apply(um, SplitOctonion::one())) ==
        SplitOctonion::one());

  SubstreamRng rng(3, 0);
  for (int t = 0; t < 20; ++t) {
    const SplitOctonion y = random_octonion(rng);
    CHECK(structure8_apply(up, structure8_apply(up, y)) == -y);
    CHECK(structure8_apply(um, structure8_apply(um, y)) == y);
  }
}

TEST_CASE("fundamental form on r8") {
  const R8Point u = plus_e1();
  CHECK(omega8(u, SplitOctonion::one(), e(1)) == 1);
  CHECK(omega8(u, e(2), e(3)) == 1);
  SubstreamRng rng(5, 0);
  for (int t = 0; t < 20; ++t) {
    const SplitOctonion y = random_octonion(rng);
    const SplitOctonion z = random_octonion(rng);
    CHECK(omega8(u, y, z) == inner(structure8_apply(u, y), z));
    CHECK(omega8(u, y, y) == 0);
    CHECK(omega8(u, y, z) == -omega8(u, z, y));
  }
}

TEST_CASE("structure derivative") {
  const R8Point u = plus_e1();
  SubstreamRng rng(7, 0);
  const SplitOctonion y = random_octonion(rng);
  CHECK(dstructure8(u, e(2), y) == mul(e(2), y));
  CHECK(dstructure8(u, e(1), y).is_zero());                 // radial direction
  CHECK(dstructure8(u, SplitOctonion::one(), y).is_zero()); // along e0
  // The projection term follows <n2,n2> on the minus region: the radial
  // derivative must vanish there too.
  const R8Point um = minus_e4();
  CHECK(dstructure8(um, e(4), y).is_zero());
  CHECK(dstructure8(um, e(1), y) == mul(e(1), y));
}

TEST_CASE("exterior differential of omega8") {
  SubstreamRng rng(11, 0);
  for (int t = 0; t < 15; ++t) {
    const R8Region region = t % 2 ? R8Region::minus : R8Region::plus;
    const ImVector w = random_point(
                           region == R8Region::plus ? SphereKind::S24 : SphereKind::S33, rng)
                           .coords;
    const Rational s = rng.nonzero_rational(4, 2);
    const R8Point u = R8Point::make(rng.rational(), s * s * w, region);
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    const SplitOctonion z = random_octonion(rng);
    CHECK(domega8(u, x, y, z) == domega8_expansion(u, x, y, z));
    CHECK(domega8(u, x, x, z) == 0);
    CHECK(domega8(u, x, y, z) == -domega8(u, y, x, z));
    // Real octonions annihilate the formula.
    CHECK(domega8(u, SplitOctonion::one(), SplitOctonion::scalar(Rational(2)),
                  SplitOctonion::scalar(Rational(-1))) == 0);
  }
}

TEST_CASE("nijenhuis on r8 regions") {
  SubstreamRng rng(13, 0);
  const R8Point u = plus_e1();
  const SplitOctonion x = random_octonion(rng);
  const SplitOctonion y = random_octonion(rng);
  CHECK(nijenhuis8(u, x, x).is_zero());
  CHECK(nijenhuis8(u, x, y) == -nijenhuis8(u, y, x));
  // Non-integrability witness.
  CHECK(!nijenhuis8(u, e(2), e(4)).is_zero());
}

TEST_CASE("r8 suite passes") {
  const VerificationReport r = r8_suite(20, 3);
  for (const auto& c : r.checks) {
    INFO(c.id, ": ", c.statement);
    CHECK(c.pass);
  }
}
