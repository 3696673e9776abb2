#include <doctest.h>

#include "cayley/octonion.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

namespace {
SplitOctonion e(int i) { return SplitOctonion::basis(i); }
} // namespace

TEST_CASE("multiplication table entries") {
  CHECK(mul(e(1), e(2)) == e(3));
  CHECK(mul(e(4), e(5)) == -e(1));
  CHECK(mul(e(1), e(4)) == e(5));
  CHECK(mul(e(2), e(4)) == e(6));
  CHECK(mul(e(3), e(4)) == e(7));
  CHECK(mul(e(6), e(7)) == e(1));
  CHECK(mul(e(7), e(6)) == -e(1));
  for (int i = 1; i <= 3; ++i) CHECK(mul(e(i), e(i)) == SplitOctonion::scalar(Rational(-1)));
  for (int j = 4; j <= 7; ++j) CHECK(mul(e(j), e(j)) == SplitOctonion::one());
}

TEST_CASE("unit is two-sided identity") {
  SubstreamRng rng(0, 0);
  const SplitOctonion x = random_octonion(rng);
  CHECK(mul(SplitOctonion::one(), x) == x);
  CHECK(mul(x, SplitOctonion::one()) == x);
}

TEST_CASE("cayley-dickson reproduces the table") {
  for (int i = 0; i <= 7; ++i) {
    for (int j = 0; j <= 7; ++j) {
      CHECK(mul(e(i), e(j)) == mul_cayley_dickson(e(i), e(j)));
    }
  }
  SubstreamRng rng(5, 0);
  for (int t = 0; t < 50; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    CHECK(mul(x, y) == mul_cayley_dickson(x, y));
  }
}

TEST_CASE("conjugation") {
  CHECK(conj(SplitOctonion::one()) == SplitOctonion::one());
  CHECK(conj(e(5)) == -e(5));
  SubstreamRng rng(9, 0);
  for (int t = 0; t < 30; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
    CHECK(conj(conj(x)) == x);
  }
}

TEST_CASE("norm form of signature (4,4)") {
  CHECK(norm(e(1)) == 1);
  CHECK(norm(e(4)) == -1);
  CHECK(norm(SplitOctonion::one() + e(1) + e(4)) == 1);
  SubstreamRng rng(13, 0);
  for (int t = 0; t < 30; ++t) {
    const SplitOctonion x = random_octonion(rng);
    CHECK(mul(x, conj(x)) == SplitOctonion::scalar(norm(x)));
  }
}

TEST_CASE("scalar product by polarization") {
  CHECK(inner(e(1), e(2)) == 0);
  CHECK(inner(e(4), e(4)) == -1);
  CHECK(inner(SplitOctonion::one() + e(4), SplitOctonion::one() - e(4)) == 2);
  SubstreamRng rng(17, 0);
  for (int t = 0; t < 30; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    CHECK(2 * inner(x, y) == norm(x + y) - norm(x) - norm(y));
    CHECK(inner(x, x) == norm(x));
    CHECK(inner(x, y) == inner(y, x));
  }
}

TEST_CASE("associator") {
  CHECK(associator(e(1), e(2), e(4)) == Rational(2) * e(7));
  SubstreamRng rng(19, 0);
  for (int t = 0; t < 30; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    const SplitOctonion z = random_octonion(rng);
    CHECK(associator(x, x, y).is_zero());
    CHECK(associator(x, y, y).is_zero());
    CHECK(associator(SplitOctonion::one(), y, z).is_zero());
    CHECK(associator(x, y, z) == -associator(y, x, z));
    CHECK(associator(x, y, z) == -associator(x, z, y));
  }
}

TEST_CASE("commutator is purely imaginary") {
  SubstreamRng rng(29, 0);
  for (int t = 0; t < 20; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    CHECK(commutator(x, y).real_part() == 0);
    CHECK(commutator(x, y) == -commutator(y, x));
    CHECK(commutator(x, x).is_zero());
  }
}

TEST_CASE("composition law with null octonions") {
  const SplitOctonion null = SplitOctonion::one() + e(4);
  CHECK(norm(null) == 0);
  SubstreamRng rng(23, 0);
  for (int t = 0; t < 30; ++t) {
    const SplitOctonion y = random_octonion(rng);
    CHECK(norm(mul(null, y)) == 0);
    const SplitOctonion x = random_null_octonion(rng);
    CHECK(norm(x) == 0);
    CHECK(norm(mul(x, y)) == norm(x) * norm(y));
  }
}

TEST_CASE("identity suite all pass") {
  const VerificationReport r = identity_suite(25, 0);
  CHECK(r.all_pass());
  CHECK(r.checks.size() >= 14);
  const VerificationReport r1 = identity_suite(1, 0);
  CHECK(r1.all_pass());
  CHECK_THROWS_AS(identity_suite(0, 0), std::invalid_argument);
}

TEST_CASE("octonion string form") {
  CHECK((SplitOctonion::one() + Rational(2) * e(4)).str() == "1+2*e4");
  CHECK((-e(3)).str() == "-e3");
  CHECK(SplitOctonion().str() == "0");
}
