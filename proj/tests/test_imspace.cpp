#include <doctest.h>

#include "cayley/forms.hpp"
#include "cayley/imvector.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

namespace {
ImVector v(int i) { return ImVector::basis(i); }
} // namespace

TEST_CASE("metric of signature (3,4)") {
  CHECK(metric(v(1), v(1)) == 1);
  CHECK(metric(v(7), v(7)) == -1);
  CHECK(metric(v(1), v(4)) == 0);
}

TEST_CASE("cross product basics") {
  CHECK(cross(v(1), v(2)) == v(3));
  CHECK(cross(v(4), v(5)) == -v(1));
  CHECK(cross(v(4), v(1)) == -v(5));
  SubstreamRng rng(1, 0);
  for (int t = 0; t < 30; ++t) {
    const ImVector x = random_imvector(rng);
    const ImVector y = random_imvector(rng);
    CHECK(cross(x, x).is_zero());
    CHECK(cross(x, y) == -cross(y, x));
    CHECK(metric(cross(x, y), x) == 0);
    CHECK(metric(cross(x, y), y) == 0);
    // 2-fold cross product axiom, a consequence of the composition law.
    CHECK(metric(cross(x, y), cross(x, y)) ==
          metric(x, x) * metric(y, y) - metric(x, y) * metric(x, y));
  }
}

TEST_CASE("scalar triple product") {
  CHECK(triple(v(1), v(2), v(3)) == 1);
  CHECK(triple(v(1), v(4), v(5)) == -1);
  CHECK(triple(v(1), v(2), v(4)) == 0);
  SubstreamRng rng(2, 0);
  for (int t = 0; t < 20; ++t) {
    const ImVector x = random_imvector(rng), y = random_imvector(rng), z = random_imvector(rng);
    CHECK(triple(x, y, z) == -triple(y, x, z));
    CHECK(triple(x, y, z) == -triple(x, z, y));
    CHECK(triple(x, y, z) == metric(x, cross(y, z)));
  }
}

TEST_CASE("four form") {
  CHECK(four_form(v(4), v(5), v(6), v(7)) == 1);
  CHECK(four_form(v(1), v(3), v(5), v(7)) == -1);
  CHECK(four_form(v(1), v(2), v(3), v(4)) == 0);
  // On pairwise-orthogonal arguments both double-cross displays are exact.
  CHECK(four_form(v(4), v(5), v(6), v(7)) == metric(v(4), cross(cross(v(5), v(6)), v(7))));
  CHECK(four_form(v(4), v(5), v(6), v(7)) == -metric(v(4), cross(v(5), cross(v(6), v(7)))));
  SubstreamRng rng(3, 0);
  for (int t = 0; t < 20; ++t) {
    const ImVector x = random_imvector(rng), y = random_imvector(rng);
    const ImVector z = random_imvector(rng), w = random_imvector(rng);
    // Independent route through the octonion associator.
    CHECK(Rational(2) * four_form(x, y, z, w) ==
          inner(x.to_octonion(),
                associator(y.to_octonion(), z.to_octonion(), w.to_octonion())));
    // The reversed display with its metric correction terms.
    CHECK(four_form(x, y, z, w) ==
          -metric(x, cross(y, cross(z, w))) + metric(y, w) * metric(x, z) -
              metric(y, z) * metric(x, w));
    CHECK(four_form(x, y, z, w) == -four_form(y, x, z, w));
    CHECK(four_form(x, y, z, w) == -four_form(x, z, y, w));
    CHECK(four_form(x, y, z, w) == -four_form(x, y, w, z));
    CHECK(four_form(x, x, z, w) == 0);
  }
}

TEST_CASE("expansions match the coefficient tables on basis tuples") {
  const PolyForm omega3 = cayley_three_form();
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        const std::array<ImVector, 3> args{v(i), v(j), v(k)};
        CHECK(triple(args[0], args[1], args[2]) == form_value(omega3, Rational7{}, args));
      }
    }
  }
  const PolyForm psi4 = cayley_four_form();
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        for (int l = k + 1; l <= 7; ++l) {
          const std::array<ImVector, 4> args{v(i), v(j), v(k), v(l)};
          CHECK(four_form(args[0], args[1], args[2], args[3]) ==
                form_value(psi4, Rational7{}, args));
        }
      }
    }
  }
}

TEST_CASE("associator via the cross product") {
  CHECK(assoc_via_cross(v(1), v(2), v(4)) == Rational(2) * SplitOctonion::basis(7));
  CHECK(assoc_via_cross(v(1), v(2), v(3)).is_zero());
  SubstreamRng rng(4, 0);
  for (int t = 0; t < 40; ++t) {
    const ImVector x = random_imvector(rng), y = random_imvector(rng), z = random_imvector(rng);
    CHECK(assoc_via_cross(x, x, y).is_zero());
    CHECK(associator(x.to_octonion(), y.to_octonion(), z.to_octonion()) ==
          assoc_via_cross(x, y, z));
  }
}

TEST_CASE("triple cross product") {
  SubstreamRng rng(6, 0);
  for (int t = 0; t < 40; ++t) {
    const SplitOctonion x = random_octonion(rng);
    const SplitOctonion y = random_octonion(rng);
    const SplitOctonion z = random_octonion(rng);
    const SplitOctonion p = triple_cross(x, y, z);
    CHECK(inner(p, x) == 0);
    CHECK(inner(p, y) == 0);
    CHECK(inner(p, z) == 0);
    Mat<Rational> gram(3, 3);
    const std::array<const SplitOctonion*, 3> args{&x, &y, &z};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) gram(i, j) = inner(*args[i], *args[j]);
    }
    CHECK(inner(p, p) == Rational(kTripleCrossNormSign) * determinant(gram));
  }
  // Degenerate Gram forces a null value.
  const SplitOctonion x = SplitOctonion::basis(1);
  const SplitOctonion z = SplitOctonion::basis(2);
  const SplitOctonion p = triple_cross(x, x, z);
  CHECK(p.is_zero());
}

TEST_CASE("double-cross identities for unit and anti-unit normals") {
  // n = e1, Z = e4: n x (n x Z) = -Z.
  CHECK(cross(v(1), cross(v(1), v(4))) == -v(4));
  // n = e4, Z = e1: n x (n x Z) = Z for g(n,n) = -1.
  CHECK(cross(v(4), cross(v(4), v(1))) == v(1));
  // n = e1, Y = Z = e2: (n x Y) x Z + n x (Y x Z) + g(Y,Z) n = 0.
  CHECK((cross(cross(v(1), v(2)), v(2)) + cross(v(1), cross(v(2), v(2))) + v(1)).is_zero());

  const VerificationReport r1 = n_identities(v(1), v(2) + v(4), v(6));
  CHECK(r1.all_pass());
  const VerificationReport r2 = n_identities(v(4), v(1), v(2) - v(7));
  CHECK(r2.all_pass());
  CHECK_THROWS_AS(n_identities(Rational(2) * v(1), v(2), v(3)), std::invalid_argument);
}

TEST_CASE("imspace suite passes") {
  const VerificationReport r = imspace_suite(30, 0);
  for (const auto& c : r.checks) {
    INFO(c.id, ": ", c.statement);
    CHECK(c.pass);
  }
}
