#include <doctest.h>

#include "cayley/forms.hpp"
#include "cayley/spheres.hpp"

using namespace cayley;

namespace {
ImVector v(int i) { return ImVector::basis(i); }
Poly7 c1() { return Poly7::constant(Rational(1)); }
} // namespace

TEST_CASE("mask helpers") {
  CHECK(mask_degree(mask_of({1, 2, 3})) == 3);
  CHECK(wedge_sign(mask_of({1}), mask_of({2})) == 1);
  CHECK(wedge_sign(mask_of({2}), mask_of({1})) == -1);
  CHECK(wedge_sign(mask_of({1, 2}), mask_of({1})) == 0);
  CHECK(wedge_sign(mask_of({1, 4, 5}), mask_of({2, 3, 6, 7})) == 1);
  MaskLexLess less;
  CHECK(less(mask_of({1, 2, 3}), mask_of({1, 2, 4})));
  CHECK(less(mask_of({1, 7}), mask_of({2, 3})));
  CHECK(!less(mask_of({2, 3}), mask_of({1, 7})));
}

TEST_CASE("wedge") {
  const PolyForm dx1 = PolyForm::monomial({1}, Rational(1));
  const PolyForm dx2 = PolyForm::monomial({2}, Rational(1));
  CHECK(wedge(dx1, dx2) == PolyForm::monomial({1, 2}, Rational(1)));
  CHECK(wedge(dx1, dx1).is_zero());
  // (x1 dx2) ^ dx3 = x1 w23
  const PolyForm a = PolyForm::monomial({2}, Poly7::variable(1));
  CHECK(wedge(a, PolyForm::monomial({3}, Rational(1))) ==
        PolyForm::monomial({2, 3}, Poly7::variable(1)));
  // Graded commutativity.
  const PolyForm w12 = PolyForm::monomial({1, 2}, Rational(1));
  const PolyForm w34 = PolyForm::monomial({3, 4}, Rational(1));
  CHECK(wedge(w12, w34) == wedge(w34, w12));
  CHECK(wedge(dx1, w34) == wedge(w34, dx1));
  CHECK_THROWS_AS(wedge(cayley_four_form(), cayley_four_form()), std::invalid_argument);
}

TEST_CASE("exterior derivative") {
  CHECK(exterior_d(PolyForm::monomial({2}, Poly7::variable(1))) ==
        PolyForm::monomial({1, 2}, Rational(1)));
  CHECK(exterior_d(cayley_three_form()).is_zero());
  const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
  CHECK(exterior_d(omega) == cayley_three_form() * Rational(3));
  CHECK_THROWS_AS(exterior_d(volume_form()), std::invalid_argument);
}

TEST_CASE("interior product") {
  const PolyForm w123 = PolyForm::monomial({1, 2, 3}, Rational(1));
  CHECK(interior(PolyVectorField::constant(v(1)), w123) ==
        PolyForm::monomial({2, 3}, Rational(1)));
  CHECK(interior(PolyVectorField::constant(v(4)), w123).is_zero());
  CHECK_THROWS_AS(interior(PolyVectorField::radial(), PolyForm::scalar(c1())),
                  std::invalid_argument);
  // iota_n Omega at the basepoint e1 equals omega there.
  const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
  Rational7 e1{};
  e1[0] = 1;
  const std::array<ImVector, 2> args{v(2), v(3)};
  CHECK(form_value(omega, e1, args) == metric(v(1), cross(v(2), v(3))));
}

TEST_CASE("lie derivative along the radial field") {
  const PolyVectorField n = PolyVectorField::radial();
  CHECK(lie_derivative(n, cayley_three_form()) == cayley_three_form() * Rational(3));
  CHECK(lie_derivative(n, cayley_four_form()) == cayley_four_form() * Rational(4));
  CHECK(lie_derivative(n, PolyForm::scalar(Poly7::constant(Rational(5)))).is_zero());
}

TEST_CASE("ambient hodge star") {
  CHECK(hodge_ambient(cayley_three_form()) == cayley_four_form());
  CHECK(hodge_ambient(cayley_four_form()) == cayley_three_form());
  // * mu = +1: the metric has three pluses and four minuses, so the squared
  // volume sign is (+1)^3 (-1)^4 = +1.
  CHECK(hodge_ambient(volume_form()) == PolyForm::scalar(c1()));
  CHECK(hodge_ambient(PolyForm::scalar(c1())) == volume_form());
  SubstreamRng rng(3, 7);
  for (int t = 0; t < 40; ++t) {
    const int k = static_cast<int>(rng.int_in(0, 7));
    const PolyForm a = random_polyform(k, 1, rng);
    const PolyForm b = random_polyform(k, 1, rng);
    PolyForm expected(7);
    expected.add_term(mask_of({1, 2, 3, 4, 5, 6, 7}), form_metric(b, a));
    CHECK(wedge(b, hodge_ambient(a)) == expected);
    CHECK(hodge_ambient(hodge_ambient(a)) == a);
  }
}

TEST_CASE("restriction decomposition") {
  const SpherePoint x = SpherePoint::make(SphereKind::S24, v(1));
  const TangentFrame frame = tangent_frame(x);

  // The normal covector has no tangential part.
  const FrameRestriction nstar = restrict_form(normal_covector(frame), frame);
  CHECK(nstar.tangential.is_zero());
  CHECK(nstar.normal.value(0) == 1);

  // Omega restricted at e1: the surviving coefficient table, e.g.
  // Omega(e2,e4,e6) = -1 (frame slots 1,3,5).
  const FrameRestriction omega_parts = restrict_form(cayley_three_form(), frame);
  CHECK(omega_parts.tangential.value(mask_of({1, 3, 5})) == -1);
  CHECK(omega_parts.tangential.value(mask_of({1, 4, 6})) == -1);  // -w257
  CHECK(omega_parts.tangential.value(mask_of({2, 3, 6})) == -1);  // -w347
  CHECK(omega_parts.tangential.value(mask_of({2, 4, 5})) == 1);   // +w356
  CHECK(omega_parts.tangential.value(mask_of({1, 2, 3})) == 0);

  // Constant 0-form restricts to itself.
  const FrameRestriction scalar_parts = restrict_form(PolyForm::scalar(c1()), frame);
  CHECK(scalar_parts.tangential.value(0) == 1);
}

TEST_CASE("restriction at the s33 basepoint") {
  // Frame at e4 is (e1,e2,e3,e5,e6,e7).
  const SpherePoint x = SpherePoint::make(SphereKind::S33, v(4));
  const TangentFrame frame = tangent_frame(x);

  // Omega|_S at e4: w123 + w167 - w257 + w356 in ambient indices.
  const TangentForm omega3 = restrict_form(cayley_three_form(), frame).tangential;
  CHECK(omega3.value(mask_of({1, 2, 3})) == 1);
  CHECK(omega3.value(mask_of({1, 5, 6})) == 1);   // w167
  CHECK(omega3.value(mask_of({2, 4, 6})) == -1);  // -w257
  CHECK(omega3.value(mask_of({3, 4, 5})) == 1);   // +w356
  CHECK(omega3.values().size() == 4);

  // omega = iota_n Omega at e4: w15 + w26 + w37 in ambient indices.
  const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
  const TangentForm omega_s = restrict_form(omega, frame).tangential;
  CHECK(omega_s.value(mask_of({1, 4})) == 1);
  CHECK(omega_s.value(mask_of({2, 5})) == 1);
  CHECK(omega_s.value(mask_of({3, 6})) == 1);
  CHECK(omega_s.values().size() == 3);
}

TEST_CASE("restricted hodge star at the s24 basepoint") {
  const SpherePoint x = SpherePoint::make(SphereKind::S24, v(1));
  const TangentFrame frame = tangent_frame(x);
  const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
  const TangentForm omega_s = restrict_form(omega, frame).tangential;

  // *_S omega = Psi|_S.
  CHECK(hodge_sphere(omega_s, frame) == restrict_form(cayley_four_form(), frame).tangential);

  // *_S d omega = -3 iota_n Psi.
  const TangentForm domega_s = restrict_form(exterior_d(omega), frame).tangential;
  const PolyForm iota_n_psi = interior(PolyVectorField::radial(), cayley_four_form());
  CHECK(hodge_sphere(domega_s, frame) ==
        restrict_form(iota_n_psi * Rational(-3), frame).tangential);
}

TEST_CASE("restricted hodge star routes agree at random points") {
  SubstreamRng rng(21, 0);
  for (int t = 0; t < 30; ++t) {
    const SphereKind kind = t % 2 == 0 ? SphereKind::S24 : SphereKind::S33;
    const SpherePoint x = random_point(kind, rng);
    const TangentFrame frame = tangent_frame(x);
    const int k = static_cast<int>(rng.int_in(0, 6));
    const TangentForm a = restrict_form(random_polyform(k, 1, rng), frame).tangential;
    CHECK(hodge_sphere(a, frame) == hodge_sphere_via_ambient(a, frame));
    int sign = (k * (6 - k)) % 2 == 0 ? 1 : -1;
    if (kind == SphereKind::S33) sign = -sign;
    CHECK(hodge_sphere(hodge_sphere(a, frame), frame) == a * Rational(sign));
  }
}

TEST_CASE("tangent frame validation") {
  const SpherePoint x = SpherePoint::make(SphereKind::S24, v(1));
  const TangentFrame frame = tangent_frame(x);
  CHECK(frame.normal_square == 1);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const Rational expected = i == j ? (i < 2 ? Rational(1) : Rational(-1)) : Rational(0);
      CHECK(frame.gram(i, j) == expected);
    }
  }
  // Degenerate frames are rejected.
  std::array<ImVector, 6> bad;
  for (auto& b : bad) b = v(2);
  CHECK_THROWS_AS(TangentFrame::make(v(1), bad), std::invalid_argument);
}

TEST_CASE("form degree bookkeeping") {
  CHECK_THROWS_AS(PolyForm(8), std::invalid_argument);
  PolyForm f(2);
  CHECK_THROWS_AS(f.add_term(mask_of({1}), c1()), std::invalid_argument);
  const PolyForm zero3(3);
  CHECK(zero3.is_zero());
  CHECK((cayley_three_form() - cayley_three_form()).is_zero());
}
