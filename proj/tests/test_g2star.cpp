#include <doctest.h>

#include "cayley/g2star.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

TEST_CASE("null metric layout") {
  const Mat<Rational> g = null_metric();
  CHECK(g(0, 4) == -1);
  CHECK(g(4, 0) == -1);
  CHECK(g(1, 5) == -1);
  CHECK(g(2, 6) == -1);
  CHECK(g(3, 3) == -1);
  CHECK(g(0, 0) == 0);
  CHECK(g == g.transposed());
}

TEST_CASE("build_element patterns") {
  CHECK(build_element({}).matrix.is_zero());

  std::array<Rational, 14> a9{};
  a9[8] = 1;
  const auto m9 = build_element(a9).matrix;
  CHECK(m9(1, 6) == QuadExt(-1));
  CHECK(m9(2, 5) == QuadExt(1));
  CHECK(m9(3, 0) == QuadExt(Rational(0), Rational(-1)));
  CHECK(m9(4, 3) == QuadExt(Rational(0), Rational(1)));
  int nonzero = 0;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (!(m9(i, j) == QuadExt(0))) ++nonzero;
    }
  }
  CHECK(nonzero == 4);

  std::array<Rational, 14> a1{};
  a1[0] = 1;
  const auto m1 = build_element(a1).matrix;
  CHECK(m1(0, 0) == QuadExt(-1));
  CHECK(m1(1, 1) == QuadExt(1));
  CHECK(m1(4, 4) == QuadExt(1));
  CHECK(m1(5, 5) == QuadExt(-1));
  CHECK(m1(2, 2) == QuadExt(0));
}

TEST_CASE("generators stabilize omega0 and are metric skew") {
  const Mat<Rational> g = null_metric();
  const QuadForm3 w0 = omega0();
  for (int k = 0; k < 14; ++k) {
    std::array<Rational, 14> unit{};
    unit[k] = 1;
    const auto a = build_element(unit).matrix;
    CHECK(form3_is_zero(derivation_action(a, w0)));
    CHECK(is_metric_skew(a, g));
  }
  CHECK(is_metric_skew(Mat<QuadExt>(7, 7), g));
  CHECK(!is_metric_skew(Mat<QuadExt>::identity(7), g));

  Mat<QuadExt> e12(7, 7);
  e12(0, 1) = QuadExt(1);
  CHECK(!form3_is_zero(derivation_action(e12, w0)));
}

TEST_CASE("bracket closure") {
  std::array<Rational, 14> a{}, b{};
  a[8] = 1;   // a9
  b[11] = 1;  // a12
  const auto c = bracket_closure(a, b);
  REQUIRE(c.has_value());
  CHECK(build_element(*c).matrix == bracket(build_element(a).matrix, build_element(b).matrix));

  std::array<Rational, 14> a1{}, a5{};
  a1[0] = 1;
  a5[4] = 1;
  CHECK(bracket_closure(a1, a5).has_value());
  CHECK(bracket_closure(a, a) == std::array<Rational, 14>{});

  bool all_pairs = true;
  for (int i = 0; i < 14 && all_pairs; ++i) {
    for (int j = i + 1; j < 14 && all_pairs; ++j) {
      std::array<Rational, 14> u{}, w{};
      u[i] = 1;
      w[j] = 1;
      all_pairs = bracket_closure(u, w).has_value();
    }
  }
  CHECK(all_pairs);
}

TEST_CASE("jacobi identity on random parameter triples") {
  SubstreamRng rng(31, 0);
  for (int t = 0; t < 10; ++t) {
    std::array<Rational, 14> pa, pb, pc;
    for (auto& v : pa) v = rng.rational(3, 2);
    for (auto& v : pb) v = rng.rational(3, 2);
    for (auto& v : pc) v = rng.rational(3, 2);
    const auto a = build_element(pa).matrix;
    const auto b = build_element(pb).matrix;
    const auto c = build_element(pc).matrix;
    CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b))
              .is_zero());
  }
}

TEST_CASE("stabilizer dimension is fourteen") {
  const StabilizerSolution sol = solve_stabilizer();
  CHECK(sol.dimension == 14);
  CHECK(spans_match(sol));
  const Mat<Rational> g = null_metric();
  const QuadForm3 w0 = omega0();
  for (const auto& m : sol.basis) {
    CHECK(form3_is_zero(derivation_action(m, w0)));
    CHECK(is_metric_skew(m, g));
  }
}

TEST_CASE("g2star suite passes") {
  const VerificationReport r = g2star_suite(10, 1);
  for (const auto& c : r.checks) {
    INFO(c.id, ": ", c.statement);
    CHECK(c.pass);
  }
}
