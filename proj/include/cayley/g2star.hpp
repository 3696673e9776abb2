#pragma once

#include "cayley/linalg.hpp"
#include "cayley/quadext.hpp"
#include "cayley/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace cayley {

/// The 14-parameter Lie algebra g2* realized as 7x7 matrices over Q(sqrt2)
/// in the null-adapted basis of the quadratic form
/// g = -2(e^1 e^5 + e^2 e^6 + e^3 e^7) - (e^4)^2. This basis is self
/// contained and is not identified with the orthonormal basis used by the
/// rest of the kernel (no such identification is provided).
struct G2Element {
  std::array<Rational, 14> params;
  Mat<QuadExt> matrix;  // 7x7
};

/// The Gram matrix of the null-adapted quadratic form above.
Mat<Rational> null_metric();

/// Components of the stabilized 3-form
/// Omega0 = sqrt2 (e^123 - e^567) + e^4 ^ (e^15 + e^26 + e^37),
/// keyed by ascending index triples.
using QuadForm3 = std::map<std::array<int, 3>, QuadExt>;
QuadForm3 omega0();

/// Builds the block-form generator matrix; linear in the parameters.
G2Element build_element(const std::array<Rational, 14>& a);

/// (A . W)(x,y,z) = W(Ax,y,z) + W(x,Ay,z) + W(x,y,Az) for a 3-form W;
/// zero iff A infinitesimally stabilizes W.
QuadForm3 derivation_action(const Mat<QuadExt>& a, const QuadForm3& w);

bool form3_is_zero(const QuadForm3& w);

/// True iff A^T G + G A = 0 exactly.
bool is_metric_skew(const Mat<QuadExt>& a, const Mat<Rational>& g);

/// Solves build_element(c) = [build_element(a), build_element(b)] exactly.
/// Returns the parameters when the bracket closes; nullopt (with the
/// residual left to the caller via matrices) must not occur for g2*.
std::optional<std::array<Rational, 14>> bracket_closure(const std::array<Rational, 14>& a,
                                                        const std::array<Rational, 14>& b);

Mat<QuadExt> bracket(const Mat<QuadExt>& a, const Mat<QuadExt>& b);

/// Exact dimension of {A : A.Omega0 = 0, A^T G + G A = 0} over Q(sqrt2),
/// together with a basis of solutions (as 7x7 matrices).
struct StabilizerSolution {
  std::size_t dimension;
  std::vector<Mat<QuadExt>> basis;
};
StabilizerSolution solve_stabilizer();

/// True iff the solution basis and the 14-generator parametrization span
/// the same space (rank test over Q(sqrt2)).
bool spans_match(const StabilizerSolution& solution);

} // namespace cayley
