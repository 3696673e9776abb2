#pragma once

#include "cayley/forms.hpp"
#include "cayley/imvector.hpp"
#include "cayley/report.hpp"
#include "cayley/rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// The two unit pseudospheres in R^{3,4}: S^{2,4} = {g(x,x) = +1} carries
/// the almost complex Cayley structure J, S^{3,3} = {g(x,x) = -1} the
/// almost para-complex structure P; both act as Y -> n(x) x Y.
enum class SphereKind { S24, S33 };

/// g(n,n) on the sphere: +1 for S24, -1 for S33.
Rational normal_square(SphereKind kind);
std::string kind_name(SphereKind kind);
SphereKind kind_from_name(const std::string& name);

struct SpherePoint {
  SphereKind kind;
  ImVector coords;

  /// Validates g(x,x) = normal_square(kind) exactly.
  static SpherePoint make(SphereKind kind, ImVector coords);
  const ImVector& normal() const { return coords; }
};

/// Second intersection of the line {seed + s dir} with the quadric; nullopt
/// when the line is tangent (no second rational point distinct from seed).
std::optional<SpherePoint> sample_point(const SpherePoint& seed, const ImVector& direction);

/// Rational point with small coordinates, by random secants from the axis
/// basepoint (e1 or e4).
SpherePoint random_point(SphereKind kind, SubstreamRng& rng);

/// Rational tangent vector at x (solves g(x,Y) = 0 exactly).
ImVector random_tangent(const SpherePoint& x, SubstreamRng& rng);

bool is_tangent(const SpherePoint& x, const ImVector& y);

/// Orthogonal projection of R^{3,4} onto the tangent space at x.
ImVector tangent_project(const SpherePoint& x, const ImVector& z);

/// Six rational vectors spanning x^perp, with their exact Gram matrix.
TangentFrame tangent_frame(const SpherePoint& x);

/// J_x(Y) (S24) or P_x(Y) (S33): n(x) x Y. Rejects non-tangent input.
ImVector structure_apply(const SpherePoint& x, const ImVector& y);

/// omega(X,Y) = g(n x X, Y) = g(n, X x Y).
Rational fundamental_form(const SpherePoint& x, const ImVector& a, const ImVector& b);

/// (nabla_X J)Y = X x Y - omega(X,Y) n on S24, and the P analogue
/// X x Y + omega(X,Y) n on S33 (one formula through g(n,n)).
ImVector nabla_structure(const SpherePoint& x, const ImVector& a, const ImVector& b);

/// Nijenhuis tensor, computed along two independent routes that must agree:
/// the nabla expansion of the bracket definition and the closed form
/// -8 n x (X x Y).
struct NijenhuisValue {
  ImVector expansion;
  ImVector closed_form;
};
NijenhuisValue nijenhuis(const SpherePoint& x, const ImVector& a, const ImVector& b);

/// Hitchin operator of d(omega) = 3 Omega|_S: solves
/// iota_{K(X)} mu_S = iota_X d(omega) ^ d(omega) on the tangent space.
ImVector hitchin_K(const SpherePoint& x, const ImVector& a);

/// (delta d omega)(X,Y) through the proof chain: pointwise restricted Hodge
/// stars, the global polynomial identity d(iota_n Psi) = 4 Psi, and the
/// codifferential sign (-1)^{kn+n+1+eta}. Equals 12 omega on S24 and
/// -12 omega on S33.
Rational laplacian_check(const SpherePoint& x, const ImVector& a, const ImVector& b);

/// delta omega (X): co-closedness chain; identically zero.
Rational delta_omega(const SpherePoint& x, const ImVector& a);

/// Evaluates the identities tying omega, d omega, Omega, Psi and the
/// restricted Hodge star together at one point, on random tangent triples. Sign-sensitive identities are
/// resolved per sphere and the resolution is recorded in the check
/// statements.
VerificationReport fundamental_form_suite(const SpherePoint& x, int trials, std::uint64_t seed);

/// Stereographic image: head = (y1,y2,y3), tail = (y4..y7). On S24 the head
/// lies on S^2 and the tail in the open D^4; on S33 the head lies in the
/// open D^3 and the tail on S^3.
struct StereoImage {
  SphereKind kind;
  std::array<Rational, 3> head;
  std::array<Rational, 4> tail;
};

/// Exact path; nullopt when the factor radicand is not a rational square.
std::optional<StereoImage> stereographic_exact(const SpherePoint& x);

/// Exact inverse; nullopt when 1/(1 - |ball|^2) is not a rational square.
/// Throws when the ball point is not inside the unit ball or the factor
/// point is off its unit sphere.
std::optional<SpherePoint> stereographic_inverse_exact(const StereoImage& image);

struct StereoImageD {
  std::array<double, 3> head;
  std::array<double, 4> tail;
};
StereoImageD stereographic_d(const std::array<double, 7>& x, SphereKind kind);
std::array<double, 7> stereographic_inverse_d(const StereoImageD& image, SphereKind kind);

/// Pullback of the product structure on S^2 x D^4 (rotation on the sphere
/// factor, a fixed orthogonal complex structure on the ball) resp. the
/// +-Id split on D^3 x S^3, through the stereographic diffeomorphism.
/// Float path; y must be tangent at x.
std::array<double, 7> product_structure_pullback(const std::array<double, 7>& x,
                                                 const std::array<double, 7>& y,
                                                 SphereKind kind);

/// Point-list file: header line "S24" or "S33", then one point per line as
/// seven comma-separated exact rationals.
std::vector<SpherePoint> load_point_list(const std::string& path);
void save_point_list(const std::vector<SpherePoint>& points, const std::string& path);

} // namespace cayley
