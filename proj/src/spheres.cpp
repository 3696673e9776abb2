#include "cayley/spheres.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cayley {

Rational normal_square(SphereKind kind) {
  return kind == SphereKind::S24 ? Rational(1) : Rational(-1);
}

std::string kind_name(SphereKind kind) { return kind == SphereKind::S24 ? "S24" : "S33"; }

SphereKind kind_from_name(const std::string& name) {
  if (name == "S24") return SphereKind::S24;
  if (name == "S33") return SphereKind::S33;
  throw std::invalid_argument("unknown sphere kind '" + name + "'");
}

SpherePoint SpherePoint::make(SphereKind kind, ImVector coords) {
  if (metric(coords, coords) != normal_square(kind)) {
    throw std::invalid_argument("point not on the unit " + kind_name(kind) + " quadric");
  }
  return SpherePoint{kind, std::move(coords)};
}

std::optional<SpherePoint> sample_point(const SpherePoint& seed, const ImVector& direction) {
  const Rational qd = metric(direction, direction);
  const Rational bd = metric(seed.coords, direction);
  if (qd != 0 && bd != 0) {
    const Rational s = Rational(-2) * bd / qd;
    return SpherePoint::make(seed.kind, seed.coords + s * direction);
  }
  if (qd == 0 && bd == 0 && !direction.is_zero()) {
    // Isotropic direction inside the tangent plane: the whole line lies on
    // the quadric, so any nonzero parameter gives a second point.
    return SpherePoint::make(seed.kind, seed.coords + direction);
  }
  return std::nullopt;  // tangent line with a double root at the seed
}

SpherePoint random_point(SphereKind kind, SubstreamRng& rng) {
  const SpherePoint seed =
      SpherePoint::make(kind, ImVector::basis(kind == SphereKind::S24 ? 1 : 4));
  for (;;) {
    const ImVector dir = random_imvector(rng);
    if (auto p = sample_point(seed, dir)) return *p;
  }
}

ImVector random_tangent(const SpherePoint& x, SubstreamRng& rng) {
  const Rational nn = normal_square(x.kind);
  for (;;) {
    const ImVector v = random_imvector(rng);
    ImVector y = v - (metric(x.coords, v) / nn) * x.coords;
    if (!y.is_zero()) return y;
  }
}

bool is_tangent(const SpherePoint& x, const ImVector& y) {
  return metric(x.coords, y) == 0;
}

ImVector tangent_project(const SpherePoint& x, const ImVector& z) {
  return z - (metric(x.coords, z) / normal_square(x.kind)) * x.coords;
}

namespace {

void require_tangent(const SpherePoint& x, const ImVector& y, const char* who) {
  if (!is_tangent(x, y)) {
    throw std::invalid_argument(std::string(who) + ": vector not tangent at the point");
  }
}

} // namespace

TangentFrame tangent_frame(const SpherePoint& x) {
  int pivot = 0;
  for (int i = 1; i <= 7; ++i) {
    if (x.coords.coeff(i) != 0) {
      pivot = i;
      break;
    }
  }
  const Rational gp = metric(x.coords, ImVector::basis(pivot));
  std::array<ImVector, 6> basis;
  int slot = 0;
  for (int i = 1; i <= 7; ++i) {
    if (i == pivot) continue;
    const Rational gi = metric(x.coords, ImVector::basis(i));
    basis[slot++] = ImVector::basis(i) - (gi / gp) * ImVector::basis(pivot);
  }
  return TangentFrame::make(x.coords, std::move(basis));
}

ImVector structure_apply(const SpherePoint& x, const ImVector& y) {
  require_tangent(x, y, "structure_apply");
  return cross(x.coords, y);
}

Rational fundamental_form(const SpherePoint& x, const ImVector& a, const ImVector& b) {
  require_tangent(x, a, "fundamental_form");
  require_tangent(x, b, "fundamental_form");
  return metric(x.coords, cross(a, b));
}

ImVector nabla_structure(const SpherePoint& x, const ImVector& a, const ImVector& b) {
  require_tangent(x, a, "nabla_structure");
  require_tangent(x, b, "nabla_structure");
  const ImVector xy = cross(a, b);
  return xy - (normal_square(x.kind) * metric(x.coords, xy)) * x.coords;
}

NijenhuisValue nijenhuis(const SpherePoint& x, const ImVector& a, const ImVector& b) {
  require_tangent(x, a, "nijenhuis");
  require_tangent(x, b, "nijenhuis");
  const ImVector sa = structure_apply(x, a);
  const ImVector sb = structure_apply(x, b);
  ImVector expansion = nabla_structure(x, sa, b) - nabla_structure(x, sb, a);
  expansion += structure_apply(x, nabla_structure(x, b, a));
  expansion -= structure_apply(x, nabla_structure(x, a, b));
  expansion *= Rational(2);
  const ImVector closed = Rational(-8) * cross(x.coords, cross(a, b));
  return NijenhuisValue{std::move(expansion), closed};
}

namespace {

// d(omega) = d iota_n Omega as a restricted tangent form, asserting the
// global polynomial identity d iota_n Omega = 3 Omega on the way.
TangentForm restricted_domega(const TangentFrame& frame) {
  static const PolyForm domega = [] {
    const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
    PolyForm d = exterior_d(omega);
    if (!(d == cayley_three_form() * Rational(3))) {
      throw std::logic_error("d iota_n Omega != 3 Omega");
    }
    return d;
  }();
  return restrict_form(domega, frame).tangential;
}

} // namespace

ImVector hitchin_K(const SpherePoint& x, const ImVector& a) {
  require_tangent(x, a, "hitchin_K");
  const TangentFrame frame = tangent_frame(x);
  const TangentForm domega = restricted_domega(frame);
  const TangentForm rhs = tangent_wedge(tangent_interior(frame_coords(frame, a), domega), domega);
  // iota_{K} mu_S = rhs: with mu_S = volume * b^{1..6}, the slot-j component
  // of K reads off the 5-tuple omitting j, with the sign of moving b_j in
  // front.
  ImVector k;
  constexpr Mask kFull6 = 0x3f;
  for (int j = 1; j <= 6; ++j) {
    const Mask rest = static_cast<Mask>(kFull6 & ~(1u << (j - 1)));
    Rational coeff = rhs.value(rest) / frame.volume;
    if (j % 2 == 0) coeff = -coeff;  // (-1)^{j-1}
    k += coeff * frame.basis[j - 1];
  }
  return k;
}

namespace {

// Codifferential sign (-1)^{kn+n+1+eta} on a 6-manifold: kn is even, so the
// sign is (-1)^{1+eta} for every k; eta = 4 on S24, 3 on S33.
Rational codifferential_sign(SphereKind kind) {
  return kind == SphereKind::S24 ? Rational(-1) : Rational(1);
}

} // namespace

Rational laplacian_check(const SpherePoint& x, const ImVector& a, const ImVector& b) {
  require_tangent(x, a, "laplacian_check");
  require_tangent(x, b, "laplacian_check");
  const TangentFrame frame = tangent_frame(x);
  const Rational eps = normal_square(x.kind);
  const PolyForm psi = cayley_four_form();
  const PolyVectorField n = PolyVectorField::radial();

  // *_S d omega, pointwise, with its ambient polynomial representative
  // -3 eps iota_n Psi verified at the point.
  const TangentForm star_domega = hodge_sphere(restricted_domega(frame), frame);
  const PolyForm representative = interior(n, psi) * (Rational(-3) * eps);
  if (!(star_domega == restrict_form(representative, frame).tangential)) {
    throw std::logic_error("pointwise *_S d omega disagrees with its ambient representative");
  }

  // d of the representative is a global polynomial computation:
  // d(-3 eps iota_n Psi) = -3 eps L_n Psi = -12 eps Psi.
  const PolyForm d_rep = exterior_d(representative);
  if (!(d_rep == psi * (Rational(-12) * eps))) {
    throw std::logic_error("d iota_n Psi != 4 Psi");
  }

  const TangentForm second_star = hodge_sphere(restrict_form(d_rep, frame).tangential, frame);
  const std::array<std::array<Rational, 6>, 2> coords{frame_coords(frame, a),
                                                      frame_coords(frame, b)};
  return codifferential_sign(x.kind) * tangent_form_value(second_star, coords);
}

Rational delta_omega(const SpherePoint& x, const ImVector& a) {
  require_tangent(x, a, "delta_omega");
  const TangentFrame frame = tangent_frame(x);
  const PolyForm omega = interior(PolyVectorField::radial(), cayley_three_form());
  // *_S omega = Psi|_S pointwise; the ambient representative Psi has
  // constant coefficients, so d(*_S omega) = (d Psi)|_S = 0.
  const TangentForm star_omega = hodge_sphere(restrict_form(omega, frame).tangential, frame);
  if (!(star_omega == restrict_form(cayley_four_form(), frame).tangential)) {
    throw std::logic_error("pointwise *_S omega disagrees with Psi|_S");
  }
  if (!exterior_d(cayley_four_form()).is_zero()) {
    throw std::logic_error("d Psi != 0");
  }
  return Rational(0);
}

namespace {

struct SignResolution {
  bool consistent = false;  // one sign holds on every trial
  int sign = 0;             // the resolved sign, +1 or -1
};

SignResolution resolve_sign(const std::vector<std::pair<Rational, Rational>>& lhs_rhs) {
  bool plus = true, minus = true;
  for (const auto& [l, r] : lhs_rhs) {
    if (l != r) plus = false;
    if (l != -r) minus = false;
  }
  if (plus) return {true, +1};
  if (minus) return {true, -1};
  return {false, 0};
}

std::string sign_str(int s) { return s >= 0 ? "+" : "-"; }

} // namespace

VerificationReport fundamental_form_suite(const SpherePoint& x, int trials, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "omega-identities-" + kind_name(x.kind);
  report.seed = seed;
  report.trials = trials;

  const TangentFrame frame = tangent_frame(x);
  const PolyForm omega_poly = interior(PolyVectorField::radial(), cayley_three_form());
  const PolyForm domega_poly = exterior_d(omega_poly);
  const TangentForm omega_s = restrict_form(omega_poly, frame).tangential;
  const TangentForm domega_s = restrict_form(domega_poly, frame).tangential;
  const auto& n = x.coords;

  // omega = iota_n Omega and d omega = 3 Omega|_S.
  {
    bool ok = domega_poly == cayley_three_form() * Rational(3);
    SubstreamRng rng(seed, 101);
    for (int t = 0; ok && t < trials; ++t) {
      const ImVector a = random_tangent(x, rng), b = random_tangent(x, rng);
      ok = fundamental_form(x, a, b) == form_value(omega_poly, n.coeffs(), std::array{a, b}) &&
           fundamental_form(x, a, b) == metric(cross(n, a), b);
      const ImVector c = random_tangent(x, rng);
      ok = ok && form_value(domega_poly, n.coeffs(), std::array{a, b, c}) ==
                     Rational(3) * triple(a, b, c);
    }
    report.add("omega-def", "omega = iota_n Omega and d omega = 3 Omega|_S", ok);
  }

  // *_S omega = Psi|_S.
  {
    const bool ok =
        hodge_sphere(omega_s, frame) == restrict_form(cayley_four_form(), frame).tangential;
    report.add("star-omega", "*_S omega = Psi|_S", ok);
  }

  // *_S d omega vs -3 iota_n Psi, sign resolved per sphere.
  {
    const TangentForm lhs = hodge_sphere(domega_s, frame);
    const PolyForm iota_n_psi = interior(PolyVectorField::radial(), cayley_four_form());
    const TangentForm rhs =
        restrict_form(iota_n_psi * Rational(-3), frame).tangential;
    const int expected = x.kind == SphereKind::S24 ? +1 : -1;
    bool ok = false;
    std::string resolution;
    if (lhs == rhs) {
      ok = expected == +1;
      resolution = "resolved sign +1";
    } else if (lhs == -rhs) {
      ok = expected == -1;
      resolution = "resolved sign -1";
    } else {
      resolution = "neither sign holds";
    }
    auto& c = report.add(
        "star-domega",
        "*_S d omega = " + std::string(expected == 1 ? "-" : "+") + "3 iota_n Psi", ok);
    c.witness.emplace_back("resolution", resolution);
  }

  // d omega(X,Y,Z) vs 3 iota_n Psi(JX,Y,Z), sign resolved.
  {
    SubstreamRng rng(seed, 103);
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int t = 0; t < std::max(trials, 4); ++t) {
      const ImVector a = random_tangent(x, rng), b = random_tangent(x, rng),
                     c = random_tangent(x, rng);
      pairs.emplace_back(form_value(domega_poly, n.coeffs(), std::array{a, b, c}),
                         Rational(3) * four_form(n, structure_apply(x, a), b, c));
    }
    const SignResolution r = resolve_sign(pairs);
    const int expected = x.kind == SphereKind::S24 ? +1 : -1;
    auto& c = report.add("domega-psi",
                         "d omega(X,Y,Z) = " + sign_str(expected) +
                             std::string("3 iota_n Psi(JX,Y,Z)"),
                         r.consistent && r.sign == expected);
    c.witness.emplace_back("resolution",
                           !r.consistent ? "no consistent sign"
                           : r.sign == +1 ? "resolved sign +1"
                                          : "resolved sign -1");
  }

  // The structure slides across the slots of d omega and of Omega.
  {
    SubstreamRng rng(seed, 104);
    bool ok = true;
    for (int t = 0; ok && t < trials; ++t) {
      const ImVector a = random_tangent(x, rng), b = random_tangent(x, rng),
                     c = random_tangent(x, rng);
      const ImVector ja = structure_apply(x, a), jb = structure_apply(x, b),
                     jc = structure_apply(x, c);
      ok = triple(ja, b, c) == triple(a, jb, c) && triple(a, jb, c) == triple(a, b, jc);
      const auto d = [&](const ImVector& u, const ImVector& v, const ImVector& w) {
        return form_value(domega_poly, n.coeffs(), std::array{u, v, w});
      };
      ok = ok && d(ja, b, c) == d(a, jb, c) && d(a, jb, c) == d(a, b, jc);
    }
    report.add("structure-slides",
               "d omega(JX,Y,Z) = d omega(X,JY,Z) = d omega(X,Y,JZ), same for Omega", ok);
  }

  // d omega(X,JY,JZ) vs -d omega(X,Y,Z), sign resolved.
  {
    SubstreamRng rng(seed, 105);
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int t = 0; t < std::max(trials, 4); ++t) {
      const ImVector a = random_tangent(x, rng), b = random_tangent(x, rng),
                     c = random_tangent(x, rng);
      const auto d = [&](const ImVector& u, const ImVector& v, const ImVector& w) {
        return form_value(domega_poly, n.coeffs(), std::array{u, v, w});
      };
      pairs.emplace_back(d(a, structure_apply(x, b), structure_apply(x, c)), -d(a, b, c));
    }
    const SignResolution r = resolve_sign(pairs);
    const int expected = x.kind == SphereKind::S24 ? +1 : -1;
    auto& c = report.add("double-structure",
                         "d omega(X,JY,JZ) = " + std::string(expected == 1 ? "-" : "+") +
                             std::string("d omega(X,Y,Z)"),
                         r.consistent && r.sign == expected);
    c.witness.emplace_back("resolution",
                           !r.consistent ? "no consistent sign"
                           : r.sign == +1 ? "resolved sign +1"
                                          : "resolved sign -1");
  }

  // omega ^ d omega = 0, pointwise and via the ambient identity
  // iota_n(Omega ^ Omega) = 0.
  {
    const bool ok =
        tangent_wedge(omega_s, domega_s).is_zero() &&
        interior(PolyVectorField::radial(),
                 wedge(cayley_three_form(), cayley_three_form()))
            .is_zero();
    report.add("omega-wedge", "omega ^ d omega = 0", ok);
  }

  // Contraction identity: iota_n Psi(X,Y,Z) = -Omega(JX,Y,Z).
  {
    SubstreamRng rng(seed, 106);
    bool ok = true;
    for (int t = 0; ok && t < trials; ++t) {
      const ImVector a = random_tangent(x, rng), b = random_tangent(x, rng),
                     c = random_tangent(x, rng);
      ok = four_form(n, a, b, c) == -triple(structure_apply(x, a), b, c);
    }
    report.add("psi-contraction", "iota_n Psi(X,Y,Z) = -Omega(JX,Y,Z)", ok);
  }

  return report;
}

std::optional<StereoImage> stereographic_exact(const SpherePoint& x) {
  Rational radicand(0);
  if (x.kind == SphereKind::S24) {
    for (int i = 1; i <= 3; ++i) radicand += x.coords.coeff(i) * x.coords.coeff(i);
  } else {
    for (int i = 4; i <= 7; ++i) radicand += x.coords.coeff(i) * x.coords.coeff(i);
  }
  const auto r = exact_sqrt(radicand);
  if (!r) return std::nullopt;
  StereoImage out;
  out.kind = x.kind;
  for (int i = 1; i <= 3; ++i) out.head[i - 1] = x.coords.coeff(i) / *r;
  for (int i = 4; i <= 7; ++i) out.tail[i - 4] = x.coords.coeff(i) / *r;
  return out;
}

std::optional<SpherePoint> stereographic_inverse_exact(const StereoImage& image) {
  Rational head_sq(0), tail_sq(0);
  for (const auto& v : image.head) head_sq += v * v;
  for (const auto& v : image.tail) tail_sq += v * v;
  Rational ball_sq;
  if (image.kind == SphereKind::S24) {
    if (head_sq != 1) throw std::invalid_argument("factor point not on the unit 2-sphere");
    ball_sq = tail_sq;
  } else {
    if (tail_sq != 1) throw std::invalid_argument("factor point not on the unit 3-sphere");
    ball_sq = head_sq;
  }
  if (ball_sq >= 1) throw std::invalid_argument("ball point not inside the open unit ball");
  const auto r = exact_sqrt(1 / (1 - ball_sq));
  if (!r) return std::nullopt;
  Rational7 c;
  for (int i = 0; i < 3; ++i) c[i] = *r * image.head[i];
  for (int i = 0; i < 4; ++i) c[3 + i] = *r * image.tail[i];
  return SpherePoint::make(image.kind, ImVector(std::move(c)));
}

StereoImageD stereographic_d(const std::array<double, 7>& x, SphereKind kind) {
  double radicand = 0;
  if (kind == SphereKind::S24) {
    for (int i = 0; i < 3; ++i) radicand += x[i] * x[i];
  } else {
    for (int i = 3; i < 7; ++i) radicand += x[i] * x[i];
  }
  const double r = std::sqrt(radicand);
  StereoImageD out;
  for (int i = 0; i < 3; ++i) out.head[i] = x[i] / r;
  for (int i = 0; i < 4; ++i) out.tail[i] = x[3 + i] / r;
  return out;
}

std::array<double, 7> stereographic_inverse_d(const StereoImageD& image, SphereKind kind) {
  double ball_sq = 0;
  if (kind == SphereKind::S24) {
    for (const auto& v : image.tail) ball_sq += v * v;
  } else {
    for (const auto& v : image.head) ball_sq += v * v;
  }
  if (ball_sq >= 1) throw std::invalid_argument("ball point not inside the open unit ball");
  const double r = 1.0 / std::sqrt(1.0 - ball_sq);
  std::array<double, 7> out;
  for (int i = 0; i < 3; ++i) out[i] = r * image.head[i];
  for (int i = 0; i < 4; ++i) out[3 + i] = r * image.tail[i];
  return out;
}

namespace {

using Vec7d = std::array<double, 7>;

// Solves a 7x7 double system by Gaussian elimination with partial pivoting.
Vec7d solve7(std::array<std::array<double, 7>, 7> m, Vec7d rhs) {
  for (int col = 0; col < 7; ++col) {
    int p = col;
    for (int r = col + 1; r < 7; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[p][col])) p = r;
    }
    std::swap(m[p], m[col]);
    std::swap(rhs[p], rhs[col]);
    if (m[col][col] == 0) throw std::runtime_error("singular pullback system");
    for (int r = 0; r < 7; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (int c = col; c < 7; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  Vec7d out;
  for (int i = 0; i < 7; ++i) out[i] = rhs[i] / m[i][i];
  return out;
}

std::array<std::array<double, 7>, 7> stereo_jacobian(const Vec7d& x, SphereKind kind) {
  double r2 = 0;
  const int lo = kind == SphereKind::S24 ? 0 : 3;
  const int hi = kind == SphereKind::S24 ? 3 : 7;
  for (int i = lo; i < hi; ++i) r2 += x[i] * x[i];
  const double r = std::sqrt(r2);
  std::array<std::array<double, 7>, 7> m{};
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      double v = (i == j) ? 1.0 / r : 0.0;
      if (j >= lo && j < hi) v -= x[i] * x[j] / (r * r2);
      m[i][j] = v;
    }
  }
  return m;
}

} // namespace

std::array<double, 7> product_structure_pullback(const std::array<double, 7>& x,
                                                 const std::array<double, 7>& y,
                                                 SphereKind kind) {
  const auto jac = stereo_jacobian(x, kind);
  Vec7d w{};
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) w[i] += jac[i][j] * y[j];
  }
  const StereoImageD img = stereographic_d(x, kind);
  Vec7d jw{};
  if (kind == SphereKind::S24) {
    // Rotation by +90 degrees in the tangent plane of S^2 (the 3-d cross
    // product with the base point), plus a fixed orthogonal complex
    // structure on D^4.
    jw[0] = img.head[1] * w[2] - img.head[2] * w[1];
    jw[1] = img.head[2] * w[0] - img.head[0] * w[2];
    jw[2] = img.head[0] * w[1] - img.head[1] * w[0];
    jw[3] = -w[4];
    jw[4] = w[3];
    jw[5] = -w[6];
    jw[6] = w[5];
  } else {
    // +Id along the D^3 factor, -Id along the S^3 factor.
    for (int i = 0; i < 3; ++i) jw[i] = w[i];
    for (int i = 3; i < 7; ++i) jw[i] = -w[i];
  }
  // Pull back through the differential, selecting the solution tangent to
  // the quadric: augment the rank-6 Jacobian with the factor normal times
  // the metric-gradient row.
  auto a = jac;
  Vec7d u{};
  if (kind == SphereKind::S24) {
    for (int i = 0; i < 3; ++i) u[i] = img.head[i];
  } else {
    for (int i = 0; i < 4; ++i) u[3 + i] = img.tail[i];
  }
  Vec7d grad;
  for (int i = 0; i < 7; ++i) grad[i] = (i < 3 ? x[i] : -x[i]);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) a[i][j] += u[i] * grad[j];
  }
  return solve7(a, jw);
}

std::vector<SpherePoint> load_point_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read point list '" + path + "'");
  std::string line;
  SphereKind kind = SphereKind::S24;
  bool have_header = false;
  std::vector<SpherePoint> out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      kind = kind_from_name(line);
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string field;
    Rational7 c;
    for (int i = 0; i < 7; ++i) {
      if (!std::getline(fields, field, ',')) {
        throw std::runtime_error("point line needs 7 comma-separated rationals");
      }
      c[i] = parse_rational(field);
    }
    out.push_back(SpherePoint::make(kind, ImVector(std::move(c))));
  }
  if (!have_header) throw std::runtime_error("point list missing kind header");
  return out;
}

void save_point_list(const std::vector<SpherePoint>& points, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point list '" + path + "'");
  if (points.empty()) throw std::invalid_argument("empty point list");
  out << kind_name(points.front().kind) << "\n";
  for (const auto& p : points) {
    for (int i = 1; i <= 7; ++i) {
      out << (i > 1 ? "," : "") << to_string(p.coords.coeff(i));
    }
    out << "\n";
  }
}

} // namespace cayley
