// Acceptance gate: one check per criterion, each printed as a PASS/FAIL
// line. Exits nonzero when any criterion fails. argv[1] is the path of the
// verification CLI, used by the determinism criterion.

#include "cayley/forms.hpp"
#include "cayley/g2star.hpp"
#include "cayley/imvector.hpp"
#include "cayley/octonion.hpp"
#include "cayley/r8.hpp"
#include "cayley/spheres.hpp"
#include "cayley/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace cayley;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool pass,
               const std::string& note = "") {
  std::printf("%s criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number,
              description.c_str(), note.empty() ? "" : ("  [" + note + "]").c_str());
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 2024;

  // 1. Multiplication table fidelity and the Cayley-Dickson cross-check.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int i = 1; i <= 7 && ok; ++i) {
      for (int j = 1; j <= 7 && ok; ++j) {
        const auto& entry = detail::kBasisTable[i - 1][j - 1];
        const SplitOctonion expected =
            Rational(entry.sign) * SplitOctonion::basis(entry.index);
        const SplitOctonion a = SplitOctonion::basis(i), b = SplitOctonion::basis(j);
        ok = mul(a, b) == expected && mul_cayley_dickson(a, b) == expected;
      }
    }
    ok = ok && mul(SplitOctonion::basis(1), SplitOctonion::basis(2)) == SplitOctonion::basis(3) &&
         mul(SplitOctonion::basis(4), SplitOctonion::basis(5)) == -SplitOctonion::basis(1);
    const double elapsed = seconds_since(t0);
    criterion(1, "49 basis products match the table; Cayley-Dickson reproduces it",
              ok && elapsed < 1.0, "elapsed " + std::to_string(elapsed) + " s");
  }

  // 2. Composition law on 1000 seeded pairs including 50+ null octonions.
  {
    bool ok = true;
    int nulls = 0;
    for (int t = 0; t < 1000 && ok; ++t) {
      SubstreamRng rng(seed, 100000 + static_cast<std::uint64_t>(t));
      SplitOctonion x;
      if (t < 50) {
        x = random_null_octonion(rng);
        ok = norm(x) == 0;
        ++nulls;
      } else {
        x = random_octonion(rng);
      }
      const SplitOctonion y = random_octonion(rng);
      ok = ok && norm(mul(x, y)) == norm(x) * norm(y);
    }
    criterion(2, "N(xy) = N(x)N(y) exact on 1000 pairs", ok && nulls >= 50,
              std::to_string(nulls) + " null-norm pairs");
  }

  // 3. Alternativity and the Moufang-type identities on 500 tuples.
  {
    const VerificationReport r = identity_suite(500, seed);
    criterion(3, "alternativity and the Moufang-type identities exact on 500 tuples", r.all_pass());
  }

  // 4. The associator identity, its swap, and the cross axiom on 500 samples.
  {
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) {
      SubstreamRng rng(seed, 200000 + static_cast<std::uint64_t>(t));
      const ImVector x = random_imvector(rng);
      const ImVector y = random_imvector(rng);
      const ImVector z = random_imvector(rng);
      ok = associator(x.to_octonion(), y.to_octonion(), z.to_octonion()) ==
           assoc_via_cross(x, y, z);
      ok = ok && cross(cross(x, y), z) - metric(x, z) * y + metric(y, z) * x ==
                     -cross(x, cross(y, z)) + metric(x, z) * y - metric(x, y) * z;
      ok = ok && metric(cross(x, y), cross(x, y)) ==
                     metric(x, x) * metric(y, y) - metric(x, y) * metric(x, y);
    }
    criterion(4, "associator identity, its swap, and the cross axiom on 500 samples", ok);
  }

  // 5. Hodge duality against the coefficient tables.
  {
    const bool ok = hodge_ambient(cayley_three_form()) == cayley_four_form() &&
                    hodge_ambient(cayley_four_form()) == cayley_three_form();
    criterion(5, "*Omega = Psi and *Psi = Omega as exact coefficient identities", ok);
  }

  // 6. Fundamental-form identity suite at 50 points x 20 triples per sphere.
  {
    bool ok = true;
    std::string resolution24, resolution33;
    for (const SphereKind kind : {SphereKind::S24, SphereKind::S33}) {
      for (int t = 0; t < 50 && ok; ++t) {
        SubstreamRng rng(seed, 300000 + static_cast<std::uint64_t>(t) +
                                   (kind == SphereKind::S33 ? 1000000 : 0));
        const SpherePoint x = random_point(kind, rng);
        const VerificationReport r =
            fundamental_form_suite(x, 20, seed + static_cast<std::uint64_t>(t));
        ok = r.all_pass();
        if (t == 0) {
          std::string notes;
          for (const auto& c : r.checks) {
            for (const auto& [k, v] : c.witness) {
              if (k == "resolution" && v.find("-1") != std::string::npos) {
                notes += (notes.empty() ? "" : "; ") + c.id + ": " + v;
              }
            }
          }
          (kind == SphereKind::S24 ? resolution24 : resolution33) = notes;
        }
      }
    }
    std::string note = "sign resolutions recorded";
    if (!resolution33.empty()) note += " - S33 " + resolution33;
    if (!resolution24.empty()) note += " - S24 " + resolution24;
    criterion(6, "fundamental-form identities exact at 50 points x 20 triples per sphere", ok, note);
  }

  // 7. Nijenhuis expansion = closed form on 200 pairs per sphere plus the
  // pinned witnesses.
  {
    bool ok = true;
    for (const SphereKind kind : {SphereKind::S24, SphereKind::S33}) {
      for (int t = 0; t < 200 && ok; ++t) {
        SubstreamRng rng(seed, 400000 + static_cast<std::uint64_t>(t) +
                                   (kind == SphereKind::S33 ? 1000000 : 0));
        const SpherePoint x = random_point(kind, rng);
        const ImVector a = random_tangent(x, rng);
        const ImVector b = random_tangent(x, rng);
        const NijenhuisValue n = nijenhuis(x, a, b);
        ok = n.expansion == n.closed_form &&
             n.closed_form == Rational(-8) * cross(x.coords, cross(a, b));
      }
    }
    const SpherePoint e1 = SpherePoint::make(SphereKind::S24, ImVector::basis(1));
    const SpherePoint e4 = SpherePoint::make(SphereKind::S33, ImVector::basis(4));
    const ImVector eight_e7 = Rational(8) * ImVector::basis(7);
    ok = ok && nijenhuis(e1, ImVector::basis(2), ImVector::basis(4)).closed_form == eight_e7 &&
         nijenhuis(e4, ImVector::basis(1), ImVector::basis(2)).closed_form == eight_e7;
    criterion(7, "Nijenhuis tensor: both routes on 200 pairs per sphere, pinned witnesses", ok);
  }

  // 8. Hitchin operator values.
  {
    const SpherePoint e1 = SpherePoint::make(SphereKind::S24, ImVector::basis(1));
    const SpherePoint e4 = SpherePoint::make(SphereKind::S33, ImVector::basis(4));
    bool ok = hitchin_K(e1, ImVector::basis(2)) == Rational(18) * ImVector::basis(3) &&
              hitchin_K(e4, ImVector::basis(1)) == Rational(-18) * ImVector::basis(5);
    for (const SphereKind kind : {SphereKind::S24, SphereKind::S33}) {
      for (int t = 0; t < 20 && ok; ++t) {
        SubstreamRng rng(seed, 500000 + static_cast<std::uint64_t>(t) +
                                   (kind == SphereKind::S33 ? 1000000 : 0));
        const SpherePoint x = random_point(kind, rng);
        const ImVector a = random_tangent(x, rng);
        ok = hitchin_K(x, a) == Rational(18) * structure_apply(x, a);
      }
    }
    criterion(8, "K(e2) = 18 e3 at e1, K(e1) = -18 e5 at e4, K = 18 J/P at 20 points per sphere",
              ok);
  }

  // 9. Laplacian eigenvalue and co-closedness at 25 points x 10 pairs per
  // sphere, within 30 seconds.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const SphereKind kind : {SphereKind::S24, SphereKind::S33}) {
      const Rational factor = kind == SphereKind::S24 ? Rational(12) : Rational(-12);
      for (int t = 0; t < 25 && ok; ++t) {
        SubstreamRng rng(seed, 600000 + static_cast<std::uint64_t>(t) +
                                   (kind == SphereKind::S33 ? 1000000 : 0));
        const SpherePoint x = random_point(kind, rng);
        for (int p = 0; p < 10 && ok; ++p) {
          const ImVector a = random_tangent(x, rng);
          const ImVector b = random_tangent(x, rng);
          ok = laplacian_check(x, a, b) == factor * fundamental_form(x, a, b);
        }
        ok = ok && delta_omega(x, random_tangent(x, rng)) == 0;
      }
    }
    const double elapsed = seconds_since(t0);
    criterion(9, "delta omega = 0 and delta d omega = +-12 omega at 25 points x 10 pairs",
              ok && elapsed < 30.0, "elapsed " + std::to_string(elapsed) + " s");
  }

  // 10. The g2* module: generators, closure, independent dimension count.
  {
    const VerificationReport r = g2star_suite(10, seed);
    criterion(10, "g2*: generators annihilate Omega0 and are skew; closure; dim = 14",
              r.all_pass());
  }

  // 11. Stereographic projections and transferred product structures.
  {
    const VerificationReport r = stereo_suite(200, seed);
    criterion(11, "stereographic round trips (20 exact, 200 float) and pullback squares",
              r.all_pass());
  }

  // 12. R^{8+-} structures against their finite-difference oracles.
  {
    const VerificationReport r = r8_suite(100, seed);
    criterion(12, "R^{8+-}: exact squares; D(J) and d omega match FD oracles at 50 points",
              r.all_pass());
  }

  // 13. Byte-identical JSON reports from identical CLI invocations.
  {
    bool ok = false;
    std::string note;
    if (argc > 1) {
      const std::string cli = argv[1];
      const std::string out1 = "acceptance_report_1.json";
      const std::string out2 = "acceptance_report_2.json";
      const std::string cmd_base = "\"" + cli +
                                   "\" --suite imspace --trials 25 --seed 7 --format json --out ";
      const int rc1 = std::system((cmd_base + out1).c_str());
      const int rc2 = std::system((cmd_base + out2).c_str());
      const std::string j1 = read_file(out1);
      const std::string j2 = read_file(out2);
      ok = rc1 == 0 && rc2 == 0 && !j1.empty() && j1 == j2;
      std::remove(out1.c_str());
      std::remove(out2.c_str());
      note = ok ? "" : "CLI runs differ or failed";
    } else {
      note = "CLI path not supplied";
    }
    criterion(13, "identical CLI invocations produce byte-identical JSON", ok, note);
  }

  std::printf("%s: %d/13 criteria passed\n", failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED",
              13 - failures);
  return failures == 0 ? 0 : 1;
}
