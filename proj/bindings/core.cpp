#include "cayley/imvector.hpp"
#include "cayley/octonion.hpp"
#include "cayley/r8.hpp"
#include "cayley/report.hpp"
#include "cayley/spheres.hpp"
#include "cayley/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace cayley;

namespace {

Rational scalar_in(const std::string& s) { return parse_rational(s); }

SplitOctonion oct_in(const std::vector<std::string>& c) {
  if (c.size() != 8) throw std::invalid_argument("octonion needs 8 coefficients");
  std::array<Rational, 8> a;
  for (int i = 0; i < 8; ++i) a[i] = scalar_in(c[i]);
  return SplitOctonion(std::move(a));
}

std::vector<std::string> oct_out(const SplitOctonion& x) {
  std::vector<std::string> out(8);
  for (int i = 0; i < 8; ++i) out[i] = to_string(x.coeff(i));
  return out;
}

ImVector vec_in(const std::vector<std::string>& c) {
  if (c.size() != 7) throw std::invalid_argument("imaginary vector needs 7 coefficients");
  Rational7 a;
  for (int i = 0; i < 7; ++i) a[i] = scalar_in(c[i]);
  return ImVector(std::move(a));
}

std::vector<std::string> vec_out(const ImVector& v) {
  std::vector<std::string> out(7);
  for (int i = 1; i <= 7; ++i) out[i - 1] = to_string(v.coeff(i));
  return out;
}

SpherePoint point_in(const std::string& kind, const std::vector<std::string>& coords) {
  return SpherePoint::make(kind_from_name(kind), vec_in(coords));
}

R8Point r8_in(const std::string& region, const std::string& u0,
              const std::vector<std::string>& U) {
  if (region != "plus" && region != "minus") {
    throw std::invalid_argument("region must be 'plus' or 'minus'");
  }
  return R8Point::make(scalar_in(u0), vec_in(U),
                       region == "plus" ? R8Region::plus : R8Region::minus);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact split Cayley algebra kernel";
  m.attr("__version__") = "0.1.0";

  m.def("oct_mul",
        [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
          return oct_out(mul(oct_in(x), oct_in(y)));
        },
        py::arg("x"), py::arg("y"), "Split octonion product over the basis 1, e1..e7");
  m.def("oct_conj", [](const std::vector<std::string>& x) { return oct_out(conj(oct_in(x))); });
  m.def("norm", [](const std::vector<std::string>& x) { return to_string(norm(oct_in(x))); });
  m.def("inner", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return to_string(inner(oct_in(x), oct_in(y)));
  });
  m.def("associator", [](const std::vector<std::string>& x, const std::vector<std::string>& y,
                         const std::vector<std::string>& z) {
    return oct_out(associator(oct_in(x), oct_in(y), oct_in(z)));
  });

  m.def("metric", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return to_string(metric(vec_in(x), vec_in(y)));
  });
  m.def("cross", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    return vec_out(cross(vec_in(x), vec_in(y)));
  });
  m.def("triple", [](const std::vector<std::string>& x, const std::vector<std::string>& y,
                     const std::vector<std::string>& z) {
    return to_string(triple(vec_in(x), vec_in(y), vec_in(z)));
  });
  m.def("psi", [](const std::vector<std::string>& x, const std::vector<std::string>& y,
                  const std::vector<std::string>& z, const std::vector<std::string>& w) {
    return to_string(four_form(vec_in(x), vec_in(y), vec_in(z), vec_in(w)));
  });

  m.def("structure_apply",
        [](const std::string& kind, const std::vector<std::string>& x,
           const std::vector<std::string>& y) {
          return vec_out(structure_apply(point_in(kind, x), vec_in(y)));
        },
        py::arg("kind"), py::arg("point"), py::arg("tangent"),
        "J (S24) or P (S33) applied to a tangent vector");
  m.def("fundamental_form", [](const std::string& kind, const std::vector<std::string>& x,
                               const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
    return to_string(fundamental_form(point_in(kind, x), vec_in(a), vec_in(b)));
  });
  m.def("nijenhuis", [](const std::string& kind, const std::vector<std::string>& x,
                        const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const NijenhuisValue n = nijenhuis(point_in(kind, x), vec_in(a), vec_in(b));
    return py::make_tuple(vec_out(n.expansion), vec_out(n.closed_form));
  });
  m.def("hitchin_K", [](const std::string& kind, const std::vector<std::string>& x,
                        const std::vector<std::string>& a) {
    return vec_out(hitchin_K(point_in(kind, x), vec_in(a)));
  });
  m.def("laplacian_check", [](const std::string& kind, const std::vector<std::string>& x,
                              const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
    return to_string(laplacian_check(point_in(kind, x), vec_in(a), vec_in(b)));
  });

  m.def("stereographic", [](const std::string& kind, const std::array<double, 7>& x) {
    const StereoImageD img = stereographic_d(x, kind_from_name(kind));
    return py::make_tuple(img.head, img.tail);
  });
  m.def("stereographic_inverse",
        [](const std::string& kind, const std::array<double, 3>& head,
           const std::array<double, 4>& tail) {
          return stereographic_inverse_d(StereoImageD{head, tail}, kind_from_name(kind));
        });
  m.def("product_structure_pullback",
        [](const std::string& kind, const std::array<double, 7>& x,
           const std::array<double, 7>& y) {
          return product_structure_pullback(x, y, kind_from_name(kind));
        });

  m.def("structure8_apply",
        [](const std::string& region, const std::string& u0, const std::vector<std::string>& U,
           const std::vector<std::string>& y) {
          return oct_out(structure8_apply(r8_in(region, u0, U), oct_in(y)));
        });
  m.def("omega8", [](const std::string& region, const std::string& u0,
                     const std::vector<std::string>& U, const std::vector<std::string>& y,
                     const std::vector<std::string>& z) {
    return to_string(omega8(r8_in(region, u0, U), oct_in(y), oct_in(z)));
  });
  m.def("domega8", [](const std::string& region, const std::string& u0,
                      const std::vector<std::string>& U, const std::vector<std::string>& x,
                      const std::vector<std::string>& y, const std::vector<std::string>& z) {
    return to_string(domega8(r8_in(region, u0, U), oct_in(x), oct_in(y), oct_in(z)));
  });

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& suite, int trials, std::uint64_t seed,
           const std::optional<std::string>& points, const std::string& format) {
          return emit_report(run_suite(suite, trials, seed, points), format);
        },
        py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 0,
        py::arg("points") = std::nullopt, py::arg("format") = "json",
        "Runs a verification suite and returns the serialized report");
}
