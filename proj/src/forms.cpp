#include "cayley/forms.hpp"

#include <bit>
#include <stdexcept>

namespace cayley {

int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_axes(Mask m) {
  std::vector<int> axes;
  for (int i = 1; i <= 8; ++i) {
    if (m & (1u << (i - 1))) axes.push_back(i);
  }
  return axes;
}

Mask mask_of(std::initializer_list<int> axes) {
  Mask m = 0;
  for (int a : axes) {
    if (a < 1 || a > 7) throw std::invalid_argument("axis must be in 1..7");
    m |= static_cast<Mask>(1u << (a - 1));
  }
  return m;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Inversions between the ascending tuples: pairs (i in a, j in b), j < i.
  int inversions = 0;
  for (int i = 1; i <= 8; ++i) {
    if (!(a & (1u << (i - 1)))) continue;
    inversions += std::popcount(static_cast<unsigned>(b & ((1u << (i - 1)) - 1)));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

bool MaskLexLess::operator()(Mask a, Mask b) const {
  if (a == b) return false;
  while (a && b) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= static_cast<Mask>(a - 1);
    b &= static_cast<Mask>(b - 1);
  }
  return a == 0 && b != 0;
}

int axis_sign(int axis) {
  if (axis < 1 || axis > 7) throw std::invalid_argument("axis must be in 1..7");
  return axis <= 3 ? 1 : -1;
}

PolyForm::PolyForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 7) throw std::invalid_argument("form degree must be in 0..7");
}

PolyForm PolyForm::scalar(Poly7 p) {
  PolyForm f(0);
  f.add_term(0, std::move(p));
  return f;
}

PolyForm PolyForm::monomial(std::initializer_list<int> axes, Poly7 coeff) {
  PolyForm f(static_cast<int>(axes.size()));
  Mask m = 0;
  int sign = 1;
  for (int a : axes) {
    const Mask bit = static_cast<Mask>(1u << (a - 1));
    if (a < 1 || a > 7) throw std::invalid_argument("axis must be in 1..7");
    if (m & bit) return f;  // repeated axis: zero form
    // Count already-present axes above a: each is a transposition.
    const int above = std::popcount(static_cast<unsigned>(m >> a));
    if (above % 2 == 1) sign = -sign;
    m |= bit;
  }
  if (sign < 0) coeff = -coeff;
  f.add_term(m, std::move(coeff));
  return f;
}

PolyForm PolyForm::monomial(std::initializer_list<int> axes, Rational coeff) {
  return monomial(axes, Poly7::constant(std::move(coeff)));
}

Poly7 PolyForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly7{} : it->second;
}

void PolyForm::add_term(Mask m, Poly7 coeff) {
  if (mask_degree(m) != degree_) throw std::invalid_argument("term degree mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm out(degree_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PolyForm& PolyForm::operator*=(const Poly7& p) {
  PolyForm out(degree_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * p);
  terms_ = std::move(out.terms_);
  return *this;
}

PolyForm PolyForm::at_point(const Rational7& x) const {
  PolyForm out(degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, Poly7::constant(c.eval(x)));
  return out;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (m != 0) {
      out += " w";
      for (int a : mask_axes(m)) out += std::to_string(a);
    }
  }
  return out;
}

PolyVectorField PolyVectorField::constant(const ImVector& v) {
  PolyVectorField f;
  for (int i = 1; i <= 7; ++i) f.components[i - 1] = Poly7::constant(v.coeff(i));
  return f;
}

PolyVectorField PolyVectorField::radial() {
  PolyVectorField f;
  for (int i = 1; i <= 7; ++i) f.components[i - 1] = Poly7::variable(i);
  return f;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.degree() + b.degree() > 7) {
    throw std::invalid_argument("wedge degree overflow: " + std::to_string(a.degree()) +
                                " + " + std::to_string(b.degree()));
  }
  PolyForm out(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly7 c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(static_cast<Mask>(ma | mb), std::move(c));
    }
  }
  return out;
}

PolyForm exterior_d(const PolyForm& a) {
  if (a.degree() > 6) throw std::invalid_argument("exterior_d needs degree <= 6");
  PolyForm out(a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    for (int i = 1; i <= 7; ++i) {
      const Mask bit = static_cast<Mask>(1u << (i - 1));
      if (m & bit) continue;
      Poly7 dc = c.partial(i);
      if (dc.is_zero()) continue;
      const int s = wedge_sign(bit, m);
      if (s < 0) dc = -dc;
      out.add_term(static_cast<Mask>(m | bit), std::move(dc));
    }
  }
  return out;
}

PolyForm interior(const PolyVectorField& v, const PolyForm& a) {
  if (a.degree() < 1) throw std::invalid_argument("interior product needs degree >= 1");
  PolyForm out(a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int position = 0;
    for (int i : mask_axes(m)) {
      const Poly7& vi = v.components[i - 1];
      if (!vi.is_zero()) {
        Poly7 term = vi * c;
        if (position % 2 == 1) term = -term;
        out.add_term(static_cast<Mask>(m & ~(1u << (i - 1))), std::move(term));
      }
      ++position;
    }
  }
  return out;
}

PolyForm lie_derivative(const PolyVectorField& v, const PolyForm& a) {
  if (a.degree() == 0) return interior(v, exterior_d(a));
  PolyForm out = interior(v, exterior_d(a));
  out += exterior_d(interior(v, a));
  return out;
}

namespace {

int mask_metric_sign(Mask m) {
  int s = 1;
  for (int a : mask_axes(m)) s *= axis_sign(a);
  return s;
}

constexpr Mask kFull7 = 0x7f;

} // namespace

PolyForm hodge_ambient(const PolyForm& a) {
  PolyForm out(7 - a.degree());
  for (const auto& [m, c] : a.terms()) {
    const Mask comp = static_cast<Mask>(kFull7 & ~m);
    const int s = mask_metric_sign(m) * wedge_sign(m, comp);
    Poly7 coeff = c;
    if (s < 0) coeff = -coeff;
    out.add_term(comp, std::move(coeff));
  }
  return out;
}

Poly7 form_metric(const PolyForm& a, const PolyForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("form_metric degree mismatch");
  Poly7 out;
  for (const auto& [m, ca] : a.terms()) {
    auto it = b.terms().find(m);
    if (it == b.terms().end()) continue;
    Poly7 term = ca * it->second;
    if (mask_metric_sign(m) < 0) term = -term;
    out += term;
  }
  return out;
}

Rational form_value(const PolyForm& a, const Rational7& point,
                    std::span<const ImVector> args) {
  if (static_cast<int>(args.size()) != a.degree()) {
    throw std::invalid_argument("form_value arity mismatch");
  }
  Rational out(0);
  for (const auto& [m, c] : a.terms()) {
    const auto axes = mask_axes(m);
    Mat<Rational> sub(axes.size(), axes.size());
    for (std::size_t r = 0; r < axes.size(); ++r) {
      for (std::size_t col = 0; col < args.size(); ++col) {
        sub(r, col) = args[col].coeff(axes[r]);
      }
    }
    out += c.eval(point) * determinant(sub);
  }
  return out;
}

PolyForm cayley_three_form() {
  PolyForm f(3);
  f += PolyForm::monomial({1, 2, 3}, Rational(1));
  f += PolyForm::monomial({1, 4, 5}, Rational(-1));
  f += PolyForm::monomial({1, 6, 7}, Rational(1));
  f += PolyForm::monomial({2, 4, 6}, Rational(-1));
  f += PolyForm::monomial({2, 5, 7}, Rational(-1));
  f += PolyForm::monomial({3, 4, 7}, Rational(-1));
  f += PolyForm::monomial({3, 5, 6}, Rational(1));
  return f;
}

PolyForm cayley_four_form() {
  PolyForm f(4);
  f += PolyForm::monomial({4, 5, 6, 7}, Rational(1));
  f += PolyForm::monomial({2, 3, 6, 7}, Rational(-1));
  f += PolyForm::monomial({2, 3, 4, 5}, Rational(1));
  f += PolyForm::monomial({1, 3, 5, 7}, Rational(-1));
  f += PolyForm::monomial({1, 3, 4, 6}, Rational(-1));
  f += PolyForm::monomial({1, 2, 5, 6}, Rational(-1));
  f += PolyForm::monomial({1, 2, 4, 7}, Rational(1));
  return f;
}

PolyForm volume_form() {
  return PolyForm::monomial({1, 2, 3, 4, 5, 6, 7}, Rational(1));
}

TangentFrame TangentFrame::make(ImVector base, std::array<ImVector, 6> basis) {
  TangentFrame f;
  f.base = std::move(base);
  f.basis = std::move(basis);
  f.normal_square = metric(f.base, f.base);
  if (f.normal_square != 1 && f.normal_square != -1) {
    throw std::invalid_argument("frame base must have g(n,n) = +-1");
  }
  for (const auto& b : f.basis) {
    if (metric(f.base, b) != 0) throw std::invalid_argument("frame vector not tangent");
  }
  f.gram = Mat<Rational>(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) f.gram(i, j) = metric(f.basis[i], f.basis[j]);
  }
  auto inv = inverse(f.gram);
  if (!inv) throw std::invalid_argument("degenerate tangent frame");
  f.gram_inverse = std::move(*inv);
  // Signature check through the Gram determinant: (2,4) gives a positive
  // determinant, (3,3) a negative one.
  const Rational det = determinant(f.gram);
  if ((f.normal_square == 1 && det < 0) || (f.normal_square == -1 && det > 0)) {
    throw std::invalid_argument("frame Gram determinant sign inconsistent with signature");
  }
  Mat<Rational> full(7, 7);
  for (int r = 1; r <= 7; ++r) {
    full(r - 1, 0) = f.base.coeff(r);
    for (int j = 0; j < 6; ++j) full(r - 1, j + 1) = f.basis[j].coeff(r);
  }
  f.volume = f.normal_square * determinant(full);
  return f;
}

TangentForm::TangentForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 6) throw std::invalid_argument("tangent form degree in 0..6");
}

Rational TangentForm::value(Mask m) const {
  auto it = values_.find(m);
  return it == values_.end() ? Rational(0) : it->second;
}

void TangentForm::add_value(Mask m, Rational v) {
  if (mask_degree(m) != degree_ || (m & ~Mask(0x3f))) {
    throw std::invalid_argument("tangent form index mismatch");
  }
  if (v == 0) return;
  auto it = values_.find(m);
  if (it == values_.end()) {
    values_.emplace(m, std::move(v));
  } else {
    it->second += v;
    if (it->second == 0) values_.erase(it);
  }
}

TangentForm TangentForm::operator-() const {
  TangentForm out(degree_);
  for (const auto& [m, v] : values_) out.values_.emplace(m, -v);
  return out;
}

TangentForm& TangentForm::operator+=(const TangentForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("tangent form degree mismatch");
  for (const auto& [m, v] : o.values_) add_value(m, v);
  return *this;
}

TangentForm& TangentForm::operator-=(const TangentForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("tangent form degree mismatch");
  for (const auto& [m, v] : o.values_) add_value(m, -v);
  return *this;
}

TangentForm& TangentForm::operator*=(const Rational& c) {
  if (c == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [m, v] : values_) v *= c;
  return *this;
}

std::string TangentForm::str() const {
  if (values_.empty()) return "0";
  std::string out;
  for (const auto& [m, v] : values_) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(v) + ")";
    if (m != 0) {
      out += " b";
      for (int a : mask_axes(m)) out += std::to_string(a);
    }
  }
  return out;
}

TangentForm tangent_wedge(const TangentForm& a, const TangentForm& b) {
  if (a.degree() + b.degree() > 6) throw std::invalid_argument("tangent wedge degree overflow");
  TangentForm out(a.degree() + b.degree());
  for (const auto& [ma, va] : a.values()) {
    for (const auto& [mb, vb] : b.values()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_value(static_cast<Mask>(ma | mb), Rational(s) * va * vb);
    }
  }
  return out;
}

TangentForm tangent_interior(const std::array<Rational, 6>& coords, const TangentForm& a) {
  if (a.degree() < 1) throw std::invalid_argument("interior product needs degree >= 1");
  TangentForm out(a.degree() - 1);
  for (const auto& [m, v] : a.values()) {
    int position = 0;
    for (int slot : mask_axes(m)) {
      const Rational& c = coords[slot - 1];
      if (c != 0) {
        Rational term = c * v;
        if (position % 2 == 1) term = -term;
        out.add_value(static_cast<Mask>(m & ~(1u << (slot - 1))), std::move(term));
      }
      ++position;
    }
  }
  return out;
}

std::array<Rational, 6> frame_coords(const TangentFrame& frame, const ImVector& y) {
  if (metric(frame.base, y) != 0) throw std::invalid_argument("vector not tangent to frame");
  std::array<Rational, 6> rhs;
  for (int i = 0; i < 6; ++i) rhs[i] = metric(frame.basis[i], y);
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) {
    Rational acc(0);
    for (int j = 0; j < 6; ++j) acc += frame.gram_inverse(i, j) * rhs[j];
    out[i] = std::move(acc);
  }
  return out;
}

Rational tangent_form_value(const TangentForm& a,
                            std::span<const std::array<Rational, 6>> coords) {
  if (static_cast<int>(coords.size()) != a.degree()) {
    throw std::invalid_argument("tangent_form_value arity mismatch");
  }
  Rational out(0);
  for (const auto& [m, v] : a.values()) {
    const auto slots = mask_axes(m);
    Mat<Rational> sub(slots.size(), slots.size());
    for (std::size_t r = 0; r < slots.size(); ++r) {
      for (std::size_t c = 0; c < coords.size(); ++c) sub(r, c) = coords[c][slots[r] - 1];
    }
    out += v * determinant(sub);
  }
  return out;
}

namespace {

std::vector<Mask> masks_of_degree(int width, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (1u << width); ++m) {
    if (mask_degree(m) == degree) out.push_back(m);
  }
  return out;
}

// Evaluates a constant-coefficient ambient form on chosen frame vectors.
Rational eval_on_frame(const PolyForm& a, const TangentFrame& frame, Mask slots,
                       bool lead_with_normal) {
  std::vector<ImVector> args;
  if (lead_with_normal) args.push_back(frame.base);
  for (int s : mask_axes(slots)) args.push_back(frame.basis[s - 1]);
  const Rational7 zero{};
  return form_value(a, zero, args);
}

} // namespace

FrameRestriction restrict_form(const PolyForm& a, const TangentFrame& frame) {
  if (a.degree() > 6) {
    throw std::invalid_argument("hyperplane restriction needs degree <= 6");
  }
  const PolyForm at = a.at_point(frame.base.coeffs());
  const int k = a.degree();
  FrameRestriction out{TangentForm(k), TangentForm(k > 0 ? k - 1 : 0)};
  for (Mask m : masks_of_degree(6, k)) {
    out.tangential.add_value(m, eval_on_frame(at, frame, m, false));
  }
  if (k > 0) {
    for (Mask m : masks_of_degree(6, k - 1)) {
      out.normal.add_value(m, eval_on_frame(at, frame, m, true));
    }
  }
  return out;
}

namespace {

// Inverse of the column matrix [n | b_1 .. b_6]; its rows are the dual
// coframe covectors.
Mat<Rational> coframe_matrix(const TangentFrame& frame) {
  Mat<Rational> cols(7, 7);
  for (int r = 1; r <= 7; ++r) {
    cols(r - 1, 0) = frame.base.coeff(r);
    for (int j = 0; j < 6; ++j) cols(r - 1, j + 1) = frame.basis[j].coeff(r);
  }
  auto inv = inverse(cols);
  if (!inv) throw std::invalid_argument("frame does not span with its normal");
  return *inv;
}

} // namespace

PolyForm normal_covector(const TangentFrame& frame) {
  const Mat<Rational> inv = coframe_matrix(frame);
  PolyForm out(1);
  for (int axis = 1; axis <= 7; ++axis) {
    out.add_term(mask_of({axis}), Poly7::constant(inv(0, axis - 1)));
  }
  return out;
}

PolyForm ambient_extension(const TangentForm& a, const TangentFrame& frame) {
  const Mat<Rational> invmat = coframe_matrix(frame);
  const auto* inv = &invmat;
  // Row j+1 of the inverse is the covector dual to b_{j+1}.
  std::array<PolyForm, 6> covector{PolyForm(1), PolyForm(1), PolyForm(1),
                                   PolyForm(1), PolyForm(1), PolyForm(1)};
  for (int j = 0; j < 6; ++j) {
    for (int axis = 1; axis <= 7; ++axis) {
      covector[j].add_term(mask_of({axis}), Poly7::constant((*inv)(j + 1, axis - 1)));
    }
  }
  PolyForm out(a.degree());
  for (const auto& [m, v] : a.values()) {
    PolyForm prod = PolyForm::scalar(Poly7::constant(v));
    for (int s : mask_axes(m)) prod = wedge(prod, covector[s - 1]);
    out += prod;
  }
  return out;
}

TangentForm hodge_sphere(const TangentForm& a, const TangentFrame& frame) {
  const int k = a.degree();
  TangentForm out(6 - k);
  constexpr Mask kFull6 = 0x3f;
  for (Mask m : masks_of_degree(6, k)) {
    // g_S(b^I, a) with the covector metric = inverse Gram, as a sum of
    // k x k minors of the inverse Gram matrix.
    Rational pairing(0);
    const auto rows = mask_axes(m);
    for (const auto& [mj, v] : a.values()) {
      const auto cols = mask_axes(mj);
      Mat<Rational> minor(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          minor(r, c) = frame.gram_inverse(rows[r] - 1, cols[c] - 1);
        }
      }
      pairing += v * determinant(minor);
    }
    if (pairing == 0) continue;
    const Mask comp = static_cast<Mask>(kFull6 & ~m);
    out.add_value(comp, Rational(wedge_sign(m, comp)) * pairing * frame.volume);
  }
  return out;
}

TangentForm hodge_sphere_via_ambient(const TangentForm& a, const TangentFrame& frame) {
  const PolyForm ambient = ambient_extension(a, frame);
  PolyForm starred = interior(PolyVectorField::constant(frame.base), hodge_ambient(ambient));
  if (a.degree() % 2 == 1) starred = -starred;
  starred *= frame.normal_square;
  return restrict_form(starred, frame).tangential;
}

PolyForm random_polyform(int degree, int coeff_degree, SubstreamRng& rng) {
  PolyForm out(degree);
  for (Mask m = 0; m < 0x80; ++m) {
    if (mask_degree(m) != degree) continue;
    if (rng.int_in(0, 2) != 0) continue;  // keep the form sparse
    Poly7 c = Poly7::constant(rng.rational(5, 3));
    for (int d = 0; d < coeff_degree; ++d) {
      if (rng.int_in(0, 1) == 0) c *= Poly7::variable(static_cast<int>(rng.int_in(1, 7)));
    }
    out.add_term(m, std::move(c));
  }
  return out;
}

} // namespace cayley
