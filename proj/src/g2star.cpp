#include "cayley/g2star.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley {

namespace {

// Entry recipes for the block-form generator matrix: rat * a_k plus
// sqrt2_coeff * sqrt2 * a_k, accumulated per entry.
struct EntryTerm {
  int row;        // 1..7
  int col;        // 1..7
  int param;      // 1..14
  int rat;        // rational multiplier
  int sqrt2;      // sqrt2 multiplier
};

const EntryTerm kEntries[] = {
    // Row 1
    {1, 1, 1, -1, 0}, {1, 1, 4, -1, 0}, {1, 2, 5, 1, 0},  {1, 3, 6, 1, 0},
    {1, 4, 12, 0, -1}, {1, 6, 11, -1, 0}, {1, 7, 10, 1, 0},
    // Row 2
    {2, 1, 7, 1, 0},  {2, 2, 1, 1, 0},  {2, 3, 2, 1, 0},  {2, 4, 13, 0, -1},
    {2, 5, 11, 1, 0}, {2, 7, 9, -1, 0},
    // Row 3
    {3, 1, 8, 1, 0},  {3, 2, 3, 1, 0},  {3, 3, 4, 1, 0},  {3, 4, 14, 0, -1},
    {3, 5, 10, -1, 0}, {3, 6, 9, 1, 0},
    // Row 4
    {4, 1, 9, 0, -1}, {4, 2, 10, 0, -1}, {4, 3, 11, 0, -1}, {4, 5, 12, 0, 1},
    {4, 6, 13, 0, 1}, {4, 7, 14, 0, 1},
    // Row 5
    {5, 2, 14, 1, 0}, {5, 3, 13, -1, 0}, {5, 4, 9, 0, 1},  {5, 5, 1, 1, 0},
    {5, 5, 4, 1, 0},  {5, 6, 7, -1, 0},  {5, 7, 8, -1, 0},
    // Row 6
    {6, 1, 14, -1, 0}, {6, 3, 12, 1, 0}, {6, 4, 10, 0, 1}, {6, 5, 5, -1, 0},
    {6, 6, 1, -1, 0},  {6, 7, 3, -1, 0},
    // Row 7
    {7, 1, 13, 1, 0}, {7, 2, 12, -1, 0}, {7, 4, 11, 0, 1}, {7, 5, 6, -1, 0},
    {7, 6, 2, -1, 0}, {7, 7, 4, -1, 0},
};

QuadExt form3_value(const QuadForm3& w, int p, int q, int r) {
  std::array<int, 3> idx{p, q, r};
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) return QuadExt(0);
  int sign = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2 - i; ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  auto it = w.find(idx);
  if (it == w.end()) return QuadExt(0);
  return sign > 0 ? it->second : -it->second;
}

std::size_t flat(int row, int col) { return static_cast<std::size_t>(row * 7 + col); }

} // namespace

Mat<Rational> null_metric() {
  Mat<Rational> g(7, 7);
  g(0, 4) = g(4, 0) = -1;
  g(1, 5) = g(5, 1) = -1;
  g(2, 6) = g(6, 2) = -1;
  g(3, 3) = -1;
  return g;
}

QuadForm3 omega0() {
  QuadForm3 w;
  w[{1, 2, 3}] = QuadExt::sqrt2();
  w[{5, 6, 7}] = -QuadExt::sqrt2();
  // e^4 ^ e^{1 5} = -e^{145}, likewise for the other two terms.
  w[{1, 4, 5}] = QuadExt(-1);
  w[{2, 4, 6}] = QuadExt(-1);
  w[{3, 4, 7}] = QuadExt(-1);
  return w;
}

G2Element build_element(const std::array<Rational, 14>& a) {
  G2Element out{a, Mat<QuadExt>(7, 7)};
  for (const auto& t : kEntries) {
    const Rational& p = a[t.param - 1];
    out.matrix(t.row - 1, t.col - 1) += QuadExt(t.rat * p, t.sqrt2 * p);
  }
  return out;
}

QuadForm3 derivation_action(const Mat<QuadExt>& a, const QuadForm3& w) {
  QuadForm3 out;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        QuadExt acc(0);
        for (int m = 1; m <= 7; ++m) {
          acc += a(m - 1, i - 1) * form3_value(w, m, j, k);
          acc += a(m - 1, j - 1) * form3_value(w, i, m, k);
          acc += a(m - 1, k - 1) * form3_value(w, i, j, m);
        }
        if (!acc.is_zero()) out[{i, j, k}] = acc;
      }
    }
  }
  return out;
}

bool form3_is_zero(const QuadForm3& w) {
  for (const auto& [idx, v] : w) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool is_metric_skew(const Mat<QuadExt>& a, const Mat<Rational>& g) {
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      QuadExt acc(0);
      for (int k = 0; k < 7; ++k) {
        acc += a(k, i) * QuadExt(g(k, j), Rational(0));
        acc += QuadExt(g(i, k), Rational(0)) * a(k, j);
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

Mat<QuadExt> bracket(const Mat<QuadExt>& a, const Mat<QuadExt>& b) {
  return a * b - b * a;
}

namespace {

// 98x14 rational matrix of the parametrization: two rows per matrix entry
// (rational and sqrt2 components), one column per parameter.
Mat<Rational> parameter_matrix() {
  Mat<Rational> m(98, 14);
  for (const auto& t : kEntries) {
    const std::size_t base = 2 * flat(t.row - 1, t.col - 1);
    m(base, t.param - 1) += t.rat;
    m(base + 1, t.param - 1) += t.sqrt2;
  }
  return m;
}

} // namespace

std::optional<std::array<Rational, 14>> bracket_closure(const std::array<Rational, 14>& a,
                                                        const std::array<Rational, 14>& b) {
  static const Mat<Rational> pm = parameter_matrix();
  const Mat<QuadExt> c = bracket(build_element(a).matrix, build_element(b).matrix);
  std::vector<Rational> rhs(98);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      rhs[2 * flat(i, j)] = c(i, j).rational_part();
      rhs[2 * flat(i, j) + 1] = c(i, j).sqrt2_part();
    }
  }
  const auto x = solve(pm, rhs);
  if (!x) return std::nullopt;
  std::array<Rational, 14> out;
  std::copy(x->begin(), x->end(), out.begin());
  if (!(build_element(out).matrix == c)) return std::nullopt;
  return out;
}

StabilizerSolution solve_stabilizer() {
  const Mat<Rational> g = null_metric();
  const QuadForm3 w = omega0();
  // Unknowns: the 49 entries of A over Q(sqrt2).
  Mat<QuadExt> sys(28 + 35, 49);
  std::size_t row = 0;
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      // (A^T G + G A)_{ij} = sum_k A(k,i) G(k,j) + G(i,k) A(k,j)
      for (int k = 0; k < 7; ++k) {
        if (g(k, j) != 0) sys(row, flat(k, i)) += QuadExt(g(k, j), Rational(0));
        if (g(i, k) != 0) sys(row, flat(k, j)) += QuadExt(g(i, k), Rational(0));
      }
      ++row;
    }
  }
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        for (int m = 1; m <= 7; ++m) {
          sys(row, flat(m - 1, i - 1)) += form3_value(w, m, j, k);
          sys(row, flat(m - 1, j - 1)) += form3_value(w, i, m, k);
          sys(row, flat(m - 1, k - 1)) += form3_value(w, i, j, m);
        }
        ++row;
      }
    }
  }
  StabilizerSolution out;
  const auto basis = nullspace(sys);
  out.dimension = basis.size();
  for (const auto& v : basis) {
    Mat<QuadExt> m(7, 7);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) m(i, j) = v[flat(i, j)];
    }
    out.basis.push_back(std::move(m));
  }
  return out;
}

bool spans_match(const StabilizerSolution& solution) {
  if (solution.dimension != 14) return false;
  Mat<QuadExt> stacked(solution.basis.size() + 14, 49);
  std::size_t row = 0;
  for (const auto& m : solution.basis) {
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) stacked(row, flat(i, j)) = m(i, j);
    }
    ++row;
  }
  Mat<QuadExt> generators(14, 49);
  for (int k = 0; k < 14; ++k) {
    std::array<Rational, 14> unit{};
    unit[k] = 1;
    const auto gen = build_element(unit).matrix;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        stacked(row, flat(i, j)) = gen(i, j);
        generators(k, flat(i, j)) = gen(i, j);
      }
    }
    ++row;
  }
  return rank(generators) == 14 && rank(stacked) == 14;
}

} // namespace cayley
