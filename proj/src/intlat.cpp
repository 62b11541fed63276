#include "qtoric/intlat.hpp"

#include <algorithm>

#include "qtoric/errors.hpp"

namespace qtoric::intlat {
namespace {

// Shared elimination loop. U and V are updated only when non-null.
void diagonalize(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);
  Integer q;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, first in row-major
      // order on ties.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pr == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) return;  // remaining block is zero
      a.swap_rows(t, pr);
      if (u) u->swap_rows(t, pr);
      a.swap_cols(t, pc);
      if (v) v->swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_row_multiple(i, t, q);
        if (u) u->add_row_multiple(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_col_multiple(j, t, q);
        if (v) v->add_col_multiple(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            if (u) u->add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s{IntMatrix::identity(m.rows()), m,
                       IntMatrix::identity(m.cols())};
  diagonalize(s.D, &s.U, &s.V);
  return s;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix a = m;
  diagonalize(a, nullptr, nullptr);
  std::vector<Integer> out;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < n && a(i, i) != 0; ++i) out.push_back(a(i, i));
  return out;
}

AbelianGroupInvariants cokernel(const IntMatrix& relations) {
  AbelianGroupInvariants g;
  const auto factors = invariant_factors(relations);
  g.free_rank = relations.cols() - factors.size();
  for (const auto& d : factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

IntMatrix kernel_basis(const IntMatrix& l) {
  const auto snf = smith_normal_form(l);
  const std::size_t k = snf.rank();
  std::vector<std::size_t> cols;
  for (std::size_t j = k; j < l.cols(); ++j) cols.push_back(j);
  IntMatrix basis = snf.V.select_columns(cols).transpose();
  if (basis.rows() == 0) return IntMatrix(0, l.cols());
  return hermite_row_form(basis);
}

Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_primitive(const IntVector& v) {
  const Integer g = gcd(v);
  if (g == 0) throw DomainError("primitivity of the zero vector is undefined");
  return g == 1;
}

Integer maximal_minor_gcd(const IntMatrix& m) {
  if (m.rows() > m.cols())
    throw ShapeError("maximal minors need rows <= cols, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const auto factors = invariant_factors(m);
  if (factors.size() < m.rows()) return 0;
  Integer prod = 1;
  for (const auto& d : factors) prod *= d;
  return prod;
}

IntMatrix hermite_row_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  std::size_t row = 0;
  Integer g, s, t, q;
  for (std::size_t c = 0; c < a.cols() && row < rows; ++c) {
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      const Integer x = a(row, c);
      const Integer y = a(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
                 y.get_mpz_t());
      const Integer yg = y / g;
      const Integer xg = x / g;
      for (std::size_t j = c; j < a.cols(); ++j) {
        const Integer rj = a(row, j);
        const Integer ij = a(i, j);
        a(row, j) = s * rj + t * ij;
        a(i, j) = xg * ij - yg * rj;
      }
    }
    if (a(row, c) == 0) continue;
    if (a(row, c) < 0) a.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(row, c).get_mpz_t());
      a.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < row; ++i) keep.push_back(i);
  return a.select_rows(keep);
}

IntVector reduce_modulo(const IntMatrix& hermite, IntVector v) {
  if (v.size() != hermite.cols()) throw ShapeError("reduce_modulo: length");
  Integer q;
  for (std::size_t r = 0; r < hermite.rows(); ++r) {
    std::size_t p = 0;
    while (p < hermite.cols() && hermite(r, p) == 0) ++p;
    if (p == hermite.cols()) continue;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), hermite(r, p).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * hermite(r, j);
  }
  return v;
}

std::optional<IntVector> solve_integer(const IntMatrix& b, const IntVector& x) {
  if (x.size() != b.rows())
    throw ShapeError("solve_integer: right-hand side has length " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(b.rows()));
  const auto snf = smith_normal_form(b);
  const IntVector y = snf.U * x;
  const std::size_t k = snf.rank();
  IntVector z(b.cols(), Integer(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < k) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), snf.D(i, i).get_mpz_t()))
        return std::nullopt;
      z[i] = y[i] / snf.D(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * z;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const auto snf = smith_normal_form(m);
  if (snf.D != IntMatrix::identity(m.rows()))
    throw DomainError("matrix is not unimodular");
  return snf.V * snf.U;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace qtoric::intlat
