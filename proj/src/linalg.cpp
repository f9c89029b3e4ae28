#include "wog/linalg.hpp"

#include <algorithm>
#include <utility>

#include "wog/error.hpp"

namespace wog {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t> &cols) const {
  IntegerMatrix out(rows_, cols.size());
  out.row_labels = row_labels;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows_; ++i)
      out(i, j) = (*this)(i, cols[j]);
    if (cols[j] < col_labels.size())
      out.col_labels.push_back(col_labels[cols[j]]);
  }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = (*this)(i, j);
  out.row_labels = col_labels;
  out.col_labels = row_labels;
  return out;
}

IntVec IntegerMatrix::times(const IntVec &v) const {
  if (v.size() != cols_)
    throw InputError("dimension mismatch: vector of length " + std::to_string(v.size()) +
                     " against " + std::to_string(cols_) + " columns");
  IntVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0)
        out[i] = checked_add(out[i], checked_mul(to_int64((*this)(i, j)), v[j]));
  return out;
}

std::int64_t to_int64(const mpz_class &x) {
  if (!x.fits_slong_p())
    throw CapExceeded("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

IntVec to_int64(const IntegerVector &v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = to_int64(v[i]);
  return out;
}

IntegerVector to_mpz(const IntVec &v) {
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = mpz_class(static_cast<long>(v[i]));
  return out;
}

namespace {

// Fraction-free elimination; returns rank, leaves the matrix in echelon form.
std::size_t bareiss(std::vector<std::vector<mpz_class>> &a, int &sign) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<mpz_class>> rows_of(const IntegerMatrix &m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j);
  return a;
}

mpz_class round_nearest(const mpq_class &x) {
  mpq_class shifted = x + mpq_class(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

// Unimodular echelon form on the first `pivot_cols` columns; the operations
// act on whole rows. Returns the number of pivot rows.
std::size_t echelon_in_place(std::vector<IntegerVector> &rows, std::size_t pivot_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      have_pivot = true;
      std::swap(rows[best], rows[r]);
      bool remaining = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0)
          remaining = true;
      }
      if (!remaining)
        break;
    }
    if (!have_pivot)
      continue;
    if (rows[r][c] < 0)
      for (auto &x : rows[r])
        x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  return r;
}

} // namespace

mpz_class determinant(const IntegerMatrix &m) {
  if (m.rows() != m.cols())
    throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0)
    return 1;
  auto a = rows_of(m);
  int sign = 1;
  if (bareiss(a, sign) < m.rows())
    return 0;
  return sign * a.back().back();
}

mpz_class minor(const IntegerMatrix &m, const std::vector<std::size_t> &rows_removed,
                const std::vector<std::size_t> &cols_removed) {
  auto keep = [](std::size_t n, const std::vector<std::size_t> &removed) {
    std::vector<bool> drop(n, false);
    for (auto i : removed) {
      if (i >= n)
        throw InputError("minor: removed index " + std::to_string(i) + " out of range");
      drop[i] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (!drop[i])
        out.push_back(i);
    return out;
  };
  auto rs = keep(m.rows(), rows_removed);
  auto cs = keep(m.cols(), cols_removed);
  if (rs.size() != cs.size())
    throw InputError("minor: remaining submatrix is " + std::to_string(rs.size()) + "x" +
                     std::to_string(cs.size()) + ", not square");
  IntegerMatrix sub(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      sub(i, j) = m(rs[i], cs[j]);
  return determinant(sub);
}

std::size_t rank(const IntegerMatrix &m) {
  auto a = rows_of(m);
  int sign = 1;
  return bareiss(a, sign);
}

std::vector<RationalVector> kernel_basis(const IntegerMatrix &m) {
  const std::size_t n = m.rows(), c = m.cols();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < c; ++j)
      a[i][j] = m(i, j);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < c && r < n; ++j) {
    std::size_t p = r;
    while (p < n && a[p][j] == 0)
      ++p;
    if (p == n)
      continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][j];
    for (auto &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][j] == 0)
        continue;
      mpq_class f = a[i][j];
      for (std::size_t k = j; k < c; ++k)
        a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(c, false);
  for (auto j : pivot_col)
    is_pivot[j] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < c; ++f) {
    if (is_pivot[f])
      continue;
    RationalVector v(c, mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t kernel_dimension(const IntegerMatrix &m) { return m.cols() - rank(m); }

IntegerVector primitive_integer_vector(const RationalVector &v) {
  mpz_class den = 1;
  bool nonzero = false;
  for (const auto &x : v) {
    if (x == 0)
      continue;
    nonzero = true;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!nonzero)
    throw InputError("primitive_integer_vector: zero vector");
  IntegerVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = v[i] * den;
    w[i] = s.get_num();
  }
  return primitive_integer_vector(w);
}

IntegerVector primitive_integer_vector(const IntegerVector &v) {
  mpz_class g = 0;
  for (const auto &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0)
    throw InputError("primitive_integer_vector: zero vector");
  IntegerVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(w[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  for (const auto &x : w) {
    if (x == 0)
      continue;
    if (x < 0)
      for (auto &y : w)
        y = -y;
    break;
  }
  return w;
}

std::vector<IntegerVector> integer_echelon(std::vector<IntegerVector> rows) {
  if (rows.empty())
    return rows;
  std::size_t r = echelon_in_place(rows, rows[0].size());
  rows.resize(r);
  return rows;
}

std::vector<IntegerVector> integer_kernel_basis(const IntegerMatrix &m) {
  const std::size_t n = m.rows(), c = m.cols();
  std::vector<IntegerVector> rows(c, IntegerVector(n + c, mpz_class(0)));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      rows[j][i] = m(i, j);
    rows[j][n + j] = 1;
  }
  std::size_t r = echelon_in_place(rows, n);
  std::vector<IntegerVector> kernel;
  for (std::size_t j = r; j < c; ++j)
    kernel.emplace_back(rows[j].begin() + static_cast<std::ptrdiff_t>(n), rows[j].end());
  return integer_echelon(std::move(kernel));
}

std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> b) {
  const std::size_t n = b.size();
  if (n < 2)
    return b;
  const std::size_t dim = b[0].size();
  std::vector<std::vector<mpq_class>> bstar(n, std::vector<mpq_class>(dim));
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> norm(n);
  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < dim; ++d)
        bstar[i][d] = b[i][d];
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class dot = 0;
        for (std::size_t d = 0; d < dim; ++d)
          dot += mpq_class(b[i][d]) * bstar[j][d];
        mu[i][j] = dot / norm[j];
        for (std::size_t d = 0; d < dim; ++d)
          bstar[i][d] -= mu[i][j] * bstar[j][d];
      }
      norm[i] = 0;
      for (std::size_t d = 0; d < dim; ++d)
        norm[i] += bstar[i][d] * bstar[i][d];
      if (norm[i] == 0)
        throw InputError("lll_reduce: vectors are linearly dependent");
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      mpz_class q = round_nearest(mu[k][jj]);
      if (q == 0)
        continue;
      for (std::size_t d = 0; d < dim; ++d)
        b[k][d] -= q * b[jj][d];
      gram_schmidt();
    }
    if (norm[k] >= (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

} // namespace wog
