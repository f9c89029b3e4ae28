#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wog/checked.hpp"

namespace wog {

using IntegerVector = std::vector<mpz_class>;
using RationalVector = std::vector<mpq_class>;

// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  IntegerMatrix select_columns(const std::vector<std::size_t> &cols) const;
  IntegerMatrix transpose() const;

  // Matrix-vector product in checked int64 arithmetic.
  IntVec times(const IntVec &v) const;

  bool operator==(const IntegerMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

std::int64_t to_int64(const mpz_class &x);
IntVec to_int64(const IntegerVector &v);
IntegerVector to_mpz(const IntVec &v);

mpz_class determinant(const IntegerMatrix &m);

// Determinant of the square submatrix left after deleting the given rows and
// columns (0-based). Throws InputError if the remainder is not square.
mpz_class minor(const IntegerMatrix &m, const std::vector<std::size_t> &rows_removed,
                const std::vector<std::size_t> &cols_removed);

std::size_t rank(const IntegerMatrix &m);

// Basis of the rational null space, one vector per free column of the
// reduced row echelon form (free entry 1).
std::vector<RationalVector> kernel_basis(const IntegerMatrix &m);
std::size_t kernel_dimension(const IntegerMatrix &m);

// Scalar multiple with integer entries, content 1 and positive entry at the
// lowest nonzero index. Throws InputError for the zero vector.
IntegerVector primitive_integer_vector(const RationalVector &v);
IntegerVector primitive_integer_vector(const IntegerVector &v);

// Z-basis of ker(m) ∩ Z^cols in row echelon form: leading entries positive
// and strictly increasing in position.
std::vector<IntegerVector> integer_kernel_basis(const IntegerMatrix &m);

// Row echelon form of a set of integer row vectors under unimodular row
// operations; zero rows are dropped.
std::vector<IntegerVector> integer_echelon(std::vector<IntegerVector> rows);

// LLL reduction (delta = 3/4) of linearly independent integer vectors.
std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> basis);

} // namespace wog
