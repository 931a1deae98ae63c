#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "orbicurve/presentation.hpp"
#include "orbicurve/signature.hpp"

namespace orbicurve {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_diagonal() const;
  /// min(rows, cols) diagonal entries.
  std::vector<mpz_class> diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Exact determinant by fraction-free elimination. Requires a square matrix.
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

/// U * M * V = D with D diagonal, non-negative, d1 | d2 | ... Pivots are
/// chosen as the nonzero entry of least absolute value, first in row-major
/// order on ties.
SmithForm smith_normal_form(const IntMatrix& m);

/// Z^rank x Z/d1 x ... x Z/dt with 2 <= d1 | d2 | ... | dt.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string to_string(const AbelianGroup& a);

/// Cokernel of the row lattice of M in Z^cols, in canonical form.
AbelianGroup cokernel(const IntMatrix& relations);
/// Canonical form of Z/c1 x ... x Z/ck; entries 0 contribute free rank and
/// entries 1 vanish.
AbelianGroup abelian_from_cyclic_orders(const std::vector<mpz_class>& orders);

AbelianGroup abelianization(const Signature& sig);
/// Exponent-sum matrix of the relators, reduced by Smith normal form.
AbelianGroup abelianization_of_presentation(const FinitePresentation& p);
IntMatrix exponent_matrix(const FinitePresentation& p);

}  // namespace orbicurve
