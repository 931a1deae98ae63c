#include "orbicurve/abelian.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orbicurve {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: entries length != rows * cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::vector<mpz_class> IntMatrix::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t limit = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = min_abs_entry(t);
      if (!pivot) break;
      move_to_pivot(t, *pivot);
      reduce_at(t);
      if (d_(t, t) < 0) negate_row(t);
    }
    return {std::move(d_), std::move(u_), std::move(v_)};
  }

 private:
  using Pos = std::pair<std::size_t, std::size_t>;

  std::optional<Pos> min_abs_entry(std::size_t t) const {
    std::optional<Pos> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        mpz_class a = abs(d_(i, j));
        if (!best || a < best_abs) {
          best = Pos{i, j};
          best_abs = std::move(a);
        }
      }
    }
    return best;
  }

  void move_to_pivot(std::size_t t, Pos p) {
    if (p.first != t) swap_rows(t, p.first);
    if (p.second != t) swap_cols(t, p.second);
  }

  // Clears row t and column t, then enforces that the pivot divides every
  // entry of the trailing submatrix.
  void reduce_at(std::size_t t) {
    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (d_(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (d_(t, j) != 0) remainder = true;
      }
      if (remainder) {
        // A smaller nonzero entry now sits in row t or column t.
        Pos best{t, t};
        mpz_class best_abs = abs(d_(t, t));
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
          if (d_(t, j) != 0 && abs(d_(t, j)) < best_abs) {
            best = {t, j};
            best_abs = abs(d_(t, j));
          }
        }
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
          if (d_(i, t) != 0 && abs(d_(i, t)) < best_abs) {
            best = {i, t};
            best_abs = abs(d_(i, t));
          }
        }
        move_to_pivot(t, best);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < d_.rows() && !fixed; ++i) {
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) return;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += k * d_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }

  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += k * d_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(t, j) = -d_(t, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

std::string to_string(const AbelianGroup& a) {
  std::ostringstream os;
  bool first = true;
  if (a.rank > 0) {
    os << "Z";
    if (a.rank > 1) os << "^" << a.rank;
    first = false;
  }
  for (const auto& d : a.torsion) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  AbelianGroup a;
  std::size_t nonzero = 0;
  for (const auto& d : snf.d.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) a.torsion.push_back(d);
  }
  a.rank = relations.cols() - nonzero;
  return a;
}

AbelianGroup abelian_from_cyclic_orders(const std::vector<mpz_class>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = abs(orders[i]);
  return cokernel(m);
}

AbelianGroup abelianization(const Signature& sig) {
  require_canonical(sig);
  const std::size_t n = sig.n();
  if (sig.r >= 1) {
    std::vector<mpz_class> orders(sig.m.begin(), sig.m.end());
    AbelianGroup a = abelian_from_cyclic_orders(orders);
    a.rank += static_cast<std::size_t>(2 * sig.g + sig.r - 1);
    return a;
  }
  // Z^n modulo <m_i e_i> and <sum e_i>.
  IntMatrix rel(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    rel(i, i) = sig.m[i];
    rel(n, i) = 1;
  }
  AbelianGroup a = cokernel(rel);
  a.rank += static_cast<std::size_t>(2 * sig.g);
  return a;
}

IntMatrix exponent_matrix(const FinitePresentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Letter& l : p.relators()[i]) m(i, l.generator) += l.exponent;
  return m;
}

AbelianGroup abelianization_of_presentation(const FinitePresentation& p) {
  return cokernel(exponent_matrix(p));
}

}  // namespace orbicurve
