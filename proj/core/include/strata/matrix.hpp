#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Dense matrix of exact rationals, row-major.  Zero-dimensional matrices are
// legal and stand for maps to or from the zero space.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> data);

  static RatMatrix identity(int n);
  static RatMatrix zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const RatMatrix& other) const = default;

  RatMatrix transpose() const;
  RatMatrix col(int c) const;

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

struct Nilpotency {
  bool nilpotent = false;
  int index = 0;  // smallest k with a^k = 0, when nilpotent
};

struct Invertibility {
  bool invertible = false;
  RatMatrix inverse;
};

// Exact product a*b; shape mismatch raises ShapeError naming both operands.
RatMatrix compose(const RatMatrix& a, const RatMatrix& b);

RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const Rational& c, const RatMatrix& a);
RatMatrix negate(const RatMatrix& a);

// Basis of the right kernel, as matrix columns.  Normalized so the output is
// deterministic: vectors ordered by leading index, leading entry 1.
RatMatrix kernel_basis(const RatMatrix& a);

int rank(const RatMatrix& a);

Nilpotency is_nilpotent(const RatMatrix& a);

Invertibility is_invertible(const RatMatrix& a);

// Block diagonal sum.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

// Exact solution X of a*X = b, or nullopt when the system is inconsistent.
// When the solution is not unique the free variables are set to zero.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

// Canonical reduced-column-echelon basis of the column span (zero columns
// dropped).  Two matrices span the same subspace iff their forms are equal.
RatMatrix column_space_canonical(const RatMatrix& a);

// Matrix literal:  "rows cols" header line, then one line per row of p/q
// tokens (q omitted when 1).
std::string print_matrix_literal(const RatMatrix& a);

}  // namespace strata
