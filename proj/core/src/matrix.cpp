#include "strata/matrix.hpp"

#include <sstream>

#include "strata/errors.hpp"

namespace strata {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> data) {
  rows_ = static_cast<int>(data.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(data.begin()->size());
  entries_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : data) {
    if (static_cast<int>(row.size()) != cols_)
      throw ShapeError("ragged matrix initializer");
    for (const auto& v : row) entries_.push_back(v);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::zero(int rows, int cols) { return RatMatrix(rows, cols); }

bool RatMatrix::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::col(int c) const {
  RatMatrix v(rows_, 1);
  for (int r = 0; r < rows_; ++r) v.at(r, 0) = at(r, c);
  return v;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << print_rational(at(r, c));
  }
  os << "] (" << rows_ << "x" << cols_ << ")";
  return os.str();
}

RatMatrix compose(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("compose: shape mismatch between " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  RatMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        p.at(i, j) += aik * b.at(k, j);
      }
    }
  return p;
}

static void check_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape mismatch between " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  check_same_shape(a, b, "add");
  RatMatrix s(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c) + b.at(r, c);
  return s;
}

RatMatrix sub(const RatMatrix& a, const RatMatrix& b) {
  check_same_shape(a, b, "sub");
  RatMatrix s(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c) - b.at(r, c);
  return s;
}

RatMatrix scale(const Rational& c, const RatMatrix& a) {
  RatMatrix s(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int j = 0; j < a.cols(); ++j) s.at(r, j) = c * a.at(r, j);
  return s;
}

RatMatrix negate(const RatMatrix& a) { return scale(Rational(-1), a); }

namespace {

// Row-reduced echelon form; returns pivot column indices.
std::vector<int> rref_in_place(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatMatrix kernel_basis(const RatMatrix& a) {
  RatMatrix r = a;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  int dim = a.cols() - static_cast<int>(pivots.size());
  RatMatrix basis(a.cols(), dim);
  int out = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(f, out) = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis.at(pivots[pr], out) = -r.at(static_cast<int>(pr), f);
    // scale so the leading (first nonzero) entry is 1
    for (int row = 0; row < a.cols(); ++row) {
      if (basis.at(row, out) != 0) {
        Rational inv = Rational(1) / basis.at(row, out);
        if (inv != 1)
          for (int rr = row; rr < a.cols(); ++rr) basis.at(rr, out) *= inv;
        break;
      }
    }
    ++out;
  }
  return basis;
}

int rank(const RatMatrix& a) {
  RatMatrix r = a;
  return static_cast<int>(rref_in_place(r).size());
}

Nilpotency is_nilpotent(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw ShapeError("is_nilpotent: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", not square");
  if (a.rows() == 0) return {true, 0};
  RatMatrix power = a;
  for (int k = 1; k <= a.rows(); ++k) {
    if (power.is_zero()) return {true, k};
    if (k < a.rows()) power = compose(power, a);
  }
  return {false, 0};
}

Invertibility is_invertible(const RatMatrix& a) {
  if (a.rows() != a.cols()) return {false, RatMatrix()};
  int n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] >= n))
    return {false, RatMatrix()};
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  if (!compose(a, inv).is_identity())
    throw ShapeError("is_invertible: inverse failed its verification product");
  return {true, inv};
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) s.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return s;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row count mismatch");
  RatMatrix s(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c) s.at(r, a.cols() + c) = b.at(r, c);
  }
  return s;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: column count mismatch");
  RatMatrix s(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) s.at(a.rows() + r, c) = b.at(r, c);
  return s;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row count mismatch");
  RatMatrix aug = hstack(a, b);
  std::vector<int> pivots = rref_in_place(aug);
  // a pivot in the right block means an inconsistent row
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    for (int c = 0; c < b.cols(); ++c)
      x.at(pivots[pr], c) = aug.at(static_cast<int>(pr), a.cols() + c);
  return x;
}

RatMatrix column_space_canonical(const RatMatrix& a) {
  RatMatrix t = a.transpose();
  std::vector<int> pivots = rref_in_place(t);
  int d = static_cast<int>(pivots.size());
  RatMatrix out(a.rows(), d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < a.rows(); ++r) out.at(r, c) = t.at(c, r);
  return out;
}

std::string print_matrix_literal(const RatMatrix& a) {
  std::ostringstream os;
  os << a.rows() << " " << a.cols() << "\n";
  if (a.cols() == 0) return os.str();  // no row lines for zero-width matrices
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c)
      os << (c ? " " : "") << print_rational(a.at(r, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace strata
