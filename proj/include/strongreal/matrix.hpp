#pragma once

// Dense matrices over a FieldCtx with deterministic Gaussian elimination
// (pivot = first nonzero entry in column order).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"
#include "strongreal/poly.hpp"

namespace strongreal {

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldCtx& ctx, unsigned rows, unsigned cols) : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(const FieldCtx& ctx, unsigned n) {
    Matrix m(ctx, n, n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }

  static Matrix from_rows(const FieldCtx& ctx, const std::vector<std::vector<Elem>>& rows) {
    require(!rows.empty(), "matrix needs at least one row");
    Matrix m(ctx, static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned i = 0; i < m.rows_; ++i) {
      require(rows[i].size() == m.cols_, "ragged matrix rows");
      for (unsigned j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Block diagonal sum.
  static Matrix direct_sum(const std::vector<Matrix>& blocks) {
    require(!blocks.empty(), "direct sum of nothing");
    unsigned n = 0, c = 0;
    for (const auto& b : blocks) {
      n += b.rows_;
      c += b.cols_;
    }
    Matrix m(blocks[0].ctx(), n, c);
    unsigned r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
      for (unsigned i = 0; i < b.rows_; ++i) {
        for (unsigned j = 0; j < b.cols_; ++j) m(r0 + i, c0 + j) = b(i, j);
      }
      r0 += b.rows_;
      c0 += b.cols_;
    }
    return m;
  }

  const FieldCtx& ctx() const { return *ctx_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(unsigned i, unsigned j) { return a_[i * cols_ + j]; }
  Elem operator()(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, "matrix shapes do not match");
    const FieldCtx& f = x.ctx();
    Matrix r(f, x.rows_, y.cols_);
    for (unsigned i = 0; i < x.rows_; ++i) {
      for (unsigned k = 0; k < x.cols_; ++k) {
        const Elem a = x(i, k);
        if (a.code == 0) continue;
        for (unsigned j = 0; j < y.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(a, y(k, j)));
      }
    }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shapes do not match");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.ctx().add(x.a_[i], y.a_[i]);
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shapes do not match");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.ctx().sub(x.a_[i], y.a_[i]);
    return r;
  }

  Matrix scaled(Elem c) const {
    Matrix r = *this;
    for (auto& e : r.a_) e = ctx().mul(c, e);
    return r;
  }

  Matrix transpose() const {
    Matrix r(ctx(), cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i) {
      for (unsigned j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  /// Entrywise a -> a^q.
  Matrix bar() const {
    Matrix r = *this;
    for (auto& e : r.a_) e = ctx().conj(e);
    return r;
  }

  /// Conjugate transpose.
  Matrix star() const { return bar().transpose(); }

  bool is_zero() const {
    for (auto e : a_) {
      if (e.code != 0) return false;
    }
    return true;
  }

  bool is_identity() const { return square() && *this == identity(ctx(), rows_); }

  /// Canonical hash key: entry codes as bytes.
  std::string key() const {
    const bool small = ctx().size() <= 256;
    std::string s;
    s.reserve(a_.size() * (small ? 1 : 8));
    for (auto e : a_) {
      if (small) {
        s.push_back(static_cast<char>(e.code));
      } else {
        for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((e.code >> (8 * b)) & 0xFFU));
      }
    }
    return s;
  }

  std::string to_string() const {
    std::string out = "[";
    for (unsigned i = 0; i < rows_; ++i) {
      out += i == 0 ? "[" : ", [";
      for (unsigned j = 0; j < cols_; ++j) {
        if (j != 0) out += " ";
        out += ctx().to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  const FieldCtx* ctx_ = nullptr;
  unsigned rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

namespace linalg {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<unsigned> rref(Matrix& m) {
  const FieldCtx& f = m.ctx();
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
    unsigned piv = row;
    while (piv < m.rows() && m(piv, col).code == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Elem inv = f.inv(m(row, col));
    for (unsigned j = 0; j < m.cols(); ++j) m(row, j) = f.mul(inv, m(row, j));
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).code == 0) continue;
      const Elem c = m(i, col);
      for (unsigned j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline unsigned rank(Matrix m) { return static_cast<unsigned>(rref(m).size()); }

inline unsigned nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Basis of {x : m x = 0}, one column vector per basis element.
inline std::vector<std::vector<Elem>> kernel(Matrix m) {
  const FieldCtx& f = m.ctx();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (unsigned free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(static_cast<unsigned>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  require(m.square(), "inverse of a non-square matrix");
  const unsigned n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.ctx(), n, 2 * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.ctx().one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.ctx(), n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

inline Matrix inverse_or_throw(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) fail(ErrorKind::InvalidArgument, "matrix is singular");
  return *inv;
}

inline bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

/// Characteristic polynomial det(t I - m), via reduction to upper Hessenberg
/// form by similarity and the standard determinant recurrence.
inline MonicPoly charpoly(Matrix h) {
  require(h.square(), "characteristic polynomial of a non-square matrix");
  const FieldCtx& f = h.ctx();
  const unsigned n = h.rows();
  for (unsigned col = 0; col + 2 < n; ++col) {
    unsigned piv = col + 1;
    while (piv < n && h(piv, col).code == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (unsigned j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (unsigned i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    const Elem inv = f.inv(h(col + 1, col));
    for (unsigned i = col + 2; i < n; ++i) {
      const Elem c = f.mul(h(i, col), inv);
      if (c.code == 0) continue;
      for (unsigned j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(c, h(col + 1, j)));
      for (unsigned r = 0; r < n; ++r) h(r, col + 1) = f.add(h(r, col + 1), f.mul(c, h(r, i)));
    }
  }
  // p_k = characteristic polynomial of the leading k x k block, low degree first.
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {f.one()};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<Elem> next(k + 1, f.zero());
    const Elem d = h(k - 1, k - 1);
    for (unsigned i = 0; i < k; ++i) {
      next[i + 1] = f.add(next[i + 1], p[k - 1][i]);
      next[i] = f.sub(next[i], f.mul(d, p[k - 1][i]));
    }
    Elem prod = f.one();
    for (unsigned i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.code == 0) break;
      const Elem c = f.mul(prod, h(i, k - 1));
      for (unsigned j = 0; j < p[i].size(); ++j) next[j] = f.sub(next[j], f.mul(c, p[i][j]));
    }
    p[k] = std::move(next);
  }
  return MonicPoly(p[n]);
}

/// f(m).
inline Matrix evaluate(const MonicPoly& poly, const Matrix& m) {
  const FieldCtx& f = m.ctx();
  Matrix acc(f, m.rows(), m.cols());
  const Matrix id = Matrix::identity(f, m.rows());
  for (unsigned i = poly.degree() + 1; i-- > 0;) acc = acc * m + id.scaled(poly[i]);
  return acc;
}

/// Companion matrix of a monic polynomial.
inline Matrix companion(const FieldCtx& f, const MonicPoly& poly) {
  const unsigned d = poly.degree();
  Matrix c(f, d, d);
  for (unsigned i = 1; i < d; ++i) c(i, i - 1) = f.one();
  for (unsigned i = 0; i < d; ++i) c(i, d - 1) = f.neg(poly[i]);
  return c;
}

}  // namespace linalg
}  // namespace strongreal
