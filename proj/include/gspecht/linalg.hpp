#pragma once

// Dense exact linear algebra over a field type (PrimeField or RationalField):
// matrices, row-reduced echelon spans with coordinate tracking, inverses,
// polynomials and minimal polynomials.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gspecht/errors.hpp"

namespace gspecht {

template <class Field>
using Vec = std::vector<typename Field::value_type>;

template <class Field>
Vec<Field> zero_vector(const Field& f, std::size_t n) {
  return Vec<Field>(n, f.zero());
}

template <class Field>
bool is_zero_vector(const Field& f, const Vec<Field>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

/// dst += c * src
template <class Field>
void add_scaled(const Field& f, Vec<Field>& dst, const Vec<Field>& src, const typename Field::value_type& c) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!f.is_zero(src[i])) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec<Field>>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<Field> column(std::size_t j) const {
    Vec<Field> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vec<Field>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const auto& x) { return field_.is_zero(x); });
  }
  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [&](const auto& x) { return !field_.is_zero(x); }));
  }

  Vec<Field> apply(const Vec<Field>& v) const {
    Vec<Field> out(rows_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const auto& a = (*this)(i, j);
        if (!field_.is_zero(a)) out[i] = field_.add(out[i], field_.mul(a, v[j]));
      }
    }
    return out;
  }

  Matrix scaled(const value_type& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = field_.mul(x, c);
    return m;
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ParameterError("Matrix: inner dimension mismatch");
    const Field& f = a.field_;
    Matrix m(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& y = b(k, j);
          if (!f.is_zero(y)) m(i, j) = f.add(m(i, j), f.mul(x, y));
        }
      }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Matrix plus c times the identity.
  Matrix plus_scalar(const value_type& c) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) = field_.add(m(i, i), c);
    return m;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ParameterError("Matrix: shape mismatch");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Fully reduced row-echelon basis of a growing subspace.  Each stored row
/// remembers its expression in terms of the inserted vectors, so membership
/// queries can also return coordinates.
template <class Field>
class Echelon {
 public:
  using value_type = typename Field::value_type;

  Echelon(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t inserted() const { return inserted_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v modulo the span; also returns the combination of inserted
  /// vectors that was subtracted.
  std::pair<Vec<Field>, Vec<Field>> reduce_tracked(Vec<Field> v) const {
    Vec<Field> combo(inserted_, field_.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      add_scaled(field_, v, rows_[k], field_.neg(c));
      for (std::size_t t = 0; t < combos_[k].size(); ++t)
        if (!field_.is_zero(combos_[k][t])) combo[t] = field_.add(combo[t], field_.mul(c, combos_[k][t]));
    }
    return {std::move(v), std::move(combo)};
  }

  Vec<Field> reduce(Vec<Field> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = v[pivots_[k]];
      if (!field_.is_zero(c)) add_scaled(field_, v, rows_[k], field_.neg(c));
    }
    return v;
  }

  bool contains(const Vec<Field>& v) const { return is_zero_vector(field_, reduce(v)); }

  /// Coordinates of v with respect to the inserted vectors, if v is in the span.
  /// Only meaningful when every inserted vector was independent.
  std::optional<Vec<Field>> coordinates(const Vec<Field>& v) const {
    auto [rest, combo] = reduce_tracked(v);
    if (!is_zero_vector(field_, rest)) return std::nullopt;
    return combo;
  }

  /// Inserts v; returns true if it enlarged the span.
  bool insert(const Vec<Field>& v) {
    auto [rest, combo] = reduce_tracked(v);
    std::size_t id = inserted_++;
    for (auto& c : combos_) c.push_back(field_.zero());
    // rest = v - combo.(earlier inserted)  => combination for rest is e_id - combo
    Vec<Field> mine(inserted_, field_.zero());
    for (std::size_t t = 0; t + 1 < inserted_; ++t) mine[t] = field_.neg(combo[t]);
    mine[id] = field_.one();
    auto piv = std::find_if(rest.begin(), rest.end(), [&](const auto& x) { return !field_.is_zero(x); });
    if (piv == rest.end()) return false;
    std::size_t p = static_cast<std::size_t>(piv - rest.begin());
    auto s = field_.inv(rest[p]);
    for (auto& x : rest) x = field_.mul(x, s);
    for (auto& x : mine) x = field_.mul(x, s);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = rows_[k][p];
      if (field_.is_zero(c)) continue;
      add_scaled(field_, rows_[k], rest, field_.neg(c));
      add_scaled(field_, combos_[k], mine, field_.neg(c));
    }
    // keep rows sorted by pivot column
    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(rest));
    combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(mine));
    return true;
  }

  const std::vector<Vec<Field>>& rows() const { return rows_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::size_t inserted_ = 0;
  std::vector<Vec<Field>> rows_;
  std::vector<Vec<Field>> combos_;
  std::vector<std::size_t> pivots_;
};

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  Echelon<Field> e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec<Field> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    e.insert(row);
  }
  return e.rank();
}

template <class Field>
std::optional<Matrix<Field>> try_inverse(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) throw ParameterError("inverse: matrix is not square");
  const Field& f = m.field();
  std::size_t n = m.rows();
  Matrix<Field> a = m;
  Matrix<Field> inv = Matrix<Field>::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    auto s = f.inv(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = f.mul(a(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(a(i, c))) continue;
      auto t = f.neg(a(i, c));
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = f.add(a(i, j), f.mul(t, a(c, j)));
        inv(i, j) = f.add(inv(i, j), f.mul(t, inv(c, j)));
      }
    }
  }
  return inv;
}

template <class Field>
Matrix<Field> inverse(const Matrix<Field>& m) {
  auto r = try_inverse(m);
  if (!r) throw ArithmeticError("inverse: matrix is singular");
  return *r;
}

template <class Field>
Matrix<Field> power(const Matrix<Field>& m, std::size_t k) {
  auto r = Matrix<Field>::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

template <class Field>
bool is_nilpotent(const Matrix<Field>& m) {
  return power(m, m.rows()).is_zero();
}

// ---------------------------------------------------------------------------
// Polynomials, coefficient vectors from low to high degree, no trailing zeros.

template <class Field>
using Poly = std::vector<typename Field::value_type>;

template <class Field>
void trim(const Field& f, Poly<Field>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class Field>
Poly<Field> poly_mul(const Field& f, const Poly<Field>& a, const Poly<Field>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Field> c(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(f, c);
  return c;
}

template <class Field>
Poly<Field> poly_sub(const Field& f, Poly<Field> a, const Poly<Field>& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(f, a);
  return a;
}

/// (quotient, remainder)
template <class Field>
std::pair<Poly<Field>, Poly<Field>> poly_divmod(const Field& f, Poly<Field> a, Poly<Field> b) {
  trim(f, a);
  trim(f, b);
  if (b.empty()) throw ArithmeticError("poly_divmod: division by the zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  Poly<Field> q(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    auto c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  trim(f, a);
  trim(f, q);
  return {q, a};
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
template <class Field>
Poly<Field> poly_inverse_mod(const Field& f, const Poly<Field>& a, const Poly<Field>& m) {
  Poly<Field> r0 = m, r1 = poly_divmod(f, a, m).second;
  Poly<Field> t0, t1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    auto t2 = poly_sub(f, t0, poly_mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw ArithmeticError("poly_inverse_mod: polynomials are not coprime");
  auto s = f.inv(r0[0]);
  for (auto& x : t0) x = f.mul(x, s);
  return poly_divmod(f, t0, m).second;
}

template <class Field>
Matrix<Field> poly_eval(const Poly<Field>& a, const Matrix<Field>& m) {
  const Field& f = m.field();
  Matrix<Field> r(f, m.rows(), m.cols());
  for (std::size_t k = a.size(); k-- > 0;) r = (r * m).plus_scalar(a[k]);
  return r;
}

/// Monic minimal polynomial of a square matrix.
template <class Field>
Poly<Field> minimal_polynomial(const Matrix<Field>& m) {
  const Field& f = m.field();
  std::size_t n = m.rows();
  Echelon<Field> span(f, n * n);
  auto flat = [&](const Matrix<Field>& a) {
    Vec<Field> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a(i, j);
    return v;
  };
  auto pw = Matrix<Field>::identity(f, n);
  for (std::size_t k = 0;; ++k) {
    auto v = flat(pw);
    if (auto c = span.coordinates(v)) {
      // m^k = sum_j c_j m^j
      Poly<Field> p(k + 1, f.zero());
      for (std::size_t j = 0; j < k; ++j) p[j] = f.neg((*c)[j]);
      p[k] = f.one();
      return p;
    }
    span.insert(v);
    pw = pw * m;
  }
}

}  // namespace gspecht
