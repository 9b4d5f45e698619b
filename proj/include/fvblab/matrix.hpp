#ifndef FVBLAB_MATRIX_HPP_
#define FVBLAB_MATRIX_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvblab/scalars.hpp"

namespace fvblab {

// Dense square matrix over any field scalar that provides arithmetic,
// is_zero, inverse, and zero_like/one_like context carriers.
template <class S>
struct Matrix {
  int n = 0;
  std::vector<S> a;

  Matrix() = default;
  Matrix(int dim, const S& fill) : n(dim), a(size_t(dim) * size_t(dim), fill) {}

  static Matrix identity(int dim, const S& like) {
    Matrix m(dim, like.zero_like());
    for (int i = 0; i < dim; ++i)
      m.at(i, i) = like.one_like();
    return m;
  }

  S& at(int i, int j) { return a[size_t(i) * size_t(n) + size_t(j)]; }
  const S& at(int i, int j) const { return a[size_t(i) * size_t(n) + size_t(j)]; }

  const S& sample() const {
    if (a.empty())
      throw std::logic_error("empty matrix has no scalar context");
    return a[0];
  }

  Matrix operator*(const Matrix& o) const {
    if (n != o.n)
      throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(n, sample().zero_like());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const S& x = at(i, k);
        if (x.is_zero())
          continue;
        for (int j = 0; j < n; ++j) {
          const S& y = o.at(k, j);
          if (!y.is_zero())
            r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (n != o.n)
      throw std::invalid_argument("matrix dimension mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i)
      r.a[i] += o.a[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (n != o.n)
      throw std::invalid_argument("matrix dimension mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i)
      r.a[i] -= o.a[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a)
      x = -x;
    return r;
  }

  Matrix scaled(const S& c) const {
    Matrix r = *this;
    for (auto& x : r.a)
      x = x * c;
    return r;
  }

  Matrix pow(int k) const {
    if (k < 0)
      throw std::invalid_argument("negative matrix power");
    Matrix r = identity(n, sample());
    for (int i = 0; i < k; ++i)
      r = r * *this;
    return r;
  }

  bool operator==(const Matrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j && !at(i, j).is_one())
          return false;
        if (i != j && !at(i, j).is_zero())
          return false;
      }
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero())
        return false;
    return true;
  }

  // c*I for some scalar c
  bool is_scalar() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j && !at(i, j).is_zero())
          return false;
        if (i == j && !(at(i, j) == at(0, 0)))
          return false;
      }
    return true;
  }

  std::vector<S> flatten() const { return a; }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < n; ++i) {
      out += i ? ", [" : "[";
      for (int j = 0; j < n; ++j) {
        if (j)
          out += ", ";
        out += at(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }
};

template <class S>
std::optional<Matrix<S>> mat_inverse(const Matrix<S>& m) {
  int n = m.n;
  Matrix<S> left = m;
  Matrix<S> right = Matrix<S>::identity(n, m.sample());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!left.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(left.at(pivot, j), left.at(col, j));
        std::swap(right.at(pivot, j), right.at(col, j));
      }
    S inv = left.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      left.at(col, j) = left.at(col, j) * inv;
      right.at(col, j) = right.at(col, j) * inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || left.at(r, col).is_zero())
        continue;
      S f = left.at(r, col);
      for (int j = 0; j < n; ++j) {
        left.at(r, j) -= f * left.at(col, j);
        right.at(r, j) -= f * right.at(col, j);
      }
    }
  }
  return right;
}

template <class S>
S det(const Matrix<S>& m) {
  Matrix<S> w = m;
  int n = w.n;
  S result = m.sample().one_like();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!w.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return m.sample().zero_like();
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(w.at(pivot, j), w.at(col, j));
      result = -result;
    }
    result = result * w.at(col, col);
    S inv = w.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero())
        continue;
      S f = w.at(r, col) * inv;
      for (int j = col; j < n; ++j)
        w.at(r, j) -= f * w.at(col, j);
    }
  }
  return result;
}

// P^{-1} A P
template <class S>
Matrix<S> conjugate(const Matrix<S>& a, const Matrix<S>& p) {
  auto pinv = mat_inverse(p);
  if (!pinv)
    throw std::domain_error("conjugation by a singular matrix");
  return *pinv * a * p;
}

}  // namespace fvblab

#endif
