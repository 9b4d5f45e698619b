#ifndef FVBLAB_SUBSPACE_HPP_
#define FVBLAB_SUBSPACE_HPP_

#include <vector>

#include "fvblab/matrix.hpp"
#include "fvblab/scalars.hpp"

namespace fvblab {

// Row space held in reduced row echelon form: pivot columns strictly
// increasing, pivots 1, pivot columns cleared elsewhere. Equal subspaces have
// identical storage.
template <class S>
struct RowSpace {
  int ambient = 0;
  std::vector<std::vector<S>> rows;
  std::vector<int> pivots;

  explicit RowSpace(int ambient_dim) : ambient(ambient_dim) {}

  int dim() const { return int(rows.size()); }

  // reduce v against current rows in place; returns pivot index or -1
  int reduce(std::vector<S>& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const S& c = v[size_t(pivots[r])];
      if (c.is_zero())
        continue;
      S f = c;
      for (int j = 0; j < ambient; ++j)
        if (!rows[r][size_t(j)].is_zero())
          v[size_t(j)] -= f * rows[r][size_t(j)];
    }
    for (int j = 0; j < ambient; ++j)
      if (!v[size_t(j)].is_zero())
        return j;
    return -1;
  }

  bool contains(std::vector<S> v) const { return reduce(v) < 0; }

  // returns true when the vector enlarged the space
  bool insert(std::vector<S> v) {
    if (int(v.size()) != ambient)
      throw std::invalid_argument("vector/ambient dimension mismatch");
    int p = reduce(v);
    if (p < 0)
      return false;
    S inv = v[size_t(p)].inverse();
    for (auto& x : v)
      x = x * inv;
    // clear column p in existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      const S& c = rows[r][size_t(p)];
      if (c.is_zero())
        continue;
      S f = c;
      for (int j = 0; j < ambient; ++j)
        if (!v[size_t(j)].is_zero())
          rows[r][size_t(j)] -= f * v[size_t(j)];
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p)
      ++pos;
    rows.insert(rows.begin() + long(pos), std::move(v));
    pivots.insert(pivots.begin() + long(pos), p);
    return true;
  }

  bool operator==(const RowSpace& o) const {
    return ambient == o.ambient && rows == o.rows;
  }
};

// kernel of a rectangular matrix given as a list of rows; basis in the
// canonical free-column form (free coordinate 1, later coordinates 0)
template <class S>
std::vector<std::vector<S>> kernel_of_rows(const std::vector<std::vector<S>>& mat_rows,
                                           int cols, const S& like) {
  RowSpace<S> rs(cols);
  for (const auto& r : mat_rows)
    rs.insert(r);
  std::vector<bool> is_pivot(size_t(cols), false);
  for (int p : rs.pivots)
    is_pivot[size_t(p)] = true;
  std::vector<std::vector<S>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[size_t(free)])
      continue;
    std::vector<S> v(size_t(cols), like.zero_like());
    v[size_t(free)] = like.one_like();
    for (size_t r = 0; r < rs.rows.size(); ++r)
      v[size_t(rs.pivots[r])] = -rs.rows[r][size_t(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
RowSpace<S> kernel_basis(const Matrix<S>& m) {
  std::vector<std::vector<S>> rows;
  for (int i = 0; i < m.n; ++i) {
    std::vector<S> row;
    for (int j = 0; j < m.n; ++j)
      row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  RowSpace<S> out(m.n);
  for (auto& v : kernel_of_rows(rows, m.n, m.sample()))
    out.insert(v);
  return out;
}

template <class S>
RowSpace<S> eigenspace(const Matrix<S>& m, const S& lam) {
  Matrix<S> shifted = m;
  for (int i = 0; i < m.n; ++i)
    shifted.at(i, i) -= lam;
  return kernel_basis(shifted);
}

// intersection of two row spaces in the same ambient space
template <class S>
RowSpace<S> intersect(const RowSpace<S>& a, const RowSpace<S>& b) {
  RowSpace<S> out(a.ambient);
  if (a.dim() == 0 || b.dim() == 0)
    return out;
  const S like = a.rows[0][0].zero_like();
  int k = a.dim(), l = b.dim();
  // unknowns (x, y) with sum x_i a_i - sum y_j b_j = 0, one equation per
  // ambient coordinate
  std::vector<std::vector<S>> eqs;
  for (int coord = 0; coord < a.ambient; ++coord) {
    std::vector<S> eq(size_t(k + l), like.zero_like());
    for (int i = 0; i < k; ++i)
      eq[size_t(i)] = a.rows[size_t(i)][size_t(coord)];
    for (int j = 0; j < l; ++j)
      eq[size_t(k + j)] = -b.rows[size_t(j)][size_t(coord)];
    eqs.push_back(std::move(eq));
  }
  for (const auto& sol : kernel_of_rows(eqs, k + l, like)) {
    std::vector<S> v(size_t(a.ambient), like.zero_like());
    for (int i = 0; i < k; ++i)
      for (int coord = 0; coord < a.ambient; ++coord)
        v[size_t(coord)] += sol[size_t(i)] * a.rows[size_t(i)][size_t(coord)];
    out.insert(v);
  }
  return out;
}

template <class S>
RowSpace<S> full_space(int n, const S& like) {
  RowSpace<S> rs(n);
  for (int i = 0; i < n; ++i) {
    std::vector<S> v(size_t(n), like.zero_like());
    v[size_t(i)] = like.one_like();
    rs.insert(v);
  }
  return rs;
}

// Dimension of the unital algebra generated by gens: span closure, seeded
// with I, repeatedly left-multiplying new basis elements by the generators.
template <class S>
int algebra_closure_dim(const std::vector<Matrix<S>>& gens) {
  if (gens.empty())
    throw std::invalid_argument("algebra closure of an empty generating set");
  int m = gens[0].n;
  for (const auto& g : gens)
    if (g.n != m)
      throw std::invalid_argument("mixed dimensions in algebra closure");
  const S like = gens[0].sample();
  RowSpace<S> span(m * m);
  std::vector<Matrix<S>> work;
  Matrix<S> id = Matrix<S>::identity(m, like);
  span.insert(id.flatten());
  work.push_back(id);
  while (!work.empty()) {
    if (span.dim() == m * m)
      break;
    Matrix<S> cur = std::move(work.back());
    work.pop_back();
    for (const auto& g : gens) {
      Matrix<S> prod = g * cur;
      if (span.insert(prod.flatten()))
        work.push_back(std::move(prod));
    }
  }
  return span.dim();
}

// Scale a rational vector to coprime integers with positive first nonzero
// entry (display form for lines and kernel vectors).
inline std::vector<Rat> integer_primitive(const std::vector<Rat>& v) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& r : v) {
    if (r.is_zero())
      continue;
    mpz_class n = abs(r.num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
  }
  if (num_gcd == 0)
    return v;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  std::vector<Rat> out;
  int sign = 0;
  for (const auto& r : v) {
    if (sign == 0 && !r.is_zero())
      sign = r.sign();
  }
  if (sign < 0)
    scale = -scale;
  for (const auto& r : v)
    out.push_back(r * Rat(mpq_class(scale)));
  return out;
}

}  // namespace fvblab

#endif
