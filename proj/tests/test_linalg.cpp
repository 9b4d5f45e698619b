#include "doctest.h"

#include <vector>

#include "fvblab/matrix.hpp"
#include "fvblab/ratfunc.hpp"
#include "fvblab/rng.hpp"
#include "fvblab/subspace.hpp"

using namespace fvblab;

namespace {

Matrix<Rat> qmat(const std::vector<std::vector<Rat>>& rows) {
  Matrix<Rat> m(int(rows.size()), Rat());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      m.at(i, j) = rows[size_t(i)][size_t(j)];
  return m;
}

Matrix<RatFunc> fmat(const std::vector<std::vector<RatFunc>>& rows) {
  Matrix<RatFunc> m(int(rows.size()), RatFunc());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      m.at(i, j) = rows[size_t(i)][size_t(j)];
  return m;
}

Matrix<Rat> random_mat(Rng& rng, int n) {
  Matrix<Rat> m(n, Rat());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = rng.rat();
  return m;
}

const RatFunc rf0{Rat(0)}, rf1{Rat(1)};

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("matrix product") {
  RatFunc b = RatFunc::var("b"), c = RatFunc::var("c"), z = RatFunc::var("z");
  auto swapb = fmat({{rf0, b}, {rf1 / b, rf0}});
  CHECK((swapb * swapb).is_identity());

  auto lower_c = fmat({{rf1, rf0}, {c, -rf1}});
  auto lower_z = fmat({{rf1, rf0}, {z, -rf1}});
  auto prod = lower_c * lower_z;
  CHECK(prod == fmat({{rf1, rf0}, {c - z, rf1}}));

  auto m = qmat({{Rat(1), Rat(2), Rat(3)},
                 {Rat(4), Rat(5), Rat(6)},
                 {Rat(7), Rat(8), Rat(9)}});
  CHECK(Matrix<Rat>::identity(3, Rat()) * m == m);
  CHECK_THROWS_AS(m * qmat({{Rat(1)}}), std::invalid_argument);
}

TEST_CASE("matrix inverse") {
  RatFunc b = RatFunc::var("b"), t = RatFunc::var("t"), y = RatFunc::var("y");
  auto diag = fmat({{b * b, rf0, rf0}, {rf0, b, rf0}, {rf0, rf0, rf1}});
  auto inv = mat_inverse(diag);
  REQUIRE(inv.has_value());
  CHECK(*inv == fmat({{rf1 / (b * b), rf0, rf0}, {rf0, rf1 / b, rf0}, {rf0, rf0, rf1}}));

  // an involution is its own inverse
  auto invol = fmat({{-t, y}, {(rf1 - t * t) / y, t}});
  auto inv2 = mat_inverse(invol);
  REQUIRE(inv2.has_value());
  CHECK(*inv2 == invol);
  CHECK((invol * invol).is_identity());

  CHECK(!mat_inverse(qmat({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}})).has_value());

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_mat(rng, 1 + int(rng.below(4)));
    auto mi = mat_inverse(m);
    if (mi)
      CHECK((m * *mi).is_identity());
  }
}

TEST_CASE("kernel basis") {
  auto zero = qmat({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
  CHECK(kernel_basis(zero).dim() == 2);

  auto m = qmat({{Rat(-4), Rat(2)}, {Rat(-4), Rat(2)}});
  auto ker = kernel_basis(m);
  REQUIRE(ker.dim() == 1);
  CHECK(integer_primitive(ker.rows[0]) == std::vector<Rat>{Rat(1), Rat(2)});

  CHECK(kernel_basis(Matrix<Rat>::identity(2, Rat())).dim() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + int(rng.below(6));
    auto m = random_mat(rng, n);
    RowSpace<Rat> rowspace(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> row;
      for (int j = 0; j < n; ++j)
        row.push_back(m.at(i, j));
      rowspace.insert(row);
    }
    auto ker = kernel_basis(m);
    CHECK(rowspace.dim() + ker.dim() == n);
    // kernel vectors actually lie in the kernel
    for (const auto& v : ker.rows)
      for (int i = 0; i < n; ++i) {
        Rat s;
        for (int j = 0; j < n; ++j)
          s += m.at(i, j) * v[size_t(j)];
        CHECK(s.is_zero());
      }
  }
}

TEST_CASE("eigenspace") {
  auto m = qmat({{Rat(-3), Rat(2)}, {Rat(-4), Rat(3)}});
  auto plus = eigenspace(m, Rat(1));
  REQUIRE(plus.dim() == 1);
  CHECK(integer_primitive(plus.rows[0]) == std::vector<Rat>{Rat(1), Rat(2)});
  auto minus = eigenspace(m, Rat(-1));
  REQUIRE(minus.dim() == 1);
  CHECK(integer_primitive(minus.rows[0]) == std::vector<Rat>{Rat(1), Rat(1)});

  CHECK(eigenspace(Matrix<Rat>::identity(2, Rat()), Rat(1)).dim() == 2);

  auto lower = qmat({{Rat(1), Rat(0)}, {Rat(5), Rat(-1)}});
  auto es = eigenspace(lower, Rat(-1));
  REQUIRE(es.dim() == 1);
  CHECK(integer_primitive(es.rows[0]) == std::vector<Rat>{Rat(0), Rat(1)});

  // basis vectors satisfy A v = lambda v exactly
  for (Rat lam : {Rat(1), Rat(-1)}) {
    auto sp = eigenspace(m, lam);
    for (const auto& v : sp.rows)
      for (int i = 0; i < m.n; ++i) {
        Rat s;
        for (int j = 0; j < m.n; ++j)
          s += m.at(i, j) * v[size_t(j)];
        CHECK(s == lam * v[size_t(i)]);
      }
  }
}

TEST_CASE("conjugate") {
  RatFunc b = RatFunc::var("b");
  auto block = fmat({{rf0, b}, {rf1 / b, rf0}});
  auto p = fmat({{b, rf0}, {rf0, rf1}});
  CHECK(conjugate(block, p) == fmat({{rf0, rf1}, {rf1, rf0}}));

  auto m = qmat({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  CHECK(conjugate(m, Matrix<Rat>::identity(2, Rat())) == m);

  auto diag = qmat({{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
  auto swap01 = qmat({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(conjugate(diag, swap01) == qmat({{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}}));

  CHECK_THROWS_AS(conjugate(m, qmat({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}})),
                  std::domain_error);
}

TEST_CASE("algebra closure dimension") {
  auto swap01 = qmat({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(algebra_closure_dim<Rat>({swap01}) == 2);

  // two local transposition blocks inside a 3x3 permutation-like pair
  auto r1 = qmat({{Rat(0), Rat(2), Rat(0)},
                  {Rat(1, 2), Rat(0), Rat(0)},
                  {Rat(0), Rat(0), Rat(1)}});
  auto r2 = qmat({{Rat(1), Rat(0), Rat(0)},
                  {Rat(0), Rat(0), Rat(2)},
                  {Rat(0), Rat(1, 2), Rat(0)}});
  CHECK(algebra_closure_dim<Rat>({r1, r2}) == 5);

  // pair with a shared eigenvector: algebra stays triangular
  auto s = qmat({{Rat(-3), Rat(2)}, {Rat(-4), Rat(3)}});
  CHECK(algebra_closure_dim<Rat>({s, swap01}) == 3);

  // pair with no common invariant line generates the full 2x2 algebra
  auto s2 = qmat({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  auto r3 = qmat({{Rat(0), Rat(2)}, {Rat(1, 2), Rat(0)}});
  CHECK(algebra_closure_dim<Rat>({s2 * r3}) == 2);
  CHECK(algebra_closure_dim<Rat>({qmat({{Rat(-1), Rat(2)}, {Rat(-1), Rat(1)}}),
                                  swap01}) == 4);

  CHECK_THROWS_AS(algebra_closure_dim<Rat>({swap01, r1}), std::invalid_argument);
}

TEST_CASE("closure monotone and conjugation invariant") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng.below(2));
    auto g1 = random_mat(rng, n);
    auto g2 = random_mat(rng, n);
    int d1 = algebra_closure_dim<Rat>({g1});
    int d2 = algebra_closure_dim<Rat>({g1, g2});
    CHECK(d1 <= d2);

    Matrix<Rat> p(n, Rat());
    std::optional<Matrix<Rat>> pinv;
    do {
      p = random_mat(rng, n);
      pinv = mat_inverse(p);
    } while (!pinv);
    int dc = algebra_closure_dim<Rat>({conjugate(g1, p), conjugate(g2, p)});
    CHECK(dc == d2);
  }
}

TEST_CASE("row space canonical form and intersection") {
  RowSpace<Rat> a(3), b(3);
  a.insert({Rat(1), Rat(1), Rat(0)});
  a.insert({Rat(0), Rat(1), Rat(1)});
  b.insert({Rat(1), Rat(2), Rat(1)});
  b.insert({Rat(2), Rat(3), Rat(1)});
  // same plane inserted in different order and combination
  CHECK(a == b);

  RowSpace<Rat> xy(3), yz(3);
  xy.insert({Rat(1), Rat(0), Rat(0)});
  xy.insert({Rat(0), Rat(1), Rat(0)});
  yz.insert({Rat(0), Rat(1), Rat(0)});
  yz.insert({Rat(0), Rat(0), Rat(1)});
  auto line = intersect(xy, yz);
  REQUIRE(line.dim() == 1);
  CHECK(line.rows[0] == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});

  RowSpace<Rat> x(3), z(3);
  x.insert({Rat(1), Rat(0), Rat(0)});
  z.insert({Rat(0), Rat(0), Rat(1)});
  CHECK(intersect(x, z).dim() == 0);

  CHECK(full_space(3, Rat()).dim() == 3);
  CHECK(xy.contains({Rat(5), Rat(-7), Rat(0)}));
  CHECK(!xy.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_SUITE_END();
