#include "fvblab/systems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fvblab/params.hpp"
#include "fvblab/presentation.hpp"
#include "fvblab/rep.hpp"

namespace fvblab {

namespace {

Poly normalize_eq(const Poly& p) { return p.primitive().first; }

Matrix<RatFunc> generic_block(const char* e11, const char* e12, const char* e21,
                              const char* e22) {
  Matrix<RatFunc> m(2, RatFunc(Poly(0L)));
  m.at(0, 0) = RatFunc(Poly::var(e11));
  m.at(0, 1) = RatFunc(Poly::var(e12));
  m.at(1, 0) = RatFunc(Poly::var(e21));
  m.at(1, 1) = RatFunc(Poly::var(e22));
  return m;
}

PolySystem from_equation_set(const std::set<Poly>& eqs) {
  PolySystem sys;
  sys.equations.assign(eqs.begin(), eqs.end());
  std::set<int> seen;
  for (const Poly& e : sys.equations)
    for (int v : e.vars())
      seen.insert(v);
  sys.unknowns.assign(seen.begin(), seen.end());
  return sys;
}

}  // namespace

const char* system_kind_name(SystemKind k) {
  return k == SystemKind::fvb2_local ? "fvb2_local" : "fvbn_homog_2block";
}

PolySystem build_system_at(SystemKind kind, int n) {
  Matrix<RatFunc> sblk = generic_block("a", "b", "c", "d");
  Matrix<RatFunc> rblk = generic_block("x", "y", "z", "t");

  Rep<RatFunc> rep;
  rep.pres = presentation(n, GroupKind::flat_virtual);
  if (kind == SystemKind::fvb2_local) {
    if (n != 2)
      throw std::invalid_argument("fvb2_local system is derived on 2 strands");
    rep.ambient = 2;
    rep.sigma_images.push_back(sblk);
    rep.rho_images.push_back(rblk);
  } else {
    if (n < 3)
      throw std::invalid_argument("2-block system needs n >= 3");
    rep.ambient = n;
    for (int i = 1; i <= n - 1; ++i) {
      rep.sigma_images.push_back(assemble_block(sblk, i, n));
      rep.rho_images.push_back(assemble_block(rblk, i, n));
    }
  }

  std::set<Poly> eqs;
  for (const Relation& rel : rep.pres.relations) {
    Matrix<RatFunc> diff = eval_word(rep, rel.lhs) - eval_word(rep, rel.rhs);
    for (const RatFunc& e : diff.a) {
      if (e.is_zero())
        continue;
      if (!(e.den.total_degree() == 0))
        throw std::logic_error("polynomial ansatz produced a denominator");
      eqs.insert(normalize_eq(e.num));
    }
  }
  return from_equation_set(eqs);
}

PolySystem build_system(SystemKind kind) {
  return build_system_at(kind, kind == SystemKind::fvb2_local ? 2 : 3);
}

std::vector<Poly> published_system(SystemKind kind) {
  const Poly a = Poly::var("a"), b = Poly::var("b"), c = Poly::var("c"),
             d = Poly::var("d"), t = Poly::var("t"), x = Poly::var("x"),
             y = Poly::var("y"), z = Poly::var("z");
  const Poly one(1L);
  std::vector<Poly> out;
  if (kind == SystemKind::fvb2_local) {
    out = {
        a * a + b * c - one,
        d * b + a * b,
        d * c + a * c,
        d * d + b * c - one,
        x * x + y * z - one,
        t * y + x * y,
        t * z + x * z,
        t * t + y * z - one,
    };
  } else {
    out = {
        a * a + b * c - one,
        b * (a + d),
        c * (a + d),
        b * c + d * d - one,
        a * (a + b * c - one),
        a * b * d,
        a * c * d,
        a * d * (a - d),
        d * (one - b * c - d),
        x * (x + y * z - one),
        t * x * y,
        t * x * z,
        x * t * (x - t),
        t * (one - t - y * z),
        x * (a + c * y - one),
        x * (b - y + d * y),
        c * t * x,
        x * t * (a - d),
        t * (y - b - a * y),
        t * (one - d - c * y),
        x * x + y * z - one,
        y * (t + x),
        z * (t + x),
        t * t + y * z - one,
    };
  }
  for (Poly& p : out)
    p = normalize_eq(p);
  return out;
}

SystemDiff compare_system(SystemKind kind) {
  PolySystem gen = build_system(kind);
  std::vector<Poly> pub = published_system(kind);
  std::set<Poly> gset(gen.equations.begin(), gen.equations.end());
  std::set<Poly> pset(pub.begin(), pub.end());
  SystemDiff diff;
  for (const Poly& p : gset)
    if (!pset.count(p))
      diff.generated_only.push_back(p);
  for (const Poly& p : pset)
    if (!gset.count(p))
      diff.published_only.push_back(p);
  return diff;
}

PolySystem restrict_system(const PolySystem& sys, const std::vector<int>& unknowns) {
  std::set<int> keep(unknowns.begin(), unknowns.end());
  std::set<Poly> eqs;
  for (const Poly& e : sys.equations) {
    bool ok = true;
    for (int v : e.vars())
      if (!keep.count(v)) {
        ok = false;
        break;
      }
    if (ok)
      eqs.insert(e);
  }
  return from_equation_set(eqs);
}

bool system_contains(const PolySystem& sys, const Poly& eq) {
  Poly n = normalize_eq(eq);
  for (const Poly& e : sys.equations)
    if (Poly::cmp(e, n) == 0)
      return true;
  return false;
}

}  // namespace fvblab
