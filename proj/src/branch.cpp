#include "fvblab/branch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fvblab/params.hpp"

namespace fvblab {

namespace {

Poly norm(const Poly& p) { return p.primitive().first; }

bool same_poly(const Poly& a, const Poly& b) { return Poly::cmp(a, b) == 0; }

Rat constant_of(const Poly& p) {
  if (p.terms.empty())
    return Rat(0);
  if (p.total_degree() != 0)
    throw std::logic_error("constant_of on a nonconstant polynomial");
  return p.terms.begin()->second;
}

std::vector<long> small_divisors(const mpz_class& v) {
  std::vector<long> out;
  mpz_class a = abs(v);
  if (a == 0 || !a.fits_slong_p())
    return out;
  long n = a.get_si();
  if (n > 1000000000L)
    return out;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      out.push_back(i);
      if (i != n / i)
        out.push_back(n / i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// distinct rational roots, descending
std::vector<Rat> rational_roots(const Poly& q, int v) {
  Poly c0 = q.coeff_of(v, 0);
  Poly cl = q.coeff_of(v, q.degree_in(v));
  if (c0.total_degree() != 0 || cl.total_degree() != 0)
    return {};
  std::vector<long> ps = small_divisors(constant_of(c0).num());
  std::vector<long> qs = small_divisors(constant_of(cl).num());
  std::set<Rat> roots;
  for (long den : qs)
    for (long num : ps)
      for (int sgn : {1, -1}) {
        Rat r(sgn * num, den);
        if (q.subst_rat(v, r).terms.empty())
          roots.insert(r);
      }
  std::vector<Rat> out(roots.begin(), roots.end());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Poly> split_factors(const Poly& e) {
  Poly p = norm(e);
  if (p.terms.empty() || p.total_degree() == 0)
    return {};
  std::vector<Poly> out;

  // monomial content: variables dividing every term
  for (int v : p.vars()) {
    int minexp = 1 << 20;
    for (const auto& [mono, coef] : p.terms)
      minexp = std::min(minexp, mono.exp_of(v));
    if (minexp >= 1) {
      out.push_back(Poly::var(v));
      p = Poly::divexact(p, Poly::var(v).pow(minexp));
    }
  }
  if (p.total_degree() == 0)
    return out;

  std::vector<int> vs = p.vars();
  if (vs.size() == 1) {
    int v = vs[0];
    for (const Rat& r : rational_roots(p, v)) {
      Poly lin = Poly::var(v) - Poly(r);
      out.push_back(lin);
      while (Poly::divides(lin, p))
        p = Poly::divexact(p, lin);
    }
    p = norm(p);
    if (p.total_degree() > 0)
      out.push_back(p);  // no rational root; kept opaque
    return out;
  }

  out.push_back(p);
  return out;
}

Matrix<RatFunc> matrix_under_solution(const Matrix<RatFunc>& m,
                                      const BranchSolution& sol) {
  Matrix<RatFunc> out = m;
  for (auto& e : out.a)
    e = e.subst(sol.substitutions);
  return out;
}

RatFunc poly_under_solution(const Poly& p, const BranchSolution& sol) {
  return poly_subst(p, sol.substitutions);
}

namespace {

struct State {
  std::vector<Poly> eqs;
  std::map<int, RatFunc> subst;
  std::vector<Poly> sides;
  std::vector<std::string> path;
  int depth = 0;
};

struct SolveCtx {
  const PolySystem* sys = nullptr;
  BranchOutcome out;
};

void log_line(SolveCtx& ctx, int depth, const std::string& text) {
  ctx.out.case_tree.push_back(std::string(size_t(depth) * 2, ' ') + text);
}

// false when the equation reduces to a nonzero constant
bool insert_eq(std::vector<Poly>& eqs, const Poly& raw) {
  Poly p = norm(raw);
  if (p.terms.empty())
    return true;
  if (p.total_degree() == 0)
    return false;
  for (const Poly& q : eqs)
    if (same_poly(p, q))
      return true;
  eqs.push_back(p);
  return true;
}

// false when the side condition is identically zero
bool add_side(State& st, const Poly& raw) {
  Poly p = norm(raw);
  if (p.terms.empty())
    return false;
  if (p.total_degree() == 0)
    return true;
  for (const Poly& q : st.sides)
    if (same_poly(p, q))
      return true;
  st.sides.push_back(p);
  return true;
}

// false on contradiction. Side conditions are rewritten first: every
// denominator in a stored value is a product of coefficients recorded (or
// factored) into the sides, so a substitution that would zero such a
// denominator always zeroes a side condition and is rejected here before the
// values are touched.
bool apply_substitution(State& st, int var, const RatFunc& expr) {
  std::map<int, RatFunc> one = {{var, expr}};

  std::vector<Poly> nsides;
  for (const Poly& s : st.sides) {
    RatFunc r = poly_subst(s, one);
    if (r.is_zero())
      return false;
    Poly p = norm(r.num);
    if (p.total_degree() == 0)
      continue;
    bool dup = false;
    for (const Poly& q : nsides)
      if (same_poly(p, q))
        dup = true;
    if (!dup)
      nsides.push_back(p);
  }
  st.sides = std::move(nsides);

  std::vector<Poly> neqs;
  for (const Poly& e : st.eqs) {
    RatFunc r = poly_subst(e, one);
    if (r.is_zero())
      continue;
    if (!insert_eq(neqs, r.num))
      return false;
  }
  std::sort(neqs.begin(), neqs.end());
  st.eqs = std::move(neqs);

  for (auto& kv : st.subst)
    kv.second = kv.second.subst(one);
  st.subst[var] = expr;
  return true;
}

bool known_nonzero(const State& st, const Poly& raw) {
  Poly p = norm(raw);
  if (p.terms.empty())
    return false;
  if (p.total_degree() == 0)
    return true;
  std::vector<Poly> fs = split_factors(p);
  if (fs.empty())
    return false;
  for (const Poly& f : fs) {
    if (f.total_degree() == 0)
      continue;
    bool found = false;
    for (const Poly& s : st.sides)
      if (same_poly(norm(f), s)) {
        found = true;
        break;
      }
    if (!found)
      return false;
  }
  return true;
}

std::string describe_solution(const BranchSolution& sol) {
  std::string s;
  for (const auto& [v, e] : sol.substitutions) {
    if (!s.empty())
      s += ", ";
    s += param_name(v) + " = " + e.str();
  }
  if (s.empty())
    s = "(all free)";
  for (const Poly& c : sol.side_conditions)
    s += " [" + c.str() + " != 0]";
  return s;
}

void solve(SolveCtx& ctx, State st);

void emit_solution(SolveCtx& ctx, State st) {
  BranchSolution sol{st.subst, st.sides, st.path};
  for (const Poly& e : ctx.sys->equations)
    if (!poly_under_solution(e, sol).is_zero())
      throw std::logic_error("branch solver emitted an unsound branch");
  log_line(ctx, st.depth, "solution: " + describe_solution(sol));
  ctx.out.solutions.push_back(std::move(sol));
}

void recurse_with_substitution(SolveCtx& ctx, State st, int var,
                               const RatFunc& expr, const std::string& why) {
  std::string note = param_name(var) + " = " + expr.str() + "  (" + why + ")";
  if (!apply_substitution(st, var, expr)) {
    log_line(ctx, st.depth, note + " -> contradiction");
    return;
  }
  st.path.push_back(note);
  log_line(ctx, st.depth, note);
  solve(ctx, std::move(st));
}

void solve(SolveCtx& ctx, State st) {
  if (st.depth > 64) {
    log_line(ctx, st.depth, "depth guard hit");
    ctx.out.failures.push_back({st.eqs, st.path});
    return;
  }
  if (st.eqs.empty()) {
    emit_solution(ctx, std::move(st));
    return;
  }

  // strategy (ii), decisive instances first: an equation linear in some
  // unknown whose coefficient cannot vanish
  for (const Poly& e : st.eqs)
    for (int v : e.vars()) {
      if (e.degree_in(v) != 1)
        continue;
      Poly coef = e.coeff_of(v, 1);
      if (!(coef.total_degree() == 0) && !known_nonzero(st, coef))
        continue;
      Poly rest = e.coeff_of(v, 0);
      RatFunc expr = RatFunc(-rest) / RatFunc(coef);
      State child = st;
      child.eqs.erase(std::find_if(child.eqs.begin(), child.eqs.end(),
                                   [&](const Poly& q) { return same_poly(q, e); }));
      recurse_with_substitution(ctx, std::move(child), v, expr, "linear");
      return;
    }

  // strategy (i): factor branching
  for (const Poly& e : st.eqs) {
    std::vector<Poly> fs = split_factors(e);
    if (fs.empty())
      continue;
    bool shrunk = fs.size() == 1 && !same_poly(fs[0], e);
    if (fs.size() < 2 && !shrunk)
      continue;
    std::vector<Poly> others;
    for (const Poly& q : st.eqs)
      if (!same_poly(q, e))
        others.push_back(q);
    if (shrunk) {
      State child = st;
      child.eqs = others;
      insert_eq(child.eqs, fs[0]);
      std::sort(child.eqs.begin(), child.eqs.end());
      log_line(ctx, st.depth, "reduced " + e.str() + " to " + fs[0].str());
      solve(ctx, std::move(child));
      return;
    }
    log_line(ctx, st.depth, "branch on " + e.str());
    for (size_t k = 0; k < fs.size(); ++k) {
      State child = st;
      child.depth = st.depth + 1;
      child.eqs = others;
      bool feasible = insert_eq(child.eqs, fs[k]);
      std::sort(child.eqs.begin(), child.eqs.end());
      std::string note = "case " + fs[k].str() + " = 0";
      for (size_t j = 0; j < k; ++j) {
        note += " [" + fs[j].str() + " != 0]";
        if (!add_side(child, fs[j]))
          feasible = false;
      }
      if (!feasible) {
        log_line(ctx, child.depth, note + " -> contradiction");
        continue;
      }
      child.path.push_back(note);
      log_line(ctx, child.depth, note);
      solve(ctx, std::move(child));
    }
    return;
  }

  // strategy (ii), splitting on a possibly-vanishing coefficient
  for (const Poly& e : st.eqs)
    for (int v : e.vars()) {
      if (e.degree_in(v) != 1)
        continue;
      Poly coef = e.coeff_of(v, 1);
      Poly rest = e.coeff_of(v, 0);
      std::vector<Poly> others;
      for (const Poly& q : st.eqs)
        if (!same_poly(q, e))
          others.push_back(q);

      log_line(ctx, st.depth, "split on coefficient " + coef.str() + " of " +
                                  param_name(v) + " in " + e.str());
      {
        State child = st;
        child.depth = st.depth + 1;
        child.eqs = others;
        std::string note = "case " + coef.str() + " != 0";
        if (add_side(child, coef)) {
          child.path.push_back(note);
          log_line(ctx, child.depth, note);
          recurse_with_substitution(ctx, std::move(child), v,
                                    RatFunc(-rest) / RatFunc(coef), "linear");
        } else {
          log_line(ctx, child.depth, note + " -> contradiction");
        }
      }
      {
        State child = st;
        child.depth = st.depth + 1;
        child.eqs = others;
        bool feasible = insert_eq(child.eqs, coef) && insert_eq(child.eqs, rest);
        std::sort(child.eqs.begin(), child.eqs.end());
        std::string note = "case " + coef.str() + " = 0";
        if (feasible) {
          child.path.push_back(note);
          log_line(ctx, child.depth, note);
          solve(ctx, std::move(child));
        } else {
          log_line(ctx, child.depth, note + " -> contradiction");
        }
      }
      return;
    }

  log_line(ctx, st.depth, "unsolved by the implemented strategies");
  ctx.out.failures.push_back({st.eqs, st.path});
}

}  // namespace

BranchOutcome branch_solve(const PolySystem& sys) {
  SolveCtx ctx;
  ctx.sys = &sys;
  State st;
  for (const Poly& e : sys.equations)
    if (!insert_eq(st.eqs, e)) {
      log_line(ctx, 0, "system contains a nonzero constant equation");
      return std::move(ctx.out);
    }
  std::sort(st.eqs.begin(), st.eqs.end());
  solve(ctx, std::move(st));
  return std::move(ctx.out);
}

std::string case_tree_text(const BranchOutcome& out) {
  std::string s;
  for (const std::string& line : out.case_tree)
    s += line + "\n";
  return s;
}

}  // namespace fvblab
