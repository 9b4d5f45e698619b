#include "fvblab/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "fvblab/subspace.hpp"

namespace fvblab {

namespace {

std::vector<Rat> apply(const Matrix<Rat>& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(size_t(m.n), Rat(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      out[size_t(i)] += m.at(i, j) * v[size_t(j)];
  return out;
}

bool fixes_line(const Matrix<Rat>& m, const std::vector<Rat>& v) {
  std::vector<Rat> w = apply(m, v);
  bool plus = true, minus = true;
  for (size_t i = 0; i < v.size(); ++i) {
    plus = plus && w[i] == v[i];
    minus = minus && w[i] == -v[i];
  }
  return plus || minus;
}

std::optional<std::vector<Rat>> line_dfs(const std::vector<Matrix<Rat>>& ms,
                                         size_t i, const RowSpace<Rat>& cur) {
  if (cur.dim() == 0)
    return std::nullopt;
  if (i == ms.size())
    return integer_primitive(cur.rows[0]);
  for (long lam : {1L, -1L}) {
    RowSpace<Rat> next = intersect(cur, eigenspace(ms[i], Rat(lam)));
    if (auto found = line_dfs(ms, i + 1, next))
      return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rat>> common_invariant_line(const Rep<Rat>& rep) {
  std::vector<Matrix<Rat>> active;
  for (const Matrix<Rat>& m : all_images(rep)) {
    if (!(m * m).is_identity())
      throw std::invalid_argument(
          "invariant-line search expects involutive generator images");
    if (m.is_scalar())  // +-I fixes every line
      continue;
    active.push_back(m);
  }
  auto found = line_dfs(active, 0, full_space(rep.ambient, Rat(1)));
  if (found)
    for (const Matrix<Rat>& m : all_images(rep))
      if (!fixes_line(m, *found))
        throw std::logic_error("invariant-line witness failed re-verification");
  return found;
}

namespace {

Rat bv(const Binding& bind, const char* name) { return bind.at(param_id(name)); }

bool condition_impl(FamilyTag tag, const Binding& bind, bool matched_only) {
  switch (tag) {
    case FamilyTag::l1: {
      Rat b = bv(bind, "b"), d = bv(bind, "d");
      Rat y = bv(bind, "y"), t = bv(bind, "t");
      for (long s1 : {1L, -1L})
        for (long s2 : {1L, -1L}) {
          if (matched_only && s1 != s2)
            continue;
          if (b * (t + Rat(s1)) == y * (d + Rat(s2)))
            return false;
        }
      return true;
    }
    case FamilyTag::l2: {
      Rat c = bv(bind, "c"), y = bv(bind, "y"), t = bv(bind, "t");
      return y * c != Rat(2) * (t + Rat(1)) && y * c != Rat(2) * (t - Rat(1));
    }
    case FamilyTag::l3: {
      Rat y = bv(bind, "y"), t = bv(bind, "t");
      return y != t + Rat(1) && y != t - Rat(1);
    }
    case FamilyTag::l4: {
      Rat b = bv(bind, "b"), z = bv(bind, "z"), d = bv(bind, "d");
      return b * z != Rat(2) * (d + Rat(1)) && b * z != Rat(2) * (d - Rat(1));
    }
    case FamilyTag::l5: {
      Rat b = bv(bind, "b"), d = bv(bind, "d");
      return b != d + Rat(1) && b != d - Rat(1);
    }
    default:
      throw std::invalid_argument(
          "no published irreducibility condition for this family");
  }
}

}  // namespace

bool paper_condition(FamilyTag tag, const Binding& bind) {
  return condition_impl(tag, bind, false);
}

bool paper_condition_matched_signs(FamilyTag tag, const Binding& bind) {
  return condition_impl(tag, bind, true);
}

IrreducibilityVerdict line_verdict(const Rep<RatFunc>& rep, const Binding& bind) {
  IrreducibilityVerdict v;
  v.method = "invariant_line";
  v.binding = bind;
  v.witness = common_invariant_line(specialize_rep(rep, bind));
  v.irreducible = !v.witness.has_value();
  return v;
}

IrreducibilityVerdict closure_verdict(const Rep<RatFunc>& rep, const Binding& bind) {
  IrreducibilityVerdict v;
  v.method = "algebra_closure";
  v.binding = bind;
  Rep<Rat> spec = specialize_rep(rep, bind);
  v.closure_dim = algebra_closure_dim(all_images(spec));
  v.irreducible = *v.closure_dim == rep.ambient * rep.ambient;
  return v;
}

std::vector<IrreducibilityVerdict> burnside_verdict(
    const Rep<RatFunc>& rep, const std::vector<Binding>& binds) {
  std::vector<IrreducibilityVerdict> out;
  for (const Binding& b : binds)
    out.push_back(closure_verdict(rep, b));
  return out;
}

Binding random_binding(const Family& fam, Rng& rng,
                       const std::vector<int>& extra_nonzero) {
  for (int tries = 0; tries < 1000; ++tries) {
    Binding bind;
    for (int id : fam.params)
      bind.set(id, rng.rat());
    bool ok = true;
    for (const Poly& c : fam.constraints)
      if (c.eval(bind).is_zero()) {
        ok = false;
        break;
      }
    for (int id : extra_nonzero)
      if (ok && bind.at(id).is_zero())
        ok = false;
    if (ok)
      return bind;
  }
  throw std::runtime_error("no admissible binding found for the family");
}

ComparisonReport compare_irreducibility(FamilyTag tag, int samples,
                                        std::uint64_t seed,
                                        const std::vector<int>& extra_nonzero) {
  Family fam = family_spec(tag);
  if (!fam.global_pair)
    throw std::invalid_argument(
        "irreducibility comparison is defined for the two-strand catalog");
  bool has_formula = tag == FamilyTag::l1 || tag == FamilyTag::l2 ||
                     tag == FamilyTag::l3 || tag == FamilyTag::l4 ||
                     tag == FamilyTag::l5;
  Rep<RatFunc> rep = build_rep(fam, 2);

  ComparisonReport out;
  out.family = tag;
  out.sample_count = samples;
  Rng rng(seed);
  int matched_reading = 0;
  for (int i = 0; i < samples; ++i) {
    Binding bind = random_binding(fam, rng, extra_nonzero);
    bool oracle = !common_invariant_line(specialize_rep(rep, bind)).has_value();
    bool paper = has_formula && paper_condition(tag, bind);
    if (paper == oracle)
      ++out.agreements;
    else
      out.disagreements.push_back({bind, paper, oracle});
    if (has_formula && paper_condition_matched_signs(tag, bind) == oracle)
      ++matched_reading;
  }
  if (has_formula)
    out.notes.push_back("alternative like-signs reading agrees on " +
                        std::to_string(matched_reading) + "/" +
                        std::to_string(samples));
  return out;
}

FaithfulnessFinding kernel_search(const Rep<Rat>& rep, int max_len) {
  if (rep.pres.kind != GroupKind::flat_virtual)
    throw std::invalid_argument("kernel search needs involutive generators");
  int n = rep.pres.n;

  if (n == 2) {
    if (max_len < 1 || max_len > 24)
      throw std::invalid_argument("two-strand search supports max_len in 1..24");
    for (const Word& w : fvb2_enumerate(max_len))
      if (eval_word(rep, w).is_identity())
        return {"kernel_witness", w, max_len, ""};
    return {"no_witness_up_to_length", std::nullopt, max_len, ""};
  }

  if (max_len < 1 || max_len > 10)
    throw std::invalid_argument("breadth-first search supports max_len in 1..10");
  std::vector<Gen> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(sg(i));
  for (int i = 1; i < n; ++i)
    gens.push_back(rg(i));

  auto key = [](const Matrix<Rat>& m) {
    std::string s;
    for (const Rat& x : m.a) {
      s += x.str();
      s += ',';
    }
    return s;
  };

  struct Node {
    Word w;
    Matrix<Rat> m;
  };
  Matrix<Rat> id = Matrix<Rat>::identity(rep.ambient, Rat(1));
  std::map<std::string, bool> seen;
  seen[key(id)] = true;
  std::vector<Node> frontier;
  frontier.push_back({Word{}, id});

  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const Node& nd : frontier)
      for (const Gen& g : gens) {
        if (!nd.w.empty() && nd.w.back() == g)
          continue;  // involutive letters cancel
        Matrix<Rat> m2 = nd.m * rep.image(g);
        Word w2 = nd.w;
        w2.push_back(g);
        if (m2.is_identity())
          return {"kernel_witness", w2, max_len, ""};
        std::string k = key(m2);
        if (seen.count(k))
          continue;  // a shorter or earlier word has this image
        seen[k] = true;
        next.push_back({std::move(w2), std::move(m2)});
      }
    frontier = std::move(next);
  }
  return {"no_witness_up_to_length", std::nullopt, max_len, ""};
}

namespace {

std::string render_constraint(const std::map<int, RatFunc>& repl) {
  std::string s;
  for (const auto& [id, value] : repl) {
    if (!s.empty())
      s += ", ";
    s += param_name(id) + " = " + value.str();
  }
  return s;
}

Word word_power(const Word& base, int k) {
  Word out;
  for (int i = 0; i < k; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

}  // namespace

std::vector<WitnessCheck> symbolic_witnesses() {
  RatFunc b = RatFunc::var("b"), c = RatFunc::var("c"), d = RatFunc::var("d"),
          x = RatFunc::var("x"), y = RatFunc::var("y"), z = RatFunc::var("z");
  RatFunc half(Rat(1, 2));
  Word rs = {rg(1), sg(1)};
  Word sr = {sg(1), rg(1)};

  struct Entry {
    FamilyTag tag;
    int n;
    std::map<int, RatFunc> repl;
    Word word;
  };
  std::vector<Entry> table = {
      {FamilyTag::l1, 2, {{param_id("y"), b}, {param_id("t"), d}}, rs},
      {FamilyTag::l1, 2, {{param_id("y"), -b}, {param_id("t"), -d}},
       word_power(rs, 2)},
      {FamilyTag::l2, 2, {{param_id("t"), c * y * half}}, word_power(rs, 4)},
      {FamilyTag::l4, 2, {{param_id("d"), b * z * half}}, word_power(sr, 4)},
      {FamilyTag::g1, 4, {}, {sg(1)}},
      {FamilyTag::g2, 4, {{param_id("y"), b}}, rs},
      {FamilyTag::d5, 4, {{param_id("y"), x}}, rs},
      {FamilyTag::d6, 4, {{param_id("y"), x}}, rs},
      {FamilyTag::d7, 4, {}, rs},
      {FamilyTag::d8, 4, {}, rs},
  };

  std::vector<WitnessCheck> out;
  for (const Entry& e : table) {
    WitnessCheck wc;
    wc.family = e.tag;
    wc.n = e.n;
    wc.constraint = render_constraint(e.repl);
    wc.word = e.word;
    Rep<RatFunc> rep = build_rep(e.tag, e.n);
    if (!e.repl.empty())
      rep = subst_rep(rep, e.repl);
    Matrix<RatFunc> img = eval_word(rep, e.word);
    wc.ok = img.is_identity();
    if (!wc.ok)
      wc.detail = "image is " + img.str();
    out.push_back(std::move(wc));
  }
  return out;
}

bool dihedral_power_formula(FamilyTag tag, int max_power) {
  if (tag != FamilyTag::l6 && tag != FamilyTag::l7)
    throw std::invalid_argument(
        "the power formula concerns the two triangular-pair families");
  if (max_power < 1)
    throw std::invalid_argument("max_power must be at least 1");

  Rep<RatFunc> rep = build_rep(tag, 2);
  const Matrix<RatFunc>& s = rep.sigma_images[0];
  const Matrix<RatFunc>& r = rep.rho_images[0];
  RatFunc step = tag == FamilyTag::l6 ? RatFunc::var("c") - RatFunc::var("z")
                                      : RatFunc::var("c") + RatFunc::var("z");
  bool alternating = tag == FamilyTag::l7;

  auto odd_shape = [](const Matrix<RatFunc>& m) {
    return m.at(0, 1).is_zero() && m.at(0, 0) * m.at(1, 1) == RatFunc(-1);
  };

  Matrix<RatFunc> even = Matrix<RatFunc>::identity(2, RatFunc(1));
  Matrix<RatFunc> odd_s = s;  // s (r s)^k
  Matrix<RatFunc> odd_r = r;  // r (s r)^k
  if (!odd_shape(odd_s) || !odd_shape(odd_r))
    return false;
  for (int k = 1; k <= max_power; ++k) {
    even = even * (s * r);
    RatFunc sign = alternating && k % 2 == 1 ? RatFunc(-1) : RatFunc(1);
    Matrix<RatFunc> expect(2, RatFunc());
    expect.at(0, 0) = sign;
    expect.at(1, 1) = sign;
    expect.at(1, 0) = sign * RatFunc(Rat(k)) * step;
    if (!(even == expect) || even.is_identity())
      return false;
    odd_s = odd_s * (r * s);
    odd_r = odd_r * (s * r);
    if (!odd_shape(odd_s) || !odd_shape(odd_r))
      return false;
  }
  return true;
}

}  // namespace fvblab
