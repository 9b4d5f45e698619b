#include "fvblab/families.hpp"

#include <map>
#include <stdexcept>

#include "fvblab/params.hpp"

namespace fvblab {

namespace {

RatFunc rv(const char* name) { return RatFunc(Poly::var(param_id(name))); }
RatFunc rc(long k) { return RatFunc(Poly(Rat(k))); }

Matrix<RatFunc> mat2(RatFunc a, RatFunc b, RatFunc c, RatFunc d) {
  Matrix<RatFunc> m(2, rc(0));
  m.at(0, 0) = a; m.at(0, 1) = b;
  m.at(1, 0) = c; m.at(1, 1) = d;
  return m;
}

Matrix<RatFunc> mat3(std::initializer_list<RatFunc> entries) {
  Matrix<RatFunc> m(3, rc(0));
  int k = 0;
  for (const auto& e : entries) {
    m.at(k / 3, k % 3) = e;
    ++k;
  }
  if (k != 9)
    throw std::invalid_argument("mat3 needs 9 entries");
  return m;
}

Matrix<RatFunc> ident2() { return Matrix<RatFunc>::identity(2, rc(0)); }
Matrix<RatFunc> ident3() { return Matrix<RatFunc>::identity(3, rc(0)); }

Poly pvar(const char* name) { return Poly::var(param_id(name)); }

struct TagInfo {
  const char* name;
};

const std::map<FamilyTag, const char*> kTagNames = {
    {FamilyTag::l1, "l1"},   {FamilyTag::l2, "l2"},   {FamilyTag::l3, "l3"},
    {FamilyTag::l4, "l4"},   {FamilyTag::l5, "l5"},   {FamilyTag::l6, "l6"},
    {FamilyTag::l7, "l7"},   {FamilyTag::l8, "l8"},   {FamilyTag::l9, "l9"},
    {FamilyTag::l10, "l10"}, {FamilyTag::l11, "l11"}, {FamilyTag::l12, "l12"},
    {FamilyTag::g1, "g1"},   {FamilyTag::g2, "g2"},   {FamilyTag::d1, "d1"},
    {FamilyTag::d2, "d2"},   {FamilyTag::d3, "d3"},   {FamilyTag::d4, "d4"},
    {FamilyTag::d5, "d5"},   {FamilyTag::d6, "d6"},   {FamilyTag::d7, "d7"},
    {FamilyTag::d8, "d8"},   {FamilyTag::burau, "burau"},
    {FamilyTag::frep, "frep"}, {FamilyTag::beta1, "beta1"},
    {FamilyTag::beta2, "beta2"}, {FamilyTag::beta3, "beta3"},
};

}  // namespace

const char* family_tag_name(FamilyTag t) { return kTagNames.at(t); }

FamilyTag parse_family_tag(const std::string& name) {
  for (const auto& [tag, s] : kTagNames)
    if (name == s)
      return tag;
  throw std::invalid_argument("unknown family tag: " + name);
}

std::vector<FamilyTag> catalog_tags() {
  std::vector<FamilyTag> out;
  for (const auto& [tag, s] : kTagNames)
    out.push_back(tag);
  return out;
}

Matrix<RatFunc> shape_b(const RatFunc& d, const RatFunc& b) { return shape_b_of(d, b); }
Matrix<RatFunc> shape_a(const RatFunc& c) { return shape_a_of(c); }
Matrix<RatFunc> shape_a_neg(const RatFunc& c) { return shape_a_neg_of(c); }
Matrix<RatFunc> antidiag2(const RatFunc& u) { return antidiag2_of(u); }
Matrix<RatFunc> dblock(int which, const RatFunc& u) { return dblock_of(which, u); }

namespace {

Family make_pair_family(FamilyTag tag, Matrix<RatFunc> s, Matrix<RatFunc> r,
                        std::vector<const char*> params,
                        std::vector<const char*> nonzero) {
  Family f;
  f.tag = tag;
  f.name = family_tag_name(tag);
  f.group = GroupKind::flat_virtual;
  f.block_size = 2;
  f.global_pair = true;
  f.sigma_block = std::move(s);
  f.rho_block = std::move(r);
  for (const char* p : params)
    f.params.push_back(param_id(p));
  for (const char* p : nonzero)
    f.constraints.push_back(pvar(p));
  return f;
}

Family make_local_family(FamilyTag tag, GroupKind group, int bs,
                         Matrix<RatFunc> s, std::optional<Matrix<RatFunc>> r,
                         std::vector<const char*> params,
                         std::vector<Poly> nonzero) {
  Family f;
  f.tag = tag;
  f.name = family_tag_name(tag);
  f.group = group;
  f.block_size = bs;
  f.global_pair = false;
  f.sigma_block = std::move(s);
  f.rho_block = std::move(r);
  for (const char* p : params)
    f.params.push_back(param_id(p));
  f.constraints = std::move(nonzero);
  return f;
}

}  // namespace

Family family_spec(FamilyTag tag) {
  const RatFunc a = rv("a"), b = rv("b"), c = rv("c"), d = rv("d");
  const RatFunc t = rv("t"), x = rv("x"), y = rv("y"), z = rv("z");
  switch (tag) {
    case FamilyTag::l1:
      return make_pair_family(tag, shape_b(d, b), shape_b(t, y), {"b", "d", "t", "y"},
                              {"b", "y"});
    case FamilyTag::l2:
      return make_pair_family(tag, shape_a(c), shape_b(t, y), {"c", "t", "y"}, {"y"});
    case FamilyTag::l3:
      return make_pair_family(tag, ident2(), shape_b(t, y), {"t", "y"}, {"y"});
    case FamilyTag::l4:
      return make_pair_family(tag, shape_b(d, b), shape_a(z), {"b", "d", "z"}, {"b"});
    case FamilyTag::l5:
      return make_pair_family(tag, shape_b(d, b), ident2(), {"b", "d"}, {"b"});
    case FamilyTag::l6:
      return make_pair_family(tag, shape_a(c), shape_a(z), {"c", "z"}, {});
    case FamilyTag::l7:
      return make_pair_family(tag, shape_a(c), shape_a_neg(z), {"c", "z"}, {});
    case FamilyTag::l8:
      return make_pair_family(tag, ident2(), shape_a(z), {"z"}, {});
    case FamilyTag::l9:
      return make_pair_family(tag, shape_a(c), ident2(), {"c"}, {});
    case FamilyTag::l10:
      return make_pair_family(tag, ident2(), ident2().scaled(rc(-1)), {}, {});
    case FamilyTag::l11:
      return make_pair_family(tag, ident2(), shape_a_neg(z), {"z"}, {});
    case FamilyTag::l12:
      return make_pair_family(tag, shape_a_neg(c), ident2(), {"c"}, {});
    case FamilyTag::g1:
      return make_local_family(tag, GroupKind::flat_virtual, 2, ident2(),
                               antidiag2(y), {"y"}, {pvar("y")});
    case FamilyTag::g2:
      return make_local_family(tag, GroupKind::flat_virtual, 2, antidiag2(b),
                               antidiag2(y), {"b", "y"}, {pvar("b"), pvar("y")});
    case FamilyTag::d1:
      return make_local_family(tag, GroupKind::flat_virtual, 3, ident3(),
                               dblock(1, x), {"x"}, {pvar("x")});
    case FamilyTag::d2:
      return make_local_family(tag, GroupKind::flat_virtual, 3, ident3(),
                               dblock(2, x), {"x"}, {pvar("x")});
    case FamilyTag::d3:
      return make_local_family(tag, GroupKind::flat_virtual, 3, ident3(),
                               dblock(3, x), {"x"}, {pvar("x")});
    case FamilyTag::d4:
      return make_local_family(tag, GroupKind::flat_virtual, 3, ident3(),
                               dblock(4, x), {"x"}, {pvar("x")});
    case FamilyTag::d5:
      return make_local_family(tag, GroupKind::flat_virtual, 3, dblock(3, x),
                               dblock(3, y), {"x", "y"}, {pvar("x"), pvar("y")});
    case FamilyTag::d6:
      return make_local_family(tag, GroupKind::flat_virtual, 3, dblock(4, x),
                               dblock(4, y), {"x", "y"}, {pvar("x"), pvar("y")});
    case FamilyTag::d7:
      return make_local_family(tag, GroupKind::flat_virtual, 3, dblock(1, x),
                               dblock(1, x), {"x"}, {pvar("x")});
    case FamilyTag::d8:
      return make_local_family(tag, GroupKind::flat_virtual, 3, dblock(2, x),
                               dblock(2, x), {"x"}, {pvar("x")});
    case FamilyTag::burau:
      return make_local_family(tag, GroupKind::braid, 2,
                               mat2(rc(1) - t, t, rc(1), rc(0)), std::nullopt,
                               {"t"}, {pvar("t")});
    case FamilyTag::frep:
      return make_local_family(
          tag, GroupKind::braid, 3,
          mat3({rc(1), rc(1), rc(0), rc(0), -t, rc(0), rc(0), t, rc(1)}),
          std::nullopt, {"t"}, {pvar("t")});
    case FamilyTag::beta1:
      return make_local_family(tag, GroupKind::braid, 2,
                               mat2(a, (rc(1) - a) / c, c, rc(0)), std::nullopt,
                               {"a", "c"},
                               {pvar("c"), pvar("a") - Poly(Rat(1))});
    case FamilyTag::beta2:
      return make_local_family(tag, GroupKind::braid, 2,
                               mat2(rc(0), (rc(1) - d) / c, c, d), std::nullopt,
                               {"c", "d"},
                               {pvar("c"), pvar("d") - Poly(Rat(1))});
    case FamilyTag::beta3:
      return make_local_family(tag, GroupKind::braid, 2, mat2(rc(0), b, c, rc(0)),
                               std::nullopt, {"b", "c"},
                               {pvar("b"), pvar("c")});
  }
  throw std::logic_error("unhandled family tag");
}

Family family_spec_printed(FamilyTag tag) {
  const RatFunc x = rv("x"), y = rv("y");
  const RatFunc one = rc(1), zero = rc(0);
  Family f = family_spec(tag);
  switch (tag) {
    case FamilyTag::d5:
      // printed sigma block has the antidiagonal entries of dblock(3, x)
      // swapped, and the printed rho block has bottom row (0, 1, 1)
      f.sigma_block =
          mat3({zero, x.inverse(), zero, x, zero, zero, zero, zero, one});
      f.rho_block =
          mat3({zero, y, zero, y.inverse(), zero, zero, zero, one, one});
      break;
    case FamilyTag::d6:
      // printed sigma block has the (2,3)/(3,2) entries swapped
      f.sigma_block =
          mat3({one, zero, zero, zero, zero, x.inverse(), zero, x, zero});
      break;
    case FamilyTag::d7:
      // printed rho block has 0 in the bottom-right corner (singular)
      f.rho_block =
          mat3({one, x, zero, zero, -one, zero, zero, x.inverse(), zero});
      break;
    default:
      break;
  }
  f.printed_variant = true;
  return f;
}

bool family_has_printed_deviation(FamilyTag tag) {
  return tag == FamilyTag::d5 || tag == FamilyTag::d6 || tag == FamilyTag::d7;
}

std::vector<BlockDiff> printed_block_diffs() {
  std::vector<BlockDiff> out;
  for (FamilyTag tag : catalog_tags()) {
    if (!family_has_printed_deviation(tag))
      continue;
    Family canon = family_spec(tag);
    Family printed = family_spec_printed(tag);
    for (char which : {'s', 'r'}) {
      const auto& cm = which == 's' ? canon.sigma_block : *canon.rho_block;
      const auto& pm = which == 's' ? printed.sigma_block : *printed.rho_block;
      for (int i = 0; i < cm.n; ++i)
        for (int j = 0; j < cm.n; ++j)
          if (!(cm.at(i, j) == pm.at(i, j)))
            out.push_back({tag, which, i + 1, j + 1, pm.at(i, j), cm.at(i, j)});
    }
  }
  return out;
}

}  // namespace fvblab
