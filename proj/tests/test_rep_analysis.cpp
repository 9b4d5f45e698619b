#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fvblab/analysis.hpp"
#include "fvblab/families.hpp"
#include "fvblab/rep.hpp"
#include "fvblab/rng.hpp"
#include "fvblab/subspace.hpp"

using namespace fvblab;

namespace {

Binding bind_of(const std::string& text) { return Binding::parse(text); }

std::vector<Rat> rvec(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs)
    v.push_back(Rat(x));
  return v;
}

// dimension of the common 1-eigenspace of all generator images
int common_fixed_dim(const Rep<Rat>& rep) {
  RowSpace<Rat> cur = full_space(rep.ambient, Rat(1));
  for (const Matrix<Rat>& m : all_images(rep))
    cur = intersect(cur, eigenspace(m, Rat(1)));
  return cur.dim();
}

}  // namespace

TEST_SUITE("rep_analysis") {

TEST_CASE("common invariant line on the catalog examples") {
  auto l3 = specialize_rep(build_rep(FamilyTag::l3, 2), bind_of("t=0,y=1"));
  auto line3 = common_invariant_line(l3);
  REQUIRE(line3.has_value());
  CHECK(*line3 == rvec({1, 1}));

  auto g1 = specialize_rep(build_rep(FamilyTag::g1, 3), bind_of("y=2"));
  auto line1 = common_invariant_line(g1);
  REQUIRE(line1.has_value());
  CHECK(*line1 == rvec({4, 2, 1}));
  // the witness really is an eigenvector of every image
  for (const Matrix<Rat>& m : all_images(g1)) {
    std::vector<Rat> w(3, Rat(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        w[size_t(i)] += m.at(i, j) * (*line1)[size_t(j)];
    CHECK((w == *line1 || w == rvec({-4, -2, -1})));
  }

  auto l1 = specialize_rep(build_rep(FamilyTag::l1, 2), bind_of("b=1,d=0,y=2,t=0"));
  CHECK_FALSE(common_invariant_line(l1).has_value());

  // non-involutive images are refused, not silently mishandled
  auto bur = specialize_rep(build_rep(FamilyTag::burau, 3), bind_of("t=2"));
  CHECK_THROWS_AS(common_invariant_line(bur), std::invalid_argument);
}

TEST_CASE("published irreducibility conditions") {
  CHECK_FALSE(paper_condition(FamilyTag::l1, bind_of("b=1,y=1,d=3,t=3")));
  CHECK(paper_condition(FamilyTag::l2, bind_of("c=2,y=1,t=5")));
  CHECK(paper_condition(FamilyTag::l5, bind_of("b=3,d=1")));
  CHECK_FALSE(paper_condition(FamilyTag::l3, bind_of("y=3,t=2")));
  CHECK(paper_condition(FamilyTag::l4, bind_of("b=1,z=1,d=5")));

  // the two readings of the +- notation differ on cross-sign collisions
  Binding cross = bind_of("b=2,y=1,t=0,d=3");
  CHECK_FALSE(paper_condition(FamilyTag::l1, cross));          // 2(t+1) = d-1
  CHECK(paper_condition_matched_signs(FamilyTag::l1, cross));

  CHECK_THROWS_AS(paper_condition(FamilyTag::l6, Binding{}),
                  std::invalid_argument);
}

TEST_CASE("oracle sweep agrees with the published conditions where expected") {
  ComparisonReport r1 = compare_irreducibility(FamilyTag::l1, 300, 42);
  CHECK(r1.sample_count == 300);
  CHECK(r1.agreements == 300);
  CHECK(r1.disagreements.empty());
  CHECK(r1.agreements + int(r1.disagreements.size()) == r1.sample_count);
  REQUIRE(!r1.notes.empty());

  ComparisonReport r2 =
      compare_irreducibility(FamilyTag::l2, 300, 42, {param_id("c")});
  CHECK(r2.disagreements.empty());

  ComparisonReport r4 =
      compare_irreducibility(FamilyTag::l4, 300, 42, {param_id("z")});
  CHECK(r4.disagreements.empty());

  // the always-reducible families
  for (FamilyTag tag : {FamilyTag::l6, FamilyTag::l7, FamilyTag::l8,
                        FamilyTag::l9, FamilyTag::l10, FamilyTag::l11,
                        FamilyTag::l12}) {
    ComparisonReport r = compare_irreducibility(tag, 150, 7);
    CHECK(r.agreements == 150);
    CHECK(r.disagreements.empty());
  }

  // an identity sigma-image makes every rho eigenline invariant, so the
  // oracle must contradict the published condition at its generic bindings
  for (FamilyTag tag : {FamilyTag::l3, FamilyTag::l5}) {
    ComparisonReport r = compare_irreducibility(tag, 300, 42);
    CHECK(r.agreements + int(r.disagreements.size()) == 300);
    CHECK(int(r.disagreements.size()) > 150);
    for (const Disagreement& d : r.disagreements) {
      CHECK(d.paper_irreducible);
      CHECK_FALSE(d.oracle_irreducible);
    }
  }

  // deterministic under the seed
  ComparisonReport again = compare_irreducibility(FamilyTag::l3, 300, 42);
  CHECK(again.disagreements.size() ==
        compare_irreducibility(FamilyTag::l3, 300, 42).disagreements.size());
}

TEST_CASE("line and closure oracles agree in dimension two") {
  for (FamilyTag tag : catalog_tags()) {
    Family fam = family_spec(tag);
    if (!fam.global_pair)
      continue;
    Rep<RatFunc> rep = build_rep(fam, 2);
    Rng rng(2026);
    for (int i = 0; i < 60; ++i) {
      Binding b = random_binding(fam, rng);
      IrreducibilityVerdict line = line_verdict(rep, b);
      IrreducibilityVerdict closure = closure_verdict(rep, b);
      REQUIRE(closure.closure_dim.has_value());
      CHECK(line.irreducible == closure.irreducible);
      CHECK(line.witness.has_value() == (*closure.closure_dim < 4));
    }
  }
}

TEST_CASE("algebra closure dimensions for the block families") {
  int expected_g1[] = {5, 10, 17, 26, 37};
  for (int n = 3; n <= 7; ++n) {
    IrreducibilityVerdict v =
        closure_verdict(build_rep(FamilyTag::g1, n), bind_of("y=2"));
    CHECK_FALSE(v.irreducible);
    CHECK(*v.closure_dim == expected_g1[n - 3]);
  }

  for (int n = 3; n <= 5; ++n) {
    IrreducibilityVerdict gen =
        closure_verdict(build_rep(FamilyTag::g2, n), bind_of("b=2,y=3"));
    CHECK(gen.irreducible);
    CHECK(*gen.closure_dim == n * n);
    IrreducibilityVerdict coll =
        closure_verdict(build_rep(FamilyTag::g2, n), bind_of("b=2,y=2"));
    CHECK_FALSE(coll.irreducible);
    CHECK(*coll.closure_dim == 1 + (n - 1) * (n - 1));
  }

  // the verdict list API used by the sweeps
  std::vector<Binding> binds = {bind_of("y=2"), bind_of("y=3"), bind_of("y=-5")};
  auto verdicts = burnside_verdict(build_rep(FamilyTag::g1, 4), binds);
  REQUIRE(verdicts.size() == 3);
  for (const auto& v : verdicts) {
    CHECK(v.method == "algebra_closure");
    CHECK(*v.closure_dim == 10);
    CHECK_FALSE(v.irreducible);
  }

  IrreducibilityVerdict d1 =
      closure_verdict(build_rep(FamilyTag::d1, 10), bind_of("x=2"));
  CHECK(*d1.closure_dim == 82);
  CHECK_FALSE(d1.irreducible);
  IrreducibilityVerdict d5 =
      closure_verdict(build_rep(FamilyTag::d5, 10), bind_of("x=2,y=3"));
  CHECK(*d5.closure_dim == 101);
  CHECK_FALSE(d5.irreducible);

  // reducibility seen concretely: common fixed vectors
  CHECK(common_fixed_dim(specialize_rep(build_rep(FamilyTag::d1, 10),
                                        bind_of("x=2"))) == 2);
  CHECK(common_fixed_dim(specialize_rep(build_rep(FamilyTag::d5, 10),
                                        bind_of("x=2,y=3"))) == 1);
}

TEST_CASE("kernel search finds the published witnesses and nothing spurious") {
  Rep<RatFunc> l6 = build_rep(FamilyTag::l6, 2);

  FaithfulnessFinding hit = kernel_search(specialize_rep(l6, bind_of("c=1,z=1")), 4);
  CHECK(hit.kind == "kernel_witness");
  REQUIRE(hit.word.has_value());
  CHECK(*hit.word == Word{sg(1), rg(1)});

  FaithfulnessFinding miss =
      kernel_search(specialize_rep(l6, bind_of("c=1,z=2")), 24);
  CHECK(miss.kind == "no_witness_up_to_length");
  CHECK(miss.max_len == 24);
  CHECK_FALSE(miss.word.has_value());

  // seeded sweep away from the collapsing locus: no kernel element appears
  Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    Rat c = rng.rat(), z = rng.rat();
    if (c == z)
      z = z + Rat(1);
    Binding b;
    b.set("c", c);
    b.set("z", z);
    CHECK(kernel_search(specialize_rep(l6, b), 24).kind ==
          "no_witness_up_to_length");
  }

  // n >= 3 breadth-first search
  FaithfulnessFinding triv =
      kernel_search(specialize_rep(build_rep(FamilyTag::g1, 3), bind_of("y=2")), 1);
  REQUIRE(triv.word.has_value());
  CHECK(*triv.word == Word{sg(1)});

  FaithfulnessFinding coll = kernel_search(
      specialize_rep(build_rep(FamilyTag::g2, 3), bind_of("b=2,y=2")), 3);
  REQUIRE(coll.word.has_value());
  CHECK(*coll.word == Word{sg(1), rg(1)});

  // witness invariant: reduced, nonempty, image exactly the identity
  for (const FaithfulnessFinding* f : {&hit, &triv, &coll}) {
    const Word& w = *f->word;
    CHECK(!w.empty());
    CHECK(reduce_word(w) == w);
  }
  CHECK(eval_word(specialize_rep(l6, bind_of("c=1,z=1")), *hit.word)
            .is_identity());

  // deterministic
  FaithfulnessFinding rerun =
      kernel_search(specialize_rep(l6, bind_of("c=1,z=1")), 4);
  CHECK(*rerun.word == *hit.word);

  // guard rails
  CHECK_THROWS_AS(kernel_search(specialize_rep(l6, bind_of("c=1,z=1")), 25),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      kernel_search(
          specialize_rep(build_rep(FamilyTag::g1, 3), bind_of("y=2")), 11),
      std::invalid_argument);
  CHECK_THROWS_AS(
      kernel_search(
          specialize_rep(build_rep(FamilyTag::burau, 3), bind_of("t=2")), 4),
      std::invalid_argument);
}

TEST_CASE("unfaithfulness witness table verifies symbolically") {
  std::vector<WitnessCheck> table = symbolic_witnesses();
  REQUIRE(table.size() == 10);
  for (const WitnessCheck& wc : table) {
    INFO(family_tag_name(wc.family), " ", wc.constraint, " ",
         word_str(wc.word));
    CHECK(wc.ok);
    CHECK(wc.detail.empty());
    CHECK(!wc.word.empty());
  }
  CHECK(table[0].family == FamilyTag::l1);
  CHECK(table[0].word == Word{rg(1), sg(1)});
  CHECK(table[1].word.size() == 4);
  CHECK(table[2].word.size() == 8);
  CHECK(table[4].family == FamilyTag::g1);
  CHECK(table[4].word == Word{sg(1)});
  CHECK(table[4].constraint.empty());
  CHECK(!table[5].constraint.empty());
}

TEST_CASE("alternating power formulas hold symbolically") {
  CHECK(dihedral_power_formula(FamilyTag::l6, 50));
  CHECK(dihedral_power_formula(FamilyTag::l7, 50));
  CHECK(dihedral_power_formula(FamilyTag::l6, 1));
  CHECK_THROWS_AS(dihedral_power_formula(FamilyTag::l1, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(dihedral_power_formula(FamilyTag::l6, 0),
                  std::invalid_argument);
}

}  // TEST_SUITE
