#ifndef FVBLAB_ANALYSIS_HPP_
#define FVBLAB_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fvblab/families.hpp"
#include "fvblab/params.hpp"
#include "fvblab/rep.hpp"
#include "fvblab/rng.hpp"
#include "fvblab/words.hpp"

namespace fvblab {

// Direction of a line fixed (as a set) by every generator image, in coprime
// integer coordinates with positive leading entry; none when no such line
// exists. Requires involutive images: each candidate line lies in a +1 or -1
// eigenspace of every non-scalar image, and the search branches over those
// sign choices. The returned vector is re-verified against every image.
std::optional<std::vector<Rat>> common_invariant_line(const Rep<Rat>& rep);

// The published irreducibility inequality for the two-strand families
// l1..l5, with each +- quantified over all sign combinations. True means the
// source predicts irreducible. Throws for other families.
bool paper_condition(FamilyTag tag, const Binding& bind);
// alternative reading of the +- notation: like signs compared only
bool paper_condition_matched_signs(FamilyTag tag, const Binding& bind);

struct IrreducibilityVerdict {
  std::string method;  // "invariant_line" or "algebra_closure"
  bool irreducible = false;
  std::optional<std::vector<Rat>> witness;  // invariant line when found
  std::optional<int> closure_dim;
  Binding binding;
};

// invariant-line oracle at one binding; the no-line => irreducible direction
// is only valid in ambient dimension 2, where a proper invariant subspace is
// a line
IrreducibilityVerdict line_verdict(const Rep<RatFunc>& rep, const Binding& bind);

// dimension of the unital matrix algebra generated by the images;
// irreducible (absolutely) iff the closure fills all of m x m
IrreducibilityVerdict closure_verdict(const Rep<RatFunc>& rep, const Binding& bind);

std::vector<IrreducibilityVerdict> burnside_verdict(
    const Rep<RatFunc>& rep, const std::vector<Binding>& binds);

struct Disagreement {
  Binding binding;
  bool paper_irreducible = false;
  bool oracle_irreducible = false;
};

struct ComparisonReport {
  FamilyTag family = FamilyTag::l1;
  int sample_count = 0;
  int agreements = 0;
  std::vector<Disagreement> disagreements;
  std::vector<std::string> notes;
};

// seeded sweep over constraint-respecting random bindings: invariant-line
// oracle vs the published condition (l1..l5) or the published "reducible"
// verdict (l6..l12). extra_nonzero lists parameter ids forced away from zero
// beyond the family constraints.
ComparisonReport compare_irreducibility(FamilyTag tag, int samples,
                                        std::uint64_t seed,
                                        const std::vector<int>& extra_nonzero = {});

struct FaithfulnessFinding {
  std::string kind;  // kernel_witness | no_witness_up_to_length
  std::optional<Word> word;
  int max_len = 0;
  std::string context;
};

// shortest-then-lexicographic kernel element of a specialized flat-group
// representation: exhaustive over the two-strand reduced words (max_len <=
// 24), breadth-first with exact image deduplication for n >= 3 (max_len <=
// 10, certifies only the enumerated words)
FaithfulnessFinding kernel_search(const Rep<Rat>& rep, int max_len);

struct WitnessCheck {
  FamilyTag family = FamilyTag::l1;
  int n = 2;
  std::string constraint;  // rendered substitution, empty when none
  Word word;
  bool ok = false;
  std::string detail;
};

// the catalog of unfaithfulness witnesses, each verified by symbolic word
// evaluation under its constraint substitution
std::vector<WitnessCheck> symbolic_witnesses();

// verify the closed forms for the alternating products of the two
// triangular-pair families: even words (s1 r1)^k are transvection-like with
// lower-left entry k(c -+ z) and never the identity, odd words have diagonal
// (+-1, -+1) and so can never be the identity; checked for every k <= max_power
bool dihedral_power_formula(FamilyTag tag, int max_power);

// uniform random binding of the family parameters with every family
// constraint (and every extra_nonzero parameter) nonvanishing
Binding random_binding(const Family& fam, Rng& rng,
                       const std::vector<int>& extra_nonzero = {});

}  // namespace fvblab

#endif
