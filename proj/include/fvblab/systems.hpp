#ifndef FVBLAB_SYSTEMS_HPP_
#define FVBLAB_SYSTEMS_HPP_

#include <string>
#include <vector>

#include "fvblab/poly.hpp"

namespace fvblab {

enum class SystemKind {
  fvb2_local,          // both 2-strand generator images generic 2x2
  fvbn_homog_2block,   // generic 2x2 blocks placed locally, n >= 3
};

const char* system_kind_name(SystemKind k);

struct PolySystem {
  std::vector<int> unknowns;    // param ids
  std::vector<Poly> equations;  // each must vanish; canonical, sorted, deduped
};

// derive the equations by expanding the group relations on a generic block
// ansatz and collecting the nonzero matrix entries
PolySystem build_system(SystemKind kind);

// same derivation at an explicit strand count (the result is n-independent
// once every relation type is present; exposed for that stability check)
PolySystem build_system_at(SystemKind kind, int n);

// the equation lists as published in the source classification
std::vector<Poly> published_system(SystemKind kind);

// canonical set difference between generated and published equations
struct SystemDiff {
  std::vector<Poly> generated_only;
  std::vector<Poly> published_only;
  bool clean() const { return generated_only.empty() && published_only.empty(); }
};
SystemDiff compare_system(SystemKind kind);

// subsystem spanned by the equations using only the given unknowns
PolySystem restrict_system(const PolySystem& sys, const std::vector<int>& unknowns);

bool system_contains(const PolySystem& sys, const Poly& eq);

}  // namespace fvblab

#endif
