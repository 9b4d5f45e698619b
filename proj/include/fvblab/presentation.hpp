#ifndef FVBLAB_PRESENTATION_HPP_
#define FVBLAB_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "fvblab/words.hpp"

namespace fvblab {

enum class GroupKind { braid, virtual_braid, flat_virtual };

const char* group_kind_name(GroupKind k);

// Relation families of the standard presentations, in the order they are
// emitted. The braid group uses the first two; the virtual braid group adds
// the rho and mixed families; the flat group also makes sigma involutive.
enum class RelKind {
  sigma_braid,      // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  sigma_far_comm,   // s_i s_j = s_j s_i, j - i >= 2
  rho_braid,        // r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}
  rho_far_comm,     // r_i r_j = r_j r_i, j - i >= 2
  rho_invol,        // r_i r_i = e
  mixed_far_comm,   // s_i r_j = r_j s_i, |i - j| >= 2
  mixed_braid,      // r_i r_{i+1} s_i = s_{i+1} r_i r_{i+1}
  sigma_invol,      // s_i s_i = e
};

const char* rel_kind_name(RelKind k);

struct Relation {
  RelKind kind;
  std::vector<int> indices;
  Word lhs, rhs;

  std::string label() const;
};

struct Presentation {
  int n = 0;
  GroupKind kind = GroupKind::flat_virtual;
  std::vector<Relation> relations;
};

// relations of B_n / VB_n / FVB_n over all admissible indices,
// grouped by relation family then lexicographic index; requires n >= 2
Presentation presentation(int n, GroupKind kind);
Presentation fvb_presentation(int n);

}  // namespace fvblab

#endif
