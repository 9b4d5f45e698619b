#ifndef FVBLAB_FAMILIES_HPP_
#define FVBLAB_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fvblab/matrix.hpp"
#include "fvblab/poly.hpp"
#include "fvblab/presentation.hpp"
#include "fvblab/ratfunc.hpp"

namespace fvblab {

// The catalog: twelve 2-strand pair types (l*), two local 2x2 families (g*),
// eight local 3x3 families (d*), and the classical braid-only references.
enum class FamilyTag {
  l1, l2, l3, l4, l5, l6, l7, l8, l9, l10, l11, l12,
  g1, g2,
  d1, d2, d3, d4, d5, d6, d7, d8,
  burau, frep, beta1, beta2, beta3,
};

const char* family_tag_name(FamilyTag t);
FamilyTag parse_family_tag(const std::string& name);
std::vector<FamilyTag> catalog_tags();

// Block-level description of a family. `global_pair` families use the blocks
// as the whole image on a fixed 2-dimensional space (every generator index
// gets the same matrix); local families embed the block at position i.
struct Family {
  FamilyTag tag;
  std::string name;
  GroupKind group = GroupKind::flat_virtual;
  int block_size = 2;
  bool global_pair = false;
  Matrix<RatFunc> sigma_block;
  std::optional<Matrix<RatFunc>> rho_block;
  std::vector<int> params;
  std::vector<Poly> constraints;  // must not vanish
  bool printed_variant = false;

  int ambient_for(int n) const {
    if (global_pair)
      return 2;
    return block_size == 2 ? n : n + 1;
  }
};

// canonical blocks (the ones that satisfy the group relations)
Family family_spec(FamilyTag tag);

// blocks exactly as printed in the source classification; differs from
// family_spec only where the printed text has transcription defects
Family family_spec_printed(FamilyTag tag);

bool family_has_printed_deviation(FamilyTag tag);

// entry-level differences between printed and canonical blocks
struct BlockDiff {
  FamilyTag tag;
  char which;  // 's' or 'r'
  int row, col;
  RatFunc printed, canonical;
};
std::vector<BlockDiff> printed_block_diffs();

// standard 2x2 involution shapes used throughout the catalog
Matrix<RatFunc> shape_b(const RatFunc& d, const RatFunc& b);
Matrix<RatFunc> shape_a(const RatFunc& c);
Matrix<RatFunc> shape_a_neg(const RatFunc& c);
Matrix<RatFunc> antidiag2(const RatFunc& u);

// the four 3x3 involution blocks of the local 3x3 families
Matrix<RatFunc> dblock(int which, const RatFunc& u);

// scalar-generic builders of the same shapes, usable over F_p as well
template <class S>
Matrix<S> shape_a_of(const S& c) {
  const S one = c.one_like(), zero = c.zero_like();
  Matrix<S> m(2, zero);
  m.at(0, 0) = one;
  m.at(1, 0) = c;
  m.at(1, 1) = -one;
  return m;
}

template <class S>
Matrix<S> shape_a_neg_of(const S& c) {
  const S one = c.one_like();
  Matrix<S> m(2, c.zero_like());
  m.at(0, 0) = -one;
  m.at(1, 0) = c;
  m.at(1, 1) = one;
  return m;
}

template <class S>
Matrix<S> shape_b_of(const S& d, const S& b) {
  const S one = d.one_like();
  Matrix<S> m(2, d.zero_like());
  m.at(0, 0) = -d;
  m.at(0, 1) = b;
  m.at(1, 0) = (one - d * d) * b.inverse();
  m.at(1, 1) = d;
  return m;
}

template <class S>
Matrix<S> antidiag2_of(const S& u) {
  Matrix<S> m(2, u.zero_like());
  m.at(0, 1) = u;
  m.at(1, 0) = u.inverse();
  return m;
}

template <class S>
Matrix<S> dblock_of(int which, const S& u) {
  const S one = u.one_like(), zero = u.zero_like();
  Matrix<S> m = Matrix<S>::identity(3, u);
  switch (which) {
    case 1:
      m.at(0, 1) = u;
      m.at(1, 1) = -one;
      m.at(2, 1) = u.inverse();
      return m;
    case 2:
      m.at(1, 0) = u.inverse();
      m.at(1, 1) = -one;
      m.at(1, 2) = u;
      return m;
    case 3:
      m.at(0, 0) = zero;
      m.at(0, 1) = u;
      m.at(1, 0) = u.inverse();
      m.at(1, 1) = zero;
      return m;
    case 4:
      m.at(1, 1) = zero;
      m.at(1, 2) = u;
      m.at(2, 1) = u.inverse();
      m.at(2, 2) = zero;
      return m;
    default:
      throw std::invalid_argument("dblock index must be 1..4");
  }
}

// The three shapes a 2x2 involution can take, up to a global sign:
// scalar, lower-triangular with diagonal (1,-1), or the generic form
// with a nonzero top-right entry. Every 2x2 involution over a field
// falls into exactly one class (trace 0 unless scalar).
enum class InvolutionForm { identity_like, a_like, b_like, other };

inline const char* involution_form_name(InvolutionForm f) {
  switch (f) {
    case InvolutionForm::identity_like: return "identity_form";
    case InvolutionForm::a_like: return "triangular_form";
    case InvolutionForm::b_like: return "generic_form";
    default: return "other";
  }
}

template <class S>
InvolutionForm classify_involution_form(const Matrix<S>& m) {
  if (m.n != 2)
    throw std::invalid_argument("involution form classification is 2x2 only");
  const S one = m.sample().one_like();
  Matrix<S> ident = Matrix<S>::identity(2, one);
  if (m == ident || m == ident.scaled(-one))
    return InvolutionForm::identity_like;
  if (m.at(0, 1).is_zero()) {
    bool plus = m.at(0, 0) == one && m.at(1, 1) == -one;
    bool minus = m.at(0, 0) == -one && m.at(1, 1) == one;
    return plus || minus ? InvolutionForm::a_like : InvolutionForm::other;
  }
  const S a = m.at(0, 0);
  if (m.at(1, 1) == -a &&
      m.at(1, 0) == (one - a * a) * m.at(0, 1).inverse())
    return InvolutionForm::b_like;
  return InvolutionForm::other;
}

}  // namespace fvblab

#endif
