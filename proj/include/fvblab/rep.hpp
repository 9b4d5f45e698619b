#ifndef FVBLAB_REP_HPP_
#define FVBLAB_REP_HPP_

#include <map>
#include <string>
#include <vector>

#include "fvblab/families.hpp"
#include "fvblab/matrix.hpp"
#include "fvblab/params.hpp"
#include "fvblab/presentation.hpp"
#include "fvblab/ratfunc.hpp"
#include "fvblab/words.hpp"

namespace fvblab {

// embed a block at generator position i (1-based) inside an m x m identity;
// the block occupies rows/columns i .. i+bs-1
template <class S>
Matrix<S> assemble_block(const Matrix<S>& block, int i, int m) {
  int bs = block.n;
  if (i < 1 || i + bs - 1 > m)
    throw std::invalid_argument("block position out of range");
  Matrix<S> out = Matrix<S>::identity(m, block.sample());
  for (int r = 0; r < bs; ++r)
    for (int c = 0; c < bs; ++c)
      out.at(i - 1 + r, i - 1 + c) = block.at(r, c);
  return out;
}

// A concrete matrix assignment for the generators of one of the groups.
// sigma_images[k] is the image of the (k+1)-th crossing generator;
// rho_images is empty when the group has no flat generators.
template <class S>
struct Rep {
  Presentation pres;
  int ambient = 0;
  std::vector<Matrix<S>> sigma_images;
  std::vector<Matrix<S>> rho_images;

  const Matrix<S>& image(const Gen& g) const {
    const auto& v = g.kind == GenKind::sigma ? sigma_images : rho_images;
    if (g.index < 1 || g.index > int(v.size()))
      throw std::invalid_argument("generator index out of range: " + g.str());
    return v[size_t(g.index) - 1];
  }
};

// instantiate a family on n strands with symbolic entries
Rep<RatFunc> build_rep(const Family& fam, int n);
inline Rep<RatFunc> build_rep(FamilyTag tag, int n) {
  return build_rep(family_spec(tag), n);
}

// entrywise parameter substitution (e.g. set y = b to study a degeneration)
Rep<RatFunc> subst_rep(const Rep<RatFunc>& rep,
                       const std::map<int, RatFunc>& repl);

// numeric specialization; throws if the binding kills a denominator
Rep<Rat> specialize_rep(const Rep<RatFunc>& rep, const Binding& bind);

template <class S>
Matrix<S> eval_word(const Rep<S>& rep, const Word& w) {
  Matrix<S> out =
      Matrix<S>::identity(rep.ambient, rep.sigma_images.at(0).sample());
  for (const Gen& g : w)
    out = out * rep.image(g);
  return out;
}

struct RelationCheck {
  std::string label;
  RelKind kind;
  bool ok = false;
  std::string detail;  // first offending entry when !ok
};

template <class S>
std::vector<RelationCheck> verify_relations(const Rep<S>& rep) {
  std::vector<RelationCheck> out;
  for (const Relation& rel : rep.pres.relations) {
    Matrix<S> lhs = eval_word(rep, rel.lhs);
    Matrix<S> rhs = eval_word(rep, rel.rhs);
    RelationCheck rc;
    rc.label = rel.label();
    rc.kind = rel.kind;
    rc.ok = lhs == rhs;
    if (!rc.ok) {
      for (int i = 0; i < lhs.n && rc.detail.empty(); ++i)
        for (int j = 0; j < lhs.n; ++j)
          if (!(lhs.at(i, j) == rhs.at(i, j))) {
            rc.detail = "entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "): " + lhs.at(i, j).str() +
                        " vs " + rhs.at(i, j).str();
            break;
          }
    }
    out.push_back(std::move(rc));
  }
  return out;
}

template <class S>
bool all_relations_hold(const Rep<S>& rep) {
  for (const auto& rc : verify_relations(rep))
    if (!rc.ok)
      return false;
  return true;
}

template <class S>
std::vector<RelationCheck> failed_relations(const Rep<S>& rep) {
  std::vector<RelationCheck> out;
  for (auto& rc : verify_relations(rep))
    if (!rc.ok)
      out.push_back(std::move(rc));
  return out;
}

// all generator images of the representation, sigma first
template <class S>
std::vector<Matrix<S>> all_images(const Rep<S>& rep) {
  std::vector<Matrix<S>> out = rep.sigma_images;
  out.insert(out.end(), rep.rho_images.begin(), rep.rho_images.end());
  return out;
}

}  // namespace fvblab

#endif
