#include "fvblab/rep.hpp"

#include <stdexcept>

namespace fvblab {

Rep<RatFunc> build_rep(const Family& fam, int n) {
  Rep<RatFunc> rep;
  rep.pres = presentation(n, fam.group);
  rep.ambient = fam.ambient_for(n);
  if (fam.global_pair) {
    if (n != 2)
      throw std::invalid_argument(std::string("family ") + fam.name +
                                  " is a 2-strand pair type; n must be 2");
    rep.sigma_images.push_back(fam.sigma_block);
    rep.rho_images.push_back(*fam.rho_block);
    return rep;
  }
  for (int i = 1; i <= n - 1; ++i)
    rep.sigma_images.push_back(assemble_block(fam.sigma_block, i, rep.ambient));
  if (fam.rho_block)
    for (int i = 1; i <= n - 1; ++i)
      rep.rho_images.push_back(assemble_block(*fam.rho_block, i, rep.ambient));
  return rep;
}

namespace {

Matrix<RatFunc> subst_matrix(const Matrix<RatFunc>& m,
                             const std::map<int, RatFunc>& repl) {
  Matrix<RatFunc> out = m;
  for (auto& e : out.a)
    e = e.subst(repl);
  return out;
}

Matrix<Rat> specialize_matrix(const Matrix<RatFunc>& m, const Binding& bind) {
  Matrix<Rat> out(m.n, Rat(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      out.at(i, j) = m.at(i, j).specialize(bind);
  return out;
}

}  // namespace

Rep<RatFunc> subst_rep(const Rep<RatFunc>& rep,
                       const std::map<int, RatFunc>& repl) {
  Rep<RatFunc> out = rep;
  for (auto& m : out.sigma_images)
    m = subst_matrix(m, repl);
  for (auto& m : out.rho_images)
    m = subst_matrix(m, repl);
  return out;
}

Rep<Rat> specialize_rep(const Rep<RatFunc>& rep, const Binding& bind) {
  Rep<Rat> out;
  out.pres = rep.pres;
  out.ambient = rep.ambient;
  for (const auto& m : rep.sigma_images)
    out.sigma_images.push_back(specialize_matrix(m, bind));
  for (const auto& m : rep.rho_images)
    out.rho_images.push_back(specialize_matrix(m, bind));
  return out;
}

}  // namespace fvblab
