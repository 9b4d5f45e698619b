#include "fvblab/census.hpp"

#include <optional>
#include <stdexcept>

#include "fvblab/families.hpp"
#include "fvblab/matrix.hpp"
#include "fvblab/presentation.hpp"
#include "fvblab/rep.hpp"
#include "fvblab/scalars.hpp"

namespace fvblab {

long CensusReport::matched_total() const {
  long total = 0;
  for (const auto& [label, count] : matched)
    total += count;
  return total;
}

std::string CensusReport::str() const {
  std::string s = shape + " over F_" + std::to_string(p) + ": " +
                  std::to_string(survivors) + " of " +
                  std::to_string(total_candidates) + " candidates survive";
  for (const auto& [label, count] : matched)
    s += "\n  " + label + ": " + std::to_string(count);
  for (const auto& u : unmatched)
    s += "\n  unmatched: " + u;
  for (const auto& n : notes)
    s += "\n  note: " + n;
  return s;
}

namespace {

template <class S>
bool is_pm_identity(const Matrix<S>& m) {
  return m.is_identity() || (-m).is_identity();
}

// b with m == antidiag2_of(b), if any
template <class S>
std::optional<S> antidiag_param(const Matrix<S>& m) {
  if (m.n != 2)
    return std::nullopt;
  S b = m.at(0, 1);
  if (b.is_zero())
    return std::nullopt;
  if (m == antidiag2_of(b))
    return b;
  return std::nullopt;
}

// u with m == dblock_of(which, u) up to sign, if any; minus signs cannot be
// absorbed into u for these shapes (a fixed diagonal entry pins the sign), so
// try both explicitly.
template <class S>
std::optional<S> dblock_param_pm(int which, const Matrix<S>& m) {
  if (m.n != 3)
    return std::nullopt;
  for (const Matrix<S>& v : {m, -m}) {
    S u = (which == 1 || which == 3) ? v.at(0, 1) : v.at(1, 2);
    if (!u.is_zero() && v == dblock_of(which, u))
      return u;
  }
  return std::nullopt;
}

// first catalog family the block pair belongs to, reading each matrix up to
// an independent sign; priority: trivial, then the catalog order
template <class S>
std::optional<std::string> match_local_pair(int block_size,
                                            const Matrix<S>& sig,
                                            const Matrix<S>& rho) {
  if (is_pm_identity(sig) && is_pm_identity(rho))
    return std::string("trivial");
  if (block_size == 2) {
    // the sign of an antidiagonal block folds into its parameter
    auto sp = antidiag_param(sig);
    auto rp = antidiag_param(rho);
    if (is_pm_identity(sig) && rp)
      return std::string("g1");
    if (sp && rp)
      return std::string("g2");
    return std::nullopt;
  }
  if (block_size == 3) {
    if (is_pm_identity(sig))
      for (int k = 1; k <= 4; ++k)
        if (dblock_param_pm(k, rho))
          return std::string("d") + std::to_string(k);
    if (dblock_param_pm(3, sig) && dblock_param_pm(3, rho))
      return std::string("d5");
    if (dblock_param_pm(4, sig) && dblock_param_pm(4, rho))
      return std::string("d6");
    auto s1 = dblock_param_pm(1, sig);
    auto r1 = dblock_param_pm(1, rho);
    if (s1 && r1 && *s1 == *r1)
      return std::string("d7");
    auto s2 = dblock_param_pm(2, sig);
    auto r2 = dblock_param_pm(2, rho);
    if (s2 && r2 && *s2 == *r2)
      return std::string("d8");
    return std::nullopt;
  }
  return std::nullopt;
}

// shift representation of FVB_{n_probe} with both generator blocks placed at
// position i, inside an ambient of size n_probe + block_size - 2
template <class S>
Rep<S> assemble_local_rep(const Presentation& pres, const Matrix<S>& sig,
                          const Matrix<S>& rho) {
  int m = pres.n + sig.n - 2;
  Rep<S> rep;
  rep.pres = pres;
  rep.ambient = m;
  for (int i = 1; i <= pres.n - 1; ++i) {
    rep.sigma_images.push_back(assemble_block(sig, i, m));
    rep.rho_images.push_back(assemble_block(rho, i, m));
  }
  return rep;
}

Rat centered_lift(const FpElem& x) {
  long v = long(x.val);
  if (v > long(x.p) / 2)
    v -= long(x.p);
  return Rat(v);
}

Matrix<Rat> lift_matrix(const Matrix<FpElem>& m) {
  Matrix<Rat> out(m.n, Rat(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      out.at(i, j) = centered_lift(m.at(i, j));
  return out;
}

std::vector<Matrix<FpElem>> involutive_blocks(std::uint32_t p, int dim) {
  std::vector<Matrix<FpElem>> out;
  fp_enumerate(p, dim * dim, [&](const std::vector<FpElem>& tuple) {
    Matrix<FpElem> m(dim, FpElem(0, p));
    m.a = tuple;
    if ((m * m).is_identity())
      out.push_back(m);
  });
  return out;
}

}  // namespace

std::uint64_t count_involutions(std::uint32_t p, int dim) {
  return std::uint64_t(involutive_blocks(p, dim).size());
}

CensusReport census_involutions_2x2(std::uint32_t p) {
  CensusReport rep;
  rep.p = p;
  rep.shape = "2x2 involutions";
  rep.total_candidates = fp_enumeration_size(p, 4);
  for (const Matrix<FpElem>& m : involutive_blocks(p, 2)) {
    ++rep.survivors;
    InvolutionForm f = classify_involution_form(m);
    if (f == InvolutionForm::other)
      rep.unmatched.push_back(m.str());
    else
      ++rep.matched[involution_form_name(f)];
  }
  return rep;
}

CensusReport census_fvb_local(std::uint32_t p, int block_size, int n_probe) {
  if (block_size != 2 && block_size != 3)
    throw std::invalid_argument("census supports 2x2 and 3x3 blocks only");
  if (n_probe < 3)
    throw std::invalid_argument("census probe needs n >= 3");
  CensusReport rep;
  rep.p = p;
  rep.shape = "block pairs (" + std::to_string(block_size) + "x" +
              std::to_string(block_size) + ") in FVB_" +
              std::to_string(n_probe);
  // guard on the nominal pair space, before any enumeration starts
  rep.total_candidates = fp_enumeration_size(p, 2 * block_size * block_size);

  std::vector<Matrix<FpElem>> blocks = involutive_blocks(p, block_size);
  rep.notes.push_back(std::to_string(blocks.size()) + " involutive blocks");

  Presentation pres = fvb_presentation(n_probe);
  for (const Matrix<FpElem>& sig : blocks)
    for (const Matrix<FpElem>& rho : blocks) {
      Rep<FpElem> r = assemble_local_rep(pres, sig, rho);
      if (!all_relations_hold(r))
        continue;
      ++rep.survivors;
      if (auto label = match_local_pair(block_size, sig, rho)) {
        ++rep.matched[*label];
        continue;
      }
      // not a catalog member mod p as written; lift the entries to centered
      // integers and retry over the rationals
      Matrix<Rat> lsig = lift_matrix(sig);
      Matrix<Rat> lrho = lift_matrix(rho);
      std::string desc = "sigma=" + sig.str() + " rho=" + rho.str();
      bool lift_ok = all_relations_hold(assemble_local_rep(pres, lsig, lrho));
      auto lifted = lift_ok ? match_local_pair(block_size, lsig, lrho)
                            : std::nullopt;
      if (lifted) {
        ++rep.matched[*lifted];
        rep.notes.push_back("matched after integer lift: " + desc);
      } else {
        rep.unmatched.push_back(desc);
      }
    }
  return rep;
}

}  // namespace fvblab
