#ifndef FVBLAB_BRANCH_HPP_
#define FVBLAB_BRANCH_HPP_

#include <map>
#include <string>
#include <vector>

#include "fvblab/matrix.hpp"
#include "fvblab/ratfunc.hpp"
#include "fvblab/systems.hpp"

namespace fvblab {

// One leaf of the case analysis: the solved unknowns as expressions in the
// remaining free ones, plus the nonvanishing assumptions accumulated along
// the way. Substituting into every system equation gives zero (checked at
// emission time).
struct BranchSolution {
  std::map<int, RatFunc> substitutions;
  std::vector<Poly> side_conditions;
  std::vector<std::string> provenance;
};

// A subsystem the two implemented strategies (factor branching and linear
// back-substitution) could not reduce. Reported, never silently dropped.
struct BranchFailure {
  std::vector<Poly> remaining;
  std::vector<std::string> provenance;
};

struct BranchOutcome {
  std::vector<BranchSolution> solutions;
  std::vector<BranchFailure> failures;
  std::vector<std::string> case_tree;  // indented human-readable trace

  bool complete() const { return failures.empty(); }
};

BranchOutcome branch_solve(const PolySystem& sys);

std::string case_tree_text(const BranchOutcome& out);

// split into branching factors: monomial content variables, rational roots
// of univariate parts, and whatever single factor remains. Returns an empty
// list for constants and a one-element list when nothing splits.
std::vector<Poly> split_factors(const Poly& e);

// apply a branch solution to a symbolic matrix (entries in the unknowns)
Matrix<RatFunc> matrix_under_solution(const Matrix<RatFunc>& m,
                                      const BranchSolution& sol);

// substitute the solution into a polynomial (used by the soundness probes)
RatFunc poly_under_solution(const Poly& p, const BranchSolution& sol);

}  // namespace fvblab

#endif
