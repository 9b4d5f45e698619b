#ifndef FVBLAB_CENSUS_HPP_
#define FVBLAB_CENSUS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fvblab {

// Result of an exhaustive finite-field enumeration. `matched` tallies the
// survivors by the catalog entry (or normal form) they belong to; anything
// that survives the defining equations but matches nothing is listed in
// `unmatched` verbatim, never dropped.
struct CensusReport {
  std::uint32_t p = 0;
  std::string shape;
  std::uint64_t total_candidates = 0;
  std::uint64_t survivors = 0;
  std::map<std::string, long> matched;
  std::vector<std::string> unmatched;
  std::vector<std::string> notes;

  long matched_total() const;
  std::string str() const;
};

// number of dim x dim matrices over F_p squaring to the identity
std::uint64_t count_involutions(std::uint32_t p, int dim);

// classify every 2x2 involution over F_p by its shape up to global sign
CensusReport census_involutions_2x2(std::uint32_t p);

// enumerate pairs of involutive block_size x block_size blocks over F_p,
// assemble them as shift representations of the flat virtual braid group on
// n_probe strands, keep the pairs satisfying every relation, and match the
// survivors against the catalog (each matrix read up to sign, unmatched
// survivors lifted to centered integers and retried over the rationals).
// Throws std::invalid_argument when p^(2*block_size^2) exceeds 10^8.
CensusReport census_fvb_local(std::uint32_t p, int block_size, int n_probe);

}  // namespace fvblab

#endif
