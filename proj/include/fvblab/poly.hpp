#ifndef FVBLAB_POLY_HPP_
#define FVBLAB_POLY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fvblab/params.hpp"
#include "fvblab/scalars.hpp"

namespace fvblab {

// Monomial: exponent vector indexed by parameter id, trailing zeros trimmed.
struct Mono {
  std::vector<std::uint8_t> e;

  static Mono one() { return Mono{}; }
  static Mono var(int id, int exp = 1);

  void trim();
  int degree() const;
  int exp_of(int id) const { return id < int(e.size()) ? e[size_t(id)] : 0; }
  bool is_one() const { return e.empty(); }

  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;
  // quotient, caller guarantees divisibility
  Mono operator/(const Mono& o) const;

  bool operator==(const Mono& o) const { return e == o.e; }
  std::string str() const;
};

// graded lexicographic: degree first, then leftmost exponent difference
struct MonoGrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Multivariate polynomial over the rationals, canonical storage: grlex-sorted
// terms, no zero coefficients.
struct Poly {
  std::map<Mono, Rat, MonoGrlexLess> terms;

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}
  static Poly var(int id);
  static Poly var(const std::string& name) { return var(param_id(name)); }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  // requires is_constant()
  Rat constant_value() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly pow(int k) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void add_term(const Mono& m, const Rat& c);

  int total_degree() const;
  int degree_in(int var) const;
  // largest parameter id occurring, or -1 for constants
  int max_var() const;
  std::vector<int> vars() const;

  // leading term in grlex order
  const Mono& lead_mono() const;
  const Rat& lead_coeff() const;

  // coefficient of var^k, a polynomial in the remaining variables
  Poly coeff_of(int var, int k) const;

  Rat eval(const Binding& b) const;
  Poly subst_rat(int var, const Rat& value) const;

  // integer-primitive part (coefficients are coprime integers, leading
  // coefficient positive) and the rational content c with *this = c * pp
  std::pair<Poly, Rat> primitive() const;

  // gcd, returned integer-primitive with positive leading coefficient;
  // gcd(0,0) = 0, and any nonzero constant input gives 1
  static Poly gcd(const Poly& a, const Poly& b);

  // exact quotient; throws std::domain_error if division is not exact
  static Poly divexact(const Poly& a, const Poly& d);
  static bool divides(const Poly& d, const Poly& a);

  std::string str() const;

  // strict total order compatible with canonical storage, for use as map key
  static int cmp(const Poly& a, const Poly& b);
  bool operator<(const Poly& o) const { return cmp(*this, o) < 0; }
};

}  // namespace fvblab

#endif
