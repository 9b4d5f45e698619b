#ifndef FVBLAB_RATFUNC_HPP_
#define FVBLAB_RATFUNC_HPP_

#include <map>
#include <string>

#include "fvblab/poly.hpp"

namespace fvblab {

// Rational function in canonical form: num/den with gcd(num, den) = 1 and den
// integer-primitive with positive leading coefficient. Equal values have
// identical storage, so == is structural.
struct RatFunc {
  Poly num;
  Poly den;

  RatFunc() : num(), den(Rat(1)) {}
  explicit RatFunc(const Rat& c) : num(c), den(Rat(1)) {}
  explicit RatFunc(long c) : num(Rat(c)), den(Rat(1)) {}
  explicit RatFunc(Poly p) : num(std::move(p)), den(Rat(1)) {}
  RatFunc(Poly n, Poly d);

  static RatFunc var(const std::string& name) { return RatFunc(Poly::var(name)); }
  static RatFunc var(int id) { return RatFunc(Poly::var(id)); }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return *this == one_like(); }
  bool is_constant() const { return num.is_constant() && den.is_constant(); }
  Rat constant_value() const { return num.constant_value() / den.constant_value(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc zero_like() const { return RatFunc(); }
  RatFunc one_like() const { return RatFunc(Rat(1)); }

  // substitution-then-evaluation; throws when a parameter is missing or the
  // denominator vanishes under the binding
  Rat specialize(const Binding& b) const;

  // substitute a single parameter by a rational function
  RatFunc subst(int var, const RatFunc& value) const;
  // substitute several parameters at once (simultaneous, not sequential)
  RatFunc subst(const std::map<int, RatFunc>& values) const;

  std::string str() const;

private:
  void normalize();
};

// polynomial with each variable in `values` replaced by a rational function
RatFunc poly_subst(const Poly& p, const std::map<int, RatFunc>& values);

}  // namespace fvblab

#endif
