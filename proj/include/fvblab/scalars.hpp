#ifndef FVBLAB_SCALARS_HPP_
#define FVBLAB_SCALARS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace fvblab {

// Exact rational scalar. Wraps mpq_class so the rest of the code deals with
// one small value type: always canonical (reduced, positive denominator).
struct Rat {
  mpq_class v;

  Rat() : v(0) {}
  Rat(long n) : v(n) {}
  Rat(long n, long d) : v(n, d) {
    if (d == 0)
      throw std::domain_error("rational with zero denominator");
    v.canonicalize();
  }
  explicit Rat(mpq_class q) : v(std::move(q)) {}

  bool is_zero() const { return sgn(v) == 0; }
  bool is_one() const { return v == 1; }
  int sign() const { return sgn(v); }

  Rat operator-() const { return Rat(mpq_class(-v)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v + o.v)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v - o.v)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v * o.v)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero())
      throw std::domain_error("division by zero rational");
    return Rat(mpq_class(v / o.v));
  }
  Rat& operator+=(const Rat& o) { v += o.v; return *this; }
  Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
  Rat& operator*=(const Rat& o) { v *= o.v; return *this; }

  Rat inverse() const {
    if (is_zero())
      throw std::domain_error("inverse of zero rational");
    return Rat(mpq_class(1 / v));
  }

  bool operator==(const Rat& o) const { return v == o.v; }
  bool operator!=(const Rat& o) const { return v != o.v; }
  bool operator<(const Rat& o) const { return v < o.v; }

  Rat zero_like() const { return Rat(); }
  Rat one_like() const { return Rat(1); }

  mpz_class num() const { return v.get_num(); }
  mpz_class den() const { return v.get_den(); }

  // "p/q", with "/q" omitted when q = 1
  std::string str() const { return v.get_str(); }

  static Rat parse(const std::string& s);
};

// Prime-field scalar for censuses. Carries its modulus so matrices over F_p
// need no external context.
struct FpElem {
  std::uint32_t val;
  std::uint32_t p;

  FpElem() : val(0), p(2) {}
  FpElem(std::uint64_t x, std::uint32_t prime) : val(uint32_t(x % prime)), p(prime) {}

  static FpElem from_int(long x, std::uint32_t prime) {
    long r = x % long(prime);
    if (r < 0) r += prime;
    return FpElem(std::uint64_t(r), prime);
  }

  void check(const FpElem& o) const {
    if (p != o.p)
      throw std::logic_error("mixed moduli in F_p arithmetic");
  }

  bool is_zero() const { return val == 0; }
  bool is_one() const { return val == 1; }

  FpElem operator-() const { return FpElem(val == 0 ? 0 : p - val, p); }
  FpElem operator+(const FpElem& o) const { check(o); return FpElem(std::uint64_t(val) + o.val, p); }
  FpElem operator-(const FpElem& o) const { check(o); return FpElem(std::uint64_t(val) + p - o.val, p); }
  FpElem operator*(const FpElem& o) const { check(o); return FpElem(std::uint64_t(val) * o.val, p); }
  FpElem operator/(const FpElem& o) const { return *this * o.inverse(); }
  FpElem& operator+=(const FpElem& o) { *this = *this + o; return *this; }
  FpElem& operator-=(const FpElem& o) { *this = *this - o; return *this; }
  FpElem& operator*=(const FpElem& o) { *this = *this * o; return *this; }

  FpElem inverse() const {
    if (val == 0)
      throw std::domain_error("inverse of zero in F_p");
    // p is prime, so Fermat
    std::uint64_t r = 1, b = val, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return FpElem(r, p);
  }

  bool operator==(const FpElem& o) const { return val == o.val && p == o.p; }
  bool operator!=(const FpElem& o) const { return !(*this == o); }

  FpElem zero_like() const { return FpElem(0, p); }
  FpElem one_like() const { return FpElem(1, p); }

  std::string str() const { return std::to_string(val); }
};

// Visits all p^arity tuples over F_p in lexicographic order (first coordinate
// slowest). Guarded so a typo cannot start an infeasible enumeration.
inline std::uint64_t fp_enumeration_size(std::uint32_t p, int arity) {
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) {
    total *= p;
    if (total > 100000000ULL)
      throw std::invalid_argument("fp_enumerate guard exceeded: p^arity > 10^8");
  }
  return total;
}

inline void fp_enumerate(std::uint32_t p, int arity,
                         const std::function<void(const std::vector<FpElem>&)>& fn) {
  std::uint64_t total = fp_enumeration_size(p, arity);
  std::vector<FpElem> tuple(size_t(arity), FpElem(0, p));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      tuple[size_t(i)] = FpElem(rest % p, p);
      rest /= p;
    }
    fn(tuple);
  }
}

}  // namespace fvblab

#endif
