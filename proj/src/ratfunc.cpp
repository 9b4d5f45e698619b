#include "fvblab/ratfunc.hpp"

#include <stdexcept>

namespace fvblab {

RatFunc::RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num.is_zero()) {
    den = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (!g.is_constant()) {
    num = Poly::divexact(num, g);
    den = Poly::divexact(den, g);
  }
  auto [pp, content] = den.primitive();
  den = pp;
  num = num * content.inverse();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num = -num;
  r.den = den;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num * o.den + o.num * den, den * o.den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num * o.den - o.num * den, den * o.den);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num * o.num, den * o.den);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero())
    throw std::domain_error("division by zero rational function");
  return RatFunc(num * o.den, den * o.num);
}

RatFunc RatFunc::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero rational function");
  return RatFunc(den, num);
}

Rat RatFunc::specialize(const Binding& b) const {
  Rat d = den.eval(b);
  if (d.is_zero())
    throw std::domain_error("denominator vanishes under binding: (" + den.str() +
                            ") at " + b.str());
  return num.eval(b) / d;
}

RatFunc RatFunc::subst(int var, const RatFunc& value) const {
  std::map<int, RatFunc> m;
  m.emplace(var, value);
  return subst(m);
}

RatFunc RatFunc::subst(const std::map<int, RatFunc>& values) const {
  RatFunc n = poly_subst(num, values);
  RatFunc d = poly_subst(den, values);
  if (d.is_zero())
    throw std::domain_error("substitution zeroes a denominator in (" + str() + ")");
  return n / d;
}

std::string RatFunc::str() const {
  if (den.is_constant() && den.constant_value().is_one())
    return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

RatFunc poly_subst(const Poly& p, const std::map<int, RatFunc>& values) {
  RatFunc total;
  for (const auto& [m, c] : p.terms) {
    RatFunc t{c};
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0)
        continue;
      auto it = values.find(int(i));
      RatFunc base = it != values.end() ? it->second : RatFunc::var(int(i));
      for (int k = 0; k < m.e[i]; ++k)
        t *= base;
    }
    total += t;
  }
  return total;
}

}  // namespace fvblab
