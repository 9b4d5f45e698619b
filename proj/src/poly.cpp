#include "fvblab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fvblab {

Mono Mono::var(int id, int exp) {
  Mono m;
  if (exp < 0)
    throw std::invalid_argument("negative exponent");
  if (exp > 0) {
    m.e.assign(size_t(id) + 1, 0);
    m.e[size_t(id)] = std::uint8_t(exp);
  }
  return m;
}

void Mono::trim() {
  while (!e.empty() && e.back() == 0)
    e.pop_back();
}

int Mono::degree() const {
  int d = 0;
  for (auto x : e)
    d += x;
  return d;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  r.e.resize(std::max(e.size(), o.e.size()), 0);
  for (size_t i = 0; i < r.e.size(); ++i) {
    int s = (i < e.size() ? e[i] : 0) + (i < o.e.size() ? o.e[i] : 0);
    if (s > 255)
      throw std::overflow_error("monomial exponent overflow");
    r.e[i] = std::uint8_t(s);
  }
  r.trim();
  return r;
}

bool Mono::divides(const Mono& o) const {
  if (e.size() > o.e.size())
    return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i])
      return false;
  return true;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  r.e.resize(e.size(), 0);
  for (size_t i = 0; i < e.size(); ++i)
    r.e[i] = std::uint8_t(e[i] - (i < o.e.size() ? o.e[i] : 0));
  r.trim();
  return r;
}

std::string Mono::str() const {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += param_name(int(i));
    if (e[i] > 1)
      out += "^" + std::to_string(int(e[i]));
  }
  return out.empty() ? "1" : out;
}

bool MonoGrlexLess::operator()(const Mono& a, const Mono& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db)
    return da < db;
  size_t n = std::max(a.e.size(), b.e.size());
  for (size_t i = 0; i < n; ++i) {
    int xa = i < a.e.size() ? a.e[i] : 0;
    int xb = i < b.e.size() ? b.e[i] : 0;
    if (xa != xb)
      return xa < xb;
  }
  return false;
}

Poly::Poly(const Rat& c) {
  if (!c.is_zero())
    terms.emplace(Mono::one(), c);
}

Poly Poly::var(int id) {
  Poly p;
  p.terms.emplace(Mono::var(id), Rat(1));
  return p;
}

bool Poly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one());
}

Rat Poly::constant_value() const {
  if (terms.empty())
    return Rat();
  if (!is_constant())
    throw std::logic_error("constant_value of non-constant polynomial");
  return terms.begin()->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c.is_zero())
    return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms)
    r.terms.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms)
    r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms)
    r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms)
      r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r;
  if (c.is_zero())
    return r;
  for (const auto& [m, k] : terms)
    r.terms.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0)
    throw std::invalid_argument("negative polynomial power");
  Poly r(Rat(1));
  for (int i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

int Poly::total_degree() const {
  return terms.empty() ? -1 : terms.rbegin()->first.degree();
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms)
    d = std::max(d, m.exp_of(var));
  return is_zero() ? -1 : std::max(d, 0);
}

int Poly::max_var() const {
  int mv = -1;
  for (const auto& [m, c] : terms)
    for (size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0)
        mv = std::max(mv, int(i));
  return mv;
}

std::vector<int> Poly::vars() const {
  std::vector<int> out;
  int mv = max_var();
  for (int v = 0; v <= mv; ++v)
    if (degree_in(v) > 0)
      out.push_back(v);
  return out;
}

const Mono& Poly::lead_mono() const {
  if (terms.empty())
    throw std::logic_error("leading monomial of zero polynomial");
  return terms.rbegin()->first;
}

const Rat& Poly::lead_coeff() const {
  if (terms.empty())
    throw std::logic_error("leading coefficient of zero polynomial");
  return terms.rbegin()->second;
}

Poly Poly::coeff_of(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms) {
    if (m.exp_of(var) != k)
      continue;
    Mono rest = m / Mono::var(var, k);
    r.add_term(rest, c);
  }
  return r;
}

Rat Poly::eval(const Binding& b) const {
  Rat total;
  for (const auto& [m, c] : terms) {
    Rat t = c;
    for (size_t i = 0; i < m.e.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k)
        t *= b.at(int(i));
    total += t;
  }
  return total;
}

Poly Poly::subst_rat(int var, const Rat& value) const {
  Poly r;
  for (const auto& [m, c] : terms) {
    int k = m.exp_of(var);
    Rat coeff = c;
    for (int i = 0; i < k; ++i)
      coeff *= value;
    r.add_term(m / Mono::var(var, k), coeff);
  }
  return r;
}

std::pair<Poly, Rat> Poly::primitive() const {
  if (is_zero())
    return {Poly(), Rat(1)};
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms) {
    mpz_class n = abs(c.num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (lead_coeff().sign() < 0)
    content = -content;
  Rat c(content);
  Poly pp = *this * c.inverse();
  return {pp, c};
}

Poly Poly::divexact(const Poly& a, const Poly& d) {
  if (d.is_zero())
    throw std::domain_error("polynomial division by zero");
  Poly rem = a, q;
  while (!rem.is_zero()) {
    const Mono& lm = rem.lead_mono();
    const Mono& dm = d.lead_mono();
    if (!dm.divides(lm))
      throw std::domain_error("polynomial division not exact");
    Mono qm = lm / dm;
    Rat qc = rem.lead_coeff() / d.lead_coeff();
    Poly qt;
    qt.terms.emplace(qm, qc);
    q = q + qt;
    rem = rem - qt * d;
  }
  return q;
}

bool Poly::divides(const Poly& d, const Poly& a) {
  if (a.is_zero())
    return true;
  if (d.is_zero())
    return false;
  try {
    divexact(a, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

namespace {

// pseudo-remainder of a by b, both viewed as univariate in var; the rational
// content of the intermediate rows is irrelevant to the PRS and stripping it
// keeps coefficients from snowballing
Poly pseudo_rem(Poly a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lb = b.coeff_of(var, db);
  while (!a.is_zero()) {
    int da = a.degree_in(var);
    if (da < db)
      break;
    Poly la = a.coeff_of(var, da);
    Poly shift = Poly::var(var).pow(da - db);
    a = (a * lb - b * shift * la).primitive().first;
  }
  return a;
}

// content of p w.r.t. var: gcd of the univariate coefficients
Poly content_in(const Poly& p, int var) {
  Poly c;
  for (int k = 0; k <= p.degree_in(var); ++k) {
    Poly ck = p.coeff_of(var, k);
    if (!ck.is_zero())
      c = Poly::gcd(c, ck);
  }
  return c;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    return Poly();
  if (a.is_zero())
    return b.primitive().first;
  if (b.is_zero())
    return a.primitive().first;
  if (a.is_constant() || b.is_constant())
    return Poly(Rat(1));

  int var = std::max(a.max_var(), b.max_var());
  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
    // var occurs in only one argument: gcd must be var-free and divide the
    // other's coefficients, i.e. its content in var
    const Poly& with = a.degree_in(var) > 0 ? a : b;
    const Poly& without = a.degree_in(var) > 0 ? b : a;
    return gcd(content_in(with, var), without);
  }

  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly c = gcd(ca, cb);
  Poly f = divexact(a, ca), g = divexact(b, cb);
  if (f.degree_in(var) < g.degree_in(var))
    std::swap(f, g);
  while (true) {
    Poly r = pseudo_rem(f, g, var);
    if (r.is_zero()) {
      f = g;
      break;
    }
    if (r.degree_in(var) == 0) {
      // nonzero var-free remainder: primitive parts are coprime
      f = Poly(Rat(1));
      break;
    }
    Poly rc = content_in(r, var);
    f = g;
    g = divexact(r, rc);
  }
  return (c * f.primitive().first).primitive().first;
}

std::string Poly::str() const {
  if (terms.empty())
    return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rat ac = neg ? -c : c;
    if (m.is_one()) {
      out += ac.str();
    } else {
      if (!ac.is_one())
        out += ac.str() + "*";
      out += m.str();
    }
  }
  return out;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  auto ia = a.terms.rbegin(), ib = b.terms.rbegin();
  MonoGrlexLess less;
  for (; ia != a.terms.rend() && ib != b.terms.rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second < ib->second) return -1;
    if (ib->second < ia->second) return 1;
  }
  if (ia != a.terms.rend()) return 1;
  if (ib != b.terms.rend()) return -1;
  return 0;
}

}  // namespace fvblab
