#include "cvg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvg {

std::string var_name(const VarId& v) {
  const char letter = v.side == 'A' ? 'a' : 'b';
  if (v.i == v.j) return std::string(1, letter) + "[" + std::to_string(v.i) + "]";
  return std::string(1, letter) + "[" + std::to_string(v.i) + "," +
         std::to_string(v.j) + "]";
}

VarTable::VarTable(std::vector<VarId> vars) : vars_(std::move(vars)) {
  for (int t = 0; t < int(vars_.size()); ++t) index_[vars_[std::size_t(t)]] = t;
  if (index_.size() != vars_.size())
    throw std::invalid_argument("duplicate variable in table");
}

std::optional<int> VarTable::index_of(const VarId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Monomial Monomial::var(int index, int nvars) {
  Monomial m = one(nvars);
  m.exp.at(std::size_t(index)) = 1;
  m.degree = 1;
  return m;
}

std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree)
    return a.degree < b.degree ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  for (int t = int(a.exp.size()) - 1; t >= 0; --t) {
    const auto ea = a.exp[std::size_t(t)], eb = b.exp[std::size_t(t)];
    if (ea != eb)
      return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t t = 0; t < a.exp.size(); ++t)
    if (a.exp[t] > b.exp[t]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t t = 0; t < b.exp.size(); ++t)
    out.exp[t] = std::uint8_t(out.exp[t] + b.exp[t]);
  out.degree = a.degree + b.degree;
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t t = 0; t < b.exp.size(); ++t)
    out.exp[t] = std::uint8_t(out.exp[t] - b.exp[t]);
  out.degree = a.degree - b.degree;
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.degree = 0;
  for (std::size_t t = 0; t < b.exp.size(); ++t) {
    out.exp[t] = std::max(out.exp[t], b.exp[t]);
    out.degree += out.exp[t];
  }
  return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t t = 0; t < a.exp.size(); ++t)
    if (a.exp[t] != 0 && b.exp[t] != 0) return false;
  return true;
}

Polynomial Polynomial::constant(long c, int nvars) {
  Polynomial p;
  if (c != 0) p.terms.push_back({Monomial::one(nvars), mpz_class(c)});
  return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
  Polynomial p;
  p.terms.push_back({Monomial::var(index, nvars), mpz_class(1)});
  return p;
}

void Polynomial::normalize() {
  if (terms.empty()) return;
  mpz_class content = 0;
  for (const Term& t : terms) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
    if (content == 1) break;
  }
  if (sgn(terms.front().coeff) < 0) content = -content;
  if (content != 1)
    for (Term& t : terms) t.coeff /= content;
}

Polynomial poly_add_scaled(const Polynomial& p, const mpz_class& c,
                           const Monomial& m, const Polynomial& q) {
  Polynomial out;
  out.terms.reserve(p.terms.size() + q.terms.size());
  std::size_t a = 0, b = 0;
  while (a < p.terms.size() || b < q.terms.size()) {
    if (b == q.terms.size()) {
      out.terms.push_back(p.terms[a++]);
      continue;
    }
    Term scaled{mono_mul(q.terms[b].mono, m), c * q.terms[b].coeff};
    if (a == p.terms.size()) {
      out.terms.push_back(std::move(scaled));
      ++b;
      continue;
    }
    const auto cmp = degrevlex(p.terms[a].mono, scaled.mono);
    if (cmp == std::strong_ordering::greater) {
      out.terms.push_back(p.terms[a++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms.push_back(std::move(scaled));
      ++b;
    } else {
      mpz_class sum = p.terms[a].coeff + scaled.coeff;
      if (sum != 0) out.terms.push_back({p.terms[a].mono, std::move(sum)});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  return poly_add_scaled(p, mpz_class(1), Monomial::one(int(p.terms.empty()
                                                                ? (q.terms.empty() ? 0 : q.terms.front().mono.exp.size())
                                                                : p.terms.front().mono.exp.size())),
                         q);
}

Polynomial poly_scale(const Polynomial& p, const mpz_class& c) {
  Polynomial out = p;
  for (Term& t : out.terms) t.coeff *= c;
  return out;
}

std::string to_string(const Polynomial& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.terms.size(); ++t) {
    const Term& term = p.terms[t];
    mpz_class c = term.coeff;
    if (t == 0) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string monos;
    for (std::size_t v = 0; v < term.mono.exp.size(); ++v) {
      if (term.mono.exp[v] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += var_name(vars.var(int(v)));
      if (term.mono.exp[v] > 1) monos += "^" + std::to_string(int(term.mono.exp[v]));
    }
    if (monos.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += monos;
    }
  }
  return out;
}

}  // namespace cvg
