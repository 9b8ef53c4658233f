#ifndef CVG_POLYNOMIAL_HPP
#define CVG_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cvg {

// One entry of the symbolic matrices: side 'A' (patterned on the graph) or
// 'B' (patterned on the complement), upper triangle i <= j.
struct VarId {
  char side = 'A';
  int i = 0, j = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// "a[i,j]" / "b[i]" (diagonal entries print with a single index).
std::string var_name(const VarId& v);

// Priority-ordered variable set.  Index 0 is the largest variable of the
// monomial order; the intended layout is off-diagonal A, off-diagonal B,
// diagonal A, diagonal B, lexicographic within each group.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<VarId> vars);
  int size() const { return int(vars_.size()); }
  const VarId& var(int index) const { return vars_.at(std::size_t(index)); }
  std::optional<int> index_of(const VarId& v) const;

 private:
  std::vector<VarId> vars_;
  std::map<VarId, int> index_;
};

// Exponent vector over a fixed variable count, with cached total degree.
struct Monomial {
  std::vector<std::uint8_t> exp;
  int degree = 0;

  static Monomial one(int nvars) { return {std::vector<std::uint8_t>(std::size_t(nvars), 0), 0}; }
  static Monomial var(int index, int nvars);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Degree reverse lexicographic order: total degree first; ties broken at the
// lowest-priority differing variable, where the smaller exponent wins.
std::strong_ordering degrevlex(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpz_class coeff;
};

// Primitive integer polynomial: terms sorted descending under degrevlex, no
// zero coefficients, content 1 with positive leading coefficient after
// normalize().  The zero polynomial has no terms.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& leading() const { return terms.front(); }
  int degree() const { return terms.empty() ? -1 : terms.front().mono.degree; }
  bool is_constant() const {
    return terms.size() == 1 && terms.front().mono.degree == 0;
  }

  static Polynomial zero() { return {}; }
  static Polynomial constant(long c, int nvars);
  static Polynomial variable(int index, int nvars);

  // Divides out the content and makes the leading coefficient positive.
  void normalize();
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
// p + c * m * q, the merge step shared by subtraction and reduction.
Polynomial poly_add_scaled(const Polynomial& p, const mpz_class& c,
                           const Monomial& m, const Polynomial& q);
// Scales p by c (c nonzero).
Polynomial poly_scale(const Polynomial& p, const mpz_class& c);

// Canonical sorted-monomial rendering, e.g. "a[0,1]^2*b[3] - 2*b[0]".
std::string to_string(const Polynomial& p, const VarTable& vars);

}  // namespace cvg

#endif
