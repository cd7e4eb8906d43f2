#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lacunary/field.hpp"

namespace lacunary {

/// Largest exponent accepted anywhere; keeps every product of degrees in u64.
inline constexpr u64 kMaxExponent = u64{1} << 40;

struct Term {
  u64 exp = 0;
  Element coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_q.  Terms are kept sorted by strictly decreasing
/// exponent with nonzero coefficients; the zero polynomial has no terms.
class SparsePoly {
 public:
  explicit SparsePoly(Field field) : field_(std::move(field)) {}
  /// Sorts, combines like terms and drops zero coefficients.
  SparsePoly(Field field, std::vector<Term> terms);

  static SparsePoly monomial(const Field& field, Element coeff, u64 exp);
  static SparsePoly constant(const Field& field, Element value) { return monomial(field, value, 0); }
  /// x^e
  static SparsePoly x_pow(const Field& field, u64 exp) { return monomial(field, field.one(), exp); }

  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t sparsity() const { return terms_.size(); }

  /// f°; throws ZeroPolynomial.
  u64 degree() const;
  /// f°°, the exponent of the second-highest term.
  std::optional<u64> second_degree() const;
  Element leading_coeff() const;
  Element constant_term() const;
  bool is_monic() const { return !is_zero() && leading_coeff() == field_.one(); }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::vector<Term> terms_;
};

struct RootReport {
  /// Nonzero roots in canonical element order.
  std::vector<Element> roots;
  std::size_t count() const { return roots.size(); }
  friend bool operator==(const RootReport&, const RootReport&) = default;
};

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly scale(const SparsePoly& f, Element c);
/// x^s * f
SparsePoly shift(const SparsePoly& f, u64 s);

/// Divides by the leading coefficient; Z(f) is unchanged.
SparsePoly make_monic(const SparsePoly& f);

/// Splits f = x^s * rest with rest(0) != 0.
std::pair<u64, SparsePoly> strip_x_power(const SparsePoly& f);

/// Maps each positive exponent e to ((e - 1) mod (q - 1)) + 1, preserving Z(f).
SparsePoly reduce_exponents(const SparsePoly& f);

SparsePoly poly_pow(const SparsePoly& f, u64 n);

/// x^{f°} f(1/x).
SparsePoly reversal(const SparsePoly& f);

Element eval(const SparsePoly& f, Element a);

/// Exact Z(f) by evaluating f at every element of F_q^*.
RootReport count_roots_bruteforce(const SparsePoly& f);

/// Same result as count_roots_bruteforce, but evaluates coset by coset: on
/// { y : y^{(q-1)/d} = xi } each term c y^e becomes (c xi^a) y^b with
/// e = a (q-1)/d + b.
RootReport count_roots_by_cosets(const SparsePoly& f, u64 d);

bool vanishes_on_coset(const SparsePoly& f, std::span<const Element> coset);

/// C(f): size of the largest multiplicative coset on which f vanishes.
u64 largest_vanishing_coset(const SparsePoly& f);
u64 largest_vanishing_coset(const SparsePoly& f, const RootReport& roots);

/// D(f) = gcd of all exponents and q - 1.
u64 exponent_gcd_with_group(const SparsePoly& f);

/// Grammar:  poly := ['+'|'-'] term (('+'|'-') term)*
///           term := coeff | [coeff ['*']] 'x' ['^' exp]
///           coeff := integer | '(' integer (',' integer)* ')'
SparsePoly parse_poly(std::string_view text, const Field& field);

/// Canonical text, e.g. "x^22 + 22x^2 + 24"; parse_poly(render(f)) == f.
std::string render(const SparsePoly& f);

}  // namespace lacunary
