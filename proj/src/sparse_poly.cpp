#include "lacunary/sparse_poly.hpp"

#include <algorithm>
#include <map>

namespace lacunary {

namespace {

void require_same_field(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, "polynomials live over different fields");
  }
}

void require_nonzero(const SparsePoly& f, const char* what) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, std::string(what) + " of the zero polynomial");
}

}  // namespace

SparsePoly::SparsePoly(Field field, std::vector<Term> terms) : field_(std::move(field)) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp > b.exp; });
  for (const Term& t : terms) {
    if (t.exp > kMaxExponent) {
      throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(t.exp) + " too large");
    }
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
      terms_.push_back(t);
    }
  }
  if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
}

SparsePoly SparsePoly::monomial(const Field& field, Element coeff, u64 exp) {
  return SparsePoly(field, {Term{exp, coeff}});
}

u64 SparsePoly::degree() const {
  require_nonzero(*this, "degree");
  return terms_.front().exp;
}

std::optional<u64> SparsePoly::second_degree() const {
  if (terms_.size() < 2) return std::nullopt;
  return terms_[1].exp;
}

Element SparsePoly::leading_coeff() const {
  require_nonzero(*this, "leading coefficient");
  return terms_.front().coeff;
}

Element SparsePoly::constant_term() const {
  if (terms_.empty() || terms_.back().exp != 0) return field_.zero();
  return terms_.back().coeff;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  require_same_field(a, b);
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return SparsePoly(a.field(), std::move(terms));
}

SparsePoly operator-(const SparsePoly& a) {
  std::vector<Term> terms;
  for (const Term& t : a.terms()) terms.push_back({t.exp, a.field().neg(t.coeff)});
  return SparsePoly(a.field(), std::move(terms));
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_field(a, b);
  const Field& field = a.field();
  std::vector<Term> terms;
  terms.reserve(a.sparsity() * b.sparsity());
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) {
      if (x.exp + y.exp > kMaxExponent) {
        throw Error(ErrorCode::ExponentOverflow, "product degree exceeds the exponent limit");
      }
      terms.push_back({x.exp + y.exp, field.mul(x.coeff, y.coeff)});
    }
  }
  return SparsePoly(field, std::move(terms));
}

SparsePoly scale(const SparsePoly& f, Element c) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back({t.exp, f.field().mul(t.coeff, c)});
  return SparsePoly(f.field(), std::move(terms));
}

SparsePoly shift(const SparsePoly& f, u64 s) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back({t.exp + s, t.coeff});
  return SparsePoly(f.field(), std::move(terms));
}

SparsePoly make_monic(const SparsePoly& f) {
  require_nonzero(f, "normalization");
  return scale(f, f.field().inv(f.leading_coeff()));
}

std::pair<u64, SparsePoly> strip_x_power(const SparsePoly& f) {
  if (f.is_zero()) return {0, f};
  const u64 s = f.terms().back().exp;
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back({t.exp - s, t.coeff});
  return {s, SparsePoly(f.field(), std::move(terms))};
}

SparsePoly reduce_exponents(const SparsePoly& f) {
  const u64 group = f.field().q() - 1;
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    terms.push_back({t.exp == 0 ? 0 : (t.exp - 1) % group + 1, t.coeff});
  }
  return SparsePoly(f.field(), std::move(terms));
}

SparsePoly poly_pow(const SparsePoly& f, u64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "poly_pow needs n >= 1");
  if (!f.is_zero() && f.degree() > kMaxExponent / n) {
    throw Error(ErrorCode::ExponentOverflow, "power degree exceeds the exponent limit");
  }
  SparsePoly result = SparsePoly::constant(f.field(), f.field().one());
  SparsePoly base = f;
  bool have_result = false;
  while (n > 0) {
    if (n & 1) {
      result = have_result ? result * base : base;
      have_result = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

SparsePoly reversal(const SparsePoly& f) {
  require_nonzero(f, "reversal");
  const u64 top = f.degree();
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back({top - t.exp, t.coeff});
  return SparsePoly(f.field(), std::move(terms));
}

Element eval(const SparsePoly& f, Element a) {
  const Field& field = f.field();
  Element sum = field.zero();
  for (const Term& t : f.terms()) sum = field.add(sum, field.mul(t.coeff, field.pow(a, t.exp)));
  return sum;
}

RootReport count_roots_bruteforce(const SparsePoly& f) {
  require_nonzero(f, "root count");
  const Field& field = f.field();
  field.require_within_cap("root oracle");
  // Exponents only matter mod q-1 on F_q^*.
  const SparsePoly reduced = reduce_exponents(f);
  RootReport report;
  for (u64 code = 1; code < field.q(); ++code) {
    const Element a{static_cast<std::uint32_t>(code)};
    if (eval(reduced, a).is_zero()) report.roots.push_back(a);
  }
  return report;
}

RootReport count_roots_by_cosets(const SparsePoly& f, u64 d) {
  require_nonzero(f, "root count");
  const Field& field = f.field();
  field.require_within_cap("root oracle");
  const CosetDecomposition cosets = field.coset_decomposition(d);
  const u64 block = (field.q() - 1) / d;
  RootReport report;
  std::vector<Term> folded;
  for (std::size_t i = 0; i < cosets.xi_list.size(); ++i) {
    const Element xi = cosets.xi_list[i];
    folded.clear();
    for (const Term& t : f.terms()) {
      folded.push_back({t.exp % block, field.mul(t.coeff, field.pow(xi, t.exp / block))});
    }
    const SparsePoly on_coset(field, folded);
    if (on_coset.is_zero()) {
      report.roots.insert(report.roots.end(), cosets.cosets[i].begin(), cosets.cosets[i].end());
      continue;
    }
    for (Element y : cosets.cosets[i]) {
      if (eval(on_coset, y).is_zero()) report.roots.push_back(y);
    }
  }
  std::sort(report.roots.begin(), report.roots.end());
  return report;
}

bool vanishes_on_coset(const SparsePoly& f, std::span<const Element> coset) {
  if (coset.empty()) throw Error(ErrorCode::InvalidArgument, "coset must be nonempty");
  return std::all_of(coset.begin(), coset.end(), [&](Element a) { return eval(f, a).is_zero(); });
}

u64 largest_vanishing_coset(const SparsePoly& f) {
  return largest_vanishing_coset(f, count_roots_bruteforce(f));
}

u64 largest_vanishing_coset(const SparsePoly& f, const RootReport& roots) {
  require_nonzero(f, "coset search");
  const Field& field = f.field();
  const auto sizes = divisors(field.q() - 1);
  // Cosets of the order-e subgroup are the fibres of a -> a^e.
  for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
    const u64 e = *it;
    if (e > roots.count()) continue;
    std::map<Element, u64> fibre;
    for (Element r : roots.roots) {
      if (++fibre[field.pow(r, e)] == e) return e;
    }
  }
  return 0;
}

u64 exponent_gcd_with_group(const SparsePoly& f) {
  require_nonzero(f, "exponent gcd");
  u64 g = f.field().q() - 1;
  for (const Term& t : f.terms()) g = gcd(g, t.exp);
  return g;
}

}  // namespace lacunary
