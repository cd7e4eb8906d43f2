#include "lacunary/constructions.hpp"

#include <algorithm>

namespace lacunary {

namespace {

Field prime_field(u64 p) { return Field::make(p); }

void require_congruence(u64 p, u64 residue, u64 modulus, u64 above) {
  if (p % modulus != residue || p <= above) {
    throw Error(ErrorCode::CongruenceViolated,
                "need p = " + std::to_string(residue) + " (mod " + std::to_string(modulus) +
                    ") and p > " + std::to_string(above) + ", got " + std::to_string(p));
  }
}

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void confirm_roots(const ConstructedExample& ex) {
  const RootReport found = count_roots_bruteforce(ex.poly);
  if (found.roots != ex.expected_roots) {
    throw Error(ErrorCode::ConstructionMismatch,
                std::string(family_name(ex.family)) + ": oracle found " +
                    std::to_string(found.count()) + " roots, expected " +
                    std::to_string(ex.expected_roots.size()));
  }
}

void confirm_bound(const ConstructedExample& ex, u64 computed) {
  if (computed != ex.claimed_bound || computed != ex.expected_roots.size()) {
    throw Error(ErrorCode::ConstructionMismatch,
                std::string(family_name(ex.family)) + ": " + ex.bound_method + " gives " +
                    std::to_string(computed) + ", expected " + std::to_string(ex.claimed_bound));
  }
}

SparsePoly linear(const Field& field, i64 root) {
  return SparsePoly::x_pow(field, 1) - SparsePoly::constant(field, field.from_int(root));
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::Ex1: return "ex1";
    case Family::Ex2: return "ex2";
    case Family::Ex3: return "ex3";
    case Family::Cyclotomic: return "cyclotomic";
  }
  return "?";
}

ConstructedExample construct_ex1(u64 p) {
  require_congruence(p, 7, 20, 7);
  const Field field = prime_field(p);
  const Element a = field.neg(field.inv(field.from_int(5)));
  const Element four_a = field.mul(field.from_int(4), a);
  const std::vector<Element> s = {field.one(), field.from_int(4), four_a};
  for (Element e : s) {
    if (!field.is_dth_power(e, 2) || field.is_dth_power(field.neg(e), 2)) {
      throw Error(ErrorCode::ConstructionMismatch, "S must be squares and -S non-squares");
    }
  }
  std::vector<Element> roots;
  for (Element e : s) {
    roots.push_back(field.inv(e));
    roots.push_back(field.neg(field.inv(e)));
  }
  const std::vector<Term> terms = {
      {(p - 1) / 2 - 1, field.one()},
      {2, field.neg(field.mul(field.from_int(16), a))},
      {0, field.neg(field.add(four_a, field.from_int(5)))}};
  ConstructedExample ex{Family::Ex1,
                        Json{{"p", p}, {"a", a.code}, {"S", {1, 4, four_a.code}}},
                        SparsePoly(field, terms),
                        sorted_unique(roots),
                        method::kThm1,
                        6};
  confirm_roots(ex);
  confirm_bound(ex, *bound_thm1(decompose_lacunary(ex.poly, 2)).value);
  return ex;
}

ConstructedExample construct_ex2(u64 p, std::optional<u64> r1_in, std::optional<u64> r2_in) {
  require_congruence(p, 3, 4, 3);
  const Field field = prime_field(p);
  std::vector<Element> squares;
  for (u64 v = 1; v < p && squares.size() < 2; ++v) {
    if (field.is_dth_power(field.from_int(static_cast<i64>(v)), 2)) {
      squares.push_back(field.from_int(static_cast<i64>(v)));
    }
  }
  const Element r1 = r1_in ? field.from_int(static_cast<i64>(*r1_in % p)) : squares[0];
  const Element r2 = r2_in ? field.from_int(static_cast<i64>(*r2_in % p)) : squares[1];
  for (Element r : {r1, r2}) {
    if (r.is_zero() || !field.is_dth_power(r, 2)) {
      throw Error(ErrorCode::NotResidue, field.format(r) + " is not a nonzero square mod " +
                                             std::to_string(p));
    }
  }
  if (r1 == r2) throw Error(ErrorCode::EqualResidues, "r1 and r2 must differ");
  const Element a = field.neg(field.inv(field.add(r1, r2)));
  const std::vector<Term> terms = {{(p - 1) / 2 + 1, field.one()},
                                   {2, a},
                                   {0, field.mul(a, field.mul(r1, r2))}};
  ConstructedExample ex{Family::Ex2,
                        Json{{"p", p}, {"r1", r1.code}, {"r2", r2.code}, {"a", a.code}},
                        SparsePoly(field, terms),
                        sorted_unique({r1, field.neg(r1), r2, field.neg(r2)}),
                        method::kThm2,
                        4};
  confirm_roots(ex);
  confirm_bound(ex, *bound_thm2(decompose_excess(ex.poly, 2)).value);
  return ex;
}

ConstructedExample construct_ex3(u64 p) {
  require_congruence(p, 31, 116, 0);
  const Field field = prime_field(p);
  const Element c = field.from_int(6500);
  const SparsePoly quartic = linear(field, 4) * linear(field, 9) * linear(field, 16) * linear(field, -29);
  const SparsePoly f = SparsePoly::monomial(field, c, (p - 1) / 2 + 1) + quartic -
                       SparsePoly::monomial(field, c, 1);
  std::vector<Element> roots;
  for (i64 s : {4, 9, 16, -29}) {
    roots.push_back(field.from_int(s));
    roots.push_back(field.from_int(-s));
  }
  ConstructedExample ex{Family::Ex3, Json{{"p", p}, {"S", {4, 9, 16, -29}}}, f,
                        sorted_unique(roots), method::kThm2, 8};
  confirm_roots(ex);
  confirm_bound(ex, *bound_thm2(decompose_excess(ex.poly, 2)).value);
  return ex;
}

ConstructedExample construct_cyclotomic(const Field& field, u64 big_d, u64 n) {
  if (big_d == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "need D >= 1 and n >= 1");
  const u64 order = big_d * (n + 1);
  if ((field.q() - 1) % order != 0) {
    throw Error(ErrorCode::NotADivisor, "D(n+1) = " + std::to_string(order) + " does not divide q-1");
  }
  std::vector<Term> terms;
  for (u64 j = 0; j <= n; ++j) terms.push_back(Term{big_d * j, field.one()});
  field.require_within_cap("cyclotomic root set");
  std::vector<Element> roots;
  for (Element a : field.nonzero_elements()) {
    if (field.pow(a, order) == field.one() && field.pow(a, big_d) != field.one()) roots.push_back(a);
  }
  SparsePoly f(field, std::move(terms));
  const u64 degree = f.degree();
  ConstructedExample ex{Family::Cyclotomic,
                        Json{{"q", field.q()}, {"D", big_d}, {"n", n}},
                        std::move(f),
                        sorted_unique(roots),
                        method::kDegree,
                        big_d * n};
  confirm_roots(ex);
  confirm_bound(ex, degree);
  return ex;
}

}  // namespace lacunary
