#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "lacunary/sparse_poly.hpp"

using namespace lacunary;

namespace {

/// Roots by tabulating a^0 .. a^{q-2} with repeated multiplication.
std::vector<Element> naive_roots(const SparsePoly& p) {
  const Field& f = p.field();
  std::vector<Element> out, powers(f.q() - 1);
  for (Element a : f.nonzero_elements()) {
    powers[0] = f.one();
    for (u64 j = 1; j + 1 < f.q(); ++j) powers[j] = f.mul(powers[j - 1], a);
    Element s = f.zero();
    for (const Term& t : p.terms()) s = f.add(s, f.mul(t.coeff, powers[t.exp % (f.q() - 1)]));
    if (s.is_zero()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparsePoly random_poly(std::mt19937_64& rng, const Field& f, u64 max_exp, int max_terms) {
  std::vector<Term> terms;
  const int t = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < t; ++i) {
    terms.push_back(Term{rng() % (max_exp + 1), f.from_code(1 + rng() % (f.q() - 1))});
  }
  return SparsePoly(f, terms);
}

/// C(f) by checking every coset of every subgroup.
u64 naive_largest_coset(const SparsePoly& p) {
  const Field& f = p.field();
  const std::vector<Element> roots = naive_roots(p);
  const std::set<Element> z(roots.begin(), roots.end());
  u64 best = 0;
  for (u64 m : divisors(f.q() - 1)) {
    std::vector<Element> subgroup;
    for (Element h : f.nonzero_elements()) {
      if (f.pow(h, m) == f.one()) subgroup.push_back(h);
    }
    for (Element a : roots) {
      bool all = true;
      for (Element h : subgroup) all = all && z.count(f.mul(a, h));
      if (all) best = std::max<u64>(best, subgroup.size());
    }
  }
  return best;
}

std::vector<std::uint32_t> codes(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (Element e : v) out.push_back(e.code);
  return out;
}

}  // namespace

TEST_CASE("parsing and rendering") {
  const Field f47 = Field::make(47);
  const SparsePoly p = parse_poly("x^22 + 22x^2 + 24", f47);
  REQUIRE(p.sparsity() == 3);
  CHECK(p.terms()[0].exp == 22);
  CHECK(p.terms()[1].exp == 2);
  CHECK(p.terms()[1].coeff == f47.from_int(22));
  CHECK(p.terms()[2].coeff == f47.from_int(24));
  CHECK(render(p) == "x^22 + 22x^2 + 24");
  CHECK(parse_poly("x - x", f47).is_zero());
  CHECK(render(parse_poly("x - x", f47)) == "0");
  CHECK(parse_poly("-3*x^2 + 5x + x^2", f47) == parse_poly("45x^2 + 5x", f47));
  CHECK(parse_poly("100", f47) == SparsePoly::constant(f47, f47.from_int(6)));

  const Field f379 = Field::make(379);
  const SparsePoly q = parse_poly("x^96+x+317", f379);
  CHECK(q.degree() == 96);
  CHECK(q.second_degree() == 1);

  const Field f9 = Field::parse("9");
  const SparsePoly v = parse_poly("(1,2)x^3 + (0,1)", f9);
  CHECK(v.terms()[0].coeff == f9.from_coeffs(std::vector<u64>{1, 2}));
  CHECK(parse_poly(render(v), f9) == v);

  auto syntax_offset = [&](const char* text, const Field& f) -> std::size_t {
    try {
      parse_poly(text, f);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return 9999;
  };
  CHECK(syntax_offset("x^", f47) == 2);
  CHECK(syntax_offset("x + + 1", f47) == 4);
  CHECK(syntax_offset("2y", f47) == 1);
  CHECK(syntax_offset("(1,2)x", f47) == 0);
  CHECK(syntax_offset("(1,2,0)x", f9) == 0);
  try {
    parse_poly("x^2000000000000", f47);
    FAIL("expected ExponentOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExponentOverflow);
  }
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"47", "9", "16", "125", "997"}) {
    const Field f = Field::parse(spec);
    for (int i = 0; i < 200; ++i) {
      const SparsePoly p = random_poly(rng, f, 3000, 6);
      REQUIRE(parse_poly(render(p), f) == p);
    }
  }
}

TEST_CASE("evaluation and root oracles agree with naive loops") {
  const Field f47 = Field::make(47);
  CHECK(eval(parse_poly("x^22+22x^2+24", f47), f47.from_int(34)).is_zero());
  const Field f367 = Field::make(367);
  const SparsePoly p367 = parse_poly("x^137+x+111", f367);
  CHECK(eval(p367, f367.from_int(82)).is_zero());
  CHECK(codes(count_roots_bruteforce(p367).roots) ==
        std::vector<std::uint32_t>{82, 105, 109, 195, 216, 246, 333});
  const Field f379 = Field::make(379);
  CHECK(codes(count_roots_bruteforce(parse_poly("x^96+x+317", f379)).roots) ==
        std::vector<std::uint32_t>{21, 37, 89, 303, 322, 365});
  CHECK(eval(SparsePoly(f47), f47.from_int(3)).is_zero());
  CHECK(count_roots_bruteforce(parse_poly("x - 1", f367)).roots == std::vector<Element>{f367.one()});

  std::mt19937_64 rng(11);
  for (const char* spec : {"7", "13", "9", "16", "27", "25", "101", "499", "1999", "1024"}) {
    const Field f = Field::parse(spec);
    for (int i = 0; i < 25; ++i) {
      SparsePoly p = random_poly(rng, f, 3 * f.q(), 5);
      if (p.is_zero()) continue;
      const RootReport flat = count_roots_bruteforce(p);
      REQUIRE(flat.roots == naive_roots(p));
      for (u64 d : divisors(f.q() - 1)) REQUIRE(count_roots_by_cosets(p, d).roots == flat.roots);
    }
  }
  try {
    count_roots_bruteforce(SparsePoly(f47));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
  try {
    count_roots_bruteforce(parse_poly("x+1", Field::make(1048583)));
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooLarge);
  }
}

TEST_CASE("polynomial arithmetic") {
  const Field f379 = Field::make(379);
  CHECK(poly_pow(parse_poly("x+317", f379), 2) == parse_poly("x^2+255x+54", f379));
  CHECK(reversal(parse_poly("x^2+255x+54", f379)) == parse_poly("54x^2+255x+1", f379));
  CHECK(reversal(parse_poly("x^3", f379)) == parse_poly("1", f379));
  // Fields need q >= 3, so the characteristic-2 Frobenius check runs over F_4.
  const Field f4 = Field::parse("4");
  CHECK(poly_pow(parse_poly("x+1", f4), 2) == parse_poly("x^2+1", f4));
  CHECK_THROWS_AS(Field::make(2), Error);
  const Field f13 = Field::make(13);
  CHECK(parse_poly("x+1", f13) * parse_poly("x-1", f13) == parse_poly("x^2-1", f13));

  std::mt19937_64 rng(3);
  for (const char* spec : {"5", "7", "9", "31", "97", "16"}) {
    const Field f = Field::parse(spec);
    for (int i = 0; i < 40; ++i) {
      const SparsePoly p = random_poly(rng, f, 40, 4);
      SparsePoly acc = p;
      for (u64 n = 1; n <= 5; ++n) {
        REQUIRE(poly_pow(p, n) == acc);
        acc = acc * p;
      }
      if (!p.is_zero() && !p.constant_term().is_zero()) {
        REQUIRE(reversal(reversal(p)) == p);
        const RootReport a = count_roots_bruteforce(p);
        const RootReport b = count_roots_bruteforce(reversal(p));
        REQUIRE(a.count() == b.count());
        for (Element r : a.roots) REQUIRE(eval(reversal(p), f.inv(r)).is_zero());
      }
    }
  }
}

TEST_CASE("normalization helpers") {
  const Field f13 = Field::make(13);
  const auto [s, rest] = strip_x_power(parse_poly("3x^5 + 2x^2", f13));
  CHECK(s == 2);
  CHECK(rest == parse_poly("3x^3 + 2", f13));
  CHECK(make_monic(parse_poly("3x^3 + 2", f13)).is_monic());
  // x^{q-1} - 1 vanishes on all of F_q^* and must not collapse to zero.
  const SparsePoly full = parse_poly("x^12 - 1", f13);
  const SparsePoly reduced = reduce_exponents(full);
  CHECK_FALSE(reduced.is_zero());
  CHECK(count_roots_bruteforce(reduced).count() == 12);
  CHECK(reduce_exponents(parse_poly("x^25 + x^13 + 1", f13)) == parse_poly("x + x + 1", f13));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const SparsePoly p = random_poly(rng, f13, 200, 5);
    if (p.is_zero()) continue;
    const SparsePoly r = reduce_exponents(p);
    if (r.is_zero()) continue;
    REQUIRE(naive_roots(p) == count_roots_bruteforce(r).roots);
    for (const Term& t : r.terms()) REQUIRE(t.exp <= 12);
  }
}

TEST_CASE("coset quantities") {
  const Field f13 = Field::make(13);
  const CosetDecomposition cd = f13.coset_decomposition(2);
  CHECK(vanishes_on_coset(parse_poly("x^6-1", f13), cd.cosets[0]));
  const std::vector<Element> one = {f13.one()};
  CHECK(vanishes_on_coset(parse_poly("x-1", f13), one));
  const Field f47 = Field::make(47);
  CHECK_FALSE(vanishes_on_coset(parse_poly("x^22+22x^2+24", f47), f47.coset_decomposition(2).cosets[0]));

  CHECK(largest_vanishing_coset(parse_poly("x^6-1", f13)) == 6);
  CHECK(largest_vanishing_coset(parse_poly("x^2+1", Field::make(7))) == 0);
  CHECK(largest_vanishing_coset(parse_poly("x^137+x+111", Field::make(367))) == 1);
  std::mt19937_64 rng(19);
  for (const char* spec : {"13", "31", "61", "9", "49"}) {
    const Field f = Field::parse(spec);
    for (int i = 0; i < 30; ++i) {
      const SparsePoly p = random_poly(rng, f, f.q() - 1, 3);
      if (p.is_zero()) continue;
      REQUIRE(largest_vanishing_coset(p) == naive_largest_coset(p));
    }
    // Products of binomials vanish on whole cosets.
    for (u64 e : divisors(f.q() - 1)) {
      const SparsePoly b = SparsePoly::x_pow(f, e) - SparsePoly::constant(f, f.one());
      REQUIRE(largest_vanishing_coset(b) == naive_largest_coset(b));
    }
  }

  const Field f367 = Field::make(367);
  CHECK(exponent_gcd_with_group(parse_poly("x^137+x+111", f367)) == 1);
  CHECK(exponent_gcd_with_group(parse_poly("x^6+x^3+1", f13)) == 3);
  CHECK(exponent_gcd_with_group(parse_poly("5", f13)) == 12);
}
