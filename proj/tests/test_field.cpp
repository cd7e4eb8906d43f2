#include <algorithm>
#include <set>

#include "doctest.h"
#include "lacunary/field.hpp"

using namespace lacunary;
using u32 = std::uint32_t;

namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

/// Order of a in F_q^* by repeated multiplication.
u64 naive_order(const Field& f, Element a) {
  Element x = a;
  u64 n = 1;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++n;
  }
  return n;
}

/// Product of two codes by dense polynomial multiplication mod the modulus.
u64 dense_mul(const Field& f, u64 a, u64 b) {
  const u64 p = f.p();
  const unsigned k = f.k();
  std::vector<u64> x(k), y(k), prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const u64 c = prod[deg];
    for (unsigned i = 0; i <= k; ++i) {
      prod[deg - k + i] = (prod[deg - k + i] + (p - c) * f.modulus()[i]) % p;
    }
  }
  u64 out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

u64 digit_add(const Field& f, u64 a, u64 b) {
  u64 out = 0, place = 1;
  for (unsigned i = 0; i < f.k(); ++i, a /= f.p(), b /= f.p(), place *= f.p()) {
    out += ((a % f.p() + b % f.p()) % f.p()) * place;
  }
  return out;
}

}  // namespace

TEST_CASE("integer helpers") {
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693953ULL));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to 2, 3, 5, 7

  for (u64 n = 1; n < 500; ++n) {
    std::vector<u64> naive;
    for (u64 k = 1; k <= n; ++k) {
      if (n % k == 0) naive.push_back(k);
    }
    REQUIRE(divisors(n) == naive);
  }
  CHECK(prime_factors(378) == std::vector<u64>{2, 3, 7});

  for (u64 n = 0; n < 100000; ++n) {
    const u64 r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(~u64{0}) == 4294967295ULL);
  CHECK(isqrt(35532) == 188);
  CHECK(gcd(12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(powmod(2, 46, 47) == 1);
}

TEST_CASE("prime field construction and arithmetic") {
  const Field f = Field::make(47);
  CHECK(f.q() == 47);
  CHECK(f.mul(f.from_int(22), f.from_int(24)) == f.from_int(11));
  CHECK(f.pow(f.from_int(2), 46) == f.one());
  const Field f13 = Field::make(13);
  CHECK(f13.pow(f13.from_int(2), 6) == f13.from_int(12));
  CHECK(f13.pow(f13.zero(), 0) == f13.one());
  CHECK(f13.from_int(-1) == f13.from_int(12));
  CHECK_THROWS_AS(Field::make(4), Error);
  try {
    Field::make(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    f.div(f.one(), f.zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    f.from_code(47);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK(f.arith(f.from_int(5), f.from_int(7), ArithOp::Sub) == f.from_int(45));
}

TEST_CASE("Fermat holds for every element of every field up to 10^4") {
  for (u64 q = 3; q <= 10000; ++q) {
    const auto pf = prime_factors(q);
    if (pf.size() != 1) continue;
    // Exhaustive for q <= 2000, sampled above to keep the suite quick.
    const Field f = Field::parse(std::to_string(q));
    const u64 step = q <= 2000 ? 1 : 37;
    for (u64 c = 1; c < q; c += step) REQUIRE(f.pow(f.from_code(c), q - 1) == f.one());
  }
}

TEST_CASE("generated moduli are the smallest irreducibles") {
  const Field f9 = Field::make(3, 2);
  CHECK(std::vector<u32>(f9.modulus().begin(), f9.modulus().end()) == std::vector<u32>{1, 0, 1});
  const Field f16 = Field::parse("16");
  CHECK(f16.k() == 4);
  CHECK(std::vector<u32>(f16.modulus().begin(), f16.modulus().end()) ==
        std::vector<u32>{1, 0, 0, 1, 1});
  // x * x = -1 in F_9.
  const Element x = f9.from_coeffs(std::vector<u64>{0, 1});
  CHECK(f9.mul(x, x) == f9.from_int(2));
  try {
    Field::parse("3^2:2,0,1");  // x^2 - 1
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  try {
    Field::parse("3^2:1,1");
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("F_9 from generated and supplied moduli agree") {
  const Field a = Field::parse("3^2");
  const Field b = Field::parse("3^2:1,0,1");
  for (u64 i = 0; i < 9; ++i) {
    for (u64 j = 0; j < 9; ++j) {
      const Element x{static_cast<u32>(i)}, y{static_cast<u32>(j)};
      REQUIRE(a.add(x, y) == b.add(x, y));
      REQUIRE(a.mul(x, y) == b.mul(x, y));
    }
  }
}

TEST_CASE("extension arithmetic matches dense polynomial arithmetic") {
  for (const char* spec : {"3^2", "2^4", "5^3", "3^5", "2^8", "31^2", "7^3", "3^2:2,2,1"}) {
    const Field f = Field::parse(spec);
    CAPTURE(spec);
    const u64 q = f.q();
    const u64 step = q > 300 ? 7 : 1;
    for (u64 i = 0; i < q; i += step) {
      for (u64 j = 0; j < q; j += step) {
        const Element a{static_cast<u32>(i)}, b{static_cast<u32>(j)};
        REQUIRE(f.mul(a, b).code == dense_mul(f, i, j));
        REQUIRE(f.add(a, b).code == digit_add(f, i, j));
        REQUIRE(f.add(f.sub(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("extension fields satisfy the field axioms") {
  for (const char* spec : {"3^2", "2^4", "5^2", "3^3", "2^3", "7^2", "2^5", "3^4"}) {
    const Field f = Field::parse(spec);
    const u64 q = f.q();
    CAPTURE(spec);
    bool cyclic = false;
    for (u64 i = 1; i < q; ++i) {
      const Element a{static_cast<u32>(i)};
      // Inverse by exhaustive search, then against inv().
      u64 found = 0;
      for (u64 j = 1; j < q; ++j) {
        if (f.mul(a, Element{static_cast<u32>(j)}) == f.one()) ++found;
      }
      REQUIRE(found == 1);
      REQUIRE(f.mul(a, f.inv(a)) == f.one());
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (naive_order(f, a) == q - 1) cyclic = true;
    }
    CHECK(cyclic);
    for (u64 i = 0; i < q; i += 3) {
      for (u64 j = 0; j < q; j += 2) {
        for (u64 k = 0; k < q; k += 5) {
          const Element a{static_cast<u32>(i)}, b{static_cast<u32>(j)}, c{static_cast<u32>(k)};
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("d-th powers match enumeration") {
  for (u64 q = 3; q <= 500; ++q) {
    if (prime_factors(q).size() != 1) continue;
    const Field f = Field::parse(std::to_string(q));
    for (u64 d : divisors(q - 1)) {
      std::set<Element> powers;
      for (Element b : f.nonzero_elements()) powers.insert(f.pow(b, d));
      for (Element a : f.nonzero_elements()) REQUIRE(f.is_dth_power(a, d) == powers.count(a) > 0);
    }
  }
  const Field f47 = Field::make(47);
  CHECK(f47.is_dth_power(f47.from_int(18), 2));
  const Field f7 = Field::make(7);
  CHECK_FALSE(f7.is_dth_power(f7.from_int(3), 2));
  try {
    f7.is_dth_power(f7.zero(), 2);
    FAIL("expected ZeroInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInput);
  }
  try {
    f7.is_dth_power(f7.one(), 4);
    FAIL("expected NotADivisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisor);
  }
}

TEST_CASE("coset decomposition partitions the group") {
  for (u64 q = 3; q <= 1000; ++q) {
    if (prime_factors(q).size() != 1) continue;
    const Field f = Field::parse(std::to_string(q));
    for (u64 d : divisors(q - 1)) {
      const CosetDecomposition cd = f.coset_decomposition(d);
      REQUIRE(cd.xi_list.size() == d);
      REQUIRE(std::is_sorted(cd.xi_list.begin(), cd.xi_list.end()));
      std::set<Element> seen;
      for (std::size_t i = 0; i < d; ++i) {
        REQUIRE(f.pow(cd.xi_list[i], d) == f.one());
        REQUIRE(cd.cosets[i].size() == (q - 1) / d);
        for (Element a : cd.cosets[i]) {
          REQUIRE(f.pow(a, (q - 1) / d) == cd.xi_list[i]);
          seen.insert(a);
        }
      }
      REQUIRE(seen.size() == q - 1);
    }
  }
  const Field f13 = Field::make(13);
  const CosetDecomposition cd = f13.coset_decomposition(2);
  CHECK(cd.xi_list == std::vector<Element>{f13.one(), f13.from_int(12)});
  std::vector<u32> residues;
  for (Element a : cd.cosets[0]) residues.push_back(a.code);
  std::sort(residues.begin(), residues.end());
  CHECK(residues == std::vector<u32>{1, 3, 4, 9, 10, 12});
  CHECK_THROWS_AS(f13.coset_decomposition(5), Error);
}

TEST_CASE("field cap") {
  const Field big = Field::make(1048583);  // prime above 2^20
  CHECK_THROWS_AS(big.require_within_cap("test"), Error);
  CHECK_NOTHROW(big.with_cap(u64{1} << 21).require_within_cap("test"));
  CHECK(Field::parse("47").describe() == "F_47");
}
