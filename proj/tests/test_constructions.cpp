#include <functional>

#include "doctest.h"
#include "lacunary/constructions.hpp"

using namespace lacunary;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<std::uint32_t> codes(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (Element e : v) out.push_back(e.code);
  return out;
}

/// Independent confirmation: oracle roots equal the claim and the bound is met.
void check_saturated(const ConstructedExample& ex) {
  const RootReport r = count_roots_bruteforce(ex.poly);
  REQUIRE(r.roots == ex.expected_roots);
  REQUIRE(ex.claimed_bound == r.count());
}

}  // namespace

TEST_CASE("first family") {
  const ConstructedExample ex = construct_ex1(47);
  const Field f47 = Field::make(47);
  CHECK(ex.poly == parse_poly("x^22+22x^2+24", f47));
  CHECK(ex.params["a"] == 28);
  CHECK(ex.params["S"] == Json::array({1, 4, 18}));
  CHECK(codes(ex.expected_roots) == std::vector<std::uint32_t>{1, 12, 13, 34, 35, 46});
  CHECK(ex.bound_method == "thm1");
  CHECK(ex.claimed_bound == 6);
  check_saturated(ex);
  for (u64 p : {67, 107, 127, 167}) check_saturated(construct_ex1(p));
  CHECK(code_of([] { construct_ex1(11); }) == ErrorCode::CongruenceViolated);
  CHECK(code_of([] { construct_ex1(7); }) == ErrorCode::CongruenceViolated);
  CHECK(code_of([] { construct_ex1(87); }) == ErrorCode::NonPrime);
}

TEST_CASE("second family") {
  const Field f7 = Field::make(7);
  const ConstructedExample a = construct_ex2(7, 1, 2);
  CHECK(a.poly == parse_poly("x^4+2x^2+4", f7));
  CHECK(codes(a.expected_roots) == std::vector<std::uint32_t>{1, 2, 5, 6});
  CHECK(a.claimed_bound == 4);
  CHECK(a.bound_method == "thm2");
  check_saturated(a);

  const Field f11 = Field::make(11);
  const ConstructedExample b = construct_ex2(11, 1, 3);
  CHECK(b.poly == parse_poly("x^6+8x^2+2", f11));
  CHECK(codes(b.expected_roots) == std::vector<std::uint32_t>{1, 3, 8, 10});
  check_saturated(b);

  for (u64 p : {7, 11, 19, 23, 31, 43}) check_saturated(construct_ex2(p));
  CHECK(code_of([] { construct_ex2(13); }) == ErrorCode::CongruenceViolated);
  CHECK(code_of([] { construct_ex2(11, 1, 2); }) == ErrorCode::NotResidue);
  CHECK(code_of([] { construct_ex2(11, 3, 3); }) == ErrorCode::EqualResidues);
}

TEST_CASE("third family") {
  const ConstructedExample ex = construct_ex3(31);
  CHECK(codes(ex.expected_roots) == std::vector<std::uint32_t>{2, 4, 9, 15, 16, 22, 27, 29});
  CHECK(ex.claimed_bound == 8);
  CHECK(ex.bound_method == "thm2");
  check_saturated(ex);
  check_saturated(construct_ex3(263));
  CHECK(code_of([] { construct_ex3(37); }) == ErrorCode::CongruenceViolated);
}

TEST_CASE("cyclotomic family") {
  const Field f13 = Field::make(13);
  const ConstructedExample ex = construct_cyclotomic(f13, 2, 2);
  CHECK(ex.poly == parse_poly("x^4+x^2+1", f13));
  CHECK(codes(ex.expected_roots) == std::vector<std::uint32_t>{3, 4, 9, 10});
  CHECK(ex.claimed_bound == 4);
  check_saturated(ex);

  for (const char* spec : {"13", "9", "16", "25", "31"}) {
    const Field f = Field::parse(spec);
    const ConstructedExample all = construct_cyclotomic(f, 1, f.q() - 2);
    CHECK(all.claimed_bound == f.q() - 2);
    check_saturated(all);
    for (u64 big_d : divisors(f.q() - 1)) {
      for (u64 n = 1; big_d * (n + 1) <= f.q() - 1; ++n) {
        if ((f.q() - 1) % (big_d * (n + 1)) != 0) continue;
        const ConstructedExample c = construct_cyclotomic(f, big_d, n);
        REQUIRE(c.claimed_bound == big_d * n);
        check_saturated(c);
      }
    }
  }
  CHECK(code_of([&] { construct_cyclotomic(f13, 5, 2); }) == ErrorCode::NotADivisor);
}
