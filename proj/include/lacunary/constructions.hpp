#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lacunary/bounds.hpp"

namespace lacunary {

enum class Family { Ex1, Ex2, Ex3, Cyclotomic };
const char* family_name(Family family);

/// A tight example together with the root set it is claimed to have.  Every
/// constructor confirms Z(poly) = expected_roots with the brute-force oracle
/// and recomputes the saturated bound before returning.
struct ConstructedExample {
  Family family;
  Json params;
  SparsePoly poly;
  std::vector<Element> expected_roots;  // ascending by code
  std::string bound_method;
  u64 claimed_bound = 0;
};

/// p = 7 (mod 20), p > 7: x^{(p-1)/2 - 1} - 16a x^2 - (4a + 5) with a = -1/5.
ConstructedExample construct_ex1(u64 p);

/// p = 3 (mod 4), p > 3: x^{(p-1)/2 + 1} + a x^2 + a r1 r2 with
/// a = -1/(r1 + r2).  Defaults to the two smallest nonzero squares.
ConstructedExample construct_ex2(u64 p, std::optional<u64> r1 = std::nullopt,
                                 std::optional<u64> r2 = std::nullopt);

/// p = 31 (mod 116): 6500 x^{(p-1)/2 + 1} + (x-4)(x-9)(x-16)(x+29) - 6500 x.
ConstructedExample construct_ex3(u64 p);

/// x^{Dn} + x^{D(n-1)} + ... + x^D + 1, needing D(n+1) | q-1.
ConstructedExample construct_cyclotomic(const Field& field, u64 big_d, u64 n);

}  // namespace lacunary
