#pragma once

#include <string>
#include <vector>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

struct RedeiReport {
  u64 q = 0;
  u64 d = 0;
  u64 subsets = 0;
  std::vector<SparsePoly> survivors;   // monic divisors of x^{q-1} - 1 with f°° <= (q-1)/d²
  std::vector<SparsePoly> expected;    // Euler binomials and the d = 2 special forms
  std::vector<SparsePoly> unexpected;  // survivors not in `expected`
  std::vector<SparsePoly> missing;     // expected forms that did not survive
  bool passed() const { return unexpected.empty() && missing.empty(); }
};

/// Enumerates every monic f | x^{q-1} - 1 of degree (q-1)/d through its root
/// set and compares the low-codegree survivors with the predicted forms.
/// Errors: NotADivisor, InvalidArgument (d = 1), EnumerationTooLarge.
RedeiReport redei_check(const Field& field, u64 d, u64 enumeration_cap = 1'000'000);

}  // namespace lacunary
