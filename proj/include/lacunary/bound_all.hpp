#pragma once

#include <optional>
#include <vector>

#include "lacunary/bounds.hpp"

namespace lacunary {

/// Every bound whose preconditions hold, for the given d or for each divisor
/// of q-1, sorted by outcome_less.  Failed preconditions come back as
/// inapplicable entries.  The power of x is stripped and f made monic first;
/// a monomial yields the single sparsity entry 0.
std::vector<BoundOutcome> bound_all(const SparsePoly& f, std::optional<u64> d = std::nullopt);

/// Same, reusing an already computed root set (needed by the coset checks
/// and C(f)); pass nullopt when the field is beyond the oracle cap.
std::vector<BoundOutcome> bound_all(const SparsePoly& f, std::optional<u64> d,
                                    const std::optional<RootReport>& roots);

/// Smallest applicable entry, if any.
std::optional<BoundOutcome> best_outcome(const std::vector<BoundOutcome>& outcomes);

}  // namespace lacunary
