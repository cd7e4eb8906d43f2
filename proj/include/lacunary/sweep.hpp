#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lacunary/iteration.hpp"

namespace lacunary {

/// One (l, g°) point of the region map for fixed q and d.
struct SweepRow {
  u64 ell = 0;
  u64 g_degree = 0;
  int thm3_region = 0;  // 0 when no region applies
  int thm4_case = 0;
  i64 thm4_index = -1;
  u64 thm4_value = 0;
  u64 degree_bound = 0;
  bool improved = false;  // thm4_value < degree_bound
  u64 lemma_index = 0;    // index achieving the iteration-lemma minimum
};

SweepRow sweep_row(const LacunaryParams& params);

/// Every valid (l, g°) with 0 <= l and 1 <= g° < (q-1)/d - l, ordered by l
/// then g°.  Throws if a point does not satisfy exactly one case.
/// Errors: NotADivisor, DEqualsOne.
std::vector<SweepRow> sweep(u64 group_order, u64 d);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

enum class SvgColoring { Region, Case, LemmaIndex };

/// Static region map on the (g°, l) grid with a legend.
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, u64 group_order, u64 d,
                     SvgColoring coloring);

}  // namespace lacunary
