#include "lacunary/sweep.hpp"

#include <ostream>

namespace lacunary {

SweepRow sweep_row(const LacunaryParams& params) {
  const std::array<bool, 4> cases = thm4_case_conditions(params);
  const int fired = cases[0] + cases[1] + cases[2] + cases[3];
  if (fired != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(fired) + " Theorem-4 cases fire at l = " + std::to_string(params.ell) +
                    ", g° = " + std::to_string(params.g_degree));
  }
  const BoundOutcome thm4 = best_bound_thm4(params);
  const Thm3Regions regions = thm3_regions(params);
  SweepRow row;
  row.ell = params.ell;
  row.g_degree = params.g_degree;
  row.thm3_region = regions.region1 ? 1 : regions.region2 ? 2 : regions.region3 ? 3 : 0;
  row.thm4_case = thm4.witness["case"].get<int>();
  row.thm4_index = thm4.witness["i"].get<i64>();
  row.thm4_value = *thm4.value;
  row.degree_bound = params.degree();
  row.improved = row.thm4_value < row.degree_bound;
  row.lemma_index = min_bound_lemma(params).witness["index"].get<u64>();
  if (!cases[row.thm4_case - 1]) {
    throw Error(ErrorCode::InvalidArgument, "case selection disagrees with the case hypotheses");
  }
  return row;
}

std::vector<SweepRow> sweep(u64 group_order, u64 d) {
  if (d == 0 || group_order % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide q-1");
  }
  if (d < 2) throw Error(ErrorCode::DEqualsOne, "the region map needs d >= 2");
  const u64 block = group_order / d;
  std::vector<SweepRow> rows;
  for (u64 ell = 0; ell + 1 < block; ++ell) {
    for (u64 g = 1; g < block - ell; ++g) {
      rows.push_back(sweep_row(LacunaryParams{group_order, d, ell, g}));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "ell,g_degree,thm3_region,thm4_case,thm4_i,thm4_value,degree_bound,improved,lemma_index\n";
  for (const SweepRow& r : rows) {
    out << r.ell << ',' << r.g_degree << ','
        << (r.thm3_region ? std::to_string(r.thm3_region) : std::string("none")) << ','
        << r.thm4_case << ',' << r.thm4_index << ',' << r.thm4_value << ',' << r.degree_bound
        << ',' << (r.improved ? "true" : "false") << ',' << r.lemma_index << '\n';
  }
}

}  // namespace lacunary
