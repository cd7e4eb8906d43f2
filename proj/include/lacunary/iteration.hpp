#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lacunary/bounds.hpp"

namespace lacunary {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Iteration cap for Lemma-style searches; d >= 2 makes d^{2i} outgrow q-1
/// long before this.
inline constexpr u64 kIterationCap = 64;

/// l_i + g_i° for the map l_{i+1} = (q-1)/d - d(l_i + g_i°), g_{i+1}° = d g_i°.
struct SequenceValue {
  u64 i = 0;
  BigRational a;  // (l_i + g_i°) / d^i
  BigInt sum;     // l_i + g_i°
  BigInt ell;     // l_i
  BigInt g_degree;
};

/// Parity-split closed form; throws NonIntegralValue if the exact value is
/// not an integer (which would mean a bug).
SequenceValue closed_form(const LacunaryParams& base, u64 i);

/// Same quantity by stepping the recurrence i times.
BigInt recurrence_sum(const LacunaryParams& base, u64 i);

/// f_{i+1}(y) = y^{d(l_i + g_i°)} - (-1)^d y^{d g_i°} g_i^d(1/y); for even d this is
/// y^{d(l_i + g_i°)} - y^{d g_i°} g_i^d(1/y).
struct IterateStep {
  i64 ell = 0;        // may be negative; then the result is an excess form
  u64 degree = 0;     // d(l_i + g_i°)
  u64 d = 1;
  SparsePoly g;       // g_{i+1} = -reversal((-g_i)^d)
  SparsePoly poly;    // f_{i+1}

  std::optional<LacunaryForm> lacunary() const;
  std::optional<ExcessForm> excess() const;
};

/// Errors: EllNotPositive when l_i = 0, ConstantTermZero when g_i(0) = 0.
IterateStep iterate_step(const LacunaryForm& form);

enum class TraceStop { CapReached, ConditionFailed, EllNotPositive };
const char* trace_stop_name(TraceStop stop);

struct TraceEntry {
  u64 i = 0;
  BigInt ell;
  BigInt g_degree;
  BigInt bound;          // d(l_i + g_i°)
  bool condition = false;  // d(l_i + g_i°) < (q-1)/d
  std::optional<SparsePoly> poly;
};

struct IterationTrace {
  LacunaryParams base;
  std::vector<TraceEntry> entries;
  TraceStop stop = TraceStop::ConditionFailed;
};

/// Entries run while the condition holds, plus the first entry where it
/// fails.  With `materialize`, f_i is built by iterate_step and its shape is
/// checked against the closed form.
IterationTrace build_trace(const LacunaryForm& base, u64 cap, bool materialize);
IterationTrace build_trace(const LacunaryParams& base, u64 cap);

/// min over 0 <= i <= k+1 of d(l_i + g_i°), k the largest index <= cap with
/// the condition holding on 0..k.  Witness: achieving index and k.
BoundOutcome min_bound_lemma(const LacunaryParams& base, u64 cap = kIterationCap);

/// The first five terms d(l_i + g_i°), i = 0..4, written out explicitly.
std::array<BigInt, 5> five_bounds(const LacunaryParams& base);

struct Thm4Result {
  int case_number = 0;  // 1..4
  i64 index = -1;       // the largest admissible i (cases 1 and 2)
  u64 value = 0;
};

/// The four case hypotheses, each evaluated on its own (T = (q-1)/(d(d+1))):
/// l > T; l + g° < T; neither and d(d+1)l + d²g° < q-1; neither and >=.
std::array<bool, 4> thm4_case_conditions(const LacunaryParams& base);

/// Case analysis without the internal cross-check.  Requires d >= 2.
Thm4Result evaluate_thm4(const LacunaryParams& base);

/// Cases 1-2 are cross-checked against min_bound_lemma (with the degree bound
/// folded in for the i = -1 instance of case 1).  Errors: DEqualsOne.
BoundOutcome best_bound_thm4(const LacunaryParams& base);
BoundOutcome best_bound_thm4(const LacunaryForm& form);

/// Degree bound minus the Theorem-4 value; in case 2 also checked against
/// (1 + d^{2i+3})((q-1)/(d(d+1)) - (l + g°)) + g°.
u64 improvement_margin(const LacunaryParams& base);

}  // namespace lacunary
