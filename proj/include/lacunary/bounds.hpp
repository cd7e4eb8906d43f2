#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lacunary/sparse_poly.hpp"

namespace lacunary {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

/// The numeric shape (q-1, d, l, g°) of f = x^{(q-1)/d - l} + g.  Every
/// closed-form bound depends only on these four integers.
struct LacunaryParams {
  u64 group_order = 0;  // q - 1
  u64 d = 1;
  u64 ell = 0;
  u64 g_degree = 1;

  u64 block() const { return group_order / d; }
  u64 degree() const { return block() - ell; }
  u64 delta() const { return degree() - g_degree; }
};

/// Throws unless d | q-1, d >= 1 and 1 <= g° < (q-1)/d - l.
void validate(const LacunaryParams& params);

/// f = x^{(q-1)/d - l} + g with 1 <= g° < (q-1)/d - l and g(0) != 0.
struct LacunaryForm {
  u64 d = 1;
  u64 ell = 0;
  SparsePoly g;

  const Field& field() const { return g.field(); }
  LacunaryParams params() const;
  SparsePoly poly() const;
};

/// f = x^{(q-1)/d + m} + g with 1 <= g° < (q-1)/d + m and g(0) != 0.
struct ExcessForm {
  u64 d = 1;
  u64 m = 0;
  SparsePoly g;

  const Field& field() const { return g.field(); }
  SparsePoly poly() const;
};

/// f = h^{(q-1)/d} s/t + g.
struct RationalForm {
  u64 d = 1;
  SparsePoly s, t, g, h;
};

/// Writes every exponent as e_i = a_i (q-1)/d + b_i with all b_i in [A, B].
struct ResidueInterval {
  u64 d = 1;
  u64 block = 1;
  std::vector<u64> exponents;
  std::vector<i64> quotients;   // a_i
  std::vector<i64> residues;    // b_i, each in (-block, block)
  i64 lo = 0;                   // A
  i64 hi = 0;                   // B

  u64 width() const { return static_cast<u64>(hi - lo); }
};

/// Normalizes f to monic and splits off the leading term.  Errors:
/// ZeroPolynomial, NotADivisor, ConstantTermZero, TooFewTerms (including
/// g° = 0), DegreeTooLarge (use decompose_excess instead).
LacunaryForm decompose_lacunary(const SparsePoly& f, u64 d);
ExcessForm decompose_excess(const SparsePoly& f, u64 d);
LacunaryForm make_lacunary_form(u64 d, u64 ell, SparsePoly g);

/// Validates linear independence of s/t and g and that h has no root in F_q^*.
RationalForm make_rational_form(u64 d, SparsePoly s, SparsePoly t, SparsePoly g, SparsePoly h);

/// Number of a in F_q^* with t(a) != 0 and h(a)^{(q-1)/d} s(a)/t(a) + g(a) = 0.
u64 count_rational_roots(const RationalForm& form);

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

namespace method {
inline constexpr const char* kDegree = "degree";
inline constexpr const char* kThm1 = "thm1";
inline constexpr const char* kThm4 = "thm4";
inline constexpr const char* kIterLemma = "iter_lemma";
inline constexpr const char* kThm3 = "thm3";
inline constexpr const char* kThm2 = "thm2";
inline constexpr const char* kSqrt = "sqrt";
inline constexpr const char* kLemmaD1 = "lemma_d1";
inline constexpr const char* kInterval = "interval";
inline constexpr const char* kGap = "gap";
inline constexpr const char* kRational = "rational";
inline constexpr const char* kKarpinskiShparlinski = "ks";
inline constexpr const char* kKelley = "kelley";
inline constexpr const char* kKelleyOwen = "kelley_owen";
}  // namespace method

/// Position of a method in report order; ties on value sort by this rank.
int method_rank(const std::string& method);

struct BoundOutcome {
  std::string method;
  std::optional<u64> d;
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::optional<u64> value;
  /// Comparison bounds with an irrational closed form keep the real value.
  std::optional<double> real_value;
  Json witness = Json::object();

  static BoundOutcome ok(std::string method, std::optional<u64> d, u64 value,
                         Json witness = Json::object());
  static BoundOutcome skipped(std::string method, std::optional<u64> d, std::string reason);
};

/// Value order, then method rank, then d; inapplicable entries last.
bool outcome_less(const BoundOutcome& a, const BoundOutcome& b);

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

BoundOutcome bound_trivial(const LacunaryParams& params);
BoundOutcome bound_thm1(const LacunaryParams& params);
BoundOutcome bound_sqrt(const LacunaryParams& params);
BoundOutcome classify_thm3(const LacunaryParams& params);
BoundOutcome bound_trivial(const LacunaryForm& form);
BoundOutcome bound_thm1(const LacunaryForm& form);
BoundOutcome bound_sqrt(const LacunaryForm& form);
BoundOutcome classify_thm3(const LacunaryForm& form);

/// The three inequality systems of the region classification, evaluated
/// independently (regions are disjoint, so at most one is true).
struct Thm3Regions {
  bool region1 = false;
  bool region2 = false;
  bool region3 = false;
};
Thm3Regions thm3_regions(const LacunaryParams& params);

/// q - 1 - (f° - f°°) for monic f with 1 <= f°° and f(0) != 0.
BoundOutcome bound_lemma_d1(const SparsePoly& f);

/// d max{m, g°}.
BoundOutcome bound_thm2(const ExcessForm& form);

/// d max{s°, g° + t°}.
BoundOutcome bound_ratthm(const RationalForm& form);

/// Shortest interval holding one representative of every exponent modulo
/// `block`: the complement of the largest circular gap between residues.
ResidueInterval minimal_residue_interval(std::span<const u64> exponents, u64 block, u64 d);

/// d (B - A) with the minimal interval.  Not applicable when h vanishes on a
/// whole coset of size (q-1)/d.
BoundOutcome bound_interval(const SparsePoly& h, u64 d);
BoundOutcome bound_interval(const SparsePoly& h, u64 d, const RootReport& roots);

/// q - 1 - d delta with delta the largest gap between consecutive exponents.
BoundOutcome bound_gap_corollary(const SparsePoly& h, u64 d);
BoundOutcome bound_gap_corollary(const SparsePoly& h, u64 d, const RootReport& roots);

/// floor((t-1)(q-1)/t).
BoundOutcome bound_ks(const SparsePoly& f);

/// floor(2 (q-1)^{1-1/(t-1)} C(f)^{1/(t-1)}); comparison only.
BoundOutcome bound_kelley(const SparsePoly& f);
BoundOutcome bound_kelley(const SparsePoly& f, const RootReport& roots);

/// D floor(1/2 + sqrt((q-1)/D)) for monic trinomials, D = gcd(n, s, q-1);
/// comparison only.
BoundOutcome bound_kelley_owen(const SparsePoly& f);

}  // namespace lacunary
