#include "lacunary/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace lacunary {

using i128 = __int128;
using boost::multiprecision::cpp_int;

namespace {

void require_divisor(const Field& field, u64 d) {
  if (d == 0 || (field.q() - 1) % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide q-1 = " +
                                            std::to_string(field.q() - 1));
  }
}

SparsePoly tail(const SparsePoly& f) {
  return SparsePoly(f.field(), std::vector<Term>(f.terms().begin() + 1, f.terms().end()));
}

/// True when some fibre of a -> a^{(q-1)/d} lies entirely inside Z(h).
bool some_coset_vanishes(const Field& field, u64 d, const RootReport& roots) {
  const u64 block = (field.q() - 1) / d;
  if (roots.count() < block) return false;
  std::map<Element, u64> fibre;
  for (Element r : roots.roots) {
    if (++fibre[field.pow(r, block)] == block) return true;
  }
  return false;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

void validate(const LacunaryParams& params) {
  if (params.d == 0 || params.group_order == 0 || params.group_order % params.d != 0) {
    throw Error(ErrorCode::NotADivisor, "d must divide q-1");
  }
  if (params.g_degree < 1) throw Error(ErrorCode::TooFewTerms, "g must be nonconstant (g° >= 1)");
  if (params.ell >= params.block() || params.g_degree >= params.block() - params.ell) {
    throw Error(ErrorCode::InvalidArgument, "need g° < (q-1)/d - l");
  }
}

LacunaryParams LacunaryForm::params() const {
  return LacunaryParams{field().q() - 1, d, ell, g.degree()};
}

SparsePoly LacunaryForm::poly() const {
  return SparsePoly::x_pow(field(), (field().q() - 1) / d - ell) + g;
}

SparsePoly ExcessForm::poly() const {
  return SparsePoly::x_pow(field(), (field().q() - 1) / d + m) + g;
}

LacunaryForm make_lacunary_form(u64 d, u64 ell, SparsePoly g) {
  if (g.is_zero()) throw Error(ErrorCode::TooFewTerms, "g must be nonzero");
  require_divisor(g.field(), d);
  if (g.constant_term().is_zero()) throw Error(ErrorCode::ConstantTermZero, "g(0) must be nonzero");
  validate(LacunaryParams{g.field().q() - 1, d, ell, g.degree()});
  return LacunaryForm{d, ell, std::move(g)};
}

LacunaryForm decompose_lacunary(const SparsePoly& f, u64 d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot decompose the zero polynomial");
  require_divisor(f.field(), d);
  if (f.constant_term().is_zero()) {
    throw Error(ErrorCode::ConstantTermZero, "factor out the power of x first");
  }
  if (f.sparsity() < 2) throw Error(ErrorCode::TooFewTerms, "need at least two terms");
  const SparsePoly monic = make_monic(f);
  const u64 block = (f.field().q() - 1) / d;
  if (monic.degree() > block) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(monic.degree()) + " exceeds (q-1)/d = " +
                    std::to_string(block) + "; use the excess form");
  }
  SparsePoly g = tail(monic);
  if (g.degree() == 0) throw Error(ErrorCode::TooFewTerms, "g° = 0 (binomial)");
  return LacunaryForm{d, block - monic.degree(), std::move(g)};
}

ExcessForm decompose_excess(const SparsePoly& f, u64 d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot decompose the zero polynomial");
  require_divisor(f.field(), d);
  if (f.constant_term().is_zero()) {
    throw Error(ErrorCode::ConstantTermZero, "factor out the power of x first");
  }
  if (f.sparsity() < 2) throw Error(ErrorCode::TooFewTerms, "need at least two terms");
  const SparsePoly monic = make_monic(f);
  const u64 block = (f.field().q() - 1) / d;
  if (monic.degree() < block) {
    throw Error(ErrorCode::InvalidArgument, "degree below (q-1)/d; use the lacunary form");
  }
  SparsePoly g = tail(monic);
  if (g.degree() == 0) throw Error(ErrorCode::TooFewTerms, "g° = 0 (binomial)");
  return ExcessForm{d, monic.degree() - block, std::move(g)};
}

RationalForm make_rational_form(u64 d, SparsePoly s, SparsePoly t, SparsePoly g, SparsePoly h) {
  const Field& field = h.field();
  require_divisor(field, d);
  if (t.is_zero()) throw Error(ErrorCode::InvalidArgument, "t must be nonzero");
  if (h.is_zero() || h.degree() == 0) throw Error(ErrorCode::InvalidArgument, "h must be nonconstant");
  if (count_roots_bruteforce(h).count() != 0) {
    throw Error(ErrorCode::HVanishes, "h has a root in F_q^*");
  }
  // s/t and g are dependent iff s = 0, g = 0 or t g = c s for a scalar c.
  const SparsePoly tg = t * g;
  if (s.is_zero() || tg.is_zero() ||
      tg == scale(s, field.div(tg.leading_coeff(), s.leading_coeff()))) {
    throw Error(ErrorCode::DependentPair, "s/t and g are linearly dependent");
  }
  return RationalForm{d, std::move(s), std::move(t), std::move(g), std::move(h)};
}

u64 count_rational_roots(const RationalForm& form) {
  const Field& field = form.h.field();
  field.require_within_cap("rational root oracle");
  const u64 block = (field.q() - 1) / form.d;
  u64 count = 0;
  for (Element a : field.nonzero_elements()) {
    const Element tv = eval(form.t, a);
    if (tv.is_zero()) continue;
    const Element lhs = field.mul(field.pow(eval(form.h, a), block), field.div(eval(form.s, a), tv));
    if (field.add(lhs, eval(form.g, a)).is_zero()) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

int method_rank(const std::string& name) {
  static const std::array<const char*, 14> order = {
      method::kDegree,   method::kThm1,     method::kThm4,    method::kIterLemma,
      method::kThm3,     method::kThm2,     method::kSqrt,    method::kLemmaD1,
      method::kInterval, method::kGap,      method::kRational, method::kKarpinskiShparlinski,
      method::kKelley,   method::kKelleyOwen};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (name == order[i]) return static_cast<int>(i);
  }
  return static_cast<int>(order.size());
}

BoundOutcome BoundOutcome::ok(std::string method, std::optional<u64> d, u64 value, Json witness) {
  BoundOutcome out;
  out.method = std::move(method);
  out.d = d;
  out.applicable = true;
  out.value = value;
  out.witness = std::move(witness);
  return out;
}

BoundOutcome BoundOutcome::skipped(std::string method, std::optional<u64> d, std::string reason) {
  BoundOutcome out;
  out.method = std::move(method);
  out.d = d;
  out.reason = std::move(reason);
  return out;
}

bool outcome_less(const BoundOutcome& a, const BoundOutcome& b) {
  if (a.applicable != b.applicable) return a.applicable;
  if (a.applicable && *a.value != *b.value) return *a.value < *b.value;
  const int ra = method_rank(a.method), rb = method_rank(b.method);
  if (ra != rb) return ra < rb;
  return a.d.value_or(0) < b.d.value_or(0);
}

// ---------------------------------------------------------------------------
// Closed-form bounds on (q-1, d, l, g°)
// ---------------------------------------------------------------------------

BoundOutcome bound_trivial(const LacunaryParams& params) {
  validate(params);
  return BoundOutcome::ok(method::kDegree, params.d, params.degree(),
                          Json{{"ell", params.ell}, {"g_degree", params.g_degree}});
}

BoundOutcome bound_thm1(const LacunaryParams& params) {
  validate(params);
  const u64 value = params.d * (params.ell + params.g_degree);
  return BoundOutcome::ok(method::kThm1, params.d, value,
                          Json{{"ell", params.ell},
                               {"g_degree", params.g_degree},
                               {"delta", params.delta()},
                               {"q_minus_1_minus_d_delta",
                                params.group_order - params.d * params.delta()}});
}

BoundOutcome bound_sqrt(const LacunaryParams& params) {
  validate(params);
  const u64 product = params.group_order * (params.ell + params.g_degree);
  return BoundOutcome::ok(method::kSqrt, params.d, isqrt(product), Json{{"product", product}});
}

Thm3Regions thm3_regions(const LacunaryParams& params) {
  validate(params);
  const i128 n = params.group_order, d = params.d, l = params.ell, g = params.g_degree;
  Thm3Regions r;
  r.region1 = d * (d + 1) * l + d * d * g < n;
  r.region2 = d * d * (l + g) <= n && d * (d + 1) * l > n;
  r.region3 = d * d * (l + g) > n && d * l + d * d * d * g < n &&
              d * (d * d + 1) * l + d * d * d * g < n * (d + 1);
  return r;
}

BoundOutcome classify_thm3(const LacunaryParams& params) {
  const Thm3Regions r = thm3_regions(params);
  const u64 d = params.d, l = params.ell, g = params.g_degree, n = params.group_order;
  if (r.region1) return BoundOutcome::ok(method::kThm3, d, d * (l + g), Json{{"region", 1}});
  if (r.region2) return BoundOutcome::ok(method::kThm3, d, n - d * d * l, Json{{"region", 2}});
  if (r.region3) {
    const u64 value = d * std::max(d * (l + g) - params.block(), d * g);
    return BoundOutcome::ok(method::kThm3, d, value, Json{{"region", 3}});
  }
  return BoundOutcome::skipped(method::kThm3, d, "no region applies");
}

BoundOutcome bound_trivial(const LacunaryForm& form) { return bound_trivial(form.params()); }
BoundOutcome bound_thm1(const LacunaryForm& form) { return bound_thm1(form.params()); }
BoundOutcome bound_sqrt(const LacunaryForm& form) { return bound_sqrt(form.params()); }
BoundOutcome classify_thm3(const LacunaryForm& form) { return classify_thm3(form.params()); }

// ---------------------------------------------------------------------------
// Polynomial-level bounds
// ---------------------------------------------------------------------------

BoundOutcome bound_lemma_d1(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "lemma needs a nonzero polynomial");
  if (f.constant_term().is_zero()) {
    throw Error(ErrorCode::ConstantTermZero, "factor out the power of x first");
  }
  if (f.sparsity() < 2 || *f.second_degree() == 0) {
    throw Error(ErrorCode::TooFewTerms, "need 1 <= f°°");
  }
  const u64 group = f.field().q() - 1;
  if (f.degree() > group) throw Error(ErrorCode::DegreeTooLarge, "degree exceeds q-1");
  const u64 delta = f.degree() - *f.second_degree();
  return BoundOutcome::ok(method::kLemmaD1, 1, group - delta, Json{{"delta", delta}});
}

BoundOutcome bound_thm2(const ExcessForm& form) {
  const u64 g_degree = form.g.degree();
  return BoundOutcome::ok(method::kThm2, form.d, form.d * std::max(form.m, g_degree),
                          Json{{"m", form.m}, {"g_degree", g_degree}});
}

BoundOutcome bound_ratthm(const RationalForm& form) {
  const u64 s_deg = form.s.degree();
  const u64 tg_deg = form.g.degree() + form.t.degree();
  return BoundOutcome::ok(method::kRational, form.d, form.d * std::max(s_deg, tg_deg),
                          Json{{"s_degree", s_deg}, {"g_plus_t_degree", tg_deg}});
}

ResidueInterval minimal_residue_interval(std::span<const u64> exponents, u64 block, u64 d) {
  if (block == 0) throw Error(ErrorCode::InvalidArgument, "block must be positive");
  ResidueInterval out;
  out.d = d;
  out.block = block;
  out.exponents.assign(exponents.begin(), exponents.end());
  std::vector<u64> residues;
  for (u64 e : exponents) residues.push_back(e % block);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  if (residues.empty()) return out;

  // Largest circular gap; the wrap-around gap wins ties so the interval
  // stays in [0, block) whenever possible.
  const std::size_t n = residues.size();
  u64 best_gap = residues.front() + block - residues.back();
  std::size_t best_index = n - 1;  // gap after residues[best_index]
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const u64 gap = residues[j + 1] - residues[j];
    if (gap > best_gap) {
      best_gap = gap;
      best_index = j;
    }
  }
  const i64 m = static_cast<i64>(block);
  i64 cut = static_cast<i64>(residues[best_index]);
  if (best_index == n - 1) {
    out.lo = static_cast<i64>(residues.front());
    out.hi = cut;
  } else {
    out.lo = static_cast<i64>(residues[best_index + 1]) - m;
    out.hi = cut;
  }
  for (u64 e : exponents) {
    i64 b = static_cast<i64>(e % block);
    if (b > cut) b -= m;
    out.residues.push_back(b);
    out.quotients.push_back((static_cast<i64>(e) - b) / m);
  }
  return out;
}

namespace {

Json interval_witness(const ResidueInterval& iv) {
  return Json{{"block", iv.block},
              {"A", iv.lo},
              {"B", iv.hi},
              {"exponents", iv.exponents},
              {"a", iv.quotients},
              {"b", iv.residues}};
}

}  // namespace

BoundOutcome bound_interval(const SparsePoly& h, u64 d, const RootReport& roots) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "interval bound of the zero polynomial");
  require_divisor(h.field(), d);
  if (some_coset_vanishes(h.field(), d, roots)) {
    throw Error(ErrorCode::VanishesOnCoset, "h vanishes on a coset of size (q-1)/d");
  }
  std::vector<u64> exps;
  for (const Term& t : h.terms()) exps.push_back(t.exp);
  const ResidueInterval iv = minimal_residue_interval(exps, (h.field().q() - 1) / d, d);
  return BoundOutcome::ok(method::kInterval, d, d * iv.width(), interval_witness(iv));
}

BoundOutcome bound_interval(const SparsePoly& h, u64 d) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "interval bound of the zero polynomial");
  require_divisor(h.field(), d);
  h.field().require_within_cap("coset vanishing check");
  const CosetDecomposition cosets = h.field().coset_decomposition(d);
  for (const auto& coset : cosets.cosets) {
    if (vanishes_on_coset(h, coset)) {
      throw Error(ErrorCode::VanishesOnCoset, "h vanishes on a coset of size (q-1)/d");
    }
  }
  std::vector<u64> exps;
  for (const Term& t : h.terms()) exps.push_back(t.exp);
  const ResidueInterval iv = minimal_residue_interval(exps, (h.field().q() - 1) / d, d);
  return BoundOutcome::ok(method::kInterval, d, d * iv.width(), interval_witness(iv));
}

namespace {

BoundOutcome gap_value(const SparsePoly& h, u64 d) {
  const u64 block = (h.field().q() - 1) / d;
  u64 delta = 0;
  for (std::size_t i = 1; i < h.sparsity(); ++i) {
    delta = std::max(delta, h.terms()[i - 1].exp - h.terms()[i].exp);
  }
  return BoundOutcome::ok(method::kGap, d, h.field().q() - 1 - d * delta,
                          Json{{"delta", delta}, {"block", block}});
}

void gap_preconditions(const SparsePoly& h, u64 d) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gap bound of the zero polynomial");
  require_divisor(h.field(), d);
  if (h.sparsity() < 2) throw Error(ErrorCode::TooFewTerms, "need at least two terms");
  if (h.degree() > (h.field().q() - 1) / d) {
    throw Error(ErrorCode::DegreeTooLarge, "degree exceeds (q-1)/d");
  }
}

}  // namespace

BoundOutcome bound_gap_corollary(const SparsePoly& h, u64 d, const RootReport& roots) {
  gap_preconditions(h, d);
  if (some_coset_vanishes(h.field(), d, roots)) {
    throw Error(ErrorCode::VanishesOnCoset, "h vanishes on a coset of size (q-1)/d");
  }
  return gap_value(h, d);
}

BoundOutcome bound_gap_corollary(const SparsePoly& h, u64 d) {
  gap_preconditions(h, d);
  bound_interval(h, d);  // precondition check only
  return gap_value(h, d);
}

BoundOutcome bound_ks(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sparsity bound of the zero polynomial");
  // The count only sees f as a function on F_q^*, so exponents are taken
  // mod q-1 first; terms may merge or cancel.
  const u64 group = f.field().q() - 1;
  std::vector<Term> terms;
  for (const Term& term : f.terms()) terms.push_back({term.exp % group, term.coeff});
  const SparsePoly reduced(f.field(), std::move(terms));
  if (reduced.is_zero()) {
    throw Error(ErrorCode::VanishesOnCoset, "f vanishes on all of F_q^*");
  }
  const u64 t = reduced.sparsity();
  return BoundOutcome::ok(method::kKarpinskiShparlinski, std::nullopt, (t - 1) * group / t,
                          Json{{"t", t}});
}

BoundOutcome bound_kelley(const SparsePoly& f, const RootReport& roots) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Kelley bound of the zero polynomial");
  const u64 t = f.sparsity();
  if (t < 2) throw Error(ErrorCode::TooFewTerms, "Kelley bound needs t >= 2");
  const u64 c = largest_vanishing_coset(f, roots);
  const u64 group = f.field().q() - 1;
  if (c == 0) {
    BoundOutcome out = BoundOutcome::ok(method::kKelley, std::nullopt, 0,
                                        Json{{"t", t}, {"C", 0}, {"real", "0.000000"}});
    out.real_value = 0.0;
    return out;
  }
  const long double exponent = 1.0L / static_cast<long double>(t - 1);
  const long double real = 2.0L * std::pow(static_cast<long double>(group), 1.0L - exponent) *
                           std::pow(static_cast<long double>(c), exponent);
  // Exact floor: k <= real  <=>  k^{t-1} <= 2^{t-1} (q-1)^{t-2} C.
  cpp_int rhs = cpp_int(1) << (t - 1);
  rhs *= boost::multiprecision::pow(cpp_int(group), static_cast<unsigned>(t - 2));
  rhs *= c;
  auto fits = [&](u64 k) {
    return boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(t - 1)) <= rhs;
  };
  u64 k = static_cast<u64>(std::floor(real));
  while (k > 0 && !fits(k)) --k;
  while (fits(k + 1)) ++k;
  BoundOutcome out = BoundOutcome::ok(
      method::kKelley, std::nullopt, k,
      Json{{"t", t}, {"C", c}, {"real", format_real(static_cast<double>(real))}});
  out.real_value = static_cast<double>(real);
  return out;
}

BoundOutcome bound_kelley(const SparsePoly& f) {
  return bound_kelley(f, count_roots_bruteforce(f));
}

BoundOutcome bound_kelley_owen(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Kelley-Owen bound of the zero polynomial");
  const SparsePoly monic = make_monic(f);
  if (monic.sparsity() != 3 || monic.constant_term().is_zero()) {
    throw Error(ErrorCode::NotTrinomial, "need x^n + a x^s + b with b != 0");
  }
  const u64 group = f.field().q() - 1;
  const u64 big_d = exponent_gcd_with_group(monic);
  const u64 quotient = group / big_d;
  // floor(1/2 + sqrt(N)) is the largest k with (2k - 1)^2 <= 4N.
  const u64 k = (isqrt(4 * quotient) + 1) / 2;
  const double real = static_cast<double>(big_d) * (0.5 + std::sqrt(static_cast<double>(quotient)));
  BoundOutcome out = BoundOutcome::ok(
      method::kKelleyOwen, std::nullopt, big_d * k,
      Json{{"D", big_d}, {"real", format_real(real)}, {"comparison_only", true}});
  out.real_value = real;
  return out;
}

}  // namespace lacunary
