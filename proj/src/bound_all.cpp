#include "lacunary/bound_all.hpp"

#include <algorithm>

#include "lacunary/iteration.hpp"

namespace lacunary {

namespace {

template <class Fn>
void attempt(std::vector<BoundOutcome>& out, const char* name, std::optional<u64> d, Fn&& fn) {
  try {
    out.push_back(fn());
  } catch (const Error& e) {
    out.push_back(BoundOutcome::skipped(name, d, e.what()));
  }
}

/// f = x^{(q-1)/d} s + g with h = x and t = 1.
RationalForm split_rational(const SparsePoly& f, u64 d) {
  const Field& field = f.field();
  const u64 block = (field.q() - 1) / d;
  std::vector<Term> high, low;
  for (const Term& t : f.terms()) {
    if (t.exp >= block) {
      high.push_back(Term{t.exp - block, t.coeff});
    } else {
      low.push_back(t);
    }
  }
  return make_rational_form(d, SparsePoly(field, std::move(high)), SparsePoly::constant(field, field.one()),
                            SparsePoly(field, std::move(low)), SparsePoly::x_pow(field, 1));
}

void per_divisor(std::vector<BoundOutcome>& out, const SparsePoly& f, u64 d,
                 const std::optional<RootReport>& roots) {
  const Field& field = f.field();
  const u64 block = (field.q() - 1) / d;
  if (f.degree() <= block) {
    std::optional<LacunaryForm> form;
    try {
      form = decompose_lacunary(f, d);
    } catch (const Error& e) {
      for (const char* name : {method::kDegree, method::kThm1, method::kSqrt, method::kThm3,
                               method::kThm4, method::kIterLemma}) {
        out.push_back(BoundOutcome::skipped(name, d, e.what()));
      }
    }
    if (form) {
      const LacunaryParams params = form->params();
      attempt(out, method::kDegree, d, [&] { return bound_trivial(params); });
      attempt(out, method::kThm1, d, [&] { return bound_thm1(params); });
      attempt(out, method::kSqrt, d, [&] { return bound_sqrt(params); });
      attempt(out, method::kThm3, d, [&] { return classify_thm3(params); });
      attempt(out, method::kThm4, d, [&] { return best_bound_thm4(*form); });
      attempt(out, method::kIterLemma, d, [&] {
        if (d < 2) throw Error(ErrorCode::DEqualsOne, "the iteration needs d >= 2");
        return min_bound_lemma(params);
      });
    }
  } else {
    attempt(out, method::kThm2, d, [&] { return bound_thm2(decompose_excess(f, d)); });
  }
  attempt(out, method::kRational, d, [&] { return bound_ratthm(split_rational(f, d)); });
  attempt(out, method::kInterval, d, [&] {
    return roots ? bound_interval(f, d, *roots) : bound_interval(f, d);
  });
  attempt(out, method::kGap, d, [&] {
    return roots ? bound_gap_corollary(f, d, *roots) : bound_gap_corollary(f, d);
  });
}

}  // namespace

std::vector<BoundOutcome> bound_all(const SparsePoly& f, std::optional<u64> d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "no bounds for the zero polynomial");
  std::optional<RootReport> roots;
  if (f.field().q() <= f.field().cap()) roots = count_roots_bruteforce(f);
  return bound_all(f, d, roots);
}

std::vector<BoundOutcome> bound_all(const SparsePoly& input, std::optional<u64> d,
                                    const std::optional<RootReport>& roots) {
  if (input.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "no bounds for the zero polynomial");
  const Field& field = input.field();
  if (d && (*d == 0 || (field.q() - 1) % *d != 0)) {
    throw Error(ErrorCode::NotADivisor, std::to_string(*d) + " does not divide q-1");
  }
  const SparsePoly f = make_monic(strip_x_power(input).second);
  std::vector<BoundOutcome> out;
  attempt(out, method::kKarpinskiShparlinski, std::nullopt, [&] { return bound_ks(f); });
  if (f.sparsity() == 1) return out;

  attempt(out, method::kLemmaD1, 1, [&] { return bound_lemma_d1(f); });
  attempt(out, method::kKelley, std::nullopt, [&] {
    if (!roots) field.require_within_cap("C(f)");
    return bound_kelley(f, *roots);
  });
  attempt(out, method::kKelleyOwen, std::nullopt, [&] { return bound_kelley_owen(f); });

  const std::vector<u64> ds = d ? std::vector<u64>{*d} : divisors(field.q() - 1);
  for (u64 each : ds) per_divisor(out, f, each, roots);
  std::stable_sort(out.begin(), out.end(), outcome_less);
  return out;
}

std::optional<BoundOutcome> best_outcome(const std::vector<BoundOutcome>& outcomes) {
  std::optional<BoundOutcome> best;
  for (const BoundOutcome& o : outcomes) {
    if (o.applicable && (!best || outcome_less(o, *best))) best = o;
  }
  return best;
}

}  // namespace lacunary
