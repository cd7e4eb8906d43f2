#include "lacunary/iteration.hpp"

#include <algorithm>

namespace lacunary {

namespace {

BigInt big_pow(u64 base, u64 exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

/// Exact quotient or NonIntegralValue.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw Error(ErrorCode::NonIntegralValue, std::string(what) + " is not an integer");
  }
  return q;
}

u64 to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<u64>::max())) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " out of range");
  }
  return static_cast<u64>(v);
}

/// d(d+1)(l_i + g_i°), from the closed form, before the final division.
BigInt scaled_sum(const LacunaryParams& p, u64 i) {
  const BigInt di = big_pow(p.d, i);
  const BigInt dd1 = BigInt(p.d) * (p.d + 1);
  if (i % 2 == 0) {
    return dd1 * di * (p.ell + p.g_degree) - BigInt(p.group_order) * (di - 1);
  }
  return -dd1 * di * p.ell + BigInt(p.group_order) * (di + 1);
}

BigInt closed_sum(const LacunaryParams& p, u64 i) {
  return exact_div(scaled_sum(p, i), BigInt(p.d) * (p.d + 1), "l_i + g_i°");
}

}  // namespace

SequenceValue closed_form(const LacunaryParams& base, u64 i) {
  validate(base);
  SequenceValue out;
  out.i = i;
  out.sum = closed_sum(base, i);
  out.g_degree = big_pow(base.d, i) * base.g_degree;
  out.ell = out.sum - out.g_degree;
  out.a = BigRational(out.sum, big_pow(base.d, i));
  return out;
}

BigInt recurrence_sum(const LacunaryParams& base, u64 i) {
  validate(base);
  BigInt ell = base.ell, g = base.g_degree;
  for (u64 step = 0; step < i; ++step) {
    ell = BigInt(base.block()) - base.d * (ell + g);
    g *= base.d;
  }
  return ell + g;
}

// ---------------------------------------------------------------------------

std::optional<LacunaryForm> IterateStep::lacunary() const {
  if (ell < 0) return std::nullopt;
  return LacunaryForm{d, static_cast<u64>(ell), g};
}

std::optional<ExcessForm> IterateStep::excess() const {
  if (ell > 0) return std::nullopt;
  return ExcessForm{d, static_cast<u64>(-ell), g};
}

IterateStep iterate_step(const LacunaryForm& form) {
  if (form.ell == 0) throw Error(ErrorCode::EllNotPositive, "iteration needs l > 0");
  if (form.g.constant_term().is_zero()) throw Error(ErrorCode::ConstantTermZero, "g(0) = 0");
  const Field& field = form.field();
  const u64 block = (field.q() - 1) / form.d;
  const u64 degree = form.d * (form.ell + form.g.degree());
  // The product of (x^l g + xi) over the d-th roots of unity xi is
  // x^{dl} g^d - (-1)^d, so odd d needs g_{i+1} = +reversal(g^d); both signs
  // agree with -reversal((-g)^d).
  SparsePoly g = -reversal(poly_pow(-form.g, form.d));
  SparsePoly poly = SparsePoly::x_pow(field, degree) + g;
  IterateStep out{static_cast<i64>(block) - static_cast<i64>(degree), degree, form.d,
                  std::move(g), std::move(poly)};
  return out;
}

const char* trace_stop_name(TraceStop stop) {
  switch (stop) {
    case TraceStop::CapReached: return "cap reached";
    case TraceStop::ConditionFailed: return "condition failed";
    case TraceStop::EllNotPositive: return "l_i <= 0";
  }
  return "?";
}

namespace {

TraceEntry make_entry(const LacunaryParams& base, u64 i) {
  const SequenceValue v = closed_form(base, i);
  TraceEntry e;
  e.i = i;
  e.ell = v.ell;
  e.g_degree = v.g_degree;
  e.bound = base.d * v.sum;
  e.condition = e.bound < base.block();
  return e;
}

IterationTrace trace_impl(const LacunaryParams& base, u64 cap, const LacunaryForm* form) {
  validate(base);
  IterationTrace trace;
  trace.base = base;
  std::optional<LacunaryForm> current;
  if (form) current = *form;
  trace.entries.push_back(make_entry(base, 0));
  if (form) trace.entries.back().poly = form->poly();
  for (u64 i = 0;; ++i) {
    const TraceEntry& last = trace.entries.back();
    if (!last.condition) {
      trace.stop = TraceStop::ConditionFailed;
      break;
    }
    if (last.ell <= 0) {
      trace.stop = TraceStop::EllNotPositive;
      break;
    }
    if (i == cap) {
      trace.stop = TraceStop::CapReached;
      break;
    }
    TraceEntry next = make_entry(base, i + 1);
    if (current) {
      const IterateStep step = iterate_step(*current);
      if (BigInt(step.ell) != next.ell || BigInt(step.g.degree()) != next.g_degree) {
        throw Error(ErrorCode::NonIntegralValue, "materialized step disagrees with the closed form");
      }
      next.poly = step.poly;
      current = step.lacunary();
    }
    trace.entries.push_back(std::move(next));
  }
  return trace;
}

}  // namespace

IterationTrace build_trace(const LacunaryForm& base, u64 cap, bool materialize) {
  return trace_impl(base.params(), cap, materialize ? &base : nullptr);
}

IterationTrace build_trace(const LacunaryParams& base, u64 cap) {
  return trace_impl(base, cap, nullptr);
}

BoundOutcome min_bound_lemma(const LacunaryParams& base, u64 cap) {
  validate(base);
  const BigInt block = base.block();
  // k = -1 when l = 0: the step to f_1 needs a positive l.
  i64 k = -1;
  if (base.ell > 0) {
    for (u64 i = 0; i <= cap; ++i) {
      if (base.d * closed_sum(base, i) < block) {
        k = static_cast<i64>(i);
      } else {
        break;
      }
    }
  }
  BigInt best;
  u64 best_index = 0;
  for (u64 i = 0; i <= static_cast<u64>(k + 1); ++i) {
    const BigInt value = base.d * closed_sum(base, i);
    if (i == 0 || value < best) {
      best = value;
      best_index = i;
    }
  }
  return BoundOutcome::ok(method::kIterLemma, base.d, to_u64(best, "lemma bound"),
                          Json{{"index", best_index}, {"k", k}});
}

std::array<BigInt, 5> five_bounds(const LacunaryParams& base) {
  validate(base);
  const BigInt d = base.d, n = base.group_order, l = base.ell, s = base.ell + base.g_degree;
  return {d * s,
          n - d * d * l,
          d * d * d * s - n * (d - 1),
          n * (d * d - d + 1) - d * d * d * d * l,
          d * d * d * d * d * s - n * (d * d * d - d * d + d - 1)};
}

std::array<bool, 4> thm4_case_conditions(const LacunaryParams& base) {
  validate(base);
  const BigInt n = base.group_order, d = base.d, dd1 = d * (d + 1);
  const BigInt l = base.ell, s = base.ell + base.g_degree;
  const bool above = l * dd1 > n;
  const bool below = s * dd1 < n;
  const bool middle = l * dd1 <= n && s * dd1 >= n;
  const bool small = dd1 * l + d * d * base.g_degree < n;
  return {above, below, middle && small, middle && !small};
}

Thm4Result evaluate_thm4(const LacunaryParams& base) {
  validate(base);
  if (base.d < 2) throw Error(ErrorCode::DEqualsOne, "the iteration needs d >= 2; use thm1");
  const BigInt n = base.group_order, d = base.d;
  const BigInt dd1 = d * (d + 1);
  const BigInt l = base.ell, s = base.ell + base.g_degree;
  Thm4Result out;
  if (l * dd1 > n) {
    // Case 1.  i = -1 always qualifies: l + g° < (q-1)/d.
    out.case_number = 1;
    i64 i = -1;
    for (u64 next = 0; next <= kIterationCap; ++next) {
      const BigInt p = big_pow(base.d, 2 * next + 1);
      if (s * dd1 * p < n * (p + 1)) {
        i = static_cast<i64>(next);
      } else {
        break;
      }
    }
    out.index = i;
    const BigInt num = n * d - big_pow(base.d, static_cast<u64>(2 * i + 2)) * (l * dd1 - n);
    out.value = to_u64(exact_div(num, dd1, "case-1 bound"), "case-1 bound");
  } else if (s * dd1 < n) {
    // Case 2.  With l = 0 no i >= -1 satisfies the condition; i = -1 is
    // Theorem 1's bound there.
    out.case_number = 2;
    i64 i = -1;
    for (u64 next = 0; next <= kIterationCap; ++next) {
      const BigInt p = big_pow(base.d, 2 * next + 2);
      if (l * dd1 * p > n * (p - 1)) {
        i = static_cast<i64>(next);
      } else {
        break;
      }
    }
    out.index = i;
    const BigInt num = n * d - big_pow(base.d, static_cast<u64>(2 * i + 3)) * (n - s * dd1);
    out.value = to_u64(exact_div(num, dd1, "case-2 bound"), "case-2 bound");
  } else if (dd1 * l + d * d * base.g_degree < n) {
    out.case_number = 3;
    out.value = base.d * (base.ell + base.g_degree);
  } else {
    out.case_number = 4;
    out.value = base.degree();
  }
  return out;
}

BoundOutcome best_bound_thm4(const LacunaryParams& base) {
  const Thm4Result r = evaluate_thm4(base);
  if (r.case_number <= 2) {
    const u64 lemma = *min_bound_lemma(base).value;
    const u64 expected = r.case_number == 1 && r.index == -1 ? base.degree() : lemma;
    if (r.value != expected || r.value > std::min(lemma, base.degree())) {
      throw Error(ErrorCode::NonIntegralValue,
                  "Theorem-4 value " + std::to_string(r.value) +
                      " disagrees with the iteration lemma (" + std::to_string(lemma) + ")");
    }
  }
  return BoundOutcome::ok(method::kThm4, base.d, r.value,
                          Json{{"case", r.case_number}, {"i", r.index}});
}

BoundOutcome best_bound_thm4(const LacunaryForm& form) {
  if (form.g.constant_term().is_zero()) throw Error(ErrorCode::ConstantTermZero, "g(0) = 0");
  return best_bound_thm4(form.params());
}

u64 improvement_margin(const LacunaryParams& base) {
  const Thm4Result r = evaluate_thm4(base);
  const u64 margin = base.degree() - r.value;
  if (r.case_number == 2) {
    const BigInt n = base.group_order, d = base.d, dd1 = d * (d + 1);
    const BigInt s = base.ell + base.g_degree;
    const BigInt scaled = (1 + big_pow(base.d, static_cast<u64>(2 * r.index + 3))) * (n - s * dd1) +
                          BigInt(base.g_degree) * dd1;
    if (scaled != BigInt(margin) * dd1) {
      throw Error(ErrorCode::NonIntegralValue, "case-2 margin disagrees with its closed form");
    }
  }
  return margin;
}

}  // namespace lacunary
