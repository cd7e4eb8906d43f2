#include "lacunary/redei.hpp"

#include <algorithm>

namespace lacunary {

namespace {

/// C(n, k), saturating above `limit`.
u64 binomial_capped(u64 n, u64 k, u64 limit) {
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (u64 i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > limit) return limit + 1;
  }
  return static_cast<u64>(c);
}

bool contains(const std::vector<SparsePoly>& v, const SparsePoly& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

struct Enumerator {
  const Field& field;
  std::vector<Element> elements;
  u64 size = 0;
  u64 d = 0;
  RedeiReport& report;

  // coeffs[j] is the coefficient of x^j of the partial product.
  void run(std::size_t start, std::vector<Element>& coeffs, u64 chosen) {
    if (chosen == size) {
      ++report.subsets;
      accept(coeffs);
      return;
    }
    for (std::size_t i = start; i + (size - chosen) <= elements.size(); ++i) {
      std::vector<Element> next(coeffs.size() + 1, field.zero());
      const Element neg_root = field.neg(elements[i]);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        next[j + 1] = field.add(next[j + 1], coeffs[j]);
        next[j] = field.add(next[j], field.mul(coeffs[j], neg_root));
      }
      run(i + 1, next, chosen + 1);
    }
  }

  void accept(const std::vector<Element>& coeffs) {
    u64 second = 0;
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
      if (!coeffs[j].is_zero()) {
        second = j;
        break;
      }
    }
    if (second * d * d > field.q() - 1) return;  // f°° <= (q-1)/d²
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (!coeffs[j].is_zero()) terms.push_back(Term{j, coeffs[j]});
    }
    report.survivors.emplace_back(field, std::move(terms));
  }
};

std::vector<SparsePoly> expected_forms(const Field& field, u64 d) {
  const u64 group = field.q() - 1;
  const u64 k = group / d;
  std::vector<SparsePoly> out;
  for (Element alpha : field.nonzero_elements()) {
    if (field.pow(alpha, d) == field.one()) {
      out.push_back(SparsePoly::x_pow(field, k) - SparsePoly::constant(field, alpha));
    }
  }
  if (field.p() != 2 && group % 4 == 0 && d == 2) {
    const Element minus_one = field.neg(field.one());
    for (Element beta : field.nonzero_elements()) {
      if (field.mul(beta, beta) != field.one()) continue;
      for (Element gamma : field.nonzero_elements()) {
        if (field.mul(gamma, gamma) != minus_one) continue;
        out.push_back((SparsePoly::x_pow(field, group / 4) - SparsePoly::constant(field, beta)) *
                      (SparsePoly::x_pow(field, group / 4) - SparsePoly::constant(field, gamma)));
      }
    }
  }
  return out;
}

}  // namespace

RedeiReport redei_check(const Field& field, u64 d, u64 enumeration_cap) {
  const u64 group = field.q() - 1;
  if (d == 0 || group % d != 0) throw Error(ErrorCode::NotADivisor, "d must divide q-1");
  if (d == 1) throw Error(ErrorCode::InvalidArgument, "need d > 1");
  field.require_within_cap("Rédei enumeration");
  const u64 k = group / d;
  const u64 count = binomial_capped(group, k, enumeration_cap);
  if (count > enumeration_cap) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "C(" + std::to_string(group) + ", " + std::to_string(k) + ") exceeds the cap " +
                    std::to_string(enumeration_cap));
  }
  RedeiReport report;
  report.q = field.q();
  report.d = d;
  Enumerator e{field, field.nonzero_elements(), k, d, report};
  std::vector<Element> one = {field.one()};
  e.run(0, one, 0);
  report.expected = expected_forms(field, d);
  for (const SparsePoly& f : report.survivors) {
    if (!contains(report.expected, f)) report.unexpected.push_back(f);
  }
  for (const SparsePoly& f : report.expected) {
    if (!contains(report.survivors, f)) report.missing.push_back(f);
  }
  return report;
}

}  // namespace lacunary
