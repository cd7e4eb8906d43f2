#include "lacunary/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lacunary {

u64 Rng::uniform(u64 lo, u64 hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty range");
  const u64 span = hi - lo;
  if (span == std::numeric_limits<u64>::max()) return engine_();
  const u64 n = span + 1;
  const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % n;
  u64 x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % n;
}

std::vector<u64> odd_prime_powers(u64 limit) {
  std::vector<u64> out;
  for (u64 q = 3; q <= limit; q += 2) {
    const std::vector<u64> primes = prime_factors(q);
    if (primes.size() == 1) out.push_back(q);
  }
  return out;
}

RandomInstance random_instance(Rng& rng, const Field& field) {
  const u64 group = field.q() - 1;
  std::vector<u64> ds;
  for (u64 d : divisors(group)) {
    if (d >= 2 && group / d >= 2) ds.push_back(d);
  }
  if (ds.empty()) throw Error(ErrorCode::InvalidArgument, "no lacunary instances over " + field.describe());
  const u64 d = ds[rng.uniform(0, ds.size() - 1)];
  const u64 block = group / d;
  const u64 ell = rng.uniform(0, block - 2);
  const u64 g_degree = rng.uniform(1, block - ell - 1);
  const u64 t = std::min<u64>(rng.uniform(2, 6), g_degree + 1);
  auto nonzero = [&] { return field.from_code(rng.uniform(1, field.q() - 1)); };
  std::vector<Term> terms = {{g_degree, nonzero()}, {0, nonzero()}};
  std::set<u64> used = {0, g_degree};
  while (terms.size() < t) {
    const u64 e = rng.uniform(1, g_degree - 1);
    if (used.insert(e).second) terms.push_back({e, nonzero()});
  }
  SparsePoly g(field, std::move(terms));
  LacunaryForm form = make_lacunary_form(d, ell, g);
  SparsePoly poly = form.poly();
  return RandomInstance{d, std::move(form), std::move(poly)};
}

namespace {

void check(VerifyReport& report, const VerifyConfig& config, u64 trial, const SparsePoly& f) {
  const RootReport roots = count_roots_bruteforce(f);
  std::vector<BoundOutcome> outcomes = bound_all(f, std::nullopt, roots);
  if (config.tamper) config.tamper(outcomes);
  for (const BoundOutcome& o : outcomes) {
    if (!o.applicable) continue;
    ++report.outcomes_checked;
    if (*o.value < roots.count()) {
      report.violations.push_back(
          Violation{trial, f.field().describe(), render(f), o, roots.count()});
      continue;
    }
    if (*o.value > 0) {
      const double ratio = static_cast<double>(roots.count()) / static_cast<double>(*o.value);
      if (ratio > report.max_tightness) {
        report.max_tightness = ratio;
        report.tightest = o.method + " on " + render(f) + " over " + f.field().describe();
      }
    }
  }
  ++report.trials;
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  const std::vector<u64> qs = config.q_list.empty() ? odd_prime_powers(997) : config.q_list;
  std::map<u64, Field> fields;
  for (u64 q : qs) fields.emplace(q, Field::parse(std::to_string(q)));
  std::vector<u64> usable;
  for (u64 q : qs) {
    const u64 group = q - 1;
    for (u64 d : divisors(group)) {
      if (d >= 2 && group / d >= 2) {
        usable.push_back(q);
        break;
      }
    }
  }
  if (usable.empty()) throw Error(ErrorCode::InvalidArgument, "no usable field in the q list");

  VerifyReport report;
  u64 trial = 0;
  for (const SparsePoly& f : config.injected) check(report, config, trial++, f);
  Rng rng(config.seed);
  for (u64 i = 0; i < config.trials; ++i) {
    const Field& field = fields.at(usable[rng.uniform(0, usable.size() - 1)]);
    const RandomInstance inst = random_instance(rng, field);
    check(report, config, trial++, inst.poly);
  }
  return report;
}

void require_sound(const VerifyReport& report) {
  if (report.violations.empty()) return;
  const Violation& v = report.violations.front();
  throw Error(ErrorCode::SoundnessViolation,
              v.outcome.method + (v.outcome.d ? " (d=" + std::to_string(*v.outcome.d) + ")" : "") +
                  " gives " + std::to_string(*v.outcome.value) + " < " + std::to_string(v.count) +
                  " roots for " + v.poly + " over " + v.field + " (trial " +
                  std::to_string(v.trial) + ")");
}

}  // namespace lacunary
