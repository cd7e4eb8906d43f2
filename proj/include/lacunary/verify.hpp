#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lacunary/bound_all.hpp"

namespace lacunary {

/// Seeded 64-bit generator with a portable bounded draw (rejection sampling,
/// so streams do not depend on the standard library's distributions).
class Rng {
 public:
  explicit Rng(u64 seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  u64 uniform(u64 lo, u64 hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Odd prime powers q <= limit, ascending.
std::vector<u64> odd_prime_powers(u64 limit);

/// A random lacunary instance: d uniform over divisors >= 2 of q-1 with
/// (q-1)/d >= 2, l uniform in [0, (q-1)/d - 2], g with t in [2, 6] terms,
/// degree uniform in [1, (q-1)/d - l - 1] and nonzero constant term.
struct RandomInstance {
  u64 d = 0;
  LacunaryForm form;
  SparsePoly poly;
};
RandomInstance random_instance(Rng& rng, const Field& field);

struct Violation {
  u64 trial = 0;
  std::string field;
  std::string poly;
  BoundOutcome outcome;
  u64 count = 0;
};

struct VerifyConfig {
  u64 seed = 1;
  u64 trials = 10000;
  std::vector<u64> q_list;  // empty: odd prime powers <= 997
  /// Checked ahead of the random trials.
  std::vector<SparsePoly> injected;
  /// Test hook: may alter the outcomes before they are compared.
  std::function<void(std::vector<BoundOutcome>&)> tamper;
};

struct VerifyReport {
  u64 trials = 0;
  u64 outcomes_checked = 0;
  double max_tightness = 0.0;  // largest |Z(f)| / value over applicable bounds
  std::string tightest;
  std::vector<Violation> violations;
};

/// Checks every applicable outcome of bound_all against the oracle.
VerifyReport run_verify(const VerifyConfig& config);

/// Raises SoundnessViolation naming the first counterexample, if any.
void require_sound(const VerifyReport& report);

}  // namespace lacunary
