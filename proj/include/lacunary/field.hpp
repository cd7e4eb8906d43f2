#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/error.hpp"

namespace lacunary {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Integer helpers shared by every module.
// ---------------------------------------------------------------------------

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Ascending list of the positive divisors of n (trial division).
std::vector<u64> divisors(u64 n);

/// Distinct prime factors of n in ascending order.
std::vector<u64> prime_factors(u64 n);

u64 isqrt(u64 n);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// ---------------------------------------------------------------------------
// Field elements and contexts.
// ---------------------------------------------------------------------------

/// Canonical representative of an element of F_q.  For prime fields the code
/// is the residue in [0, p); for F_{p^k} it is sum c_i p^i over the
/// coefficient vector (c_0, ..., c_{k-1}) of the reduced polynomial.
/// Elements order by code.
struct Element {
  std::uint32_t code = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
  bool is_zero() const { return code == 0; }
};

enum class ArithOp { Add, Sub, Mul, Div };

struct CosetDecomposition {
  u64 d = 0;
  /// The d values of a^{(q-1)/d}, sorted.
  std::vector<Element> xi_list;
  /// cosets[i] = { a : a^{(q-1)/d} = xi_list[i] }, each sorted.
  std::vector<std::vector<Element>> cosets;
};

/// F_q with q = p^k.  Immutable and cheap to copy; copies share state.
class Field {
 public:
  static constexpr u64 kDefaultCap = u64{1} << 20;

  /// Builds F_{p^k}.  When `modulus` is omitted for k > 1 the lexicographically
  /// smallest monic irreducible (constant coefficient compared first) is used.
  /// `modulus` is given constant-first and includes the leading 1.
  static Field make(u64 p, unsigned k = 1, std::optional<std::vector<u64>> modulus = std::nullopt,
                    u64 cap = kDefaultCap);

  /// Text form used by every `--q` flag: "47", "3^2", "3^2:1,0,1" or a plain
  /// prime power such as "9".
  static Field parse(std::string_view spec, u64 cap = kDefaultCap);

  u64 p() const { return data_->p; }
  unsigned k() const { return data_->k; }
  u64 q() const { return data_->q; }
  u64 cap() const { return data_->cap; }
  /// Constant-first modulus coefficients (length k+1); empty when k = 1.
  std::span<const std::uint32_t> modulus() const { return data_->modulus; }
  Field with_cap(u64 cap) const;

  /// Throws FieldTooLarge when q exceeds the configured cap.
  void require_within_cap(std::string_view what) const;

  bool same_field(const Field& other) const;
  friend bool operator==(const Field& a, const Field& b) { return a.same_field(b); }

  std::string describe() const;

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element from_int(i64 value) const;
  Element from_code(u64 code) const;
  Element from_coeffs(std::span<const u64> coeffs) const;
  std::vector<std::uint32_t> coeffs(Element a) const;
  bool in_prime_subfield(Element a) const { return a.code < data_->p; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, u64 e) const;
  Element arith(Element a, Element b, ArithOp op) const;

  /// Euler criterion: a^{(q-1)/d} = 1.
  bool is_dth_power(Element a, u64 d) const;

  CosetDecomposition coset_decomposition(u64 d) const;

  /// F_q^* in canonical order.
  std::vector<Element> nonzero_elements() const;

  /// Integer for prime-subfield elements, "(c0,c1,...)" otherwise.
  std::string format(Element a) const;

 private:
  struct Data {
    u64 p = 0;
    unsigned k = 1;
    u64 q = 0;
    u64 cap = kDefaultCap;
    std::vector<std::uint32_t> modulus;
    // Extension fields up to kTableLimit: exp_table[i] = g^i for a fixed
    // generator g (doubled so sums of logs need no reduction), log_table[0]
    // unused, zech[n] = log(1 + g^n) or kNoLog when 1 + g^n = 0.
    std::vector<std::uint32_t> exp_table, log_table, zech;
  };

  static constexpr u64 kTableLimit = u64{1} << 20;
  static constexpr std::uint32_t kNoLog = ~std::uint32_t{0};
  static void build_tables(Data& data);

  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  Element ext_mul(Element a, Element b) const;
  Element ext_add(Element a, Element b, bool subtract) const;

  std::shared_ptr<const Data> data_;
};

/// Dense irreducibility test for a monic polynomial over F_p given
/// constant-first.  Checks for roots in F_p and, from degree 4 on, runs the
/// gcd-with-Frobenius test.
bool is_irreducible_mod_p(std::span<const u64> monic, u64 p);

}  // namespace lacunary
