#include "lacunary/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lacunary {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 odd = n - 1;
  unsigned twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  // Witness set proven sufficient for all n < 2^64.
  for (u64 witness : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 a = witness % n;
    if (a == 0) continue;
    u64 x = powmod(a, odd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < twos; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> low, high;
  for (u64 i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      low.push_back(i);
      if (i != n / i) high.push_back(n / i);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm(u64 a, u64 b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, only used to certify moduli.
// ---------------------------------------------------------------------------

namespace {

using Dense = std::vector<u64>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_mod(Dense a, const Dense& m, u64 p) {
  trim(a);
  const u64 lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const u64 factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(factor, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Dense dense_mulmod(const Dense& a, const Dense& b, const Dense& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return dense_mod(std::move(out), m, p);
}

Dense dense_powmod(Dense base, u64 e, const Dense& m, u64 p) {
  Dense result{1};
  base = dense_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = dense_mulmod(result, base, m, p);
    base = dense_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Dense dense_gcd(Dense a, Dense b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const u64> monic, u64 p) {
  Dense f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  for (u64 a = 0; a < p; ++a) {
    u64 value = 0;
    for (std::size_t i = f.size(); i-- > 0;) value = (mulmod(value, a, p) + f[i]) % p;
    if (value == 0) return false;
  }
  if (k <= 3) return true;

  // x^{p^j} mod f for j = 0..k.
  std::vector<Dense> frob{Dense{0, 1}};
  for (std::size_t j = 1; j <= k; ++j) frob.push_back(dense_powmod(frob.back(), p, f, p));
  auto minus_x = [&](Dense a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[k]).empty()) return false;
  for (u64 r : prime_factors(k)) {
    Dense g = dense_gcd(f, minus_x(frob[k / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field construction.
// ---------------------------------------------------------------------------

Field Field::make(u64 p, unsigned k, std::optional<std::vector<u64>> modulus, u64 cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be positive");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (u64{1} << 32)) {
      throw Error(ErrorCode::FieldTooLarge, "q must fit in 32 bits");
    }
  }
  if (q < 3) throw Error(ErrorCode::InvalidArgument, "q must be at least 3");

  auto data = std::make_shared<Data>();
  data->p = p;
  data->k = k;
  data->q = static_cast<u64>(q);
  data->cap = cap;

  if (k > 1) {
    std::vector<u64> chosen;
    if (modulus) {
      if (modulus->size() != k + 1) {
        throw Error(ErrorCode::DegreeMismatch,
                    "modulus needs " + std::to_string(k + 1) + " coefficients");
      }
      for (u64& c : *modulus) c %= p;
      if (modulus->back() != 1) throw Error(ErrorCode::NotMonic, "modulus must be monic");
      if (!is_irreducible_mod_p(*modulus, p)) {
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
      }
      chosen = *modulus;
    } else {
      // Lexicographic scan, constant coefficient most significant.
      std::vector<u64> low(k, 0);
      low[0] = 1;
      while (true) {
        std::vector<u64> candidate = low;
        candidate.push_back(1);
        if (is_irreducible_mod_p(candidate, p)) {
          chosen = candidate;
          break;
        }
        std::size_t pos = k;
        while (pos-- > 0) {
          if (++low[pos] < p) break;
          low[pos] = 0;
        }
      }
    }
    data->modulus.assign(chosen.begin(), chosen.end());
    if (data->q <= kTableLimit) build_tables(*data);
  } else if (modulus && !modulus->empty()) {
    throw Error(ErrorCode::DegreeMismatch, "prime fields take no modulus");
  }
  return Field(std::move(data));
}

namespace {

u64 parse_uint(std::string_view text, std::string_view what) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Field Field::parse(std::string_view spec, u64 cap) {
  spec = strip(spec);
  std::optional<std::vector<u64>> modulus;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    std::vector<u64> coeffs;
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      coeffs.push_back(parse_uint(strip(rest.substr(0, comma)), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    modulus = std::move(coeffs);
    spec = strip(spec.substr(0, colon));
  }
  if (auto caret = spec.find('^'); caret != std::string_view::npos) {
    const u64 p = parse_uint(strip(spec.substr(0, caret)), "prime");
    const u64 k = parse_uint(strip(spec.substr(caret + 1)), "exponent");
    if (k == 0 || k > 64) throw Error(ErrorCode::DegreeMismatch, "bad extension degree");
    return make(p, static_cast<unsigned>(k), std::move(modulus), cap);
  }
  const u64 q = parse_uint(spec, "field size");
  if (is_prime(q)) return make(q, 1, std::move(modulus), cap);
  // A bare prime power such as 9 or 16.
  const auto factors = prime_factors(q);
  if (factors.size() != 1 || q < 2) {
    throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  }
  unsigned k = 0;
  for (u64 rest = q; rest > 1; rest /= factors[0]) ++k;
  return make(factors[0], k, std::move(modulus), cap);
}

Field Field::with_cap(u64 cap) const {
  auto data = std::make_shared<Data>(*data_);
  data->cap = cap;
  return Field(std::move(data));
}

void Field::require_within_cap(std::string_view what) const {
  if (q() > cap()) {
    throw Error(ErrorCode::FieldTooLarge, std::string(what) + " refuses q=" + std::to_string(q()) +
                                              " above cap " + std::to_string(cap()));
  }
}

bool Field::same_field(const Field& other) const {
  return data_ == other.data_ ||
         (p() == other.p() && k() == other.k() && data_->modulus == other.data_->modulus);
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "F_" << q();
  if (k() > 1) {
    out << " = F_" << p() << "[x]/(";
    bool first = true;
    for (std::size_t i = data_->modulus.size(); i-- > 0;) {
      const auto c = data_->modulus[i];
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (c != 1 || i == 0) out << c;
      if (i >= 1) out << "x";
      if (i >= 2) out << "^" << i;
    }
    out << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Element conversion and arithmetic.
// ---------------------------------------------------------------------------

Element Field::from_int(i64 value) const {
  const i64 p = static_cast<i64>(this->p());
  i64 r = value % p;
  if (r < 0) r += p;
  return Element{static_cast<std::uint32_t>(r)};
}

Element Field::from_code(u64 code) const {
  if (code >= q()) throw Error(ErrorCode::FieldMismatch, "code outside F_" + std::to_string(q()));
  return Element{static_cast<std::uint32_t>(code)};
}

Element Field::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > k()) {
    throw Error(ErrorCode::DegreeMismatch, "element vector longer than the extension degree");
  }
  u64 code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p() + coeffs[i] % p();
  return Element{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Element a) const {
  std::vector<std::uint32_t> out(k(), 0);
  u64 code = a.code;
  for (unsigned i = 0; i < k(); ++i) {
    out[i] = static_cast<std::uint32_t>(code % p());
    code /= p();
  }
  return out;
}

Element Field::ext_add(Element a, Element b, bool subtract) const {
  const u64 p = this->p();
  u64 x = a.code, y = b.code, out = 0, place = 1;
  for (unsigned i = 0; i < k(); ++i) {
    const u64 dx = x % p, dy = y % p;
    x /= p;
    y /= p;
    const u64 digit = subtract ? (dx + p - dy) % p : (dx + dy) % p;
    out += digit * place;
    place *= p;
  }
  return Element{static_cast<std::uint32_t>(out)};
}

void Field::build_tables(Data& data) {
  // Tables are filled through the schoolbook routines of a table-free handle.
  auto plain = std::make_shared<Data>(data);
  const Field f(plain);
  const u64 n = data.q - 1;
  const std::vector<u64> factors = prime_factors(n);
  Element g{1};
  for (u64 c = 2; c < data.q; ++c) {
    g = Element{static_cast<std::uint32_t>(c)};
    bool generator = true;
    for (u64 r : factors) {
      Element x = f.one(), base = g;
      for (u64 e = n / r; e > 0; e >>= 1) {
        if (e & 1) x = f.ext_mul(x, base);
        base = f.ext_mul(base, base);
      }
      if (x == f.one()) {
        generator = false;
        break;
      }
    }
    if (generator) break;
  }
  data.exp_table.resize(2 * n);
  data.log_table.assign(data.q, 0);
  Element x = f.one();
  for (u64 i = 0; i < n; ++i) {
    data.exp_table[i] = data.exp_table[i + n] = x.code;
    data.log_table[x.code] = static_cast<std::uint32_t>(i);
    x = f.ext_mul(x, g);
  }
  data.zech.resize(n);
  for (u64 i = 0; i < n; ++i) {
    const Element s = f.ext_add(f.one(), Element{data.exp_table[i]}, false);
    data.zech[i] = s.is_zero() ? kNoLog : data.log_table[s.code];
  }
}

Element Field::add(Element a, Element b) const {
  if (p() == 2) return Element{a.code ^ b.code};
  if (!data_->zech.empty()) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const u64 n = q() - 1;
    const u64 la = data_->log_table[a.code];
    const std::uint32_t z = data_->zech[(data_->log_table[b.code] + n - la) % n];
    if (z == kNoLog) return zero();
    return Element{data_->exp_table[la + z]};
  }
  if (k() == 1) {
    u64 s = u64{a.code} + b.code;
    if (s >= p()) s -= p();
    return Element{static_cast<std::uint32_t>(s)};
  }
  if (p() == 2) return Element{a.code ^ b.code};
  return ext_add(a, b, false);
}

Element Field::sub(Element a, Element b) const {
  if (!data_->zech.empty() && p() != 2) {
    if (b.is_zero()) return a;
    // -1 = g^{(q-1)/2}.
    return add(a, Element{data_->exp_table[data_->log_table[b.code] + (q() - 1) / 2]});
  }
  if (k() == 1) {
    u64 s = u64{a.code} + p() - b.code;
    if (s >= p()) s -= p();
    return Element{static_cast<std::uint32_t>(s)};
  }
  if (p() == 2) return Element{a.code ^ b.code};
  return ext_add(a, b, true);
}

Element Field::neg(Element a) const { return sub(zero(), a); }

Element Field::ext_mul(Element a, Element b) const {
  const u64 p = this->p();
  const unsigned k = this->k();
  std::array<u64, 64> x{}, y{}, prod{};
  u64 ca = a.code, cb = b.code;
  for (unsigned i = 0; i < k; ++i) {
    x[i] = ca % p;
    ca /= p;
    y[i] = cb % p;
    cb /= p;
  }
  for (unsigned i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  // Reduce by the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  const auto& m = data_->modulus;
  for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
    const u64 c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    const unsigned shift = deg - k;
    for (unsigned i = 0; i < k; ++i) {
      prod[shift + i] = (prod[shift + i] + (p - m[i]) * c) % p;
    }
  }
  u64 out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return Element{static_cast<std::uint32_t>(out)};
}

Element Field::mul(Element a, Element b) const {
  if (k() == 1) return Element{static_cast<std::uint32_t>((u64{a.code} * b.code) % p())};
  if (!data_->exp_table.empty()) {
    if (a.is_zero() || b.is_zero()) return zero();
    return Element{data_->exp_table[data_->log_table[a.code] + data_->log_table[b.code]]};
  }
  return ext_mul(a, b);
}

Element Field::pow(Element a, u64 e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  e %= (q() - 1);
  if (e == 0) return one();
  if (k() == 1) return Element{static_cast<std::uint32_t>(powmod(a.code, e, p()))};
  if (!data_->exp_table.empty()) {
    const u64 n = q() - 1;
    const u64 l = data_->log_table[a.code];
    return Element{data_->exp_table[static_cast<u64>((static_cast<unsigned __int128>(l) * e) % n)]};
  }
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
  if (!data_->exp_table.empty()) {
    const u64 n = q() - 1;
    return Element{data_->exp_table[(n - data_->log_table[a.code]) % n]};
  }
  return pow(a, q() - 2);
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::arith(Element a, Element b, ArithOp op) const {
  if (a.code >= q() || b.code >= q()) {
    throw Error(ErrorCode::FieldMismatch, "operand outside F_" + std::to_string(q()));
  }
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Div: return div(a, b);
  }
  return zero();
}

bool Field::is_dth_power(Element a, u64 d) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "d-th power test needs a nonzero element");
  if (d == 0 || (q() - 1) % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide q-1");
  }
  return pow(a, (q() - 1) / d) == one();
}

CosetDecomposition Field::coset_decomposition(u64 d) const {
  if (d == 0 || (q() - 1) % d != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide q-1");
  }
  const u64 exponent = (q() - 1) / d;
  std::vector<std::pair<Element, Element>> keyed;  // (a^{(q-1)/d}, a)
  keyed.reserve(q() - 1);
  for (u64 code = 1; code < q(); ++code) {
    const Element a{static_cast<std::uint32_t>(code)};
    keyed.emplace_back(pow(a, exponent), a);
  }
  std::sort(keyed.begin(), keyed.end());
  CosetDecomposition out;
  out.d = d;
  for (const auto& [xi, a] : keyed) {
    if (out.xi_list.empty() || out.xi_list.back() != xi) {
      out.xi_list.push_back(xi);
      out.cosets.emplace_back();
    }
    out.cosets.back().push_back(a);
  }
  return out;
}

std::vector<Element> Field::nonzero_elements() const {
  std::vector<Element> out;
  out.reserve(q() - 1);
  for (u64 code = 1; code < q(); ++code) out.push_back(Element{static_cast<std::uint32_t>(code)});
  return out;
}

std::string Field::format(Element a) const {
  if (in_prime_subfield(a)) return std::to_string(a.code);
  std::string out = "(";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  out += ")";
  return out;
}

}  // namespace lacunary
