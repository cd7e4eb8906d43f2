#include <cctype>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  SparsePoly parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    terms.push_back(term(negative));
    skip_space();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(op == '-'));
      skip_space();
    }
    return SparsePoly(field_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_space();
    Element coeff = field_.one();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(') {
      coeff = coefficient();
      have_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    u64 exp = 0;
    if (peek() == 'x') {
      ++pos_;
      exp = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        exp = exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'x'");
    }
    if (negative) coeff = field_.neg(coeff);
    return Term{exp, coeff};
  }

  Element integer_mod_p() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    u64 value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = (value * 10 + static_cast<u64>(get() - '0')) % field_.p();
    }
    return Element{static_cast<std::uint32_t>(value)};
  }

  Element coefficient() {
    if (peek() != '(') return integer_mod_p();
    const std::size_t open = pos_++;
    if (field_.k() == 1) fail("vector coefficients need an extension field", open);
    std::vector<u64> parts;
    while (true) {
      skip_space();
      parts.push_back(integer_mod_p().code);
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (parts.size() > field_.k()) fail("coefficient vector longer than the extension degree", open);
    return field_.from_coeffs(parts);
  }

  u64 exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    u64 value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<u64>(get() - '0');
      if (value > kMaxExponent) {
        throw Error(ErrorCode::ExponentOverflow,
                    "exponent exceeds 2^40 at byte " + std::to_string(pos_));
      }
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t where) const {
    throw SyntaxError(where, message);
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const Field& field) {
  return PolyParser(text, field).parse();
}

std::string render(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  const Field& field = f.field();
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exp == 0 || t.coeff != field.one()) out += field.format(t.coeff);
    if (t.exp >= 1) out += "x";
    if (t.exp >= 2) out += "^" + std::to_string(t.exp);
  }
  return out;
}

}  // namespace lacunary
