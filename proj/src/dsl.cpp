#include "beckring/dsl.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace beckring::dsl {

namespace {

constexpr std::uint64_t kMaxExponent = 1000;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse_expr() {
    RingExpr e;
    e.factors.push_back(parse_atom());
    skip_ws();
    while (pos_ < text_.size() && (peek() == 'x' || peek() == 'X')) {
      ++pos_;
      e.factors.push_back(parse_atom());
      skip_ws();
    }
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, peek()) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &msg,
                         ParseError::Kind kind = ParseError::Kind::syntax) {
    throw ParseError(kind, pos_, msg);
  }
  [[noreturn]] void fail_at(std::size_t at, ParseError::Kind kind,
                            const std::string &msg) {
    throw ParseError(kind, at, msg);
  }

  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(peek()));
  }

  std::uint64_t parse_int() {
    if (!at_digit())
      fail("expected an integer");
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        fail_at(start, ParseError::Kind::syntax, "integer too large");
      ++pos_;
    }
    return v;
  }

  Atom parse_atom() {
    skip_ws();
    if (accept('A')) {
      expect('N');
      if (accept('0'))
        return AnAtom{ZSquared::zero};
      if (accept('2'))
        return AnAtom{ZSquared::two};
      return AnAtom{};
    }
    if (!accept('Z'))
      fail("expected a ring atom (Z<n> or AN)");
    skip_ws();
    const std::size_t modulus_at = pos_;
    const auto n = static_cast<std::uint32_t>(parse_int());
    if (n == 0)
      fail_at(modulus_at, ParseError::Kind::invalid_modulus,
              "modulus must be at least 1");
    if (!accept('['))
      return ZmodAtom{n};
    expect('t');
    expect(']');
    expect('/');
    expect('(');
    skip_ws();
    const std::size_t poly_at = pos_;
    auto coeffs = parse_poly(n);
    expect(')');
    if (coeffs.size() < 2)
      fail_at(poly_at, ParseError::Kind::unsupported,
              "quotient polynomial must have degree at least 1");
    if (coeffs.back() != 1 % n)
      fail_at(poly_at, ParseError::Kind::unsupported,
              "quotient polynomial must be monic");
    if (n == 1)
      fail_at(poly_at, ParseError::Kind::unsupported,
              "quotient of the zero ring is not supported");
    return QuotientAtom{n, std::move(coeffs)};
  }

  // Returns coefficients reduced mod n, trimmed to the true degree.
  std::vector<std::uint32_t> parse_poly(std::uint32_t n) {
    std::map<std::uint64_t, std::uint64_t> acc; // degree -> coeff mod n
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      std::uint64_t coeff = 1;
      std::uint64_t degree = 0;
      bool have_coeff = false;
      if (at_digit()) {
        coeff = parse_int();
        have_coeff = true;
      }
      if (accept('t')) {
        degree = 1;
        if (accept('^')) {
          const std::size_t exp_at = pos_;
          degree = parse_int();
          if (degree > kMaxExponent)
            fail_at(exp_at, ParseError::Kind::unsupported,
                    "exponent too large");
        }
      } else if (!have_coeff) {
        fail("expected a polynomial term");
      }
      coeff %= n;
      if (negative)
        coeff = (n - coeff) % n;
      acc[degree] = (acc[degree] + coeff) % n;

      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    std::vector<std::uint32_t> coeffs;
    for (const auto &[deg, c] : acc) {
      if (c == 0)
        continue;
      if (coeffs.size() <= deg)
        coeffs.resize(deg + 1, 0);
      coeffs[deg] = static_cast<std::uint32_t>(c);
    }
    return coeffs;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_poly(const std::vector<std::uint32_t> &coeffs) {
  std::string s;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto c = coeffs[k];
    if (c == 0)
      continue;
    if (!s.empty())
      s += '+';
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1)
      s += std::to_string(c);
    s += 't';
    if (k > 1)
      s += '^' + std::to_string(k);
  }
  return s;
}

RingPtr elaborate_quotient(const QuotientAtom &q, std::size_t size_cap) {
  const std::size_t d = q.degree();
  const std::uint32_t n = q.modulus;

  // powers[k] = t^k reduced to the basis 1, t, ..., t^{d-1}.
  std::vector<Coords> powers;
  Coords current(d, 0);
  current[0] = 1 % n;
  for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
    powers.push_back(current);
    // multiply by t: shift up, then rewrite t^d = -(c_0 + ... + c_{d-1} t^{d-1})
    const std::uint32_t top = current[d - 1];
    Coords next(d, 0);
    for (std::size_t i = d - 1; i > 0; --i)
      next[i] = current[i - 1];
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t sub = std::uint64_t{top} * q.coefficients[i] % n;
      next[i] = static_cast<std::uint32_t>((next[i] + n - sub) % n);
    }
    current = std::move(next);
  }

  StructureDescriptor desc;
  desc.additive_orders.assign(d, n);
  desc.unity = powers[0];
  for (std::size_t i = 0; i < d; ++i) {
    desc.basis_names.push_back(i == 0   ? "1"
                               : i == 1 ? "t"
                                        : "t^" + std::to_string(i));
    for (std::size_t j = i; j < d; ++j)
      desc.products[{i, j}] = powers[i + j];
  }
  return make_structure_ring(std::move(desc), print(Atom{q}), size_cap);
}

} // namespace

RingExpr parse(std::string_view text) {
  Parser p(text);
  return p.parse_expr();
}

std::string print(const Atom &a) {
  if (const auto *z = std::get_if<ZmodAtom>(&a))
    return "Z" + std::to_string(z->modulus);
  if (const auto *q = std::get_if<QuotientAtom>(&a))
    return "Z" + std::to_string(q->modulus) + "[t]/(" +
           print_poly(q->coefficients) + ")";
  const auto &an = std::get<AnAtom>(a);
  if (!an.variant)
    return "AN";
  return *an.variant == ZSquared::zero ? "AN0" : "AN2";
}

std::string print(const RingExpr &e) {
  std::string s;
  for (const auto &a : e.factors) {
    if (!s.empty())
      s += " x ";
    s += print(a);
  }
  return s;
}

RingPtr elaborate(const Atom &a, std::size_t size_cap) {
  if (const auto *z = std::get_if<ZmodAtom>(&a))
    return make_zmod(z->modulus, size_cap);
  if (const auto *q = std::get_if<QuotientAtom>(&a))
    return elaborate_quotient(*q, size_cap);
  const auto &an = std::get<AnAtom>(a);
  if (!an.variant)
    return make_an_ring();
  return make_an_ring(*an.variant);
}

RingPtr elaborate(const RingExpr &e, std::size_t size_cap) {
  if (e.factors.empty())
    throw PreconditionError("empty ring expression");
  if (e.factors.size() == 1)
    return elaborate(e.factors.front(), size_cap);
  std::vector<RingPtr> rings;
  for (const auto &a : e.factors)
    rings.push_back(elaborate(a, size_cap));
  return make_product(std::move(rings), size_cap);
}

} // namespace beckring::dsl
