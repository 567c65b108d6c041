#pragma once

// Ring expressions.
//
//   expr := atom ( "x" atom )*
//   atom := "Z" INT | "Z" INT "[t]/(" poly ")" | "AN" | "AN0" | "AN2"
//   poly := term ( ("+" | "-") term )*
//   term := INT | INT? "t" ( "^" INT )?
//
// Whitespace is ignored everywhere, "x" is case-insensitive, and integers
// are decimal. Quotient polynomials must be monic of degree >= 1 once their
// coefficients are reduced mod the base modulus.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "beckring/ring.hpp"

namespace beckring::dsl {

struct ZmodAtom {
  std::uint32_t modulus = 0;
  friend bool operator==(const ZmodAtom &, const ZmodAtom &) = default;
};

/// Z_n[t]/(f). coefficients[k] is the coefficient of t^k, reduced mod n;
/// the last entry is the leading coefficient 1.
struct QuotientAtom {
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> coefficients;
  friend bool operator==(const QuotientAtom &, const QuotientAtom &) = default;
  std::size_t degree() const { return coefficients.size() - 1; }
};

/// nullopt selects the canonical variant.
struct AnAtom {
  std::optional<ZSquared> variant;
  friend bool operator==(const AnAtom &,
                         const AnAtom &) = default;
};

using Atom = std::variant<ZmodAtom, QuotientAtom, AnAtom>;

/// One atom, or a direct product of several.
struct RingExpr {
  std::vector<Atom> factors;
  friend bool operator==(const RingExpr &, const RingExpr &) = default;
  bool is_product() const { return factors.size() > 1; }
};

RingExpr parse(std::string_view text);
std::string print(const RingExpr &e);
std::string print(const Atom &a);

RingPtr elaborate(const Atom &a, std::size_t size_cap = kDefaultSizeCap);
RingPtr elaborate(const RingExpr &e, std::size_t size_cap = kDefaultSizeCap);

inline RingPtr parse_ring(std::string_view text,
                          std::size_t size_cap = kDefaultSizeCap) {
  return elaborate(parse(text), size_cap);
}

} // namespace beckring::dsl
