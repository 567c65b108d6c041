#pragma once

// Finite commutative rings with unity over an integer element encoding.
//
// Every ring enumerates its elements as indices 0..size()-1. Index 0 is the
// additive zero. Coordinates are packed mixed-radix with the first
// coordinate (or first factor) varying fastest, so a product of products
// encodes identically to the flattened product.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beckring/errors.hpp"

namespace beckring {

inline constexpr std::size_t kDefaultSizeCap = 4096;
inline constexpr std::size_t kValidationCap = 64;

struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

enum class RingKind { zmod, product, structure };

using Coords = std::vector<std::uint32_t>;

/// Basis-with-structure-constants presentation of a ring. Elements are
/// tuples (c_0, ..., c_{d-1}) with c_i taken mod additive_orders[i];
/// multiplication is the bilinear extension of `products`.
///
/// `products` is looked up at (i, j) and falls back to (j, i). A pair with
/// neither entry is a descriptor error.
struct StructureDescriptor {
  std::vector<std::uint32_t> additive_orders;
  Coords unity;
  std::map<std::pair<std::size_t, std::size_t>, Coords> products;
  std::vector<std::string> basis_names; // optional, used for display only
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
  struct Passkey {};

public:
  RingKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return Element{0}; }
  Element unity() const noexcept { return unity_; }

  /// Human-readable descriptor, e.g. "Z12", "Z4 x Z3", "AN".
  const std::string &label() const noexcept { return label_; }

  std::uint32_t modulus() const;                      // zmod only
  const std::vector<RingPtr> &factors() const;        // product only
  const StructureDescriptor &structure() const;       // structure only

  Element element(std::size_t index) const;
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t k) const;
  Element scale(Element a, std::uint64_t k) const; // a + a + ... (k times)

  bool is_zero(Element a) const { return check(a).index == 0; }
  bool is_square_zero(Element a) const { return mul(a, a).index == 0; }

  /// Structure rings: coordinate tuple of an element (and its inverse).
  Coords coords(Element a) const;
  Element from_coords(std::span<const std::uint32_t> c) const;

  /// Product rings: per-factor components of an element (and its inverse).
  std::vector<Element> components(Element a) const;
  Element from_components(std::span<const Element> parts) const;

  /// Tuple-form rendering of an element.
  std::string format(Element a) const;

  /// Exhaustive O(size^3) check of the commutative-ring-with-unity axioms.
  /// Throws NotARingError naming the first failing element tuple.
  void validate() const;

  FiniteRing(Passkey, RingKind kind, std::size_t size, std::string label);

private:
  friend RingPtr make_zmod(std::uint32_t, std::size_t);
  friend RingPtr make_product(std::vector<RingPtr>, std::size_t);
  friend RingPtr make_structure_ring(StructureDescriptor, std::string,
                                     std::size_t);

  Element check(Element a) const;
  Element mul_uncached(Element a, Element b) const;
  void build_tables();

  RingKind kind_;
  std::size_t size_;
  std::string label_;
  Element unity_{};

  // zmod
  std::uint32_t modulus_ = 0;
  // product
  std::vector<RingPtr> factors_;
  std::vector<std::size_t> strides_;
  // structure
  StructureDescriptor structure_;
  std::vector<Coords> basis_products_; // flattened d x d, resolved table

  std::vector<std::uint16_t> mul_table_; // filled for small rings
};

/// Z/nZ. n = 1 gives the zero ring, whose unity is zero.
RingPtr make_zmod(std::uint32_t n, std::size_t size_cap = kDefaultSizeCap);

/// Componentwise direct product; factor 0 varies fastest in the encoding.
RingPtr make_product(std::vector<RingPtr> factors,
                     std::size_t size_cap = kDefaultSizeCap);

/// Ring from structure constants. Validated exhaustively when its size is
/// at most kValidationCap.
RingPtr make_structure_ring(StructureDescriptor descriptor,
                            std::string label = {},
                            std::size_t size_cap = kDefaultSizeCap);

/// The two 32-element candidates for Z4[X,Y,Z]/M: basis {1,x,y,z} with
/// additive orders (4,2,2,2), x^2 = y^2 = 2, yz = 2, xy = xz = 0 and
/// z^2 = 0 or 2.
enum class ZSquared { zero, two };

/// The variant on which the exact solvers find clique number 5 and
/// chromatic number 6. Established by computation; the acceptance suite
/// re-derives it.
inline constexpr ZSquared kCanonicalAn = ZSquared::zero;

/// Labelled "AN0" / "AN2" unless `label` is given.
RingPtr make_an_ring(ZSquared z_squared, std::string label = {});
inline RingPtr make_an_ring() {
  return make_an_ring(kCanonicalAn, "AN");
}

bool is_unit(const FiniteRing &r, Element a);
bool is_zero_divisor(const FiniteRing &r, Element a);
bool is_nilpotent(const FiniteRing &r, Element a);

std::size_t unit_count(const FiniteRing &r);
std::size_t zero_divisor_count(const FiniteRing &r);

} // namespace beckring
