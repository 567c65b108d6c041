#pragma once

#include <cstddef>
#include <vector>

#include "beckring/ring.hpp"

namespace beckring {

/// An ideal of a finite ring, stored as its full sorted element set.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Element> elements,
        std::vector<Element> generators);

  const FiniteRing &ring() const noexcept { return *ring_; }
  const RingPtr &ring_ptr() const noexcept { return ring_; }
  const std::vector<Element> &elements() const noexcept { return elements_; }
  const std::vector<Element> &generators() const noexcept {
    return generators_;
  }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element a) const;
  bool is_zero() const noexcept { return elements_.size() == 1; }

  /// Re-checks closure under addition and absorption. Exhaustive.
  bool is_closed() const;

  friend bool operator==(const Ideal &a, const Ideal &b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

private:
  RingPtr ring_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

struct NilradicalProfile {
  Ideal ideal;
  std::size_t index_of_nilpotency; // least m with J^m = 0
  std::vector<std::size_t> power_sizes; // |J^1|, ..., |J^m|
};

Ideal ideal_generate(const RingPtr &r, const std::vector<Element> &gens);
Ideal ideal_product(const Ideal &a, const Ideal &b);
Ideal ideal_power(const Ideal &a, std::size_t k);

NilradicalProfile nilradical(const RingPtr &r);

bool is_local(const FiniteRing &r);
bool is_reduced(const RingPtr &r);

/// Number of primitive idempotents of a reduced ring, i.e. the number of
/// fields in its decomposition. Throws PreconditionError if `r` is not
/// reduced.
std::size_t field_factor_count(const RingPtr &r);

} // namespace beckring
