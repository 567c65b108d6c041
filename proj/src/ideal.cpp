#include "beckring/ideal.hpp"

#include <algorithm>

namespace beckring {

namespace {

// Additive closure of {0} together with `spanning`, by breadth-first search
// over the additive group.
std::vector<Element> additive_closure(const FiniteRing &r,
                                      const std::vector<Element> &spanning) {
  std::vector<bool> in(r.size(), false);
  std::vector<Element> queue{r.zero()};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (const Element t : spanning) {
      const Element s = r.add(a, t);
      if (!in[s.index]) {
        in[s.index] = true;
        queue.push_back(s);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// All multiples r*g for g in `gens`, deduplicated.
std::vector<Element> absorb(const FiniteRing &r,
                            const std::vector<Element> &gens) {
  std::vector<bool> in(r.size(), false);
  std::vector<Element> out;
  for (const Element g : gens)
    for (std::uint32_t x = 0; x < r.size(); ++x) {
      const Element p = r.mul(Element{x}, g);
      if (!in[p.index]) {
        in[p.index] = true;
        out.push_back(p);
      }
    }
  return out;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Element> elements,
             std::vector<Element> generators)
    : ring_(std::move(ring)), elements_(std::move(elements)),
      generators_(std::move(generators)) {}

bool Ideal::contains(Element a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

bool Ideal::is_closed() const {
  if (!contains(ring_->zero()))
    return false;
  for (const Element a : elements_) {
    for (const Element b : elements_)
      if (!contains(ring_->add(a, b)))
        return false;
    for (std::uint32_t x = 0; x < ring_->size(); ++x)
      if (!contains(ring_->mul(Element{x}, a)))
        return false;
  }
  return true;
}

Ideal ideal_generate(const RingPtr &r, const std::vector<Element> &gens) {
  for (const Element g : gens)
    r->element(g.index);
  // Sums of multiples of the generators are already absorbing.
  return Ideal(r, additive_closure(*r, absorb(*r, gens)), gens);
}

Ideal ideal_product(const Ideal &a, const Ideal &b) {
  if (a.ring_ptr() != b.ring_ptr())
    throw PreconditionError("ideal product of ideals in different rings");
  const FiniteRing &r = a.ring();
  std::vector<bool> in(r.size(), false);
  std::vector<Element> products;
  for (const Element x : a.elements())
    for (const Element y : b.elements()) {
      const Element p = r.mul(x, y);
      if (!in[p.index]) {
        in[p.index] = true;
        products.push_back(p);
      }
    }
  return ideal_generate(a.ring_ptr(), products);
}

Ideal ideal_power(const Ideal &a, std::size_t k) {
  if (k == 0)
    throw PreconditionError("ideal power exponent must be at least 1");
  Ideal result = a;
  for (std::size_t i = 1; i < k; ++i)
    result = ideal_product(result, a);
  return result;
}

NilradicalProfile nilradical(const RingPtr &r) {
  std::vector<Element> nil;
  for (std::uint32_t x = 0; x < r->size(); ++x)
    if (is_nilpotent(*r, Element{x}))
      nil.push_back(Element{x});
  Ideal j(r, nil, nil);

  std::vector<std::size_t> sizes{j.size()};
  Ideal power = j;
  while (!power.is_zero()) {
    power = ideal_product(power, j);
    sizes.push_back(power.size());
  }
  return NilradicalProfile{std::move(j), sizes.size(), std::move(sizes)};
}

bool is_local(const FiniteRing &r) {
  if (r.size() == 1)
    return false; // the zero ring has no maximal ideal
  std::vector<Element> non_units;
  for (std::uint32_t x = 0; x < r.size(); ++x)
    if (!is_unit(r, Element{x}))
      non_units.push_back(Element{x});
  std::vector<bool> is_non_unit(r.size(), false);
  for (const Element a : non_units)
    is_non_unit[a.index] = true;
  for (const Element a : non_units)
    for (const Element b : non_units)
      if (!is_non_unit[r.add(a, b).index])
        return false;
  return true;
}

bool is_reduced(const RingPtr &r) {
  return nilradical(r).index_of_nilpotency == 1;
}

std::size_t field_factor_count(const RingPtr &r) {
  if (!is_reduced(r))
    throw PreconditionError(r->label() + " is not reduced");
  std::vector<Element> idempotents;
  for (std::uint32_t x = 1; x < r->size(); ++x)
    if (r->mul(Element{x}, Element{x}) == Element{x})
      idempotents.push_back(Element{x});

  std::size_t primitive = 0;
  for (const Element e : idempotents) {
    bool splits = false;
    for (const Element e1 : idempotents) {
      if (e1 == e)
        continue;
      const Element e2 = r->sub(e, e1);
      if (e2.index == 0 || r->mul(e2, e2) != e2)
        continue;
      if (r->mul(e1, e2).index == 0) {
        splits = true;
        break;
      }
    }
    primitive += splits ? 0 : 1;
  }
  return primitive;
}

} // namespace beckring
