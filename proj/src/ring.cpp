#include "beckring/ring.hpp"

#include <numeric>
#include <sstream>

namespace beckring {

namespace {

constexpr std::size_t kMulTableCap = 512;

std::string join_coords(const Coords &c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0)
      os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

// Multiply with overflow detection against a cap.
bool checked_mul(std::size_t a, std::size_t b, std::size_t cap,
                 std::size_t &out) {
  if (a != 0 && b > cap / a)
    return false;
  out = a * b;
  return out <= cap;
}

} // namespace

FiniteRing::FiniteRing(Passkey, RingKind kind, std::size_t size,
                       std::string label)
    : kind_(kind), size_(size), label_(std::move(label)) {}

std::uint32_t FiniteRing::modulus() const {
  if (kind_ != RingKind::zmod)
    throw PreconditionError("modulus() requires a Z_n ring");
  return modulus_;
}

const std::vector<RingPtr> &FiniteRing::factors() const {
  if (kind_ != RingKind::product)
    throw PreconditionError("factors() requires a product ring");
  return factors_;
}

const StructureDescriptor &FiniteRing::structure() const {
  if (kind_ != RingKind::structure)
    throw PreconditionError("structure() requires a structure ring");
  return structure_;
}

Element FiniteRing::check(Element a) const {
  if (a.index >= size_)
    throw ElementError("element index " + std::to_string(a.index) +
                       " out of range for ring of size " +
                       std::to_string(size_));
  return a;
}

Element FiniteRing::element(std::size_t index) const {
  if (index >= size_)
    throw ElementError("element index " + std::to_string(index) +
                       " out of range for ring of size " +
                       std::to_string(size_));
  return Element{static_cast<std::uint32_t>(index)};
}

Coords FiniteRing::coords(Element a) const {
  if (kind_ != RingKind::structure)
    throw PreconditionError("coords() requires a structure ring");
  check(a);
  const auto &orders = structure_.additive_orders;
  Coords c(orders.size());
  std::uint32_t rest = a.index;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    c[i] = rest % orders[i];
    rest /= orders[i];
  }
  return c;
}

Element FiniteRing::from_coords(std::span<const std::uint32_t> c) const {
  if (kind_ != RingKind::structure)
    throw PreconditionError("from_coords() requires a structure ring");
  const auto &orders = structure_.additive_orders;
  if (c.size() != orders.size())
    throw ElementError("coordinate tuple has wrong arity");
  std::uint32_t index = 0;
  for (std::size_t i = orders.size(); i-- > 0;)
    index = index * orders[i] + c[i] % orders[i];
  return Element{index};
}

std::vector<Element> FiniteRing::components(Element a) const {
  if (kind_ != RingKind::product)
    throw PreconditionError("components() requires a product ring");
  check(a);
  std::vector<Element> parts(factors_.size());
  std::uint32_t rest = a.index;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::uint32_t>(factors_[i]->size());
    parts[i] = Element{rest % n};
    rest /= n;
  }
  return parts;
}

Element FiniteRing::from_components(std::span<const Element> parts) const {
  if (kind_ != RingKind::product)
    throw PreconditionError("from_components() requires a product ring");
  if (parts.size() != factors_.size())
    throw ElementError("component tuple has wrong arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    index += factors_[i]->check(parts[i]).index * strides_[i];
  return Element{static_cast<std::uint32_t>(index)};
}

Element FiniteRing::add(Element a, Element b) const {
  check(a);
  check(b);
  switch (kind_) {
  case RingKind::zmod:
    return Element{static_cast<std::uint32_t>(
        (std::uint64_t{a.index} + b.index) % modulus_)};
  case RingKind::product: {
    auto x = components(a);
    const auto y = components(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = factors_[i]->add(x[i], y[i]);
    return from_components(x);
  }
  case RingKind::structure: {
    auto x = coords(a);
    const auto y = coords(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = (x[i] + y[i]) % structure_.additive_orders[i];
    return from_coords(x);
  }
  }
  return Element{};
}

Element FiniteRing::neg(Element a) const {
  check(a);
  switch (kind_) {
  case RingKind::zmod:
    return Element{a.index == 0 ? 0 : modulus_ - a.index};
  case RingKind::product: {
    auto x = components(a);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = factors_[i]->neg(x[i]);
    return from_components(x);
  }
  case RingKind::structure: {
    auto x = coords(a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto n = structure_.additive_orders[i];
      x[i] = (n - x[i]) % n;
    }
    return from_coords(x);
  }
  }
  return Element{};
}

Element FiniteRing::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FiniteRing::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (!mul_table_.empty())
    return Element{mul_table_[std::size_t{a.index} * size_ + b.index]};
  return mul_uncached(a, b);
}

Element FiniteRing::mul_uncached(Element a, Element b) const {
  switch (kind_) {
  case RingKind::zmod:
    return Element{static_cast<std::uint32_t>(
        (std::uint64_t{a.index} * b.index) % modulus_)};
  case RingKind::product: {
    auto x = components(a);
    const auto y = components(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = factors_[i]->mul(x[i], y[i]);
    return from_components(x);
  }
  case RingKind::structure: {
    const auto &orders = structure_.additive_orders;
    const std::size_t d = orders.size();
    const auto x = coords(a);
    const auto y = coords(b);
    std::vector<std::uint64_t> acc(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0)
        continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] == 0)
          continue;
        const std::uint64_t coeff = std::uint64_t{x[i]} * y[j];
        const auto &p = basis_products_[i * d + j];
        for (std::size_t k = 0; k < d; ++k)
          acc[k] = (acc[k] + coeff * p[k]) % orders[k];
      }
    }
    Coords out(d);
    for (std::size_t k = 0; k < d; ++k)
      out[k] = static_cast<std::uint32_t>(acc[k]);
    return from_coords(out);
  }
  }
  return Element{};
}

Element FiniteRing::pow(Element a, std::uint64_t k) const {
  Element result = unity_;
  Element base = check(a);
  while (k > 0) {
    if (k & 1U)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Element FiniteRing::scale(Element a, std::uint64_t k) const {
  Element result = zero();
  Element base = check(a);
  while (k > 0) {
    if (k & 1U)
      result = add(result, base);
    base = add(base, base);
    k >>= 1U;
  }
  return result;
}

std::string FiniteRing::format(Element a) const {
  check(a);
  switch (kind_) {
  case RingKind::zmod:
    return std::to_string(a.index);
  case RingKind::product: {
    const auto parts = components(a);
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i != 0)
        s += ',';
      s += factors_[i]->format(parts[i]);
    }
    return s + ")";
  }
  case RingKind::structure:
    return join_coords(coords(a));
  }
  return {};
}

void FiniteRing::build_tables() {
  if (size_ > kMulTableCap)
    return;
  std::vector<std::uint16_t> table(size_ * size_);
  for (std::uint32_t a = 0; a < size_; ++a)
    for (std::uint32_t b = a; b < size_; ++b) {
      const auto p = static_cast<std::uint16_t>(
          mul_uncached(Element{a}, Element{b}).index);
      table[std::size_t{a} * size_ + b] = p;
      table[std::size_t{b} * size_ + a] = p;
    }
  // A non-commutative table cannot be symmetrised silently.
  if (kind_ == RingKind::structure) {
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < a; ++b)
        if (mul_uncached(Element{a}, Element{b}).index !=
            table[std::size_t{a} * size_ + b])
          return;
  }
  mul_table_ = std::move(table);
}

void FiniteRing::validate() const {
  const auto n = static_cast<std::uint32_t>(size_);
  auto fail = [this](const std::string &axiom,
                     std::initializer_list<std::uint32_t> tuple) {
    std::string s = axiom + " fails for (";
    bool first = true;
    for (auto t : tuple) {
      if (!first)
        s += ", ";
      s += format(Element{t});
      first = false;
    }
    throw NotARingError(s + ")" + (label_.empty() ? "" : " in " + label_));
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    const Element ea{a};
    if (mul(unity_, ea) != ea)
      fail("unity", {a});
    if (mul(zero(), ea) != zero())
      fail("zero annihilation", {a});
    for (std::uint32_t b = 0; b < n; ++b) {
      const Element eb{b};
      const Element ab = mul(ea, eb);
      if (ab != mul(eb, ea))
        fail("commutativity", {a, b});
      for (std::uint32_t c = 0; c < n; ++c) {
        const Element ec{c};
        if (mul(ab, ec) != mul(ea, mul(eb, ec)))
          fail("associativity", {a, b, c});
        if (mul(ea, add(eb, ec)) != add(ab, mul(ea, ec)))
          fail("distributivity", {a, b, c});
      }
    }
  }
}

RingPtr make_zmod(std::uint32_t n, std::size_t size_cap) {
  if (n == 0)
    throw InvalidModulusError("modulus must be at least 1");
  if (n > size_cap)
    throw CapacityError("Z" + std::to_string(n) + " exceeds the size cap of " +
                        std::to_string(size_cap));
  auto r = std::make_shared<FiniteRing>(FiniteRing::Passkey{}, RingKind::zmod,
                                        n, "Z" + std::to_string(n));
  r->modulus_ = n;
  r->unity_ = Element{n == 1 ? 0U : 1U};
  r->build_tables();
  return r;
}

RingPtr make_product(std::vector<RingPtr> factors, std::size_t size_cap) {
  if (factors.empty())
    throw PreconditionError("a direct product needs at least one factor");
  std::size_t size = 1;
  std::string label;
  std::vector<std::size_t> strides;
  for (const auto &f : factors) {
    if (!f)
      throw PreconditionError("null factor in direct product");
    strides.push_back(size);
    if (!checked_mul(size, f->size(), size_cap, size))
      throw CapacityError("direct product exceeds the size cap of " +
                          std::to_string(size_cap));
    if (!label.empty())
      label += " x ";
    label += f->label();
  }
  auto r = std::make_shared<FiniteRing>(FiniteRing::Passkey{},
                                        RingKind::product, size, label);
  r->factors_ = std::move(factors);
  r->strides_ = std::move(strides);
  std::vector<Element> ones;
  for (const auto &f : r->factors_)
    ones.push_back(f->unity());
  r->unity_ = r->from_components(ones);
  r->build_tables();
  return r;
}

RingPtr make_structure_ring(StructureDescriptor descriptor, std::string label,
                            std::size_t size_cap) {
  const auto &orders = descriptor.additive_orders;
  const std::size_t d = orders.size();
  if (d == 0)
    throw DescriptorError("structure ring needs at least one basis element");
  std::size_t size = 1;
  for (auto o : orders) {
    if (o < 2)
      throw DescriptorError("additive orders must be at least 2");
    if (!checked_mul(size, o, size_cap, size))
      throw CapacityError("structure ring exceeds the size cap of " +
                          std::to_string(size_cap));
  }
  auto check_tuple = [&](const Coords &c, const std::string &what) {
    if (c.size() != d)
      throw DescriptorError(what + " has arity " + std::to_string(c.size()) +
                            ", expected " + std::to_string(d));
    for (std::size_t k = 0; k < d; ++k)
      if (c[k] >= orders[k])
        throw DescriptorError(what + " coordinate " + std::to_string(k) +
                              " is not reduced mod " +
                              std::to_string(orders[k]));
  };
  check_tuple(descriptor.unity, "unity");

  std::vector<Coords> resolved(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto it = descriptor.products.find({i, j});
      if (it == descriptor.products.end())
        it = descriptor.products.find({j, i});
      if (it == descriptor.products.end())
        throw DescriptorError("missing structure constant for basis pair (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      const std::string what =
          "product e" + std::to_string(i) + "*e" + std::to_string(j);
      check_tuple(it->second, what);
      // Bilinearity is well defined only if the product is killed by the
      // additive orders of both basis elements.
      for (std::size_t k = 0; k < d; ++k) {
        const std::uint64_t v = it->second[k];
        if ((v * orders[i]) % orders[k] != 0 ||
            (v * orders[j]) % orders[k] != 0)
          throw NotARingError(what + " is not annihilated by the additive "
                                     "orders of its basis elements");
      }
      resolved[i * d + j] = it->second;
    }

  if (label.empty()) {
    label = "structure";
    for (auto o : orders)
      label += "/" + std::to_string(o);
  }
  auto r = std::make_shared<FiniteRing>(
      FiniteRing::Passkey{}, RingKind::structure, size, std::move(label));
  r->structure_ = std::move(descriptor);
  r->basis_products_ = std::move(resolved);
  r->unity_ = r->from_coords(r->structure_.unity);
  r->build_tables();
  if (size <= kValidationCap)
    r->validate();
  return r;
}

RingPtr make_an_ring(ZSquared z_squared, std::string label) {
  // Basis 1, x, y, z.
  StructureDescriptor d;
  d.additive_orders = {4, 2, 2, 2};
  d.unity = {1, 0, 0, 0};
  d.basis_names = {"1", "x", "y", "z"};
  const Coords zero{0, 0, 0, 0};
  const Coords two{2, 0, 0, 0};
  d.products[{0, 0}] = {1, 0, 0, 0};
  d.products[{0, 1}] = {0, 1, 0, 0};
  d.products[{0, 2}] = {0, 0, 1, 0};
  d.products[{0, 3}] = {0, 0, 0, 1};
  d.products[{1, 1}] = two;
  d.products[{2, 2}] = two;
  d.products[{3, 3}] = z_squared == ZSquared::two ? two : zero;
  d.products[{1, 2}] = zero;
  d.products[{1, 3}] = zero;
  d.products[{2, 3}] = two;
  if (label.empty())
    label = z_squared == ZSquared::zero ? "AN0" : "AN2";
  return make_structure_ring(std::move(d), std::move(label));
}

bool is_unit(const FiniteRing &r, Element a) {
  const auto one = r.unity();
  for (std::uint32_t b = 0; b < r.size(); ++b)
    if (r.mul(a, Element{b}) == one)
      return !(r.size() == 1); // the zero ring has no units
  return false;
}

bool is_zero_divisor(const FiniteRing &r, Element a) {
  if (r.is_zero(a))
    return false;
  for (std::uint32_t b = 1; b < r.size(); ++b)
    if (r.mul(a, Element{b}).index == 0)
      return true;
  return false;
}

bool is_nilpotent(const FiniteRing &r, Element a) {
  // Powers are eventually periodic; stop at zero or the first repeat.
  std::vector<bool> seen(r.size(), false);
  Element p = a;
  while (!seen[p.index]) {
    if (p.index == 0)
      return true;
    seen[p.index] = true;
    p = r.mul(p, a);
  }
  return false;
}

std::size_t unit_count(const FiniteRing &r) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < r.size(); ++a)
    n += is_unit(r, Element{a}) ? 1 : 0;
  return n;
}

std::size_t zero_divisor_count(const FiniteRing &r) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < r.size(); ++a)
    n += is_zero_divisor(r, Element{a}) ? 1 : 0;
  return n;
}

} // namespace beckring
