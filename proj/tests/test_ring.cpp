#include <gtest/gtest.h>

#include "beckring/errors.hpp"
#include "beckring/ideal.hpp"
#include "beckring/ring.hpp"

using namespace beckring;

namespace {

Element el(std::uint32_t i) { return Element{i}; }

StructureDescriptor two_dim(std::uint32_t a, std::uint32_t b, Coords tt) {
  StructureDescriptor d;
  d.additive_orders = {a, b};
  d.unity = {1, 0};
  d.products[{0, 0}] = {1, 0};
  d.products[{0, 1}] = {0, 1};
  d.products[{1, 1}] = std::move(tt);
  d.basis_names = {"1", "t"};
  return d;
}

} // namespace

TEST(Zmod, ArithmeticModN) {
  const auto z12 = make_zmod(12);
  EXPECT_EQ(z12->size(), 12u);
  EXPECT_EQ(z12->mul(el(4), el(3)), el(0));
  EXPECT_EQ(z12->add(el(7), el(8)), el(3));
  EXPECT_EQ(z12->neg(el(5)), el(7));
  EXPECT_EQ(z12->sub(el(2), el(5)), el(9));
  EXPECT_EQ(z12->pow(el(5), 2), el(1));
  EXPECT_EQ(z12->scale(el(5), 3), el(3));
  EXPECT_EQ(z12->unity(), el(1));
}

TEST(Zmod, ZeroRingHasUnityZero) {
  const auto z1 = make_zmod(1);
  EXPECT_EQ(z1->size(), 1u);
  EXPECT_EQ(z1->unity(), z1->zero());
  EXPECT_NO_THROW(z1->validate());
}

TEST(Zmod, FourHasOneNonzeroNilpotent) {
  const auto z4 = make_zmod(4);
  EXPECT_EQ(z4->mul(el(2), el(2)), el(0));
  std::vector<std::uint32_t> nil;
  for (std::uint32_t x = 1; x < 4; ++x)
    if (is_nilpotent(*z4, el(x)))
      nil.push_back(x);
  EXPECT_EQ(nil, std::vector<std::uint32_t>{2});
}

TEST(Zmod, Errors) {
  EXPECT_THROW(make_zmod(0), InvalidModulusError);
  EXPECT_THROW(make_zmod(5000), CapacityError);
  EXPECT_THROW(make_zmod(12)->mul(el(12), el(1)), ElementError);
  EXPECT_THROW(make_zmod(12)->element(99), ElementError);
}

TEST(Product, ComponentwiseMultiplication) {
  const auto r = make_product({make_zmod(2), make_zmod(2)});
  EXPECT_EQ(r->size(), 4u);
  const Element a = r->from_components(std::vector{el(1), el(0)});
  const Element b = r->from_components(std::vector{el(0), el(1)});
  EXPECT_EQ(r->mul(a, b), r->zero());
  EXPECT_EQ(r->format(a), "(1,0)");
  EXPECT_EQ(r->label(), "Z2 x Z2");
}

TEST(Product, FirstFactorVariesFastest) {
  const auto r = make_product({make_zmod(4), make_zmod(3)});
  const auto parts = r->components(el(5));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], el(1));
  EXPECT_EQ(parts[1], el(1));
  EXPECT_EQ(r->unity(), el(5));
}

TEST(Product, Errors) {
  EXPECT_THROW(make_product({}), PreconditionError);
  EXPECT_THROW(make_product({make_zmod(64), make_zmod(65)}), CapacityError);
  EXPECT_THROW(make_product({make_zmod(4), make_zmod(4)}, 15), CapacityError);
}

TEST(Structure, ValidatesEightElementRing) {
  const auto r = make_structure_ring(two_dim(4, 2, {2, 0}), "Z4[t]/(t^2-2)");
  EXPECT_EQ(r->size(), 8u);
  EXPECT_NO_THROW(r->validate());
  const Element t = r->from_coords(Coords{0, 1});
  EXPECT_EQ(r->coords(r->mul(t, t)), (Coords{2, 0}));
}

TEST(Structure, DualNumbersOverZ2) {
  const auto r = make_structure_ring(two_dim(2, 2, {0, 0}));
  const Element t = r->from_coords(Coords{0, 1});
  EXPECT_TRUE(r->is_square_zero(t));
  const auto profile = nilradical(r);
  EXPECT_EQ(profile.ideal.elements(), (std::vector<Element>{r->zero(), t}));
}

TEST(Structure, GaloisFieldTableIsARing) {
  const auto r = make_structure_ring(two_dim(2, 2, {1, 1}));
  EXPECT_NO_THROW(r->validate());
  EXPECT_EQ(unit_count(*r), 3u);
}

TEST(Structure, NonAssociativeTableIsRejected) {
  // (a a) b = b b = 0 but a (a b) = a a = b.
  StructureDescriptor d;
  d.additive_orders = {2, 2, 2};
  d.unity = {1, 0, 0};
  d.products[{0, 0}] = {1, 0, 0};
  d.products[{0, 1}] = {0, 1, 0};
  d.products[{0, 2}] = {0, 0, 1};
  d.products[{1, 1}] = {0, 0, 1};
  d.products[{1, 2}] = {0, 1, 0};
  d.products[{2, 2}] = {0, 0, 0};
  try {
    make_structure_ring(d, "bad");
    FAIL() << "expected NotARingError";
  } catch (const NotARingError &e) {
    EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
  }
}

TEST(Structure, WrongUnityIsRejected) {
  auto d = two_dim(2, 2, {0, 0});
  d.unity = {0, 1};
  EXPECT_THROW(make_structure_ring(d), NotARingError);
}

TEST(Structure, DescriptorErrors) {
  auto d = two_dim(2, 2, {0, 0});
  d.products.erase({1, 1});
  EXPECT_THROW(make_structure_ring(d), DescriptorError);
  auto e = two_dim(2, 2, {0, 0, 0});
  EXPECT_THROW(make_structure_ring(e), DescriptorError);
  auto f = two_dim(1, 2, {0, 0});
  EXPECT_THROW(make_structure_ring(f), DescriptorError);
}

TEST(Structure, OrderMustAnnihilateProducts) {
  // t has additive order 2 but t*t = 1 of order 4.
  auto d = two_dim(4, 2, {1, 0});
  EXPECT_THROW(make_structure_ring(d), NotARingError);
}

TEST(AnRing, GeneratorRelations) {
  for (const auto v : {ZSquared::zero, ZSquared::two}) {
    const auto r = make_an_ring(v);
    EXPECT_EQ(r->size(), 32u);
    EXPECT_NO_THROW(r->validate());
    const Element x = r->from_coords(Coords{0, 1, 0, 0});
    const Element y = r->from_coords(Coords{0, 0, 1, 0});
    const Element z = r->from_coords(Coords{0, 0, 0, 1});
    const Element two = r->from_coords(Coords{2, 0, 0, 0});
    EXPECT_EQ(r->mul(x, y), r->zero());
    EXPECT_EQ(r->mul(x, z), r->zero());
    EXPECT_EQ(r->mul(x, x), two);
    EXPECT_EQ(r->mul(y, y), two);
    EXPECT_EQ(r->mul(y, z), two);
    EXPECT_EQ(r->mul(z, z), v == ZSquared::zero ? r->zero() : two);
    EXPECT_TRUE(is_local(*r));
    EXPECT_EQ(unit_count(*r), 16u);
  }
  EXPECT_EQ(make_an_ring()->label(), "AN");
  EXPECT_EQ(make_an_ring(ZSquared::two)->label(), "AN2");
}

TEST(Predicates, Z12AndZ8) {
  const auto z12 = make_zmod(12);
  EXPECT_TRUE(is_zero_divisor(*z12, el(6)));
  EXPECT_TRUE(is_unit(*z12, el(5)));
  EXPECT_FALSE(is_zero_divisor(*z12, el(0)));
  EXPECT_FALSE(is_unit(*z12, el(6)));
  EXPECT_EQ(unit_count(*z12), 4u);
  EXPECT_EQ(zero_divisor_count(*z12), 7u);

  const auto z8 = make_zmod(8);
  EXPECT_TRUE(is_nilpotent(*z8, el(2)));
  EXPECT_TRUE(is_nilpotent(*z8, el(6)));
  EXPECT_FALSE(is_nilpotent(*z8, el(3)));
  EXPECT_FALSE(is_unit(*make_zmod(1), el(0)));
}

TEST(Ring, ValidatePassesOnProducts) {
  EXPECT_NO_THROW(
      make_product({make_zmod(4), make_zmod(3), make_zmod(2)})->validate());
}
