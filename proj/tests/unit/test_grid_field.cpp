#include <gtest/gtest.h>

#include "pburgers/errors.hpp"
#include "pburgers/field.hpp"
#include "pburgers/grid.hpp"
#include "pburgers/random.hpp"

using namespace pburgers;

TEST(GridSpec, MakeIsMinimalAndValid) {
  const GridSpec g = GridSpec::make(4, 7);
  EXPECT_EQ(g.Nt, 9);
  EXPECT_EQ(g.Nx, 8);
  EXPECT_NO_THROW(g.validate());
  EXPECT_EQ(g.padded_nt(), 14);
  EXPECT_EQ(g.padded_nx(), 12);
}

TEST(GridSpec, ValidationNamesTheField) {
  GridSpec g = GridSpec::make(4, 7);
  g.Nt = 8;
  try {
    g.validate();
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("grid.Nt"), std::string::npos);
  }
  g = GridSpec::make(4, 7);
  g.Nx = 7;
  EXPECT_THROW(g.validate(), InputError);
  g = GridSpec::make(4, 7);
  g.dealias = 1.2;
  EXPECT_THROW(g.validate(), InputError);
  EXPECT_THROW(GridSpec::make(0, 3).validate(), InputError);
}

TEST(GridSpec, RefinedDoublesEverything) {
  const GridSpec g = GridSpec::make(3, 5).refined();
  EXPECT_EQ(g.K, 6);
  EXPECT_EQ(g.M, 10);
  EXPECT_EQ(g.Nt, 14);
  EXPECT_EQ(g.Nx, 12);
}

TEST(GridSpec, QuadraturePoints) {
  const GridSpec g = GridSpec::make(2, 3);
  EXPECT_DOUBLE_EQ(g.t(0), 0.0);
  EXPECT_DOUBLE_EQ(g.t(1), 0.2);
  EXPECT_DOUBLE_EQ(g.x(0), 0.125);
  EXPECT_DOUBLE_EQ(g.x(3), 0.875);
}

TEST(Field, IndexingAndBasisRanges) {
  const GridSpec g = GridSpec::make(2, 3);
  Field s(g, Basis::kSine);
  Field c(g, Basis::kCosine);
  EXPECT_EQ(s.m_min(), 1);
  EXPECT_EQ(c.m_min(), 0);
  EXPECT_EQ(s.size(), 5u * 3u);
  EXPECT_EQ(c.size(), 5u * 4u);
  s.at(-2, 3) = Complex(1.0, 2.0);
  EXPECT_EQ(s.data().back(), Complex(0.0, 0.0));
  EXPECT_EQ(s.data()[2], Complex(1.0, 2.0));
}

TEST(Field, HermitianDefectAndEnforcement) {
  const GridSpec g = GridSpec::make(2, 3);
  Field u(g, Basis::kSine);
  u.at(1, 2) = Complex(1.0, 1.0);
  EXPECT_GT(u.hermitian_defect(), 0.0);
  u.enforce_hermitian();
  EXPECT_EQ(u.hermitian_defect(), 0.0);
  EXPECT_EQ(u.at(-1, 2), std::conj(u.at(1, 2)));
  u.at(0, 1) = Complex(1.0, 0.5);
  u.enforce_hermitian();
  EXPECT_EQ(u.at(0, 1).imag(), 0.0);
}

TEST(Field, ArithmeticAndCompatibility) {
  const GridSpec g = GridSpec::make(3, 4);
  const Field a = random_field(g, 1, 1.0);
  const Field b = random_field(g, 2, 1.0);
  Field c = a + b;
  c -= b;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(c.data()[i] - a.data()[i]), 0.0, 1e-15);
  const Field d = 2.0 * a - a;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(d.data()[i] - a.data()[i]), 0.0, 1e-15);
  Field e = Field::zeros(g);
  e.axpy(3.0, a);
  EXPECT_EQ(e.data()[5], 3.0 * a.data()[5]);
  Field wrong = Field::zeros(GridSpec::make(2, 4));
  EXPECT_THROW(wrong += a, InputError);
  Field cos = Field::zeros(g, Basis::kCosine);
  EXPECT_THROW(cos += a, InputError);
}

TEST(DualField, PairingIsRealDuality) {
  const GridSpec g = GridSpec::make(2, 3);
  DualField f = DualField::zeros(g);
  Field v = Field::zeros(g);
  f.at(1, 2) = Complex(1.0, 2.0);
  f.at(-1, 2) = Complex(1.0, -2.0);
  v.at(1, 2) = Complex(3.0, 1.0);
  v.at(-1, 2) = Complex(3.0, -1.0);
  // Re[(1+2i)(3-i)] = 5, twice for the conjugate pair.
  EXPECT_DOUBLE_EQ(pairing(f, v), 10.0);
  EXPECT_THROW(pairing(f, Field::zeros(g, Basis::kCosine)), InputError);
}
