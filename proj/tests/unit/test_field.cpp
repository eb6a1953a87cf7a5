#include <gtest/gtest.h>

#include "lcw/error.hpp"
#include "lcw/field.hpp"

using namespace lcw;

TEST(Field, PrimeField) {
  auto f = Field::make(2);
  EXPECT_EQ(f->p(), 2u);
  EXPECT_EQ(f->e(), 1u);
  EXPECT_EQ(f->add(1, 1), 0u);
}

TEST(Field, Gf4Modulus) {
  auto f = Field::make(4);
  EXPECT_EQ(f->p(), 2u);
  EXPECT_EQ(f->e(), 2u);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f->mul(2, 2), 3u);
}

TEST(Field, Gf5) {
  auto f = Field::make(5);
  EXPECT_EQ(f->mul(2, 3), 1u);
  EXPECT_EQ(f->inv(2), 3u);
}

TEST(Field, Errors) {
  for (std::uint64_t q : {0ull, 1ull, 6ull, 12ull, 100ull}) {
    try {
      Field::make(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::NotPrimePower || e.code() == ErrorCode::BadParams) << q;
    }
  }
  try {
    Field::make(1u << 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  try {
    Field::make(32, 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  auto f = Field::make(7);
  EXPECT_THROW(f->inv(0), Error);
  EXPECT_THROW(f->div(3, 0), Error);
}

TEST(Field, Gf8And9Moduli) {
  // Coefficients compared from the constant term up: x^3 + x^2 + 1 beats x^3 + x + 1.
  EXPECT_EQ(Field::make(8)->modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(Field::make(9)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

// mul_reference is table-free polynomial multiplication.
TEST(Field, TablesMatchReference) {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64}) {
    auto f = Field::make(q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) ASSERT_EQ(f->mul(a, b), f->mul_reference(a, b)) << q;
    }
  }
}

TEST(Field, InverseAndFrobeniusUpTo64) {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    std::uint64_t p;
    std::uint32_t e;
    if (!prime_power(q, p, e)) continue;
    auto f = Field::make(q);
    for (Element a = 0; a < q; ++a) {
      if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u) << q << " " << a;
      ASSERT_EQ(f->pow(a, static_cast<std::int64_t>(q)), a) << q << " " << a;
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
    }
  }
}

TEST(Field, RingAxiomsUpTo16) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto f = Field::make(q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), f->add(b, a));
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        for (Element c = 0; c < q; ++c) {
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, ModulusIsIrreducible) {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 128, 243, 256}) {
    auto f = Field::make(q);
    EXPECT_EQ(f->modulus().size(), f->e() + 1u);
    EXPECT_EQ(f->modulus().back(), 1u);
    EXPECT_TRUE(is_irreducible(f->modulus(), f->p())) << q;
  }
}

TEST(Field, ApplyAndPow) {
  auto f = Field::make(7);
  EXPECT_EQ(f->apply(FieldOp::Add, 5, 4), 2u);
  EXPECT_EQ(f->apply(FieldOp::Sub, 2, 5), 4u);
  EXPECT_EQ(f->apply(FieldOp::Div, 1, 3), 5u);
  EXPECT_EQ(f->apply(FieldOp::Pow, 3, 6), 1u);
  EXPECT_EQ(f->pow(3, -1), f->inv(3));
  EXPECT_EQ(f->pow(0, 0), 1u);
}

TEST(Field, LargeFieldWithoutFullTables) {
  auto f = Field::make(65536);
  EXPECT_EQ(f->p(), 2u);
  for (Element a : {1u, 2u, 12345u, 65535u}) {
    EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    EXPECT_EQ(f->mul(a, 777), f->mul_reference(a, 777));
  }
}
