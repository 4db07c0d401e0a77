#include <random>

#include <gtest/gtest.h>

#include "pwmra/exactnum.hpp"

using namespace pwmra;

namespace {

Scalar quad(long an, long ad, long bn, long bd, long d) { return QuadExt(Rational(an, ad), Rational(bn, bd), d); }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational::parse("-21/14"), Rational(-3, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(SquarefreeReduce, Examples) {
  auto one = squarefree_reduce(1);
  EXPECT_EQ(one.square_root, 1);
  EXPECT_EQ(one.squarefree, 1);
  auto twelve = squarefree_reduce(12);
  EXPECT_EQ(twelve.square_root, 2);
  EXPECT_EQ(twelve.squarefree, 3);
  auto f45 = squarefree_reduce(45);
  EXPECT_EQ(f45.square_root, 3);
  EXPECT_EQ(f45.squarefree, 5);
}

TEST(SquarefreeReduce, AllUpTo10000) {
  for (long m = 1; m <= 10000; ++m) {
    const auto p = squarefree_reduce(m);
    ASSERT_EQ(mpz_class(p.square_root * p.square_root * p.squarefree), m) << m;
    const long f = p.squarefree.get_si();
    for (long q = 2; q * q <= f; ++q) ASSERT_NE(f % (q * q), 0) << m;
  }
}

TEST(Scalar, FieldOps) {
  EXPECT_EQ(field_op(Rational(1, 2), Rational(1, 3), FieldOp::add), Scalar(Rational(5, 6)));
  const Scalar p = field_op(quad(1, 1, 1, 1, 3), quad(1, 1, -1, 1, 3), FieldOp::mul);
  EXPECT_TRUE(p.is_rational());
  EXPECT_EQ(p, Scalar(-2));
  EXPECT_EQ(field_op(quad(0, 1, 2, 1, 3), quad(0, 1, 1, 1, 3), FieldOp::div), Scalar(2));
}

TEST(Scalar, Errors) {
  EXPECT_THROW(quad(1, 1, 1, 1, 2) + quad(1, 1, 1, 1, 3), RadicandMismatch);
  EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST(Scalar, ZeroRadicalCollapsesToRational) {
  const Scalar s = quad(3, 4, 0, 1, 7);
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s, Scalar(Rational(3, 4)));
}

TEST(Scalar, CanonicalTextRoundTrip) {
  const Scalar a = quad(7, 15, -4, 15, 14);
  EXPECT_EQ(a.to_string(), "7/15 + -4/15*sqrt(14)");
  EXPECT_EQ(Scalar::parse(a.to_string()), a);
  EXPECT_EQ(Scalar::parse("5/6"), Scalar(Rational(5, 6)));
}

TEST(Scalar, SignAndDouble) {
  const Scalar a = quad(7, 15, -4, 15, 14);
  EXPECT_LT(a.sign(), 0);
  EXPECT_NEAR(a.to_double(), 7.0 / 15 - 4.0 / 15 * std::sqrt(14.0), 1e-15);
  // 1393 - 985*sqrt(2) = -1/(1393 + 985*sqrt(2))
  const Scalar b = quad(1393, 1, -985, 1, 2);
  EXPECT_LT(b.sign(), 0);
  EXPECT_NEAR(b.to_double(), -1.0 / (1393 + 985 * std::sqrt(2.0)), 1e-15);
}

TEST(Scalar, InverseProperty) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = quad(num(gen), den(gen), num(gen), den(gen), 6);
    if (x.is_zero()) continue;
    ASSERT_EQ(x * x.inverse(), Scalar(1));
  }
}

TEST(SqrtExact, Values) {
  EXPECT_EQ(sqrt_exact(Rational(9, 4)), Scalar(Rational(3, 2)));
  EXPECT_EQ(sqrt_exact(Rational(12)), quad(0, 1, 2, 1, 3));
  const Scalar r = sqrt_exact(Rational(2, 3));
  EXPECT_EQ(r * r, Scalar(Rational(2, 3)));
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(17, 3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
}

TEST(Pochhammer, ZeroIffTerminating) {
  for (int a = -6; a <= 2; ++a) {
    for (unsigned k = 0; k <= 8; ++k) {
      const bool zero = a <= 0 && static_cast<unsigned>(-a) < k;
      EXPECT_EQ(pochhammer(Rational(a), k).is_zero(), zero) << a << " " << k;
    }
  }
}

TEST(Pochhammer, SplitProperty) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 8);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a(num(gen), den(gen));
    for (unsigned j = 0; j <= 20; j += 4) {
      for (unsigned k = 0; k <= 20; k += 5) {
        ASSERT_EQ(pochhammer(a, j + k), pochhammer(a, j) * pochhammer(a + Rational(j), k));
      }
    }
  }
}

TEST(Factorials, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
}
