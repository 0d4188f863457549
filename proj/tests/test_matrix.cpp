#include <gtest/gtest.h>

#include "ginv/matrix.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "support/worked_examples.hpp"

using namespace ginv;

TEST(RMatrix, ZeroSizedIsRejected) {
  EXPECT_THROW(RMatrix(0, 3), DimensionMismatch);
  EXPECT_THROW(RMatrix(2, 0), DimensionMismatch);
  EXPECT_THROW(RMatrix(2, 2, std::vector<Rational>(3)), DimensionMismatch);
}

TEST(RMatrix, Add) {
  const RMatrix a{{1, 2}};
  EXPECT_EQ(a + (RMatrix{{Rational(1, 2), Rational(1, 3)}}), (RMatrix{{Rational(3, 2), Rational(7, 3)}}));
  EXPECT_EQ(a + RMatrix::zero(1, 2), a);
  EXPECT_THROW(RMatrix{{1}} + RMatrix({{2, 3}}), DimensionMismatch);
}

TEST(RMatrix, Multiply) {
  const RMatrix a = worked::a3();
  EXPECT_EQ(RMatrix::identity(3) * a, a);
  EXPECT_EQ((RMatrix{{1, 2}, {3, 4}} * RMatrix{{0}, {1}}), (RMatrix{{2}, {4}}));
  EXPECT_THROW(a * RMatrix::identity(2), DimensionMismatch);
}

TEST(RMatrix, PublishedQTimesP) {
  const RMatrix qp{{Rational(-5, 3), Rational(2, 3), -3}, {Rational(4, 3), Rational(-1, 3), 2}, {1, -2, 6}};
  EXPECT_EQ(worked::a3_q() * worked::a3_p(), qp);
}

TEST(RMatrix, Transpose) {
  EXPECT_EQ(transpose(RMatrix{{1, 2}, {3, 4}}), (RMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(transpose(worked::a5()), worked::a5());
  const RMatrix a{{1, 2, 3}, {Rational(1, 2), 0, -1}};
  EXPECT_EQ(transpose(transpose(a)), a);
}

TEST(RMatrix, Inverse) {
  EXPECT_EQ(inverse(RMatrix{{6}}), RMatrix{{Rational(1, 6)}});
  EXPECT_EQ(inverse(RMatrix::identity(4)), RMatrix::identity(4));
  EXPECT_THROW(inverse(RMatrix({{1, 2}, {2, 4}})), SingularMatrix);
  EXPECT_THROW(inverse(RMatrix(2, 3)), DimensionMismatch);
  // Needs a row swap: leading zero pivot.
  const RMatrix a{{0, 1}, {1, 0}};
  EXPECT_EQ(inverse(a), a);
}

TEST(RMatrix, Rank) {
  EXPECT_EQ(rank(worked::a3()), 2u);
  EXPECT_EQ(rank(RMatrix::zero(3, 3)), 0u);
  EXPECT_EQ(rank(RMatrix::identity(5)), 5u);
  EXPECT_EQ(rank(worked::a5()), 2u);
}

TEST(RMatrix, Power) {
  const RMatrix n{{0, 1}, {0, 0}};
  EXPECT_EQ(power(n, 0), RMatrix::identity(2));
  EXPECT_EQ(power(n, 1), n);
  EXPECT_TRUE(power(n, 2).is_zero());
  EXPECT_EQ(power(worked::a3(), 3), worked::a3() * worked::a3() * worked::a3());
}

TEST(Blocks, ComposeMiddleFactorOfWorkedExample) {
  const Block x0 = RMatrix::identity(2);
  const Block x1 = RMatrix{{Rational(1, 2)}, {Rational(-1, 3)}};
  const Block x2 = RMatrix{{Rational(-1, 6), Rational(1, 3)}};
  const Block x3 = RMatrix{{Rational(-7, 36)}};
  const RMatrix middle = block_compose(x0, x1, x2, x3);
  const RMatrix expected{{1, 0, Rational(1, 2)}, {0, 1, Rational(-1, 3)},
                         {Rational(-1, 6), Rational(1, 3), Rational(-7, 36)}};
  EXPECT_EQ(middle, expected);
  EXPECT_EQ(worked::a3_p() * middle * worked::a3_q(), worked::a3_pinv());
}

TEST(Blocks, ComposeWithAbsentBlocks) {
  EXPECT_EQ(block_compose(RMatrix::identity(3), absent, absent, absent), RMatrix::identity(3));
  // Full row rank shape [I; X2].
  const RMatrix tall = block_compose(RMatrix::identity(2), absent, RMatrix{{5, 6}}, absent);
  EXPECT_EQ(tall, (RMatrix{{1, 0}, {0, 1}, {5, 6}}));
  // Only X3 (r = 0).
  EXPECT_EQ(block_compose(absent, absent, absent, RMatrix::zero(2, 3)), RMatrix::zero(2, 3));
}

TEST(Blocks, ComposeRejectsMismatches) {
  EXPECT_THROW(block_compose(RMatrix::identity(2), RMatrix::zero(3, 1), RMatrix::zero(1, 2), RMatrix::zero(1, 1)),
               DimensionMismatch);
  // X1 absent although both its extents are nonzero.
  EXPECT_THROW(block_compose(RMatrix::identity(2), absent, RMatrix::zero(1, 2), RMatrix::zero(1, 1)),
               DimensionMismatch);
  EXPECT_THROW(block_compose(absent, absent, absent, absent), DimensionMismatch);
}

TEST(Blocks, ExtractStarBlocksOfWorkedExample) {
  const RMatrix qq = worked::a3_q() * transpose(worked::a3_q());
  const auto b = block_extract(qq, 2);
  EXPECT_EQ(*b.x1, (RMatrix{{-3}, {2}}));
  EXPECT_EQ(*b.x3, RMatrix{{6}});
  EXPECT_EQ(*b.x2, transpose(*b.x1));
}

TEST(Blocks, ExtractV4OfFiveByFiveExample) {
  const auto b = block_extract(worked::a5_q() * worked::a5_p(), 2);
  EXPECT_EQ(*b.x3, (RMatrix{{6, -3, -3}, {-3, 3, 2}, {-3, 2, 3}}));
}

TEST(Blocks, ExtractEdgeSplits) {
  const RMatrix a{{1, 2}, {3, 4}};
  const auto full = block_extract(a, 2);
  EXPECT_EQ(full.x0, a);
  EXPECT_FALSE(full.x1 || full.x2 || full.x3);
  const auto none = block_extract(a, 0);
  EXPECT_EQ(none.x3, a);
  EXPECT_FALSE(none.x0 || none.x1 || none.x2);
  EXPECT_THROW(block_extract(RMatrix(2, 3), 3), IndexOutOfRange);
}

// --- Properties -------------------------------------------------------------

TEST(MatrixProperty, ExactAssociativityAndInverse) {
  corpus::Generator gen(101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.uniform(1, 5), k = gen.uniform(1, 5), l = gen.uniform(1, 5), n = gen.uniform(1, 5);
    const RMatrix a = gen.dense(m, k), b = gen.dense(k, l), c = gen.dense(l, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(oracle::grid(a * b), oracle::mul(oracle::grid(a), oracle::grid(b)));

    const RMatrix s = gen.dense(m, m);
    if (oracle::rank(oracle::grid(s)) == m) {
      EXPECT_EQ(inverse(s) * s, RMatrix::identity(m));
      EXPECT_EQ(s * inverse(s), RMatrix::identity(m));
    } else {
      EXPECT_THROW(inverse(s), SingularMatrix);
    }
  }
}

TEST(MatrixProperty, RankMatchesOracleAndTranspose) {
  corpus::Generator gen(102);
  for (int trial = 0; trial < 300; ++trial) {
    const RMatrix a = gen.any();
    EXPECT_EQ(rank(a), oracle::rank(oracle::grid(a)));
    EXPECT_EQ(rank(transpose(a)), rank(a));
  }
}

TEST(MatrixProperty, ExtractThenComposeIsIdentity) {
  corpus::Generator gen(103);
  for (int trial = 0; trial < 300; ++trial) {
    const RMatrix a = gen.any();
    const std::size_t split = gen.uniform(0, std::min(a.rows(), a.cols()));
    EXPECT_EQ(block_compose(block_extract(a, split)), a);
    const std::size_t rs = gen.uniform(0, a.rows()), cs = gen.uniform(0, a.cols());
    EXPECT_EQ(block_compose(block_extract(a, rs, cs)), a);
  }
}
