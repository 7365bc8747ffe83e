#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qchar/schur.hpp"

namespace qchar {
namespace {

const QParam kHalf(Rational(1, 2));
const QParam kTwoThirds(Rational(2, 3));

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(parse_rational("21/25"), R(21, 25));
  EXPECT_EQ(parse_rational("-4/6"), R(-2, 3));
  EXPECT_EQ(parse_rational("+7"), R(7));
  EXPECT_EQ(to_string(R(10, 4)), "5/2");
  EXPECT_EQ(to_string(R(-3)), "-3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(RationalTest, QParamRange) {
  EXPECT_THROW(QParam(R(1)), std::domain_error);
  EXPECT_THROW(QParam(R(0)), std::domain_error);
  EXPECT_THROW(QParam(R(3, 2)), std::domain_error);
  EXPECT_EQ(kHalf.pow(-3), R(8));
  EXPECT_EQ(ipow(R(-2, 3), -3), R(-27, 8));
}

TEST(QBracketTest, Examples) {
  EXPECT_EQ(qbracket(1, kHalf), R(1));
  EXPECT_EQ(qbracket(1, kTwoThirds), R(1));
  EXPECT_EQ(qbracket(2, kHalf), R(5, 2));
  EXPECT_EQ(qbracket(3, kHalf), R(21, 4));
  EXPECT_EQ(qbracket(0, kHalf), R(0));
  for (long n = 1; n < 6; ++n) {
    EXPECT_EQ(qbracket(-n, kTwoThirds), -qbracket(n, kTwoThirds));
  }
}

TEST(SchurEvalTest, Examples) {
  EXPECT_EQ(schur_eval(Signature{}, {}), R(1));
  const std::vector<Rational> p35{R(3), R(5)};
  EXPECT_EQ(schur_eval(Signature{1, 0}, p35), R(8));
  const std::vector<Rational> p{R(2), R(1, 2)};
  EXPECT_EQ(schur_eval(Signature{2, 0}, p), R(21, 4));
  EXPECT_EQ(schur_eval_gt_oracle(Signature{2, 0}, p), R(21, 4));
}

TEST(SchurEvalTest, LevelMismatchAndZeroPoint) {
  const std::vector<Rational> two{R(1), R(2)};
  EXPECT_THROW(schur_eval(Signature{1}, two), std::invalid_argument);
  const std::vector<Rational> zero{R(0), R(2)};
  EXPECT_THROW(schur_eval(Signature{1, 0}, zero), std::domain_error);
  EXPECT_THROW(schur_eval_gt_oracle(Signature{1, 0}, zero), std::domain_error);
}

TEST(SchurEvalTest, OracleExamples) {
  const Rational a = R(7, 3);
  const Rational b = R(-2, 5);
  const std::vector<Rational> ab{a, b};
  EXPECT_EQ(schur_eval_gt_oracle(Signature{1, 1}, ab), a * b);
  const std::vector<Rational> p23{R(2), R(3)};
  EXPECT_EQ(schur_eval_gt_oracle(Signature{0, -1}, p23), R(5, 6));
  EXPECT_EQ(schur_eval(Signature{0, -1}, p23), R(5, 6));
  const std::vector<Rational> qq{R(1, 2), R(2)};
  EXPECT_EQ(schur_eval_gt_oracle(Signature{1, 0}, qq), R(5, 2));
}

TEST(SchurEvalTest, RepeatedPointsUseFallback) {
  const std::vector<Rational> same{R(3), R(3), R(1, 2)};
  const Signature sig{2, 1, -1};
  EXPECT_EQ(schur_eval(sig, same), schur_eval_gt_oracle(sig, same));
}

TEST(SchurEvalTest, BialternantAgreesWithGTSum) {
  std::mt19937_64 rng(20241016);
  for (int level = 1; level <= 3; ++level) {
    for (const Signature& sig : testing::all_signatures(level, -2, 3)) {
      for (int t = 0; t < 5; ++t) {
        const auto x = random_rational_points(static_cast<std::size_t>(level), rng);
        ASSERT_EQ(schur_eval(sig, x), schur_eval_gt_oracle(sig, x)) << sig.to_string();
      }
    }
  }
}

TEST(SchurEvalTest, BranchingIdentity) {
  std::mt19937_64 rng(7);
  for (int level = 2; level <= 3; ++level) {
    for (const Signature& nu : testing::all_signatures(level, -2, 2)) {
      auto x = random_rational_points(static_cast<std::size_t>(level), rng);
      const Rational y = x.back();
      const Rational lhs = schur_eval(nu, x);
      x.pop_back();
      Rational rhs(0);
      for (const Signature& lam : enumerate_down(nu)) {
        rhs += ipow(y, nu.size() - lam.size()) * schur_eval(lam, x);
      }
      EXPECT_EQ(lhs, rhs) << nu.to_string();
    }
  }
}

TEST(BareissTest, KnownDeterminants) {
  EXPECT_EQ(bareiss_determinant({Integer(2), Integer(3), Integer(1), Integer(4)}, 2), Integer(5));
  // Needs a row swap at the first pivot.
  EXPECT_EQ(bareiss_determinant({Integer(0), Integer(1), Integer(1), Integer(0)}, 2), Integer(-1));
  EXPECT_EQ(bareiss_determinant({Integer(1), Integer(2), Integer(2), Integer(4)}, 2), Integer(0));
  EXPECT_EQ(bareiss_determinant({}, 0), Integer(1));
}

TEST(PrincipalSpecializationTest, Examples) {
  EXPECT_EQ(principal_specialization(Signature{0, 0, 0}, kHalf), R(1));
  EXPECT_EQ(principal_specialization(Signature{1, 0}, kHalf), R(5));
  EXPECT_EQ(principal_specialization(Signature{1, 1}, kHalf), R(4));
}

TEST(QDimTest, Examples) {
  EXPECT_EQ(qdim(Signature{}, kHalf), R(1));
  EXPECT_EQ(qdim(Signature{3, 3, 3}, kHalf), R(1));
  EXPECT_EQ(qdim(Signature{1, 0}, kHalf), R(5, 2));
  EXPECT_EQ(qdim(Signature{1, 1, 0}, kHalf), R(21, 4));
  EXPECT_EQ(qdim(Signature{2, 0}, kHalf), R(21, 4));
}

TEST(QDimTest, ConsistentNormalizations) {
  for (const QParam& q : {kHalf, kTwoThirds}) {
    for (int level = 1; level <= 3; ++level) {
      for (const Signature& sig : testing::all_signatures(level, -2, 2)) {
        std::vector<Rational> torus;
        std::vector<Rational> reversed;
        for (int i = 0; i < level; ++i) {
          torus.push_back(q.pow(level - 1 - 2 * i));
          reversed.push_back(q.pow(2 * i + 1 - level));
        }
        const Rational d = qdim(sig, q);
        EXPECT_GT(d, 0);
        EXPECT_EQ(d, schur_eval_gt_oracle(sig, torus));
        EXPECT_EQ(d, schur_eval(sig, reversed));  // q <-> 1/q
        EXPECT_EQ(d, q.pow((level - 1) * sig.size()) * principal_specialization(sig, q));
        EXPECT_EQ(d, qdim(shift(sig, 3), q));
      }
    }
  }
}

TEST(LRTest, Examples) {
  const LRExpansion pieri = lr_coefficients(Signature{1, 0}, Signature{1, 0});
  EXPECT_EQ(pieri, (LRExpansion{{Signature{2, 0}, 1}, {Signature{1, 1}, 1}}));
  EXPECT_EQ(lr_coefficients(Signature{3}, Signature{-5}), (LRExpansion{{Signature{-2}, 1}}));
  EXPECT_EQ(lr_coefficients(Signature{2, 1, 0}, Signature{1, 0, 0}),
            (LRExpansion{{Signature{3, 1, 0}, 1}, {Signature{2, 2, 0}, 1}, {Signature{2, 1, 1}, 1}}));
  EXPECT_EQ(lr_coefficients(Signature{}, Signature{}), (LRExpansion{{Signature{}, 1}}));
}

TEST(LRTest, MultiplicityTwo) {
  // s_{21} s_{21} contains s_{321} twice in three variables.
  const LRExpansion lr = lr_coefficients(Signature{2, 1, 0}, Signature{2, 1, 0});
  EXPECT_EQ(lr.at(Signature{3, 2, 1}), 2);
  EXPECT_EQ(lr, testing::brute_force_lr(Signature{2, 1, 0}, Signature{2, 1, 0}));
}

TEST(LRTest, LevelMismatchThrows) {
  EXPECT_THROW(lr_coefficients(Signature{1, 0}, Signature{1}), std::invalid_argument);
}

TEST(LRTest, ShiftEquivariant) {
  for (const Signature& a : testing::all_signatures(2, -1, 2)) {
    for (const Signature& b : testing::all_signatures(2, -1, 1)) {
      const LRExpansion base = lr_coefficients(a, b);
      LRExpansion shifted;
      for (const auto& [nu, c] : base) {
        shifted.emplace(shift(nu, 2), c);
      }
      EXPECT_EQ(lr_coefficients(shift(a, 2), b), shifted);
    }
  }
}

TEST(LRTest, ProductOfSchurValuesAndDimensions) {
  std::mt19937_64 rng(99);
  for (int level = 1; level <= 3; ++level) {
    const auto sigs = testing::all_signatures(level, -1, 2);
    for (std::size_t i = 0; i < sigs.size(); i += 2) {
      for (std::size_t j = 0; j < sigs.size(); j += 3) {
        const LRExpansion lr = lr_coefficients(sigs[i], sigs[j]);
        const auto x = random_rational_points(static_cast<std::size_t>(level), rng);
        Rational value(0);
        Rational dims(0);
        for (const auto& [nu, c] : lr) {
          EXPECT_EQ(nu.size(), sigs[i].size() + sigs[j].size());
          EXPECT_GE(c, 1);
          value += Rational(c) * schur_eval(nu, x);
          dims += Rational(c) * qdim(nu, kTwoThirds);
        }
        EXPECT_EQ(value, schur_eval(sigs[i], x) * schur_eval(sigs[j], x));
        EXPECT_EQ(dims, qdim(sigs[i], kTwoThirds) * qdim(sigs[j], kTwoThirds));
      }
    }
  }
}

TEST(LRTest, FourVariablesDropLongPartitions) {
  // In N=2, s_{(1,0)} s_{(1,1)} = s_{(2,1)} only; (1,1,1) needs three variables.
  EXPECT_EQ(lr_coefficients(Signature{1, 0}, Signature{1, 1}), (LRExpansion{{Signature{2, 1}, 1}}));
  EXPECT_EQ(lr_coefficients(Signature{2, 1, 0, 0}, Signature{1, 1, 0, 0}),
            testing::brute_force_lr(Signature{2, 1, 0, 0}, Signature{1, 1, 0, 0}));
}

}  // namespace
}  // namespace qchar
