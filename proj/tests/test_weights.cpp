#include <howe/weights.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace howe;

TEST(Partition, NormalizesTrailingZeros) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_THROW(Partition({1, 2}), BadWeight);
  EXPECT_THROW(Partition({1, -1}), BadWeight);
}

TEST(WeylDim, Examples) {
  EXPECT_EQ(weyl_dim({1}, 3), 3u);
  EXPECT_EQ(weyl_dim({2, 1}, 3), 8u);
  EXPECT_EQ(weyl_dim({1, 1, 1}, 2), 0u);
}

TEST(WeylDim, MatchesTableauCount) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(weyl_dim(lambda, k), oracle::ssyt_count(lambda.parts(), k)) << lambda.str() << " k=" << k;
}

TEST(WeylDim, DominantFormulaAgreesOnPartitions) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n, 3)) {
      const auto p = lambda.padded(3);
      EXPECT_EQ(weyl_dim_dominant({p[0], p[1], p[2]}), weyl_dim(lambda, 3));
    }
  EXPECT_EQ(weyl_dim_dominant({1, 0, -1}), 8u);
  EXPECT_THROW(weyl_dim_dominant({0, 1}), BadWeight);
}

TEST(SnDim, Examples) {
  EXPECT_EQ(sn_dim({4}), 1u);
  EXPECT_EQ(sn_dim({1, 1, 1}), 1u);
  EXPECT_EQ(sn_dim({2, 1}), 2u);
  EXPECT_THROW(sn_dim(Partition{}), EmptyShape);
}

TEST(SnDim, MatchesStandardTableauxAndSumsToFactorial) {
  for (int n = 1; n <= 6; ++n) {
    BigInt total = 0;
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(sn_dim(lambda), oracle::standard_count(lambda.parts()));
      total += sn_dim(lambda) * sn_dim(lambda);
    }
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n)));
  }
}

TEST(SnCharacter, TrivialSignAndIdentity) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const int parity = (mu.size() - mu.rows()) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(sn_character(Partition({n}), mu), 1);
      EXPECT_EQ(sn_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), mu), parity);
    }
  EXPECT_EQ(sn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(sn_character({2, 1}, {3}), -1);
  EXPECT_THROW(sn_character({2, 1}, {2}), ShapeMismatch);
}

TEST(SnCharacter, Orthogonality) {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      EXPECT_EQ(sn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))),
                static_cast<long long>(sn_dim(lambda)));
      for (const auto& mu : parts) {
        BigInt sum = 0;
        for (const auto& c : parts)
          sum += (factorial(static_cast<unsigned>(n)) / centralizer_order(c)) *
                 static_cast<long>(sn_character(lambda, c) * sn_character(mu, c));
        EXPECT_EQ(sum, lambda == mu ? factorial(static_cast<unsigned>(n)) : BigInt(0));
      }
    }
  }
}

TEST(Cauchy, Examples) {
  auto r = cauchy_check(1, 1, 5);
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_EQ(r.total, 1);
  r = cauchy_check(2, 2, 2);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].product, 9);
  EXPECT_EQ(r.terms[1].product, 1);
  EXPECT_EQ(r.total, 10);
  r = cauchy_check(3, 2, 3);
  EXPECT_EQ(r.terms[0].product, 40);
  EXPECT_EQ(r.terms[1].product, 16);
  EXPECT_EQ(r.total, 56);
  EXPECT_TRUE(r.pass);
}

TEST(Cauchy, GridAgainstMonomialCount) {
  for (int k = 1; k <= 4; ++k)
    for (int M = 1; M <= 4; ++M)
      for (int n = 0; n <= 6; ++n) {
        const auto r = cauchy_check(k, M, n);
        EXPECT_TRUE(r.pass) << k << " " << M << " " << n;
        EXPECT_EQ(r.expected, oracle::monomial_count(k * M, n));
      }
}

TEST(HallInner, Examples) {
  EXPECT_EQ(hall_inner({2, 1}, {2, 1}), 1);
  EXPECT_EQ(hall_inner({2}, {1, 1}), 0);
  EXPECT_EQ(hall_inner({3, 1}, {3, 1}), 1);
}

TEST(HallInner, KroneckerDeltaUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) EXPECT_EQ(hall_inner(a, b), a == b ? 1 : 0) << a.str() << b.str();
}

TEST(Branching, Examples) {
  EXPECT_EQ(branch_restrict({1}, 1), (std::vector<Partition>{{1}, {}}));
  const auto b = branch_restrict({2, 1}, 2);
  EXPECT_EQ(b, (std::vector<Partition>{{2, 1}, {2}, {1, 1}, {1}}));
  std::uint64_t dims = 0;
  for (const auto& mu : b) dims += weyl_dim(mu, 2);
  EXPECT_EQ(dims, 8u);
  EXPECT_EQ(branch_restrict({3, 3}, 1), (std::vector<Partition>{{3}}));
  EXPECT_THROW(branch_restrict({1, 1, 1}, 1), ShapeMismatch);
}

TEST(Branching, DimensionIdentity) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& lambda : partitions_of(n, k + 1)) {
        std::uint64_t dims = 0;
        for (const auto& mu : branch_restrict(lambda, k)) dims += weyl_dim(mu, k);
        EXPECT_EQ(dims, weyl_dim(lambda, k + 1));
      }
}

TEST(SignedWeight, RejectsNonPositiveEntries) {
  EXPECT_THROW(SignedWeight::from_entries({1, 0}, {}), BadWeight);
  EXPECT_EQ(SignedWeight::from_entries({2, 1}, {1}).at_rank(4), (std::vector<long>{2, 1, 0, -1}));
  EXPECT_THROW(SignedWeight({1}, {1}).at_rank(1), ShapeMismatch);
}

TEST(HalfInt, Parsing) {
  const auto w = parse_half_int_weight("7/2,-3/2", Group::CoverUMN);
  EXPECT_EQ(w.twice, (std::vector<std::int64_t>{7, -3}));
  EXPECT_FALSE(w.integral());
  EXPECT_EQ(w.str(), "(7/2,-3/2)");
  EXPECT_THROW(parse_half_int_weight("1/3", Group::Uk), ParseError);
  EXPECT_THROW(parse_half_int_weight("x", Group::Uk), ParseError);
}

TEST(Renormalize, Examples) {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int n1 = 1; n1 <= 4; ++n1) {
      const auto w = renormalize_weight(SignedWeight({m1}, {n1}), 1, 1);
      EXPECT_EQ(w.twice, (std::vector<std::int64_t>{2 * m1 + 1, -(2 * n1 + 1)}));
    }
  EXPECT_EQ(renormalize_weight(SignedWeight({3, 1}, {2}), 2, 1).twice, (std::vector<std::int64_t>{6, 4, -6}));
  // last m entry is m_M + (N+M)/2 - 1/2
  for (int M = 1; M <= 3; ++M)
    for (int N = 1; N <= 3; ++N) {
      std::vector<int> m, n;
      for (int i = M; i >= 1; --i) m.push_back(2 * i);
      for (int j = N; j >= 1; --j) n.push_back(j);
      const auto w = renormalize_weight(SignedWeight(Partition(m), Partition(n)), M, N);
      EXPECT_EQ(w.twice[static_cast<std::size_t>(M - 1)], 2 * m.back() + N + M - 1);
    }
  EXPECT_THROW(renormalize_weight(SignedWeight({2, 2}, {1}), 2, 1), NotRenormalizable);
  EXPECT_THROW(renormalize_weight(SignedWeight({2}, {1}), 2, 1), ShapeMismatch);
}

TEST(Renormalize, WeaklyDecreasingWithinBlocks) {
  for (int M = 1; M <= 3; ++M)
    for (int N = 1; N <= 3; ++N)
      for (int size = M; size <= 8; ++size)
        for (const auto& m : partitions_of(size, M)) {
          if (m.rows() != M || !m.distinct_parts()) continue;
          for (const auto& n : partitions_of(N * (N + 1) / 2, N)) {
            if (n.rows() != N || !n.distinct_parts()) continue;
            const auto w = renormalize_weight(SignedWeight(m, n), M, N);
            for (std::size_t i = 1; i < w.size(); ++i) EXPECT_LE(w.twice[i], w.twice[i - 1]);
          }
        }
}

namespace {

ShiftedWeights shift(ShiftContext c, Convention conv, int k, int M, int N, int degree, Partition label, SignedWeight s) {
  ShiftInput in;
  in.context = c;
  in.convention = conv;
  in.k = k;
  in.M = M;
  in.N = N;
  in.degree = degree;
  in.label = std::move(label);
  in.signed_ = std::move(s);
  return shift_weight(in);
}

}  // namespace

TEST(ShiftWeight, Examples) {
  auto r = shift(ShiftContext::kave, Convention::sq, 3, 1, 1, 0, {}, SignedWeight({1}, {1}));
  EXPECT_EQ(r.other.twice, (std::vector<std::int64_t>{8, -2}));
  r = shift(ShiftContext::dec2, Convention::hf, 4, 1, 0, 2, {}, {});
  EXPECT_EQ(r.other.twice, (std::vector<std::int64_t>{8}));
  EXPECT_EQ(r.u_k.twice, (std::vector<std::int64_t>{5, 1, 1, 1}));
  r = shift(ShiftContext::howehf, Convention::hf, 2, 2, 0, 0, {}, {});
  EXPECT_EQ(r.u_k.twice, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(r.other.twice, (std::vector<std::int64_t>{2, 2}));
  EXPECT_THROW(parse_context("kave3"), UnknownContext);
}

TEST(ShiftWeight, HalfFormIsConstantTwist) {
  for (int k = 1; k <= 4; ++k)
    for (int M = 1; M <= 3; ++M)
      for (int N = 0; N <= 2; ++N)
        for (const auto& lab : oscillator_labels(k, M, N, 3)) {
          for (auto ctx : {ShiftContext::dec2, ShiftContext::howehf, ShiftContext::kave, ShiftContext::kave2}) {
            if ((ctx == ShiftContext::kave || ctx == ShiftContext::kave2) && N == 0) continue;
            if (ctx == ShiftContext::howehf && (N != 0 || lab.m.rows() > std::min(k, M))) continue;
            const int deg = lab.m.size();
            const auto sq = shift(ctx, Convention::sq, k, M, N, deg, lab.m, lab);
            const auto hf = shift(ctx, Convention::hf, k, M, N, deg, lab.m, lab);
            ASSERT_EQ(sq.u_k.size(), hf.u_k.size());
            ASSERT_EQ(sq.other.size(), hf.other.size());
            const auto du = hf.u_k.twice[0] - sq.u_k.twice[0];
            for (std::size_t i = 0; i < sq.u_k.size(); ++i) EXPECT_EQ(hf.u_k.twice[i] - sq.u_k.twice[i], du);
            const auto dot = hf.other.twice[0] - sq.other.twice[0];
            for (std::size_t i = 0; i < sq.other.size(); ++i) EXPECT_EQ(hf.other.twice[i] - sq.other.twice[i], dot);
          }
        }
}

TEST(OscillatorLabels, CountsByRowConstraint) {
  const auto labs = oscillator_labels(2, 1, 1, 2);
  // degree <= 2 with one row on each side: (),(1),(2),(1;1),(;1),(;2)
  EXPECT_EQ(labs.size(), 6u);
  for (const auto& l : oscillator_labels(1, 1, 1, 3)) EXPECT_LE(l.m.rows() + l.n.rows(), 1);
}
