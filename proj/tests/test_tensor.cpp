#include <howe/tensor.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

using namespace howe;

namespace {

ExactOperator zero_like(const ExactOperator& a) {
  ExactOperator z(a.rows(), a.cols());
  z.domain_tag = a.domain_tag;
  z.codomain_tag = a.codomain_tag;
  return z;
}

}  // namespace

TEST(Permutation, CompositionAndCycles) {
  const auto a = from_cycles(3, {{1, 2}});
  const auto b = from_cycles(3, {{2, 3}});
  EXPECT_EQ(compose(a, inverse(a)), identity_permutation(3));
  EXPECT_EQ(cycle_type(compose(a, b)), Partition({3}));
  EXPECT_EQ(sign(a), -1);
  EXPECT_EQ(all_permutations(4).size(), 24u);
}

TEST(SnAction, IdentityAndSwap) {
  EXPECT_EQ(sn_action(identity_permutation(3), 2, 3), ExactOperator::identity(8));
  const auto swap = sn_action(from_cycles(2, {{1, 2}}), 2, 2);
  EXPECT_EQ(swap.trace(), 2);
  EXPECT_EQ(swap * swap, ExactOperator::identity(4).scaled(1) + zero_like(swap));
}

TEST(SnAction, Multiplicative) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto perms = all_permutations(n);
      for (const auto& s : perms)
        for (const auto& t : {perms.front(), perms.back(), perms[perms.size() / 2]})
          EXPECT_EQ(sn_action(compose(s, t), k, n), sn_action(s, k, n) * sn_action(t, k, n));
    }
}

TEST(SnAction, TraceCountsCycles) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& s : all_permutations(n)) {
        long expect = 1;
        for (int c = 0; c < cycle_type(s).rows(); ++c) expect *= k;
        EXPECT_EQ(sn_action(s, k, n).trace(), expect);
      }
}

TEST(TensorGl, BracketRelations) {
  const int k = 3, n = 2;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          auto expect = zero_like(tensor_gl_generator(0, 0, k, n));
          if (b == c) expect = expect + tensor_gl_generator(a, d, k, n);
          if (d == a) expect = expect - tensor_gl_generator(c, b, k, n);
          EXPECT_EQ(commutator(tensor_gl_generator(a, b, k, n), tensor_gl_generator(c, d, k, n)), expect);
        }
}

TEST(IsotypicProjector, Examples) {
  EXPECT_EQ(exact_rank(isotypic_projector({2}, 2)), 3u);
  EXPECT_TRUE(isotypic_projector({1, 1}, 1).is_zero());
  EXPECT_EQ(exact_rank(isotypic_projector({2, 1}, 2)), 4u);
}

TEST(IsotypicProjector, IdempotentOrthogonalCompleteCommuting) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto parts = partitions_of(n);
      std::vector<ExactOperator> ps;
      for (const auto& l : parts) ps.push_back(isotypic_projector(l, k));
      auto sum = zero_like(ps.front());
      for (std::size_t i = 0; i < ps.size(); ++i) {
        EXPECT_EQ(ps[i] * ps[i], ps[i]);
        for (std::size_t j = 0; j < ps.size(); ++j) {
          if (i != j) {
            EXPECT_TRUE((ps[i] * ps[j]).is_zero());
          }
        }
        EXPECT_EQ(ps[i].trace(), Rational(static_cast<long>(sn_dim(parts[i]) * weyl_dim(parts[i], k))));
        EXPECT_EQ(exact_rank(ps[i]), sn_dim(parts[i]) * weyl_dim(parts[i], k));
        for (const auto& s : all_permutations(n)) {
          const auto p = sn_action(s, k, n);
          EXPECT_EQ(p * ps[i], ps[i] * p);
        }
        sum = sum + ps[i];
      }
      auto id = ExactOperator::identity(sum.rows());
      id.domain_tag = id.codomain_tag = sum.domain_tag;
      EXPECT_EQ(sum, id) << "n=" << n << " k=" << k;
    }
}

TEST(IsotypicProjector, ScaledFormMatches) {
  const auto exact = isotypic_projector({2, 1}, 2);
  const auto scaled = isotypic_projector_scaled({2, 1}, 2);
  for (std::size_t r = 0; r < exact.rows(); ++r)
    for (std::size_t c = 0; c < exact.cols(); ++c)
      EXPECT_EQ(exact.at(r, c) * 6 / 2, Rational(static_cast<long>(scaled.at(r, c))));
}

TEST(SchurWeyl, DimensionIdentity) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) {
      BigInt total = 0;
      for (const auto& l : partitions_of(n)) total += BigInt(static_cast<unsigned long>(sn_dim(l))) * static_cast<unsigned long>(weyl_dim(l, k));
      BigInt kn;
      mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
      EXPECT_EQ(total, kn);
    }
}

TEST(YoungSymmetrizer, Examples) {
  const auto full = young_symmetrizer(row_reading_tableau({3}), 2);
  EXPECT_EQ(exact_rank(full), 4u);  // binomial(2+3-1, 3)
  EXPECT_EQ(exact_rank(young_symmetrizer(row_reading_tableau({1, 1}), 2)), 1u);
  EXPECT_EQ(exact_rank(young_symmetrizer(row_reading_tableau({2, 1}), 3)), 8u);
  EXPECT_THROW(young_symmetrizer({{2, 1}}, 2), ShapeMismatch);
}

TEST(YoungSymmetrizer, QuasiIdempotentInsideIsotypicBlock) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n)) {
      const int k = 3;
      const auto c = young_symmetrizer(row_reading_tableau(l), k);
      const Rational factor = make_rational(factorial(static_cast<unsigned>(n)), BigInt(static_cast<unsigned long>(sn_dim(l))));
      EXPECT_EQ(c * c, c.scaled(factor));
      EXPECT_EQ(isotypic_projector(l, k) * c, c);
      EXPECT_EQ(exact_rank(c), weyl_dim(l, k));
    }
  // a different standard tableau of the same shape
  const auto c = young_symmetrizer({{1, 3}, {2}}, 2);
  EXPECT_EQ(c * c, c.scaled(Rational(3)));
  EXPECT_EQ(exact_rank(c), 2u);
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant_dim({ExactOperator::identity(5)}), 25u);
  std::vector<ExactOperator> sn;
  for (const auto& s : all_permutations(3)) sn.push_back(sn_action(s, 2, 3));
  EXPECT_EQ(commutant_dim(sn), 20u);
  std::vector<ExactOperator> joint;
  for (const auto& s : all_permutations(2)) joint.push_back(sn_action(s, 2, 2));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) joint.push_back(tensor_gl_generator(a, b, 2, 2));
  EXPECT_EQ(commutant_dim(joint), 2u);
}

TEST(Commutant, DoubleCommutant) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      std::vector<ExactOperator> gens;
      for (int i = 1; i < n; ++i) gens.push_back(sn_action(from_cycles(n, {{i, i + 1}}), k, n));
      if (gens.empty()) gens.push_back(sn_action(identity_permutation(n), k, n));
      std::uint64_t expect = 0;
      for (const auto& l : partitions_of(n)) expect += weyl_dim(l, k) * weyl_dim(l, k);
      EXPECT_EQ(commutant_dim(gens), expect) << "n=" << n << " k=" << k;
    }
}

TEST(Commutant, GuardsSize) {
  CommutantOptions opt;
  opt.max_basis = 3;
  EXPECT_THROW(commutant_dim({ExactOperator::identity(4)}, opt), TooLarge);
  EXPECT_THROW(MultiIndexBasis(10, 6), TooLarge);
}

TEST(Triplets, RoundTrip) {
  const auto p = isotypic_projector({2, 1}, 2);
  std::stringstream ss;
  p.dump_triplets(ss);
  EXPECT_EQ(ss.str().substr(0, 7), "dims 8 ");
  auto q = read_triplets(ss);
  q.domain_tag = q.codomain_tag = p.domain_tag;
  EXPECT_EQ(q, p);
}

TEST(SchurWeyl, BlockwiseProjectorIdentities) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto r = schur_weyl_check(n, k);
      EXPECT_TRUE(r.pass()) << "n=" << n << " k=" << k;
    }
}

TEST(CertifiedNullity, AgreesWithExactElimination) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 6 + trial % 5;
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < cols - 1 - trial % 3; ++r) {
      std::map<std::uint32_t, Rational> row;
      for (std::uint32_t c = 0; c < cols; ++c)
        if (int v = coef(rng); v != 0 && coef(rng) > 0) row[c] = make_rational(v, 1 + trial % 4);
      rows.push_back(from_map(row));
    }
    RowEchelon exact(cols);
    for (const auto& r : rows) exact.insert(r);
    EXPECT_EQ(certified_nullity(rows, cols), cols - exact.rank());
  }
}

TEST(CertifiedNullity, FallsBackWhenModularAnswerIsWrong) {
  // the prime itself as a coefficient: the row vanishes mod p
  const BigInt p(std::to_string(modp::kPrime));
  std::vector<RationalVector> rows = {from_map(std::map<std::uint32_t, Rational>{{0, Rational(p)}})};
  EXPECT_EQ(certified_nullity(rows, 2), 1u);
  // kernel entries too large to reconstruct from one prime
  const BigInt big("1099511627777");
  rows = {from_map(std::map<std::uint32_t, Rational>{{0, Rational(big)}, {1, Rational(3)}})};
  EXPECT_EQ(certified_nullity(rows, 2), 1u);
}
