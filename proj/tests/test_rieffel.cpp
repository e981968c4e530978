#include <howe/rieffel.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace howe;

namespace {

HalfIntWeight uk(std::vector<long> w) { return HalfIntWeight::from_integers(w, Group::Uk); }
HalfIntWeight umn(std::vector<long> w) { return HalfIntWeight::from_integers(w, Group::UMN); }

std::vector<long> padded(const Partition& m, int k) {
  const auto p = m.padded(k);
  return {p.begin(), p.end()};
}

}  // namespace

TEST(InducingIrrep, Examples) {
  EXPECT_EQ(build_inducing_irrep({1}, 2).dim(), 2u);
  EXPECT_EQ(build_inducing_irrep({2, 1}, 2).dim(), 2u);
  EXPECT_EQ(build_inducing_irrep({1, 1}, 2).dim(), 1u);
  EXPECT_EQ(build_inducing_irrep({}, 3).dim(), 1u);
  EXPECT_THROW(build_inducing_irrep({1, 1, 1}, 2), ShapeMismatch);
}

TEST(InducingIrrep, DimensionBracketsAndHighestWeight) {
  for (int M = 1; M <= 3; ++M)
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : partitions_of(n, M)) {
        const auto h = build_inducing_irrep(m, M);
        EXPECT_EQ(h.dim(), oracle::ssyt_count(m.parts(), M)) << m.str();
        for (int a = 0; a < M; ++a)
          for (int b = 0; b < M; ++b)
            for (int c = 0; c < M; ++c)
              for (int d = 0; d < M; ++d) {
                ExactOperator expect(h.dim(), h.dim());
                if (b == c) expect = expect + h.E(a, d);
                if (d == a) expect = expect - h.E(c, b);
                EXPECT_EQ(commutator(h.E(a, b), h.E(c, d)), expect);
              }
        // highest weight vector has weight m
        RationalVector v;
        for (std::size_t i = 0; i < h.highest.size(); ++i)
          if (h.highest[i] != 0) v.push_back({static_cast<std::uint32_t>(i), h.highest[i]});
        for (int a = 0; a < M; ++a) {
          const auto image = h.E(a, a).apply(v);
          const Rational expect = a < m.rows() ? Rational(m[static_cast<std::size_t>(a)]) : Rational(0);
          RationalVector scaled;
          for (const auto& e : v)
            if (expect != 0) scaled.push_back({e.index, e.value * expect});
          EXPECT_EQ(image, scaled);
        }
      }
}

TEST(InduceCompact, DefiningRepresentation) {
  for (int k = 1; k <= 4; ++k) {
    const auto mod = induce_compact(k, 1, {1});
    EXPECT_EQ(mod.dimension(), static_cast<std::size_t>(k));
    EXPECT_EQ(mod.commutant, 1u);
    EXPECT_EQ(mod.highest_weight, uk(padded({1}, k)));
  }
}

TEST(InduceCompact, ThreeByTwoHook) {
  const auto mod = induce_compact(3, 2, {2, 1});
  EXPECT_EQ(mod.dimension(), 8u);
  EXPECT_EQ(mod.commutant, 1u);
  EXPECT_EQ(mod.highest_weight, uk({2, 1, 0}));
  EXPECT_TRUE(mod.brackets_ok);
  EXPECT_TRUE(mod.gram_positive);
  const auto j = to_json(mod);
  EXPECT_EQ(j["dimension"], 8);
  EXPECT_EQ(j["commutant_dim"], 1);
  EXPECT_FALSE(j["empty"].get<bool>());
}

TEST(InduceCompact, TooManyRowsForTarget) {
  const auto mod = induce_compact(2, 3, {1, 1, 1});
  EXPECT_TRUE(mod.empty);
  EXPECT_EQ(mod.dimension(), 0u);
  EXPECT_THROW(induce_compact(2, 1, {1, 1}), ShapeMismatch);
}

TEST(InduceCompact, SmallGrid) {
  for (int k = 1; k <= 3; ++k)
    for (int M = 1; M <= 2; ++M) {
      const auto model = compact_model_for_induction(k, M, 4);
      for (int n = 0; n <= 3; ++n)
        for (const auto& m : partitions_of(n, M)) {
          const auto mod = induce_compact(model, m);
          EXPECT_EQ(mod.dimension(), oracle::ssyt_count(m.parts(), k)) << k << M << m.str();
          if (mod.dimension() == 0) continue;
          EXPECT_EQ(mod.commutant, 1u);
          EXPECT_EQ(mod.highest_weight, uk(padded(m, k)));
          EXPECT_TRUE(mod.brackets_ok);
          EXPECT_TRUE(mod.gram_positive);
        }
    }
}

TEST(DegreeSelection, Examples) {
  EXPECT_EQ(degree_selection_check(2, 1, {2}, 1).invariant_dim, 0u);
  EXPECT_EQ(degree_selection_check(3, 2, {2, 1}, 2).invariant_dim, 0u);
  const auto r = degree_selection_check(2, 2, {1, 1}, 4);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.ambient_dim, 0u);
  EXPECT_THROW(degree_selection_check(2, 2, {1, 1}, 2), ShapeMismatch);
}

TEST(ProjectorCrossCheck, AgreesWithKernel) {
  for (int k = 1; k <= 3; ++k)
    for (int M = 1; M <= 2; ++M)
      for (int n = 0; n <= 3; ++n)
        for (const auto& m : partitions_of(n, M)) {
          const auto r = projector_cross_check(k, M, m);
          EXPECT_TRUE(r.pass()) << k << M << m.str();
          EXPECT_EQ(r.image_dim, weyl_dim(m, k));
        }
}

TEST(InduceNoncompact, MixedLabel) {
  const auto mod = induce_noncompact_graded(3, 1, 1, umn({4, -1}), 2);
  ASSERT_FALSE(mod.empty);
  EXPECT_EQ(mod.dimension(), 8u);
  EXPECT_EQ(mod.highest_weight, uk({1, 0, -1}));
  EXPECT_EQ(mod.commutant, 1u);
  EXPECT_TRUE(mod.gram_positive);
}

TEST(InduceNoncompact, EmptyCases) {
  const auto renorm = renormalize_weight(SignedWeight({1}, {1}), 1, 1);
  const auto a = induce_noncompact_graded(3, 1, 1, renorm, 3);
  EXPECT_TRUE(a.empty);
  EXPECT_EQ(a.reason, "weight is not integral");
  const auto b = induce_noncompact_graded(3, 1, 1, umn({2, -1}), 3);
  EXPECT_TRUE(b.empty);
  EXPECT_EQ(b.reason, "some a_i is smaller than k");
  EXPECT_TRUE(induce_noncompact_graded(3, 1, 1, umn({2, -1, 0}), 3).empty);
  const auto j = to_json(b);
  EXPECT_TRUE(j["empty"].get<bool>());
  EXPECT_EQ(j["dimension"], 0);
}

TEST(InduceNoncompact, NonemptyExactlyOnKvWeights) {
  for (auto conv : {Convention::sq, Convention::hf}) {
    const int k = 2, M = 1, N = 1, d = 3;
    const auto kv = verify_kv(k, M, N, d, conv);
    const auto model = build_oscillator_model(k, M, N, d, conv);
    const Group g = conv == Convention::hf ? Group::CoverUMN : Group::UMN;
    for (std::int64_t a = -2; a <= 12; ++a)
      for (std::int64_t b = -10; b <= 2; ++b) {
        HalfIntWeight w;
        w.group = g;
        w.twice = {a, b};
        const auto mod = induce_noncompact_graded(model, w);
        const auto entry = kv.find_other(w);
        EXPECT_EQ(mod.empty, !entry.has_value()) << w.str();
        if (!entry) continue;
        EXPECT_EQ(mod.dimension(), weyl_dim_dominant(entry->label.at_rank(k)));
        EXPECT_TRUE(mod.highest_weight && mod.highest_weight->same_entries(entry->u_k));
        EXPECT_EQ(mod.commutant, 1u);
      }
  }
}

TEST(InduceNoncompact, ShiftedLabelGivesSignedModule) {
  for (int k = 2; k <= 3; ++k)
    for (const auto& l : oscillator_labels(k, 2, 1, 3)) {
      std::vector<long> w;
      for (int i = 0; i < 2; ++i) w.push_back((i < l.m.rows() ? l.m[static_cast<std::size_t>(i)] : 0) + k);
      w.push_back(l.n.rows() ? -l.n[0] : 0);
      const auto mod = induce_noncompact_graded(k, 2, 1, umn(w), 3);
      ASSERT_FALSE(mod.empty) << l.str();
      EXPECT_EQ(mod.highest_weight, uk(l.at_rank(k)));
      EXPECT_EQ(mod.dimension(), weyl_dim_dominant(l.at_rank(k)));
    }
}
