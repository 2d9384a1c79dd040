#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "lievol/checks.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/vogel.hpp"
#include "oracles.hpp"

namespace lievol {
namespace {

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(10, 3) * Rational(3, 5), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST(Rational, SolveExact) {
  // A2 Cartan matrix transposed; rho = alpha_1 + alpha_2.
  RationalMatrix m = {{2, -1}, {-1, 2}};
  const auto x = solve_exact(m, {1, 1});
  EXPECT_EQ(x[0], Rational(1));
  EXPECT_EQ(x[1], Rational(1));
  EXPECT_THROW(solve_exact({{1, 2}, {2, 4}}, {1, 1}), std::domain_error);
}

TEST(LieType, RankFloors) {
  EXPECT_NO_THROW(make_lie_type(Family::A, 1));
  EXPECT_NO_THROW(make_lie_type(Family::C, 1));
  EXPECT_THROW(make_lie_type(Family::A, 0), InvalidTypeError);
  EXPECT_THROW(make_lie_type(Family::B, 1), InvalidTypeError);
  EXPECT_THROW(make_lie_type(Family::D, 3), InvalidTypeError);
  EXPECT_THROW(make_lie_type(Family::D, 2), InvalidTypeError);
  EXPECT_THROW(make_lie_type(Family::B), InvalidTypeError);
  EXPECT_THROW(make_lie_type(Family::E8, 7), InvalidTypeError);
  EXPECT_EQ(make_lie_type(Family::E8).rank, 8);
}

TEST(LieType, GroupNames) {
  EXPECT_EQ(group_name(make_lie_type(Family::A, 4)), "SU_5");
  EXPECT_EQ(group_name(make_lie_type(Family::B, 3)), "Spin_7");
  EXPECT_EQ(group_name(make_lie_type(Family::C, 2)), "Sp_4");
  EXPECT_EQ(group_name(make_lie_type(Family::D, 5)), "Spin_10");
  EXPECT_EQ(group_name(make_lie_type(Family::G2)), "G2");
}

TEST(RootSystem, A1) {
  const RootSystem rs = build_root_system(make_lie_type(Family::A, 1));
  ASSERT_EQ(rs.positive_roots.size(), 1u);
  EXPECT_EQ(rs.weyl_vector[0], Rational(1, 2));
  EXPECT_EQ(rho_pairings_minimal(rs)[0], Rational(1));
  EXPECT_EQ(rs.dual_coxeter, 2);
  EXPECT_EQ(rs.dimension(), 3);
  EXPECT_EQ(rho_pairings_killing(rs), RationalVector{Rational(1, 4)});
}

TEST(RootSystem, A2) {
  const RootSystem rs = build_root_system(make_lie_type(Family::A, 2));
  const std::vector<IntVector> expected = {{0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(rs.positive_roots, expected);
  EXPECT_EQ(rs.dual_coxeter, 3);
  // highest root pairing (h - 1) / (2h) = 1/3
  EXPECT_EQ(rho_pairings_killing(rs).back(), Rational(1, 3));
}

TEST(RootSystem, G2) {
  const RootSystem rs = build_root_system(make_lie_type(Family::G2));
  EXPECT_EQ(rs.positive_roots.size(), 6u);
  EXPECT_EQ(rs.dual_coxeter, 4);
  EXPECT_EQ(rs.cartan_matrix, (IntMatrix{{2, -1}, {-3, 2}}));
  EXPECT_EQ(rs.highest_root(), (IntVector{3, 2}));
}

TEST(Exponents, Examples) {
  EXPECT_EQ(exponents(make_lie_type(Family::A, 3)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(exponents(make_lie_type(Family::E8)),
            (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(exponents(make_lie_type(Family::A, 1)), (std::vector<int>{1}));
  EXPECT_EQ(exponents(make_lie_type(Family::D, 4)), (std::vector<int>{1, 3, 3, 5}));
  EXPECT_EQ(build_root_system(make_lie_type(Family::A, 3)).positive_roots.size(), 6u);
  EXPECT_EQ(build_root_system(make_lie_type(Family::E8)).positive_roots.size(), 120u);
}

class EveryType : public ::testing::TestWithParam<SimpleLieType> {};

TEST_P(EveryType, MatchesRootStringOracle) {
  const RootSystem rs = build_root_system(GetParam());
  const auto oracle_roots = oracle::positive_roots_by_strings(rs.cartan_matrix);
  const std::set<IntVector> ours(rs.positive_roots.begin(), rs.positive_roots.end());
  EXPECT_EQ(ours, oracle_roots);
}

TEST_P(EveryType, WeylVectorIsHalfSumOfPositiveRoots) {
  const RootSystem rs = build_root_system(GetParam());
  for (int i = 0; i < rs.rank(); ++i) {
    std::int64_t s = 0;
    for (const auto& mu : rs.positive_roots) s += mu[i];
    EXPECT_EQ(rs.weyl_vector[i], Rational(s, 2)) << "coordinate " << i;
  }
}

TEST_P(EveryType, StructuralInvariants) {
  const RootSystem rs = build_root_system(GetParam());
  const int sum_m = std::accumulate(rs.exponents.begin(), rs.exponents.end(), 0);
  EXPECT_EQ(static_cast<std::size_t>(sum_m), rs.positive_roots.size());
  for (const auto& mu : rs.positive_roots)
    for (auto c : mu) EXPECT_GE(c, 0);
  // (rho, alpha_i^vee) = 1
  for (int i = 0; i < rs.rank(); ++i) {
    Rational s(0);
    for (int j = 0; j < rs.rank(); ++j) s += rs.weyl_vector[j] * Rational(rs.cartan_matrix[j][i]);
    EXPECT_EQ(s, Rational(1));
  }
  // highest root has squared length 2
  EXPECT_EQ(detail::pairing(rs.symmetrized_form, rs.highest_root(), rs.highest_root()),
            Rational(2));
  const VogelTableRow row = vogel_row(rs.lie_type);
  EXPECT_EQ(row.t(), Rational(rs.dual_coxeter));
  EXPECT_EQ(dim_from_vogel(row), Rational(rs.dimension()));
  for (const auto& p : rho_pairings_minimal(rs)) {
    EXPECT_GT(p, Rational(0));
    EXPECT_LT(p, Rational(rs.dual_coxeter));
  }
  for (const auto& p : rho_pairings_killing(rs)) {
    EXPECT_GT(p, Rational(0));
    EXPECT_LT(p, Rational(1, 2));
  }
}

TEST_P(EveryType, ReflectionClosureIsIdempotent) {
  const RootSystem rs = build_root_system(GetParam());
  std::vector<IntVector> all = rs.positive_roots;
  for (const auto& mu : rs.positive_roots) {
    IntVector neg = mu;
    for (auto& c : neg) c = -c;
    all.push_back(neg);
  }
  const auto closed = reflection_closure(rs.cartan_matrix, all);
  EXPECT_EQ(closed.size(), all.size());
}

INSTANTIATE_TEST_SUITE_P(Supported, EveryType, ::testing::ValuesIn(supported_types(8)),
                         [](const auto& info) { return cartan_name(info.param); });

TEST(RootSystem, ExceptionalDimensions) {
  EXPECT_EQ(build_root_system(make_lie_type(Family::G2)).dimension(), 14);
  EXPECT_EQ(build_root_system(make_lie_type(Family::F4)).dimension(), 52);
  EXPECT_EQ(build_root_system(make_lie_type(Family::E6)).dimension(), 78);
  EXPECT_EQ(build_root_system(make_lie_type(Family::E7)).dimension(), 133);
  EXPECT_EQ(build_root_system(make_lie_type(Family::E8)).dimension(), 248);
}

}  // namespace
}  // namespace lievol
