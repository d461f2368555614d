#include <gtest/gtest.h>

#include "kodaira/geometry.hpp"

using namespace kodaira;

TEST(Base, ProjectivePlane) {
  auto p2 = projective_plane();
  EXPECT_EQ(p2.rank(), 1u);
  EXPECT_EQ(canonical_square(p2), 9);
  EXPECT_EQ(p2.h11, 1);
}

TEST(Base, QuadricAndHirzebruch) {
  auto f0 = named_base("F0");
  EXPECT_EQ(f0.intersection, (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(f0.canonical, (DivisorClass{-2, -2}));
  EXPECT_EQ(canonical_square(f0), 8);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(canonical_square(named_base("F" + std::to_string(n))), 8) << n;
  EXPECT_THROW(named_base("F13"), DomainError);
  EXPECT_THROW(named_base("P3"), DomainError);
}

TEST(Base, Validation) {
  EXPECT_THROW(make_base({{1}}, {-2}, 1, true), DomainError);
  EXPECT_NO_THROW(make_base({{1}}, {-2}, 1, false));
  EXPECT_THROW(make_base({{0, 1}, {2, 0}}, {-2, -2}, 2, false), DomainError);
  EXPECT_THROW(make_base({{1}}, {-3, 0}, 1, false), DomainError);
  EXPECT_THROW(make_base({{1}}, {-3}, 2, false), DomainError);
}

TEST(Intersect, Examples) {
  auto p2 = projective_plane();
  EXPECT_EQ(intersect(p2, {1}, {1}), 1);
  EXPECT_EQ(intersect(p2, {-3}, {-3}), 9);
  auto f0 = hirzebruch(0);
  EXPECT_EQ(intersect(f0, {1, 0}, {0, 1}), 1);
  EXPECT_THROW(intersect(f0, {1}, {0, 1}), DomainError);
}

TEST(Genus, Examples) {
  auto p2 = projective_plane();
  EXPECT_EQ(curve_genus(p2, {1}), 0);
  EXPECT_EQ(curve_genus(p2, {3}), 1);
  EXPECT_EQ(curve_genus(p2, {5}), 6);
  // plane curves of degree d: (d-1)(d-2)/2
  for (int d = 1; d <= 20; ++d) EXPECT_EQ(curve_genus(p2, {d}), (d - 1) * (d - 2) / 2);
  EXPECT_EQ(cover_genus(p2, {1}), 2);
  EXPECT_EQ(cover_genus(p2, {2}), 5);
}

TEST(Genus, Errors) {
  auto f0 = hirzebruch(0);
  auto odd = make_base({{1}}, {-2}, 1, false);
  EXPECT_THROW(curve_genus(odd, {1}), DomainError);
  EXPECT_THROW(curve_genus(f0, {0, 2}), DomainError);
  EXPECT_THROW(cover_genus(projective_plane(), {-1}), DomainError);
  // the (-n)-curve of F_n is rational
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(curve_genus(hirzebruch(n), {1, 0}), 0);
  EXPECT_EQ(curve_genus(f0, {1, 1}), 0);
  EXPECT_EQ(curve_genus(f0, {2, 2}), 1);
}

TEST(Genus, InvariantUnderBasisChange) {
  // F_0 in the basis (f1, f1 + f2): form U^T M U with U = [[1, 1], [0, 1]]
  auto f0 = hirzebruch(0);
  auto twisted = make_base({{0, 1}, {1, 2}}, {0, -2}, 2, true);
  auto genus_or = [](const BaseSurface& base, const DivisorClass& c) -> std::optional<std::int64_t> {
    try {
      return curve_genus(base, c);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  for (int a = -3; a <= 4; ++a)
    for (int b = -3; b <= 4; ++b) {
      DivisorClass fresh{a, b}, old{a + b, b};
      EXPECT_EQ(genus_or(twisted, fresh), genus_or(f0, old)) << a << " " << b;
      EXPECT_EQ(intersect(twisted, fresh, twisted.canonical), intersect(f0, old, f0.canonical));
    }
}

TEST(Genus, CoverAtLeastCurveGenus) {
  auto p2 = projective_plane();
  for (int d = 1; d <= 12; ++d) EXPECT_GE(cover_genus(p2, {d}), curve_genus(p2, {d}));
}

TEST(Classify, Examples) {
  auto i1 = classify_fiber({0, 0, 1, Monodromy::NotApplicable});
  EXPECT_EQ(i1.type.to_string(), "I1");
  EXPECT_FALSE(i1.algebra);
  EXPECT_EQ(i1.row.row, 1);

  auto so8 = classify_fiber({2, 3, 6, Monodromy::Split});
  EXPECT_EQ(so8.type.to_string(), "I0*");
  EXPECT_EQ(so8.algebra->name(), "so(8)");
  EXPECT_EQ(so8.row.row, 13);

  auto i5 = classify_fiber({0, 0, 5, Monodromy::NonSplit});
  EXPECT_EQ(i5.type.to_string(), "I5");
  EXPECT_EQ(i5.algebra->name(), "sp(2)");
  EXPECT_EQ(i5.lambda, 5);
  EXPECT_EQ(i5.fiber_euler, 5);

  EXPECT_THROW(classify_fiber({4, 6, 12, Monodromy::Split}), DomainError);
  EXPECT_THROW(classify_fiber({4, 6, 12, Monodromy::NotApplicable}), DomainError);
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify_fiber({1, 1, 2, Monodromy::Split}), DomainError);     // split II
  EXPECT_THROW(classify_fiber({0, 0, 5, Monodromy::NotApplicable}), DomainError);
  EXPECT_THROW(classify_fiber({0, 0, 0, Monodromy::NotApplicable}), DomainError);
  EXPECT_THROW(classify_fiber({1, 0, 0, Monodromy::NotApplicable}), DomainError);
  EXPECT_THROW(classify_fiber({1, 1, 3, Monodromy::NotApplicable}), DomainError);  // wrong ord(Delta)
  EXPECT_THROW(classify_fiber({2, 3, 5, Monodromy::Split}), DomainError);
  EXPECT_THROW(classify_fiber({0, 0, 2, Monodromy::NonSplit}), DomainError);  // no sp(1) at I2
}

// Every (type, algebra) pair of the table is reached from some orders and tag.
TEST(Classify, CoversAllTableRows) {
  using M = Monodromy;
  struct Case {
    KodairaData data;
    int row;
  };
  std::vector<Case> cases{
      {{0, 0, 1, M::NotApplicable}, 1},  {{0, 0, 2, M::Split}, 2},       {{0, 0, 3, M::Split}, 3},
      {{0, 0, 4, M::NonSplit}, 4},       {{0, 0, 5, M::NonSplit}, 5},    {{0, 0, 3, M::NonSplit}, 5},
      {{0, 0, 6, M::Split}, 6},          {{1, 1, 2, M::NotApplicable}, 7}, {{1, 2, 3, M::NotApplicable}, 8},
      {{2, 2, 4, M::NonSplit}, 9},       {{3, 2, 4, M::Split}, 10},      {{2, 3, 6, M::NonSplit}, 11},
      {{3, 3, 6, M::SemiSplit}, 12},     {{2, 4, 6, M::Split}, 13},      {{2, 3, 7, M::NonSplit}, 14},
      {{2, 3, 7, M::Split}, 15},         {{2, 3, 8, M::NonSplit}, 16},   {{2, 3, 8, M::Split}, 17},
      {{2, 3, 9, M::NonSplit}, 18},      {{2, 3, 10, M::Split}, 19},     {{3, 4, 8, M::NonSplit}, 20},
      {{4, 4, 8, M::Split}, 21},         {{3, 5, 9, M::NotApplicable}, 22}, {{4, 5, 10, M::NotApplicable}, 23},
  };
  std::set<int> seen;
  for (const auto& c : cases) {
    auto f = classify_fiber(c.data);
    EXPECT_EQ(f.row.row, c.row) << f.type.to_string();
    EXPECT_EQ(f.lambda, c.data.ord_d);
    EXPECT_EQ(f.fiber_euler, f.type.fiber_euler());
    seen.insert(f.row.row);
  }
  EXPECT_EQ(seen.size(), 23u);
}

TEST(Classify, TotalOnMinimalRegion) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 8; ++b) {
      if (a >= 4 && b >= 6) continue;
      int m = std::min(3 * a, 2 * b);
      int d = 3 * a == 2 * b ? m + 1 : m;
      if (d == 0) continue;
      bool ok = false;
      for (auto mono : {Monodromy::Split, Monodromy::SemiSplit, Monodromy::NonSplit, Monodromy::NotApplicable}) {
        try {
          auto f = classify_fiber({a, b, d, mono});
          EXPECT_EQ(f.lambda, d);
          ok = true;
        } catch (const DomainError&) {
        }
      }
      EXPECT_TRUE(ok) << a << " " << b << " " << d;
    }
}

TEST(Residual, Examples) {
  auto p2 = projective_plane();
  EXPECT_EQ(residual_discriminant(p2, {1}, 3), (DivisorClass{33}));
  EXPECT_EQ(residual_discriminant(p2, {1}, 0), (DivisorClass{36}));
  EXPECT_EQ(residual_discriminant(p2, {12}, 3), (DivisorClass{0}));
}

TEST(Residual, Linearity) {
  auto f3 = hirzebruch(3);
  DivisorClass s{1, 2};
  for (int lambda = 0; lambda <= 10; ++lambda)
    EXPECT_EQ(sum(residual_discriminant(f3, s, lambda), scaled(s, lambda)), scaled(f3.canonical, -12));
}

TEST(Budget, Examples) {
  auto p2 = projective_plane();
  auto ok = collision_budget(p2, {1}, 1, 1, 1, 20, 15);
  EXPECT_EQ(ok.budget, 35);
  EXPECT_TRUE(ok.passes());
  EXPECT_FALSE(collision_budget(p2, {1}, 1, 1, 1, 0, 0).passes());
  EXPECT_TRUE(collision_budget(p2, {12}, 3, 1, 1, 0, 0).passes());
  EXPECT_THROW(collision_budget(p2, {13}, 3, 1, 1, 0, 0), DomainError);
  EXPECT_THROW(collision_budget(p2, {1}, 1, 0, 1, 0, 0), DomainError);
}
