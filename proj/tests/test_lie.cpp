#include <gtest/gtest.h>

#include "kodaira/branching.hpp"
#include "lie_oracle.hpp"

using namespace kodaira;

namespace {

std::vector<Algebra> all_algebras_up_to(int max_rank) {
  std::vector<Algebra> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(simple_algebra(Series::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(simple_algebra(Series::B, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(simple_algebra(Series::C, r));
  for (int r = 3; r <= max_rank; ++r) out.push_back(simple_algebra(Series::D, r));
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back(simple_algebra(Series::E, r));
  if (max_rank >= 4) out.push_back(simple_algebra(Series::F, 4));
  out.push_back(simple_algebra(Series::G, 2));
  out.push_back(sp(1));
  return out;
}


}  // namespace

TEST(SimpleAlgebra, Examples) {
  auto a1 = simple_algebra(Series::A, 1);
  EXPECT_EQ(a1.dim(), 3u);
  EXPECT_EQ(a1.rank(), 1);
  EXPECT_EQ(a1.name(), "su(2)");

  auto g2 = simple_algebra(Series::G, 2);
  EXPECT_EQ(g2.dim(), 14u);
  EXPECT_EQ(charged_dim(make_rep(g2, RepName::Adj)), 12);

  auto e8 = simple_algebra(Series::E, 8);
  EXPECT_EQ(e8.dim(), 248u);
  EXPECT_EQ(charged_dim(make_rep(e8, RepName::Adj)), 240);
}

TEST(SimpleAlgebra, InvalidPairs) {
  EXPECT_THROW(simple_algebra(Series::A, 0), DomainError);
  EXPECT_THROW(simple_algebra(Series::B, 1), DomainError);
  EXPECT_THROW(simple_algebra(Series::C, 1), DomainError);
  EXPECT_THROW(simple_algebra(Series::D, 2), DomainError);
  EXPECT_THROW(simple_algebra(Series::E, 5), DomainError);
  EXPECT_THROW(simple_algebra(Series::E, 9), DomainError);
  EXPECT_THROW(simple_algebra(Series::F, 3), DomainError);
  EXPECT_THROW(simple_algebra(Series::G, 3), DomainError);
}

TEST(SimpleAlgebra, DimensionsMatchClosedForms) {
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(su(n).dim(), static_cast<std::size_t>(n * n - 1)) << n;
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(sp(k).dim(), static_cast<std::size_t>(k * (2 * k + 1))) << k;
  for (int N = 5; N <= 18; ++N) EXPECT_EQ(so(N).dim(), static_cast<std::size_t>(N * (N - 1) / 2)) << N;
  EXPECT_EQ(algebra_from_name("f4").dim(), 52u);
  EXPECT_EQ(algebra_from_name("e6").dim(), 78u);
  EXPECT_EQ(algebra_from_name("e7").dim(), 133u);
}

TEST(SimpleAlgebra, CartanInvariants) {
  for (const auto& g : all_algebras_up_to(8)) {
    const auto& a = g.cartan();
    for (int i = 0; i < g.rank(); ++i) {
      EXPECT_EQ(a[i][i], 2);
      for (int j = 0; j < g.rank(); ++j) {
        if (i == j) continue;
        EXPECT_TRUE(a[i][j] <= 0 && a[i][j] >= -3) << g.name();
        EXPECT_EQ(a[i][j] == 0, a[j][i] == 0) << g.name();
      }
    }
  }
}

TEST(SimpleAlgebra, NonSimplyLacedConventions) {
  // B3: alpha_3 short
  EXPECT_EQ(so(7).cartan()[1][2], -2);
  EXPECT_EQ(so(7).cartan()[2][1], -1);
  // C3: alpha_3 long
  EXPECT_EQ(sp(3).cartan()[1][2], -1);
  EXPECT_EQ(sp(3).cartan()[2][1], -2);
  // G2: alpha_1 long
  auto g2 = algebra_from_name("g2");
  EXPECT_EQ(g2.cartan()[0][1], -3);
  EXPECT_EQ(g2.cartan()[1][0], -1);
  EXPECT_EQ(g2.highest_root(), (Weight{1, 0}));
}

TEST(AlgebraNames, Parse) {
  EXPECT_EQ(algebra_from_name("su(3)"), su(3));
  EXPECT_EQ(algebra_from_name("SU3"), su(3));
  EXPECT_EQ(algebra_from_name("sp2").cartan_type(), "C2");
  EXPECT_EQ(algebra_from_name("so7").cartan_type(), "B3");
  EXPECT_EQ(algebra_from_name("so(8)").cartan_type(), "D4");
  EXPECT_EQ(algebra_from_name("sp1").name(), "sp(1)");
  EXPECT_EQ(algebra_from_name("sp1").cartan_type(), "A1");
  EXPECT_EQ(algebra_from_name("E6").name(), "e6");
  EXPECT_THROW(algebra_from_name("xx3"), ParseError);
  EXPECT_THROW(algebra_from_name("su"), ParseError);
  EXPECT_THROW(algebra_from_name("so4"), DomainError);
}

TEST(WeylDim, Examples) {
  EXPECT_EQ(weyl_dim(su(3), {1, 0}), 3);
  EXPECT_EQ(weyl_dim(so(7), {0, 0, 1}), 8);
  EXPECT_EQ(weyl_dim(algebra_from_name("f4"), {0, 0, 0, 1}), 26);
  EXPECT_EQ(weyl_dim(algebra_from_name("e7"), {0, 0, 0, 0, 0, 0, 1}), 56);
  EXPECT_EQ(weyl_dim(algebra_from_name("e6"), {1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dim(algebra_from_name("g2"), {0, 1}), 7);
  EXPECT_THROW(weyl_dim(su(3), {-1, 0}), DomainError);
  EXPECT_THROW(weyl_dim(su(3), {1}), DomainError);
}

TEST(WeylDim, AdjointEqualsDim) {
  for (const auto& g : all_algebras_up_to(8))
    EXPECT_EQ(weyl_dim(g, g.highest_root()), g.dim()) << g.name();
}

TEST(WeightSystem, Examples) {
  auto ws = weight_system(su(2), {1});
  EXPECT_EQ(ws.multiplicities, (std::map<Weight, std::int64_t>{{{1}, 1}, {{-1}, 1}}));
  auto adj = weight_system(su(2), {2});
  EXPECT_EQ(adj.multiplicities, (std::map<Weight, std::int64_t>{{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
  auto seven = weight_system(algebra_from_name("g2"), {0, 1});
  EXPECT_EQ(seven.multiplicities.size(), 7u);
  EXPECT_EQ(seven.multiplicity({0, 0}), 1);
}

TEST(WeightSystem, CapIsEnforced) {
  EXPECT_THROW(weight_system(algebra_from_name("e8"), {0, 0, 0, 0, 0, 0, 1, 0}), DomainError);
  EXPECT_NO_THROW(weight_system(su(3), {4, 4}, {.dimension_cap = 125}));
  EXPECT_THROW(weight_system(su(3), {4, 4}, {.dimension_cap = 124}), DomainError);
}

// Total multiplicity equals the Weyl dimension and the multiset is closed
// under every simple reflection, for all registry reps up to rank 8.
TEST(WeightSystem, TotalAndWeylClosureForRegistry) {
  for (const auto& g : all_algebras_up_to(8)) {
    for (RepName name : registry_names(g)) {
      auto rep = make_rep(g, name);
      for (const auto& hw : rep.components) {
        auto ws = weight_system(g, hw);
        EXPECT_EQ(Integer(ws.total()), weyl_dim(g, hw)) << g.name() << " " << to_string(name);
        for (const auto& [w, m] : ws.multiplicities)
          for (int i = 0; i < g.rank(); ++i) EXPECT_EQ(ws.multiplicity(g.reflect(w, i)), m) << g.name();
      }
    }
  }
}

TEST(ChargedDim, Examples) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(charged_dim(make_rep(su(n), RepName::Adj)), n * n - n);
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(charged_dim(make_rep(sp(k), RepName::Lambda2Traceless)), 2 * k * k - 2 * k);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(charged_dim(make_rep(sp(k), RepName::Fund, Rational(1, 2))), k);
  EXPECT_EQ(charged_dim(make_rep(algebra_from_name("e7"), RepName::FiftySix, Rational(1, 2))), 28);
}

TEST(ChargedDim, AdjointIsDimMinusRank) {
  for (const auto& g : all_algebras_up_to(8))
    EXPECT_EQ(charged_dim(make_rep(g, RepName::Adj)), Rational(g.dim() - g.rank())) << g.name();
}

// Dimension and zero-weight multiplicity against explicit orthonormal-basis weights.
TEST(ChargedDim, AgreesWithOrthonormalOracle) {
  auto check = [](const Algebra& g, RepName name, oracle::DimZero expected) {
    auto rep = make_rep(g, name);
    EXPECT_EQ(rep_dim(rep), expected.dim) << g.name() << " " << to_string(name);
    EXPECT_EQ(charged_dim(rep), expected.dim - expected.zero) << g.name() << " " << to_string(name);
  };
  for (int n = 2; n <= 7; ++n) {
    check(su(n), RepName::Fund, oracle::su_fund(n));
    check(su(n), RepName::Adj, oracle::su_adj(n));
    if (n >= 4) check(su(n), RepName::Lambda2, oracle::su_lambda2(n));
  }
  for (int k = 1; k <= 6; ++k) {
    check(sp(k), RepName::Fund, oracle::sp_fund(k));
    check(sp(k), RepName::Adj, oracle::sp_adj(k));
    if (k >= 2) check(sp(k), RepName::Lambda2Traceless, oracle::sp_lambda2_traceless(k));
  }
  for (int N = 5; N <= 14; ++N) {
    check(so(N), RepName::Vect, oracle::so_vect(N));
    check(so(N), RepName::Adj, oracle::so_adj(N));
    check(so(N), N % 2 ? RepName::Spin : RepName::SpinPM, oracle::so_spin(N, N % 2 == 0));
  }
  check(algebra_from_name("g2"), RepName::Adj, oracle::exceptional("g2.adj"));
  check(algebra_from_name("g2"), RepName::Seven, oracle::exceptional("g2.7"));
  check(algebra_from_name("f4"), RepName::Adj, oracle::exceptional("f4.adj"));
  check(algebra_from_name("f4"), RepName::TwentySix, oracle::exceptional("f4.26"));
  check(algebra_from_name("e6"), RepName::Adj, oracle::exceptional("e6.adj"));
  check(algebra_from_name("e6"), RepName::TwentySeven, oracle::exceptional("e6.27"));
  check(algebra_from_name("e7"), RepName::Adj, oracle::exceptional("e7.adj"));
  check(algebra_from_name("e7"), RepName::FiftySix, oracle::exceptional("e7.56"));
  check(algebra_from_name("e8"), RepName::Adj, oracle::exceptional("e8.adj"));
}

TEST(ChargedDim, Lambda2OfSp1IsSinglet) {
  auto l2 = make_rep(sp(1), RepName::Lambda2);
  EXPECT_EQ(rep_dim(l2), 1);
  EXPECT_EQ(charged_dim(l2), 0);
  auto l2k = make_rep(sp(3), RepName::Lambda2);
  EXPECT_EQ(rep_dim(l2k), 15);
  EXPECT_EQ(charged_dim(l2k), 12);
}

TEST(MakeRep, RejectsNamesOutsideTheRegistry) {
  EXPECT_THROW(make_rep(su(3), RepName::Vect), DomainError);
  EXPECT_THROW(make_rep(su(3), RepName::Lambda2), DomainError);
  EXPECT_THROW(make_rep(so(8), RepName::Spin), DomainError);
  EXPECT_THROW(make_rep(so(9), RepName::SpinPM), DomainError);
  EXPECT_THROW(make_rep(sp(1), RepName::Lambda2Traceless), DomainError);
  EXPECT_THROW(make_rep(algebra_from_name("e8"), RepName::FiftySix), DomainError);
}

TEST(IdentifyRep, Examples) {
  for (int n = 2; n <= 7; ++n) {
    auto g = su(n);
    auto adj = identify_rep(g, g.highest_root());
    ASSERT_TRUE(adj);
    EXPECT_EQ(adj->name, RepName::Adj);
    Weight w(n - 1, 0);
    w[0] = 1;
    auto fund = identify_rep(g, w);
    ASSERT_TRUE(fund);
    EXPECT_EQ(fund->name, RepName::Fund);
    EXPECT_FALSE(fund->conjugate);
  }
  EXPECT_FALSE(identify_rep(algebra_from_name("g2"), {5, 5}));
}

TEST(IdentifyRep, ConjugatesAndHalfSpins) {
  auto bar = identify_rep(su(5), {0, 0, 0, 1});
  ASSERT_TRUE(bar);
  EXPECT_EQ(bar->name, RepName::Fund);
  EXPECT_TRUE(bar->conjugate);
  auto sp_plus = identify_rep(so(10), {0, 0, 0, 0, 1});
  auto sp_minus = identify_rep(so(10), {0, 0, 0, 1, 0});
  ASSERT_TRUE(sp_plus && sp_minus);
  EXPECT_EQ(sp_plus->name, RepName::SpinPM);
  EXPECT_EQ(sp_minus->name, RepName::SpinPM);
  EXPECT_EQ(charged_dim(*sp_plus), charged_dim(*sp_minus));
  EXPECT_EQ(identify_rep(su(3), {0, 0})->name, RepName::Singlet);
}

// Every weight of a recognized orbit identifies the same representation.
TEST(IdentifyRep, WeylInvariant) {
  for (const auto& g : all_algebras_up_to(6)) {
    for (RepName name : registry_names(g)) {
      auto rep = make_rep(g, name);
      auto expected = identify_rep(g, rep.highest_weight());
      ASSERT_TRUE(expected) << g.name();
      for (const auto& [w, m] : weight_system(g, rep.highest_weight()).multiplicities) {
        if (g.dominant_conjugate(w) != rep.highest_weight()) continue;
        auto got = identify_rep(g, w);
        ASSERT_TRUE(got);
        EXPECT_EQ(got->name, expected->name) << g.name();
      }
    }
  }
}

TEST(Branch, Su3ToSp1) {
  auto e = su_to_sp(3);
  auto terms = branch(e, Weight{1, 0});
  ASSERT_EQ(terms.size(), 2u);
  std::multiset<Weight> highs;
  for (const auto& t : terms) {
    EXPECT_EQ(t.multiplicity, 1);
    highs.insert(t.highest);
  }
  EXPECT_EQ(highs, (std::multiset<Weight>{{0}, {1}}));
}

TEST(Branch, AdjointOfSu4UnderSu3U1) {
  auto e = su_to_su_u1(3);
  auto terms = branch(e, su(4).highest_root());
  std::map<std::pair<int, Weight>, std::int64_t> got;
  for (const auto& t : terms) got[{t.charge, t.highest}] += t.multiplicity;
  std::map<std::pair<int, Weight>, std::int64_t> expected{
      {{0, {1, 1}}, 1}, {{0, {0, 0}}, 1}, {{4, {1, 0}}, 1}, {{-4, {0, 1}}, 1}};
  EXPECT_EQ(got, expected);
}

TEST(Branch, IdentityProjection) {
  for (const auto& g : all_algebras_up_to(5)) {
    auto e = *builtin_embedding(g, g);
    for (RepName name : registry_names(g)) {
      auto rep = make_rep(g, name);
      for (const auto& hw : rep.components) {
        auto terms = branch(e, hw);
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_EQ(terms[0].highest, hw);
        EXPECT_EQ(terms[0].multiplicity, 1);
      }
    }
  }
}

TEST(Branch, BuiltinCoversPreserveDimension) {
  auto dims = [](const Algebra& g, const std::vector<BranchTerm>& ts) {
    std::multiset<std::string> out;
    for (const auto& t : ts)
      for (int i = 0; i < t.multiplicity; ++i) out.insert(weyl_dim(g, t.highest).str());
    return out;
  };
  auto e6 = algebra_from_name("e6"), f4 = algebra_from_name("f4");
  auto e = e6_to_f4();
  EXPECT_EQ(dims(f4, branch(e, make_rep(e6, RepName::TwentySeven))), (std::multiset<std::string>{"1", "26"}));
  EXPECT_EQ(dims(f4, branch(e, make_rep(e6, RepName::Adj))), (std::multiset<std::string>{"26", "52"}));

  auto g2 = algebra_from_name("g2");
  auto s = so8_to_g2();
  EXPECT_EQ(dims(g2, branch(s, make_rep(so(8), RepName::Vect))), (std::multiset<std::string>{"1", "7"}));
  EXPECT_EQ(dims(g2, branch(s, make_rep(so(8), RepName::SpinPM))), (std::multiset<std::string>{"1", "7"}));
  EXPECT_EQ(dims(g2, branch(s, make_rep(so(8), RepName::Adj))), (std::multiset<std::string>{"14", "7", "7"}));

  for (int n = 3; n <= 6; ++n) {
    auto big = so(2 * n + 2), small = so(2 * n + 1);
    auto d = so_even_to_odd(n);
    auto vect = branch(d, make_rep(big, RepName::Vect));
    EXPECT_EQ(dims(small, vect).size(), 2u);
    EXPECT_EQ(total_dim(small, vect), 2 * n + 2);
    auto spin = branch(d, make_rep(big, RepName::SpinPM));
    ASSERT_EQ(spin.size(), 1u);
    EXPECT_EQ(spin[0].highest, make_rep(small, RepName::Spin).highest_weight());
    auto adj = branch(d, make_rep(big, RepName::Adj));
    EXPECT_EQ(total_dim(small, adj), Integer(big.dim()));
    EXPECT_EQ(adj.size(), 2u);
  }

  for (int k = 1; k <= 5; ++k) {
    auto odd = branch(su_to_sp(2 * k + 1), make_rep(su(2 * k + 1), RepName::Fund));
    EXPECT_EQ(odd.size(), 2u) << k;
    auto even = branch(su_to_sp(2 * k), make_rep(su(2 * k), RepName::Fund));
    ASSERT_EQ(even.size(), 1u) << k;
    EXPECT_EQ(even[0].highest, make_rep(sp(k), RepName::Fund).highest_weight());
    auto adj = branch(su_to_sp(2 * k), make_rep(su(2 * k), RepName::Adj));
    EXPECT_EQ(total_dim(sp(k), adj), Integer(4 * k * k - 1));
  }
}

// Charged dimension is preserved once weights sent to zero are accounted for.
TEST(Branch, ChargedDimensionBookkeeping) {
  auto e = so8_to_g2();
  auto g2 = algebra_from_name("g2");
  for (RepName name : {RepName::Vect, RepName::Adj, RepName::SpinPM}) {
    auto rep = make_rep(so(8), name);
    auto ws = weight_system(so(8), rep.highest_weight());
    std::int64_t sent_to_zero = 0;
    for (const auto& [w, m] : ws.multiplicities)
      if (e.apply(w).first == Weight{0, 0}) sent_to_zero += m;
    Integer charged_after = 0;
    for (const auto& t : branch(e, rep)) charged_after += charged_dim(g2, t.highest) * t.multiplicity;
    EXPECT_EQ(charged_after, rep_dim(rep) - sent_to_zero);
  }
}

TEST(Branch, WrongProjectionIsReported) {
  Embedding bad{su(3), su(2), {{1, 2}}, false};
  EXPECT_THROW(branch(bad, Weight{1, 0}), DomainError);
  Embedding shape{su(3), su(2), {{1, 0, 0}}, false};
  EXPECT_THROW(branch(shape, Weight{1, 0}), DomainError);
}

TEST(KatzVafa, Case3ChainGivesFundamental) {
  for (int k = 1; k <= 4; ++k) {
    KatzVafaContext ctx{su_to_su_u1(2 * k + 1), su_to_sp(2 * k + 1), 1, {}};
    auto r = katz_vafa(ctx);
    ASSERT_EQ(r.rho.size(), 1u) << k;
    EXPECT_EQ(r.rho[0].name, RepName::Fund);
    EXPECT_EQ(r.rho[0].prefactor, 1);
    EXPECT_EQ(r.singlet_dim, 1);
    EXPECT_EQ(rep_dim(r.rho[0]), 2 * k);
    EXPECT_EQ(charged_dim(r.rho[0]), 2 * k);
  }
}

TEST(KatzVafa, NoEnhancementGivesNothing) {
  auto r = katz_vafa({});
  EXPECT_TRUE(r.rho.empty());
  EXPECT_EQ(r.singlet_dim, 0);
}

TEST(KatzVafa, RamificationScalesAndHalfRho0IsStripped) {
  KatzVafaContext ctx{su_to_su_u1(5), su_to_sp(5), 2, {}};
  auto r = katz_vafa(ctx);
  ASSERT_EQ(r.rho.size(), 1u);
  EXPECT_EQ(r.rho[0].prefactor, Rational(1, 2));
  EXPECT_EQ(charged_dim(r.rho[0]), 2);

  ctx.b = 1;
  ctx.half_rho0 = {make_rep(sp(2), RepName::Fund, 2)};
  auto stripped = katz_vafa(ctx);
  EXPECT_TRUE(stripped.rho.empty());

  ctx.half_rho0 = {make_rep(sp(2), RepName::Lambda2Traceless)};
  EXPECT_THROW(katz_vafa(ctx), DomainError);
}
