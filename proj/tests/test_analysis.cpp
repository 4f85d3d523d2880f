#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

TEST(Analysis, DerivedSubgroupAndPerfectness)
{
  auto a5 = alternating(5);
  auto s5 = symmetric(5);
  EXPECT_EQ(derived_subgroup(a5).order(), 60u);
  EXPECT_EQ(derived_subgroup(s5).order(), 60u);
  auto c6 = make_group({cyc(6, "(1,2,3,4,5,6)")});
  EXPECT_EQ(derived_subgroup(c6).order(), 1u);
  EXPECT_TRUE(is_perfect(a5));
  EXPECT_FALSE(is_perfect(s5));
}

TEST(Analysis, SuperperfectNeedsCatalogMultiplier)
{
  auto a5 = alternating(5);
  EXPECT_THROW(is_superperfect_certified(a5, std::nullopt), MissingCatalogDatum);
  EXPECT_FALSE(is_superperfect_certified(a5, AbelianInvariants{2}));
  auto const &cat = shipped_catalog();
  EXPECT_TRUE(is_superperfect_certified(cat.group("M11"), cat.entry("M11").mult));
}

TEST(Analysis, Center)
{
  EXPECT_EQ(center(EnumeratedGroup(alternating(5))).order(), 1u);
  auto c6 = make_group({cyc(6, "(1,2,3,4,5,6)")});
  EXPECT_EQ(center(EnumeratedGroup(c6)).order(), 6u);
  auto const &cat = shipped_catalog();
  EXPECT_EQ(cat.data("SL2(5)")->center_subgroup().order(), 2u);
}

TEST(Analysis, ConjugacyClasses)
{
  EnumeratedGroup a5(alternating(5));
  auto cc = conjugacy_classes(a5);
  auto sizes = cc.sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(cc.reps.front(), 0u);

  EnumeratedGroup s3(symmetric(3));
  auto c3 = conjugacy_classes(s3);
  sizes = c3.sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 2, 3}));

  EnumeratedGroup t(make_group({Permutation(3)}));
  EXPECT_EQ(conjugacy_classes(t).size(), 1u);
}

TEST(Analysis, ClassConjugatorsAreWitnesses)
{
  EnumeratedGroup s5(symmetric(5));
  auto cc = conjugacy_classes(s5);
  auto const &idx = s5.index();
  for (ElementId x = 0; x < s5.size(); ++x) {
    auto g = idx.element(cc.conjugator[x]);
    auto rep = idx.element(cc.reps[cc.class_of[x]]);
    EXPECT_EQ(conjugate(g, rep), idx.element(x));
  }
}

TEST(Analysis, NormalClosure)
{
  auto s5 = symmetric(5);
  EXPECT_EQ(normal_closure(s5, {cyc(5, "(1,2,3)")}).order(), 60u);
  EXPECT_EQ(normal_closure(s5, {Permutation(5)}).order(), 1u);
  auto a5 = alternating(5);
  EnumeratedGroup e(a5);
  for (ElementId x = 1; x < e.size(); x += 11)
    EXPECT_EQ(normal_closure(a5, {e.index().element(x)}).order(), 60u);
}

TEST(Analysis, Simplicity)
{
  EXPECT_TRUE(is_simple(EnumeratedGroup(alternating(5))));
  EXPECT_FALSE(is_simple(EnumeratedGroup(symmetric(5))));
  EXPECT_TRUE(is_simple(EnumeratedGroup(make_group({cyc(7, "(1,2,3,4,5,6,7)")}))));
  EXPECT_FALSE(is_simple(EnumeratedGroup(make_group({Permutation(2)}))));
  EXPECT_TRUE(is_simple(EnumeratedGroup(alternating(6))));
}

TEST(Analysis, Maximality)
{
  auto a6 = alternating(6);
  EnumeratedGroup e(a6);
  auto stab = make_subgroup(a6, {cyc(6, "(1,2,3)"), cyc(6, "(1,2,3,4,5)")});
  EXPECT_TRUE(is_maximal(stab, e));
  auto a4 = make_subgroup(a6, {cyc(6, "(1,2,3)"), cyc(6, "(2,3,4)")});
  EXPECT_FALSE(is_maximal(a4, e));
  auto whole = make_subgroup(a6, a6->generators());
  EXPECT_THROW(is_maximal(whole, e), PreconditionError);
}

TEST(Analysis, SubgroupConjugacy)
{
  auto a8 = alternating(8);
  auto s8 = symmetric(8);
  EnumeratedGroup a8e(a8);
  EnumeratedGroup s8e(s8);
  auto const &cat = shipped_catalog();
  // a conjugate of a subgroup is conjugate to it
  auto k = make_subgroup(a8, {cyc(8, "(1,2,3)"), cyc(8, "(1,2)(4,5)")});
  auto g = cyc(8, "(1,5,7)(2,8,3)");
  std::vector<Permutation> kg;
  for (auto const &x : k.gens)
    kg.push_back(conjugate(g, x));
  auto w = subgroups_conjugate(k, make_subgroup(a8, kg), a8e);
  EXPECT_TRUE(w.conjugate);
  ASSERT_TRUE(w.witness.has_value());

  // L3(2) fixing a point versus L3(2) transitive on 8 points
  auto l32 = cat.group("L3(2)");
  ASSERT_EQ(l32->degree(), 8u);
  auto transitive = make_subgroup(a8, l32->generators());
  auto fixing = make_subgroup(a8, {cyc(8, "(3,4,5)(6,7,8)"), cyc(8, "(2,3)(5,6)")});
  EXPECT_EQ(fixing.group->orbit(0).size(), 1u);
  ASSERT_EQ(fixing.order(), 168u);
  ASSERT_EQ(transitive.order(), 168u);
  EXPECT_FALSE(subgroups_conjugate(transitive, fixing, a8e).conjugate);
  EXPECT_FALSE(subgroups_conjugate(make_subgroup(s8, transitive.gens), make_subgroup(s8, fixing.gens), s8e)
                 .conjugate);
}
