#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

namespace
{

HomSet homs(GroupData const &k, GroupData const &g, HomSearchOptions opt = {})
{ return g.homs_from(k.domain(), opt); }

} // namespace

TEST(HomSearch, EndomorphismsOfA5)
{
  auto a5 = data("A5", alternating(5));
  auto hs = homs(*a5, *a5);
  EXPECT_EQ(hs.count(), 121u);
  EXPECT_EQ(hs.mono_count, 120u);
  EXPECT_EQ(count_homs_brute_force(*a5->group(), *a5->enumerated()), 121u);
  EXPECT_EQ(hs.class_equation_total(), hs.count());
}

TEST(HomSearch, TrivialSource)
{
  auto t = data("1", make_group({Permutation(3)}));
  auto a5 = data("A5", alternating(5));
  EXPECT_EQ(homs(*t, *a5).count(), 1u);
  EXPECT_EQ(homs(*a5, *t).count(), 1u);
}

TEST(HomSearch, EveryResultPassesTheGraphTest)
{
  auto s4 = data("S4", symmetric(4));
  auto a5 = data("A5", alternating(5));
  auto hs = homs(*s4, *a5);
  for (std::size_t i = 0; i < hs.count(); ++i)
    EXPECT_TRUE(graph_test(*s4->group(), hs.images(i)));
  EXPECT_EQ(hs.count(), count_homs_brute_force(*s4->group(), *a5->enumerated()));
}

TEST(HomSearch, PruningOptionsDoNotChangeTheSet)
{
  auto const &cat = shipped_catalog();
  auto l32 = cat.data("L3(2)");
  auto s5 = cat.data("S5");
  auto base = homs(*l32, *l32);
  for (bool seed : {false, true})
    for (bool rel : {false, true})
      for (bool words : {false, true}) {
        HomSearchOptions o;
        o.class_seeding = seed;
        o.use_relators = rel;
        o.short_word_pruning = words;
        auto hs = homs(*l32, *l32, o);
        ASSERT_EQ(hs.count(), base.count());
        for (std::size_t i = 0; i < hs.count(); ++i)
          EXPECT_EQ(hs.images(i), base.images(i));
      }
  EXPECT_EQ(homs(*s5, *s5).count(), count_homs_brute_force(*s5->group(), *s5->enumerated()));
}

TEST(HomSearch, WorkerCountDoesNotChangeResults)
{
  auto const &cat = shipped_catalog();
  auto l32 = cat.data("L3(2)");
  auto a8 = cat.data("A8");
  HomSearchOptions one, many;
  many.workers = 4;
  auto x = homs(*l32, *a8, one);
  auto y = homs(*l32, *a8, many);
  ASSERT_EQ(x.count(), y.count());
  EXPECT_EQ(x.flat, y.flat);
}

TEST(HomSearch, OracleEquivalenceOnSmallCatalogTargets)
{
  // catalog pairs with |K|, |G| <= 400: pruned search = brute force
  auto const &cat = shipped_catalog();
  std::vector<std::string> small;
  for (auto const &e : cat.entries())
    if (e.order <= 400 && cat.config().tier_enabled(e.tier))
      small.push_back(e.name);
  ASSERT_GE(small.size(), 5u);
  for (auto const &g : small)
    for (auto const &k : small) {
      auto kd = cat.data(k);
      auto gd = cat.data(g);
      auto hs = homs(*kd, *gd);
      EXPECT_EQ(hs.count(), count_homs_brute_force(*kd->group(), *gd->enumerated())) << k << " -> " << g;
    }
}

TEST(HomSearch, InjectiveCountsAndAutomorphisms)
{
  auto const &cat = shipped_catalog();
  auto l32 = cat.data("L3(2)");
  auto a8 = cat.data("A8");
  auto hs = homs(*l32, *a8);
  // 360 image subgroups, each hit |Aut(L3(2))| = 336 times
  EXPECT_EQ(hs.mono_count, 360u * 336u);
  EXPECT_EQ(hs.count(), hs.mono_count + 1);
}

TEST(HomSearch, FindAndCompose)
{
  auto a5 = data("A5", alternating(5));
  auto hs = homs(*a5, *a5);
  auto e = a5->enumerated();
  for (std::size_t i = 0; i < hs.count(); i += 17) {
    auto f = hs.hom(i);
    auto id = make_hom(a5->group(), a5->group(), a5->group()->generators());
    auto c = compose_hom(id, f, *e);
    EXPECT_EQ(c.images, f.images);
    auto j = hs.find(f.images);
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(*j, i);
  }
  auto trivial = hs.hom(0);
  EXPECT_TRUE(trivial.is_trivial());
  EXPECT_TRUE(compose_hom(trivial, hs.hom(5), *e).is_trivial());
}

TEST(HomSearch, OrbitStabilizerOnRestrictions)
{
  // restrictions of Aut(A5) to A4 inside A5: 120 / |{fixing A4 pointwise}| = 120 distinct maps
  auto a5 = data("A5", alternating(5));
  auto a4 = make_group({cyc(5, "(1,2,3)"), cyc(5, "(2,3,4)")});
  auto hs = homs(*a5, *a5);
  auto e = a5->enumerated();
  std::set<std::vector<Permutation>> restricted;
  std::size_t fixing = 0;
  for (std::size_t i = 0; i < hs.count(); ++i) {
    if (!hs.is_mono(i))
      continue;
    std::vector<Permutation> letters;
    for (auto const &x : hs.images(i)) {
      letters.push_back(x);
      letters.push_back(x.inverse());
    }
    std::vector<Permutation> imgs;
    for (auto const &x : a4->generators())
      imgs.push_back(e->apply_letters(letters, e->index().index_of(x)));
    if (imgs == a4->generators())
      ++fixing;
    restricted.insert(imgs);
  }
  EXPECT_EQ(fixing, 1u);
  EXPECT_EQ(restricted.size(), 120u / fixing);
}

TEST(HomSearch, MakeHomRejectsNonHoms)
{
  auto a5 = alternating(5);
  EXPECT_THROW(make_hom(a5, a5, {cyc(5, "(1,2,3)"), cyc(5, "(1,2,3)")}), ValidationError);
  EXPECT_THROW(make_hom(a5, a5, {cyc(5, "(1,2,3)")}), PreconditionError);
}
