#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

namespace
{

// every permutation of {0..n-1}
std::vector<Permutation> all_perms(std::size_t n)
{
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Point>(i);
  std::vector<Permutation> out;
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// closure of gens under right multiplication
std::set<Permutation> closure(std::vector<Permutation> const &gens)
{
  std::set<Permutation> seen{Permutation(gens.front().degree())};
  std::vector<Permutation> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (auto const &g : gens) {
      auto y = x * g;
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

} // namespace

TEST(Permutation, CycleStringsRoundTrip)
{
  auto p = cyc(6, "(1,3,5)(2,4)");
  EXPECT_EQ(p.to_cycle_string(), "(1,3,5)(2,4)");
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
  EXPECT_EQ(cyc(5, "()").to_cycle_string(), "()");
  EXPECT_EQ(cyc(5, " (1, 2)(3,4,5) ").to_cycle_string(), "(1,2)(3,4,5)");
}

TEST(Permutation, ParseErrors)
{
  EXPECT_THROW(cyc(3, "(1,4)"), ParseError);
  EXPECT_THROW(cyc(3, "(1,2,1)"), ParseError);
  EXPECT_THROW(cyc(3, "(1,2"), ParseError);
  EXPECT_THROW(cyc(3, "(1,2)(2,3)"), ParseError);
  EXPECT_THROW(cyc(3, "x"), ParseError);
}

TEST(Permutation, IdentityAndInverse)
{
  auto p = cyc(5, "(1,2,3,4,5)");
  Permutation id(5);
  EXPECT_EQ(compose(id, p), p);
  EXPECT_EQ(compose(p, id), p);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(p.order(), 5u);
  EXPECT_EQ(cyc(7, "(1,2)(3,4,5)").order(), 6u);
}

TEST(Permutation, ComposeAppliesRightFactorFirst)
{
  // exhaustive over S3 against pointwise evaluation
  auto s3 = all_perms(3);
  for (auto const &a : s3)
    for (auto const &b : s3) {
      auto c = compose(a, b);
      for (Point x = 0; x < 3; ++x)
        EXPECT_EQ(c[x], a[b[x]]);
    }
  EXPECT_EQ(compose(cyc(3, "(1,2,3)"), cyc(3, "(1,2)")).to_cycle_string(), "(1,3)");
}

TEST(Permutation, DegreeMismatch)
{
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), DegreeMismatch);
  EXPECT_THROW(PermGroup({Permutation(3), Permutation(4)}), DegreeMismatch);
}

TEST(PermGroup, OrdersMatchClosure)
{
  auto a5 = make_group({cyc(5, "(1,2,3,4,5)"), cyc(5, "(3,4,5)")});
  EXPECT_EQ(a5->order(), 60u);
  EXPECT_EQ(closure(a5->generators()).size(), 60u);
  EXPECT_EQ(PermGroup({Permutation(6)}).order(), 1u);
  for (std::size_t n = 3; n <= 7; ++n) {
    EXPECT_EQ(symmetric(n)->order(), closure(symmetric(n)->generators()).size());
    EXPECT_EQ(alternating(n)->order(), closure(alternating(n)->generators()).size());
  }
}

TEST(PermGroup, Membership)
{
  auto a5 = alternating(5);
  EXPECT_TRUE(a5->contains(cyc(5, "(1,2)(3,4)")));
  EXPECT_FALSE(a5->contains(cyc(5, "(1,2)")));
  EXPECT_TRUE(a5->contains(Permutation(5)));
  // sifting agrees with a sign check on all of S5
  for (auto const &p : all_perms(5)) {
    std::size_t inversions = 0;
    for (Point i = 0; i < 5; ++i)
      for (Point j = i + 1; j < 5; ++j)
        inversions += p[i] > p[j];
    EXPECT_EQ(a5->contains(p), inversions % 2 == 0);
  }
}

TEST(PermGroup, ElementsAndOrbits)
{
  auto a5 = alternating(5);
  std::set<Permutation> seen;
  a5->for_each_element([&](Permutation const &p) { seen.insert(p); });
  EXPECT_EQ(seen.size(), 60u);
  EXPECT_EQ(a5->orbit(0).size(), 5u);
  auto c = make_group({cyc(5, "(1,2)"), cyc(5, "(3,4,5)")});
  EXPECT_EQ(c->orbit(0).size(), 2u);
  EXPECT_EQ(c->orbit(4).size(), 3u);
}

TEST(PermGroup, DirectProduct)
{
  auto a5 = alternating(5);
  EXPECT_EQ(direct_product(*a5, PermGroup::trivial(1)).order(), 60u);
  EXPECT_EQ(direct_product(*a5, *a5).order(), 3600u);
  auto c2 = PermGroup({cyc(2, "(1,2)")});
  auto c3 = PermGroup({cyc(3, "(1,2,3)")});
  EXPECT_EQ(direct_product(c2, c3).order(), 6u);
}

TEST(ElementIndex, RowsAreSortedWithIdentityFirst)
{
  EnumeratedGroup t(make_group({Permutation(4)}));
  EXPECT_EQ(t.size(), 1u);
  EnumeratedGroup a5(alternating(5));
  ASSERT_EQ(a5.size(), 60u);
  EXPECT_TRUE(a5.index().element(0).is_identity());
  for (ElementId i = 1; i < a5.size(); ++i)
    EXPECT_LT(a5.index().element(i - 1), a5.index().element(i));
  for (ElementId i = 0; i < a5.size(); ++i) {
    EXPECT_EQ(a5.index().index_of(a5.index().element(i)), i);
    EXPECT_EQ(a5.index().element_order(i), a5.index().element(i).order());
  }
}

TEST(ElementIndex, WordsReachEveryElement)
{
  EnumeratedGroup a5(alternating(5));
  auto const &gens = a5.group().generators();
  for (ElementId x = 0; x < a5.size(); ++x) {
    auto w = Word(a5.word(x));
    EXPECT_EQ(evaluate(w, gens), a5.index().element(x));
    EXPECT_EQ(a5.apply(gens, x), a5.index().element(x));
  }
  for (ElementId x = 0; x < a5.size(); x += 7)
    for (ElementId y = 0; y < a5.size(); y += 5)
      EXPECT_EQ(a5.index().element(a5.multiply(x, y)), a5.index().element(x) * a5.index().element(y));
}

TEST(ElementIndex, CapExceeded)
{
  EXPECT_THROW(EnumeratedGroup(alternating(12)), CapExceeded);
  EXPECT_THROW(EnumeratedGroup(alternating(6), 100), CapExceeded);
}
