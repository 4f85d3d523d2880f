#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

namespace
{

std::vector<std::string> const ab{"a", "b"};

std::uint64_t order_of(std::vector<std::string> names, std::vector<std::string> const &rels,
                       std::size_t cap = default_coset_cap)
{ return todd_coxeter(Presentation::parse(std::move(names), rels), cap); }

} // namespace

TEST(Word, ParseAndReduce)
{
  EXPECT_TRUE(parse_word("", ab).empty());
  EXPECT_TRUE(parse_word("a*a^-1", ab).freely_reduced().empty());
  EXPECT_EQ(parse_word("(a*b)^2", ab).letters(), (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(parse_word("[a,b]", ab).letters(), (std::vector<int>{-1, -2, 1, 2}));
  EXPECT_EQ(parse_word("a b^-1", ab).letters(), (std::vector<int>{1, -2}));
  EXPECT_THROW(parse_word("c", ab), ParseError);
  EXPECT_THROW(parse_word("(a*b", ab), ParseError);
}

TEST(Word, EvaluateMatchesStepwiseComposition)
{
  std::vector<Permutation> imgs{cyc(5, "(1,2)"), cyc(5, "(1,2,3,4,5)")};
  EXPECT_TRUE(evaluate(Word(), imgs).is_identity());
  EXPECT_TRUE(evaluate(parse_word("a*a^-1", ab), imgs).is_identity());
  Permutation step(5);
  for (int i = 0; i < 5; ++i)
    step = step * imgs[0] * imgs[1];
  EXPECT_EQ(evaluate(parse_word("(a*b)^5", ab), imgs), step);
}

TEST(ToddCoxeter, SmallPresentations)
{
  EXPECT_EQ(order_of(ab, {"a^2", "b^3", "(a*b)^5"}), 60u);
  EXPECT_EQ(order_of({"a"}, {"a"}), 1u);
  EXPECT_EQ(order_of(ab, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"}), 168u);
  EXPECT_EQ(order_of(ab, {"a^2", "b^2", "(a*b)^6"}), 12u);
  EXPECT_EQ(order_of({"a"}, {"a^17"}), 17u);
}

TEST(ToddCoxeter, BothStrategiesAgree)
{
  auto p = Presentation::parse(ab, {"a^2", "b^3", "(a*b)^7", "[a,b]^4"});
  CosetEnumerationStats hlt, felsch;
  EXPECT_EQ(detail::CosetTable(2, p.relators, default_coset_cap).run(hlt), 168u);
  EXPECT_EQ(detail::CosetTable(2, p.relators, default_coset_cap).run_felsch(felsch), 168u);
}

TEST(ToddCoxeter, CapExceededOnInfiniteGroups)
{
  // the (2,3,7) triangle group is infinite
  EXPECT_THROW(order_of(ab, {"a^2", "b^3", "(a*b)^7"}, 20000), CapExceeded);
  EXPECT_THROW(order_of({"a"}, {}, 1000), CapExceeded);
}

TEST(Certify, AlternatingFive)
{
  auto a5 = alternating(5);
  std::vector<Permutation> imgs{cyc(5, "(1,2)(3,4)"), cyc(5, "(1,3,5)")};
  auto p = certify(Presentation::parse(ab, {"a^2", "b^3", "(a*b)^5"}), *a5, imgs);
  EXPECT_EQ(p.certified_order, 60u);
  EXPECT_EQ(p.method, CertificationMethod::todd_coxeter);
}

TEST(Certify, Failures)
{
  auto pres = Presentation::parse(ab, {"a^2", "b^3", "(a*b)^5"});
  std::vector<Permutation> a5imgs{cyc(6, "(1,2)(3,4)"), cyc(6, "(1,3,5)")};
  auto a6 = alternating(6);
  EXPECT_THROW(certify(pres, *a6, a5imgs), GenerationFails);
  std::vector<Permutation> bad{cyc(5, "(1,2)(3,4)"), cyc(5, "(1,2,3,4)")};
  EXPECT_THROW(certify(pres, *symmetric(5), bad), RelatorFails);
  // relators hold and the image generates, but the presented group is larger
  auto c4 = PermGroup({cyc(4, "(1,2,3,4)")});
  EXPECT_THROW(certify(Presentation::parse({"a"}, {"a^8"}), c4, {cyc(4, "(1,2,3,4)")}), OrderMismatch);
}
