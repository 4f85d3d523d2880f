#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

namespace
{

LocalizationReport check(Catalog const &cat, std::string const &h, std::string const &g)
{
  auto hd = cat.data(h);
  auto gd = cat.data(g);
  auto phi = literal_inclusion(*hd, *gd);
  if (!phi)
    phi = first_mono(*hd, *gd);
  return check_localization(*hd, *gd, *phi);
}

} // namespace

TEST(Localization, A5IntoA6)
{
  auto r = check(shipped_catalog(), "A5", "A6");
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.hom_gg_count, 1441u);
  EXPECT_EQ(r.hom_hg_count, 1441u);
  EXPECT_EQ(r.aut_g_order, 1440u);
  ASSERT_TRUE(r.mono_orbit_count.has_value());
  EXPECT_EQ(*r.mono_orbit_count, 1u);
}

TEST(Localization, IdentityIsALocalization)
{
  auto a5 = shipped_catalog().data("A5");
  auto id = make_hom(a5->group(), a5->group(), a5->group()->generators());
  auto r = check_localization(*a5, *a5, id);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.hom_gg_count, 121u);
}

TEST(Localization, TrivialTargetIsALocalization)
{
  // both Hom sets consist of the trivial map alone
  auto a5 = data("A5", alternating(5));
  auto one = data("1", make_group({Permutation(1)}));
  auto triv = make_hom(a5->group(), one->group(), {Permutation(1), Permutation(1)});
  auto r = check_localization(*a5, *one, triv);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.hom_gg_count, 1u);
  EXPECT_EQ(r.hom_hg_count, 1u);
}

TEST(Localization, IntoCyclicTargetIsNot)
{
  // Hom(A5, C7) is trivial but C7 has 7 endomorphisms
  auto a5 = data("A5", alternating(5));
  auto c7 = data("C7", make_group({cyc(7, "(1,2,3,4,5,6,7)")}));
  auto triv = make_hom(a5->group(), c7->group(), {Permutation(7), Permutation(7)});
  auto r = check_localization(*a5, *c7, triv);
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_EQ(r.hom_gg_count, 7u);
  EXPECT_EQ(r.hom_hg_count, 1u);
}

TEST(Localization, A4IntoA5FailsWithCheckableWitness)
{
  auto a5 = data("A5", alternating(5));
  auto a4 = data("A4", make_group({cyc(5, "(1,2,3)"), cyc(5, "(2,3,4)")}));
  auto phi = make_hom(a4->group(), a5->group(), a4->group()->generators());
  auto r = check_localization(*a4, *a5, phi);
  EXPECT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.surjectivity_witness.has_value());
  // no endomorphism of A5 restricts to the witness
  auto w = r.hom_hg->images(*r.surjectivity_witness);
  auto e = a5->enumerated();
  for (std::size_t i = 0; i < r.hom_gg->count(); ++i) {
    std::vector<Permutation> letters;
    for (auto const &x : r.hom_gg->images(i)) {
      letters.push_back(x);
      letters.push_back(x.inverse());
    }
    std::vector<Permutation> restricted;
    for (auto const &x : phi.images)
      restricted.push_back(e->apply_letters(letters, e->index().index_of(x)));
    EXPECT_NE(restricted, w);
  }
}

TEST(Localization, DiagonalIsNotInjectiveOnEndomorphisms)
{
  // restriction of Hom(S3,S3) to a transposition is not injective
  auto s3 = data("S3", symmetric(3));
  auto c2 = data("C2", make_group({cyc(3, "(1,2)")}));
  auto phi = make_hom(c2->group(), s3->group(), {cyc(3, "(1,2)")});
  auto r = check_localization(*c2, *s3, phi);
  EXPECT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.injectivity_witness.has_value());
  auto [i, j] = *r.injectivity_witness;
  EXPECT_NE(r.hom_gg->images(i), r.hom_gg->images(j));
  EXPECT_EQ(r.restriction[i], r.restriction[j]);
}

TEST(Covers, SL25IsTheUniversalCover)
{
  auto const &cat = shipped_catalog();
  auto e = cat.extension("SL2(5)");
  EXPECT_TRUE(verify_universal_cover(e));
  EXPECT_EQ(e.kernel->order(), 2u);
  auto r = check_localization(*e.total, *e.quotient, e.proj);
  EXPECT_EQ(r.verdict, Verdict::yes);
}

TEST(Covers, CoverDoesNotSplit)
{
  // the only hom from the quotient to its cover is trivial
  auto const &cat = shipped_catalog();
  for (auto const &c : {"SL2(5)", "SL2(7)"}) {
    auto e = cat.extension(c);
    EXPECT_EQ(e.total->homs_from(e.quotient->domain()).count(), 1u) << c;
  }
}

TEST(Covers, IdentityLiftsToIdentity)
{
  auto const &cat = shipped_catalog();
  auto e = cat.extension("SL2(5)");
  auto id = make_hom(e.quotient->group(), e.quotient->group(), e.quotient->group()->generators());
  auto beta = induced_cover_hom(id, e, e);
  EXPECT_EQ(beta.images, e.total->group()->generators());
  auto triv = make_hom(e.quotient->group(), e.quotient->group(),
                       {Permutation(e.quotient->group()->degree()), Permutation(e.quotient->group()->degree())});
  EXPECT_TRUE(induced_cover_hom(triv, e, e).is_trivial());
}

TEST(Covers, AutomorphismsLiftBijectively)
{
  auto e = shipped_catalog().extension("SL2(5)");
  auto c = compare_cover_automorphisms(e);
  EXPECT_EQ(c.aut_quotient, 120u);
  EXPECT_EQ(c.aut_total, 120u);
  EXPECT_TRUE(c.bijective);
}

TEST(Covers, A6ContainsNoCentralExtensionOfA5)
{
  auto const &cat = shipped_catalog();
  auto s = contains_central_extension_of(*cat.data("A6"), cat.extension("SL2(5)"));
  EXPECT_FALSE(s.contains);
}

TEST(Covers, TrivialMultiplierIsVacuous)
{
  auto const &cat = shipped_catalog();
  auto m11 = cat.data("M11");
  auto s = contains_central_extension_of(*cat.data("A5"), identity_extension(m11));
  EXPECT_FALSE(s.contains);
}

TEST(Covers, MakeCentralExtensionRejectsNonCentralKernel)
{
  // S3 -> C2 has kernel C3, which is not central
  auto s3 = data("S3", symmetric(3));
  auto c2 = data("C2", make_group({cyc(2, "(1,2)")}));
  EXPECT_THROW(make_central_extension(s3, c2, {cyc(2, "(1,2)"), cyc(2, "(1,2)")}), ValidationError);
}

TEST(Audits, A5)
{
  auto a5 = shipped_catalog().data("A5");
  auto n = audit_normal_subgroups_contain_inn(*a5);
  EXPECT_TRUE(n.ok);
  EXPECT_GT(n.checked, 0u);
  auto m = audit_simple_monos_in_inn(*a5, *a5);
  EXPECT_TRUE(m.ok);
  EXPECT_EQ(m.checked, 120u);
}

TEST(Audits, AbelianSimpleIsAPreconditionViolation)
{
  auto c5 = data("C5", make_group({cyc(5, "(1,2,3,4,5)")}));
  EXPECT_THROW(audit_normal_subgroups_contain_inn(*c5), PreconditionError);
}

TEST(AutExtension, A7IntoA8)
{
  auto const &cat = shipped_catalog();
  auto loc = check(cat, "A7", "A8");
  ASSERT_EQ(loc.verdict, Verdict::yes);
  auto r = check_aut_localization(loc, *cat.data("A7"), *cat.data("A8"), *cat.data("S7"), *cat.data("S8"));
  EXPECT_EQ(r.out_h, 2u);
  EXPECT_EQ(r.out_g, 2u);
  EXPECT_TRUE(r.hypothesis_holds);
  ASSERT_TRUE(r.aut_level.has_value());
  EXPECT_EQ(r.aut_level->verdict, Verdict::yes);
}

TEST(AutExtension, NeedsAVerifiedLocalization)
{
  auto a5 = data("A5", alternating(5));
  auto a4 = data("A4", make_group({cyc(5, "(1,2,3)"), cyc(5, "(2,3,4)")}));
  auto loc = check_localization(*a4, *a5, make_hom(a4->group(), a5->group(), a4->group()->generators()));
  auto s5 = data("S5", symmetric(5));
  EXPECT_THROW(extend_to_aut(loc, *a4, *a5, *s5, *s5), PreconditionError);
}
