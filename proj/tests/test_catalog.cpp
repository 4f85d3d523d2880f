#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"

using namespace grouploc;
using namespace grouploc::testing;

namespace fs = std::filesystem;

namespace
{

std::string const small_catalog = R"json({
 "schema_version": 1,
 "groups": [
  {"name": "A5", "aliases": ["L2(4)"], "order": 60, "degree": 5,
   "generators": ["(1,2,4)", "(2,3)(4,5)"],
   "presentation": {"generators": ["a", "b"], "relators": ["a^3", "b^2", "(a*b)^5"]},
   "mult": [2], "out_order": 2, "simple": true, "tier": "core"},
  {"name": "S5", "order": 120, "degree": 5,
   "generators": ["(1,2)", "(1,2,3,4,5)"], "tier": "stretch"}
 ]
})json";

struct ScratchDir
{
  fs::path path;
  ScratchDir()
  {
    std::random_device rd;
    path = fs::temp_directory_path() / ("grouploc-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~ScratchDir() { fs::remove_all(path); }
};

std::string with(std::string text, std::string const &from, std::string const &to)
{
  text.replace(text.find(from), from.size(), to);
  return text;
}

} // namespace

TEST(Catalog, ShippedCoreEntriesValidate)
{
  auto const &cat = shipped_catalog();
  ASSERT_FALSE(cat.validation().empty());
  for (auto const &v : cat.validation()) {
    EXPECT_TRUE(v.ok) << v.name << ": " << v.reason;
    EXPECT_EQ(v.bsgs_order, cat.entry(v.name).order) << v.name;
  }
  for (auto const &name : {"A5", "A6", "A7", "A8", "S5", "S6", "S7", "S8", "L3(2)", "PGL2(7)", "L2(8)",
                           "L2(11)", "U3(3)", "G2(2)", "SL2(5)", "SL2(7)", "M11", "M12"})
    EXPECT_TRUE(cat.has(name)) << name;
}

TEST(Catalog, AliasesResolve)
{
  auto const &cat = shipped_catalog();
  EXPECT_EQ(cat.entry("L2(7)").name, "L3(2)");
  EXPECT_THROW(cat.entry("no such group"), PreconditionError);
}

TEST(Catalog, TierFilter)
{
  RunConfig cfg;
  auto cat = load_catalog_text(small_catalog, cfg);
  ASSERT_EQ(cat.validation().size(), 1u);
  EXPECT_EQ(cat.validation()[0].name, "A5");
  ASSERT_TRUE(cat.validation()[0].certified_order.has_value());
  EXPECT_EQ(*cat.validation()[0].certified_order, 60u);
  cfg.tier = "stretch";
  EXPECT_EQ(load_catalog_text(small_catalog, cfg).validation().size(), 2u);
}

TEST(Catalog, WrongOrderIsAValidationError)
{
  RunConfig cfg;
  auto bad = with(small_catalog, "\"order\": 60", "\"order\": 61");
  EXPECT_THROW(load_catalog_text(bad, cfg), ValidationError);
  auto lax = load_catalog_text(bad, cfg, false);
  ASSERT_EQ(lax.validation().size(), 1u);
  EXPECT_FALSE(lax.validation()[0].ok);
}

TEST(Catalog, BadPresentationIsAValidationError)
{
  RunConfig cfg;
  auto bad = with(small_catalog, "\"(a*b)^5\"", "\"(a*b)^7\"");
  EXPECT_THROW(load_catalog_text(bad, cfg), ValidationError);
}

TEST(Catalog, ParseErrors)
{
  RunConfig cfg;
  EXPECT_THROW(load_catalog_text("{", cfg), ParseError);
  EXPECT_THROW(load_catalog_text(R"({"schema_version": 99, "groups": []})", cfg), ParseError);
  EXPECT_THROW(load_catalog_text(with(small_catalog, "\"tier\": \"stretch\"", "\"tier\": \"gold\""), cfg),
               ParseError);
  EXPECT_THROW(load_catalog_text(with(small_catalog, "\"degree\": 5,\n   \"generators\": [\"(1,2)\"",
                                      "\"generators\": [\"(1,2)\""),
                                 cfg),
               ParseError);
  EXPECT_THROW(load_catalog("/nonexistent/catalog.json", cfg), ParseError);
}

TEST(Catalog, EmptyCatalogWarns)
{
  RunConfig cfg;
  auto cat = load_catalog_text(R"({"schema_version": 1, "groups": []})", cfg);
  EXPECT_TRUE(cat.entries().empty());
  ASSERT_EQ(cat.warnings().size(), 1u);
}

TEST(Catalog, CacheRoundTripIsIdentical)
{
  ScratchDir dir;
  RunConfig cfg;
  cfg.cache_dir = dir.path.string();
  auto first = load_catalog_text(small_catalog, cfg);
  EXPECT_FALSE(first.from_cache());
  auto second = load_catalog_text(small_catalog, cfg);
  EXPECT_TRUE(second.from_cache());
  EXPECT_EQ(detail::validation_to_json(first.validation()), detail::validation_to_json(second.validation()));
  // revalidating without the cache gives the same result again
  RunConfig nocache;
  auto third = load_catalog_text(small_catalog, nocache);
  EXPECT_EQ(detail::validation_to_json(first.validation()), detail::validation_to_json(third.validation()));
  // a different catalog text does not reuse the cache
  auto other = load_catalog_text(with(small_catalog, "L2(4)", "PSL2(4)"), cfg);
  EXPECT_FALSE(other.from_cache());
  std::size_t files = 0;
  for (auto const &f : fs::directory_iterator(dir.path)) {
    EXPECT_EQ(f.path().extension(), ".json");
    ++files;
  }
  EXPECT_EQ(files, 2u);
}

TEST(Catalog, CorruptCacheIsIgnored)
{
  ScratchDir dir;
  RunConfig cfg;
  cfg.cache_dir = dir.path.string();
  load_catalog_text(small_catalog, cfg);
  for (auto const &f : fs::directory_iterator(dir.path))
    std::ofstream(f.path()) << "{not json";
  auto cat = load_catalog_text(small_catalog, cfg);
  EXPECT_FALSE(cat.from_cache());
  EXPECT_FALSE(cat.warnings().empty());
  EXPECT_TRUE(cat.validation()[0].ok);
}

TEST(Catalog, DataCarriesCatalogFacts)
{
  auto const &cat = shipped_catalog();
  auto m11 = cat.data("M11");
  EXPECT_EQ(m11->order(), 7920u);
  ASSERT_TRUE(m11->mult.has_value());
  EXPECT_TRUE(m11->mult->empty());
  EXPECT_TRUE(m11->domain().certified());
  EXPECT_EQ(cat.universal_cover_of("A5"), std::optional<std::string>("SL2(5)"));
}

TEST(RunConfig, Tiers)
{
  EXPECT_TRUE(RunConfig::valid_tier("core"));
  EXPECT_TRUE(RunConfig::valid_tier("all"));
  EXPECT_FALSE(RunConfig::valid_tier("gold"));
  RunConfig c;
  c.tier = "stretch";
  EXPECT_TRUE(c.tier_enabled("core"));
  EXPECT_FALSE(c.tier_enabled("optional"));
}
