#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace
{

struct Run
{
  int code = -1;
  std::string out;
};

std::string const &cache_dir()
{
  static std::string const dir = [] {
    auto p = std::filesystem::temp_directory_path() / "grouploc-cli-test-cache";
    std::filesystem::create_directories(p);
    return p.string();
  }();
  return dir;
}

Run cli(std::string const &args)
{
  std::string cmd = std::string("'") + GROUPLOC_CLI + "' --cache-dir '" + cache_dir() + "' " + args + " 2>/dev/null";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), p))
    r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(std::string const &s, std::string const &sub) { return s.find(sub) != std::string::npos; }

} // namespace

TEST(Cli, InfoM11)
{
  auto r = cli("info M11");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "order       7920")) << r.out;
  EXPECT_TRUE(has(r.out, "Mult        1")) << r.out;
  EXPECT_TRUE(has(r.out, "Out         1")) << r.out;
}

TEST(Cli, LocalizationVerdicts)
{
  auto yes = cli("check-localization A5 A6 --expect true");
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(has(yes.out, "verdict        true")) << yes.out;
  auto no = cli("check-localization A5 A6 --expect false");
  EXPECT_EQ(no.code, 1);
  auto gens = cli("check-localization A5 A6 --embed 'gens=(1,2,4);(2,3)(4,5)'");
  EXPECT_EQ(gens.code, 0);
  EXPECT_TRUE(has(gens.out, "verdict        true")) << gens.out;
}

TEST(Cli, HomCounts)
{
  auto r = cli("homs A5 A5 --count-only");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "|Hom(A5, A5)| = 121")) << r.out;
}

TEST(Cli, CoverCheck)
{
  auto r = cli("check-cover 'SL2(5)' A5 --aut");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(cli("").code, 3);
  EXPECT_EQ(cli("frobnicate").code, 3);
  EXPECT_EQ(cli("info").code, 3);
  EXPECT_EQ(cli("info NoSuchGroup").code, 3);
  EXPECT_EQ(cli("--tier gold report").code, 3);
  EXPECT_EQ(cli("check-localization A5 A6 --expect maybe").code, 3);
  EXPECT_EQ(cli("check-localization A5 A6 --embed 'gens=(1,2)'").code, 3);
}

TEST(Cli, CapsGiveExitTwo)
{
  EXPECT_EQ(cli("--element-cap 100 homs A5 A6 --count-only").code, 2);
}

TEST(Cli, VerifyCatalog)
{
  auto r = cli("verify-catalog");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "entries checked")) << r.out;
}
