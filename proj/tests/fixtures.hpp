#pragma once

#include <string>

#include "grouploc/grouploc.hpp"

namespace grouploc::testing
{

inline Permutation cyc(std::size_t n, std::string const &c) { return Permutation::from_cycles(n, c); }

inline GroupPtr alternating(std::size_t n)
{
  if (n == 3)
    return make_group({cyc(3, "(1,2,3)")});
  std::string longc = "(";
  std::size_t start = n % 2 == 1 ? 1 : 2;
  for (std::size_t i = start; i <= n; ++i)
    longc += std::to_string(i) + (i == n ? ")" : ",");
  return make_group({cyc(n, "(1,2,3)"), cyc(n, longc)});
}

inline GroupPtr symmetric(std::size_t n)
{
  std::string longc = "(";
  for (std::size_t i = 1; i <= n; ++i)
    longc += std::to_string(i) + (i == n ? ")" : ",");
  return make_group({cyc(n, "(1,2)"), cyc(n, longc)});
}

inline GroupDataPtr data(std::string name, GroupPtr g) { return std::make_shared<GroupData>(std::move(name), g); }

/// The shipped catalog, core tier, validated once per test binary.
inline Catalog const &shipped_catalog()
{
  static Catalog const cat = [] {
    RunConfig cfg;
    cfg.workers = 2;
    return load_catalog(GROUPLOC_CATALOG, cfg);
  }();
  return cat;
}

} // namespace grouploc::testing
