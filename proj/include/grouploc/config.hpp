#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "element_index.hpp"
#include "error.hpp"
#include "hom_search.hpp"
#include "presentation.hpp"

namespace grouploc
{

/// Caps, budgets and run options. Verdicts never depend on `seed`, which only
/// drives sampled property checks.
struct RunConfig
{
  std::uint64_t element_cap = default_element_cap;
  std::size_t coset_cap = default_coset_cap;
  std::uint64_t leaf_budget = default_leaf_budget;
  std::size_t workers = 1;
  std::string tier = "core";
  std::string cache_dir;
  std::uint64_t seed = 20240601;

  HomSearchOptions search() const
  {
    HomSearchOptions o;
    o.workers = workers;
    o.leaf_budget = leaf_budget;
    return o;
  }

  /// Whether entries and report rows of `t` are in scope for this run.
  bool tier_enabled(std::string const &t) const
  {
    if (tier == "all")
      return true;
    if (tier == "stretch")
      return t == "core" || t == "stretch";
    return t == tier;
  }

  static bool valid_tier(std::string const &t)
  { return t == "core" || t == "stretch" || t == "optional" || t == "all"; }

  /// Apply GROUPLOC_* environment overrides.
  void apply_environment()
  {
    auto num = [](char const *name, auto &field) {
      if (char const *v = std::getenv(name)) {
        char *end = nullptr;
        auto x = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0')
          throw ParseError(std::string(name) + " is not a number: " + v);
        field = static_cast<std::decay_t<decltype(field)>>(x);
      }
    };
    num("GROUPLOC_ELEMENT_CAP", element_cap);
    num("GROUPLOC_COSET_CAP", coset_cap);
    num("GROUPLOC_LEAF_BUDGET", leaf_budget);
    num("GROUPLOC_WORKERS", workers);
    num("GROUPLOC_SEED", seed);
    if (char const *v = std::getenv("GROUPLOC_CACHE_DIR"))
      cache_dir = v;
    if (char const *v = std::getenv("GROUPLOC_TIER"))
      tier = v;
    if (workers == 0)
      workers = std::max(1u, std::thread::hardware_concurrency());
  }
};

} // namespace grouploc
