// grouploc: command-line front end for the catalog, hom search and
// localization checks.
//
// Exit codes: 0 ok, 1 mismatch or failure, 2 indeterminate (cap hit), 3 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grouploc/grouploc.hpp"

using namespace grouploc;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_indeterminate = 2;
constexpr int exit_usage = 3;

struct UsageError : Error
{
  using Error::Error;
};

std::string default_cache_dir()
{
  if (char const *x = std::getenv("XDG_CACHE_HOME"); x && *x)
    return std::string(x) + "/grouploc";
  if (char const *h = std::getenv("HOME"); h && *h)
    return std::string(h) + "/.cache/grouploc";
  return {};
}

std::string join(std::vector<Permutation> const &ps)
{
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i)
    s += (i ? "; " : "") + ps[i].to_cycle_string();
  return s;
}

std::string opt_count(std::optional<std::uint64_t> const &x) { return x ? std::to_string(*x) : "-"; }

int verdict_exit(Verdict v, std::optional<bool> expect)
{
  if (v == Verdict::indeterminate)
    return exit_indeterminate;
  if (expect && (v == Verdict::yes) != *expect)
    return exit_mismatch;
  return exit_ok;
}

void print_localization(LocalizationReport const &r)
{
  std::cout << r.source_name << " -> " << r.target_name << "\n"
            << "  embedding      " << join(r.phi.images) << "\n"
            << "  verdict        " << to_string(r.verdict) << "\n"
            << "  |Hom(G,G)|     " << r.hom_gg_count << "\n"
            << "  |Hom(H,G)|     " << r.hom_hg_count << " (" << r.mono_hg_count << " injective)\n"
            << "  |Aut(G)|       " << r.aut_g_order << "\n"
            << "  restriction    " << (r.injective ? "injective" : "not injective") << ", "
            << (r.surjective ? "surjective" : "not surjective") << "\n";
  if (r.injectivity_witness)
    std::cout << "  same restriction: [" << join(r.hom_gg->images(r.injectivity_witness->first)) << "] and ["
              << join(r.hom_gg->images(r.injectivity_witness->second)) << "]\n";
  if (r.surjectivity_witness)
    std::cout << "  no extension:   [" << join(r.hom_hg->images(*r.surjectivity_witness)) << "]\n";
  std::cout << "  mono orbits    " << opt_count(r.mono_orbit_count) << "\n"
            << "  image classes  " << opt_count(r.subgroup_class_count) << " under G, "
            << opt_count(r.subgroup_aut_class_count) << " under Aut(G)\n";
  for (auto const &c : r.caps_hit)
    std::cout << "  cap hit        " << c << "\n";
  std::cout << "  runtime        " << static_cast<long>(r.runtime_ms) << " ms\n";
}

GroupHom parse_embedding(std::string const &spec, GroupData const &h, GroupData const &g,
                         HomSearchOptions const &opt)
{
  if (spec == "auto") {
    auto phi = first_mono(h, g, opt);
    if (!phi)
      throw Error("no monomorphism " + h.name() + " -> " + g.name());
    return *phi;
  }
  if (spec.rfind("gens=", 0) != 0)
    throw UsageError("--embed takes auto or gens=CYCLES;CYCLES;...");
  std::vector<Permutation> imgs;
  std::stringstream ss(spec.substr(5));
  std::string item;
  while (std::getline(ss, item, ';'))
    imgs.push_back(Permutation::from_cycles(g.group()->degree(), item));
  return make_hom(h.group(), g.group(), std::move(imgs));
}

std::optional<bool> parse_expect(std::string const &s)
{
  if (s.empty())
    return std::nullopt;
  if (s == "true")
    return true;
  if (s == "false")
    return false;
  throw UsageError("--expect takes true or false");
}

CentralExtension cover_for(Catalog const &cat, std::string const &name, std::string const &cover)
{
  if (!cover.empty()) {
    auto const &e = cat.entry(cover);
    if (!e.cover_of || cat.entry(e.cover_of->quotient).name != cat.entry(name).name)
      throw UsageError(cover + " is not recorded as a cover of " + name);
    return cat.extension(cover);
  }
  auto d = cat.data(name);
  if (d->mult && d->mult->empty()) {
    auto x = identity_extension(d);
    x.mult_catalog = d->mult;
    return x;
  }
  auto u = cat.universal_cover_of(name);
  if (!u)
    throw MissingCatalogDatum("no cover of " + name + " in the catalog");
  return cat.extension(*u);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"finite group localization checker"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string catalog_path = GROUPLOC_DEFAULT_CATALOG;
  std::optional<std::size_t> workers;
  std::optional<std::string> tier, cache_dir;
  std::optional<std::uint64_t> element_cap, leaf_budget;
  std::optional<std::size_t> coset_cap;
  app.add_option("--catalog", catalog_path, "catalog file");
  app.add_option("--workers", workers, "worker threads (0 = all cores)");
  app.add_option("--tier", tier, "core, stretch, optional or all");
  app.add_option("--cache-dir", cache_dir, "validation cache directory (empty disables)");
  app.add_option("--element-cap", element_cap, "largest group enumerated element by element");
  app.add_option("--coset-cap", coset_cap, "coset table rows");
  app.add_option("--leaf-budget", leaf_budget, "hom-search leaves");

  std::string a, b, embed = "auto", expect, json_path, cover_h, cover_g;
  bool mono = false, count_only = false, with_aut = false;

  auto *info = app.add_subcommand("info", "describe a catalog group");
  info->add_option("NAME", a)->required();

  auto *homs = app.add_subcommand("homs", "enumerate Hom(K, G)");
  homs->add_option("K", a)->required();
  homs->add_option("G", b)->required();
  homs->add_flag("--mono", mono, "only injective homs");
  homs->add_flag("--count-only", count_only, "print counts only");

  auto *loc = app.add_subcommand("check-localization", "is the embedding H -> G a localization");
  loc->add_option("H", a)->required();
  loc->add_option("G", b)->required();
  loc->add_option("--embed", embed, "auto (first mono) or gens=CYCLES;CYCLES;...");
  loc->add_option("--expect", expect, "true or false; mismatch exits 1");

  auto *cover = app.add_subcommand("check-cover", "universality and localization of a cover projection");
  cover->add_option("COVER", a)->required();
  cover->add_option("QUOTIENT", b)->required();
  cover->add_flag("--aut", with_aut, "also compare Aut(cover) with Aut(quotient)");

  auto *equiv = app.add_subcommand("check-cover-equivalence", "compare H -> G with its lift to covers");
  equiv->add_option("H", a)->required();
  equiv->add_option("G", b)->required();
  equiv->add_option("--embed", embed, "auto (first mono) or gens=CYCLES;CYCLES;...");
  equiv->add_option("--cover-h", cover_h, "cover of H (default: catalog universal cover)");
  equiv->add_option("--cover-g", cover_g, "cover of G (default: catalog universal cover)");

  auto *aut = app.add_subcommand("check-aut", "extend a localization H -> G to automorphism groups");
  aut->add_option("H", a)->required();
  aut->add_option("G", b)->required();
  aut->add_option("--embed", embed, "auto (first mono) or gens=CYCLES;CYCLES;...");

  auto *audit = app.add_subcommand("audit-inn", "normal subgroups of Aut(G) and simple subgroups vs Inn(G)");
  audit->add_option("G", a)->required();

  auto *verify = app.add_subcommand("verify-catalog", "validate every entry of the selected tier");

  auto *report = app.add_subcommand("report", "run the instance table");
  report->add_option("--json", json_path, "write the report document to this file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    cfg.cache_dir = default_cache_dir();
    cfg.apply_environment();
    if (workers)
      cfg.workers = *workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : *workers;
    if (tier)
      cfg.tier = *tier;
    if (cache_dir)
      cfg.cache_dir = *cache_dir;
    if (element_cap)
      cfg.element_cap = *element_cap;
    if (coset_cap)
      cfg.coset_cap = *coset_cap;
    if (leaf_budget)
      cfg.leaf_budget = *leaf_budget;
    if (!RunConfig::valid_tier(cfg.tier))
      throw UsageError("unknown tier " + cfg.tier);

    bool strict = !verify->parsed();
    auto cat = load_catalog(catalog_path, cfg, strict);
    for (auto const &w : cat.warnings())
      std::cerr << "warning: " << w << "\n";
    for (auto const &n : {a, b})
      if (!n.empty() && !cat.has(n))
        throw UsageError("no catalog entry named " + n);
    LocalizationOptions lopt;
    lopt.search = cfg.search();

    if (info->parsed()) {
      auto const &e = cat.entry(a);
      auto d = cat.data(a);
      std::cout << e.name;
      for (auto const &x : e.aliases)
        std::cout << " = " << x;
      std::cout << "\n  order       " << d->order() << "\n  degree      " << e.degree << "\n";
      for (auto const &g : e.generators)
        std::cout << "  generator   " << g << "\n";
      if (e.presentation) {
        std::cout << "  presentation";
        for (auto const &r : e.presentation->relators)
          std::cout << " " << r;
        std::cout << (d->domain().certified() ? " (certified)" : " (not certified)") << "\n";
      }
      std::cout << "  Mult        " << (e.mult ? invariants_to_string(*e.mult) : "not recorded") << " ("
                << e.mult_provenance << ")\n"
                << "  Out         " << (e.out_order ? std::to_string(*e.out_order) : "not recorded") << " ("
                << e.out_provenance << ")\n";
      if (d->order() <= cfg.element_cap) {
        auto enumd = d->enumerated();
        std::cout << "  classes     " << d->classes().size() << "\n"
                  << "  center      " << d->center_subgroup().order() << "\n"
                  << "  perfect     " << (is_perfect(d->group()) ? "yes" : "no") << "\n"
                  << "  simple      " << (is_simple(*enumd, d->classes()) ? "yes" : "no") << "\n";
      }
      if (e.cover_of)
        std::cout << "  cover of    " << e.cover_of->quotient << "\n";
      std::cout << "  tier        " << e.tier << "\n  provenance  " << e.provenance << "\n";
      return exit_ok;
    }

    if (homs->parsed()) {
      auto k = cat.data(a);
      auto g = cat.data(b);
      auto hs = g->homs_from(k->domain(), lopt.search);
      std::cout << "|Hom(" << k->name() << ", " << g->name() << ")| = " << hs.count() << "\n"
                << "injective: " << hs.mono_count << "\n";
      if (!count_only)
        for (std::size_t i = 0; i < hs.count(); ++i)
          if (!mono || hs.is_mono(i))
            std::cout << join(hs.images(i)) << "\n";
      return exit_ok;
    }

    if (loc->parsed()) {
      auto want = parse_expect(expect);
      auto h = cat.data(a);
      auto g = cat.data(b);
      auto r = check_localization(*h, *g, parse_embedding(embed, *h, *g, lopt.search), lopt);
      print_localization(r);
      return verdict_exit(r.verdict, want);
    }

    if (cover->parsed()) {
      auto const &e = cat.entry(a);
      if (!e.cover_of || cat.entry(e.cover_of->quotient).name != cat.entry(b).name)
        throw UsageError(a + " is not recorded as a cover of " + b);
      auto x = cat.extension(a);
      bool universal = verify_universal_cover(x);
      std::cout << "kernel order " << x.kernel->order() << ", Mult(" << x.quotient->name()
                << ") = " << invariants_to_string(*x.mult_catalog) << ": "
                << (universal ? "universal cover" : "not universal") << "\n";
      auto r = check_localization(*x.total, *x.quotient, x.proj, lopt);
      print_localization(r);
      int code = universal ? verdict_exit(r.verdict, true) : exit_mismatch;
      if (with_aut) {
        auto c = compare_cover_automorphisms(x, lopt.search);
        std::cout << "|Aut(" << x.total->name() << ")| = " << c.aut_total << ", |Aut(" << x.quotient->name()
                  << ")| = " << c.aut_quotient << ", induced map "
                  << (c.bijective ? "bijective" : "not bijective") << "\n";
        if (!c.bijective && code == exit_ok)
          code = exit_mismatch;
      }
      return code;
    }

    if (equiv->parsed()) {
      auto h = cat.data(a);
      auto g = cat.data(b);
      auto hx = cover_for(cat, a, cover_h);
      auto gx = cover_for(cat, b, cover_g);
      auto rep = check_cover_equivalence(parse_embedding(embed, *h, *g, lopt.search), hx, gx, {}, lopt);
      std::cout << "hypothesis: " << (rep.hypothesis_holds ? "holds" : "fails") << " (" << rep.hypothesis_note
                << ")\nlift: " << join(rep.lift.images) << "\n";
      print_localization(rep.base);
      print_localization(rep.covers);
      std::cout << "verdicts " << (rep.agree ? "agree" : "differ") << "\n";
      if (rep.base.verdict == Verdict::indeterminate || rep.covers.verdict == Verdict::indeterminate)
        return exit_indeterminate;
      return rep.agree || !rep.hypothesis_holds ? exit_ok : exit_mismatch;
    }

    if (aut->parsed()) {
      auto h = cat.data(a);
      auto g = cat.data(b);
      auto const &he = cat.entry(a);
      auto const &ge = cat.entry(b);
      if (!he.automorphism_group || !ge.automorphism_group)
        throw MissingCatalogDatum("automorphism group of " + (he.automorphism_group ? b : a) +
                                  " is not in the catalog");
      auto base = check_localization(*h, *g, parse_embedding(embed, *h, *g, lopt.search), lopt);
      print_localization(base);
      if (base.verdict != Verdict::yes) {
        std::cout << "not a localization; nothing to extend\n";
        return base.verdict == Verdict::indeterminate ? exit_indeterminate : exit_ok;
      }
      auto r = check_aut_localization(base, *h, *g, *cat.data(*he.automorphism_group),
                                      *cat.data(*ge.automorphism_group), lopt);
      std::cout << "j: " << join(r.extension.j.images) << "\n"
                << "|Out(H)| = " << r.out_h << ", |Out(G)| = " << r.out_g << ", hypothesis "
                << (r.hypothesis_holds ? "holds" : "fails") << "\n";
      if (!r.aut_level)
        return exit_ok;
      print_localization(*r.aut_level);
      return verdict_exit(r.aut_level->verdict, true);
    }

    if (audit->parsed()) {
      auto g = cat.data(a);
      auto x = audit_normal_subgroups_contain_inn(*g, lopt.search);
      std::cout << "normal subgroups of Aut(" << g->name() << ") contain Inn: " << (x.ok ? "yes" : "NO") << " ("
                << x.note << ")\n";
      bool ok = x.ok;
      for (auto const &h : detail::audit_sources(cat, *g, cfg)) {
        auto y = audit_simple_monos_in_inn(*cat.data(h), *g, lopt.search);
        std::cout << "monos " << h << " -> Aut(" << g->name() << ") land in Inn: " << (y.ok ? "yes" : "NO")
                  << " (" << y.note << ")\n";
        ok = ok && y.ok;
      }
      return ok ? exit_ok : exit_mismatch;
    }

    if (verify->parsed()) {
      bool ok = true;
      for (auto const &v : cat.validation()) {
        std::cout << (v.ok ? "ok      " : "INVALID ") << v.name << "  order " << v.bsgs_order;
        if (v.certified_order)
          std::cout << ", presentation certified";
        if (v.cover_ok)
          std::cout << ", cover link verified";
        if (!v.ok)
          std::cout << "  " << v.reason;
        std::cout << "\n";
        ok = ok && v.ok;
      }
      std::cout << cat.validation().size() << " entries checked" << (cat.from_cache() ? " (cached)" : "")
                << "\n";
      return ok ? exit_ok : exit_mismatch;
    }

    if (report->parsed()) {
      auto rep = run_report(cat, [](ReportRow const &r) {
        std::cerr << to_string(r.status) << " " << r.id << "\n";
      });
      if (json_path == "-")
        std::cout << rep.document().dump(1) << "\n";
      else {
        std::cout << rep.summary();
        if (!json_path.empty())
          write_file_atomic(json_path, rep.document().dump(1) + "\n");
      }
      return rep.exit_code();
    }
  } catch (UsageError const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (CapExceeded const &e) {
    std::cerr << "indeterminate: " << e.what() << " (cap " << e.cap() << ")\n";
    return exit_indeterminate;
  } catch (PreconditionError const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_ok;
}
