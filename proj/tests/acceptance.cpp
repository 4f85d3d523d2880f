// Acceptance run: one PASS/FAIL line per criterion. Exit 0 iff all pass.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "grouploc/grouploc.hpp"

using namespace grouploc;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{ return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s)
{
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

int failures = 0;

void line(int n, bool ok, std::string const &what, std::string const &detail)
{
  if (!ok)
    ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << ". " << what << ": " << detail << std::endl;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReportRow const &row(Report const &r, std::string const &id)
{
  if (auto const *p = r.find(id))
    return *p;
  throw Error("report has no row " + id);
}

bool passed(ReportRow const &r) { return r.status == RowStatus::pass; }

double secs(ReportRow const &r) { return r.runtime_ms / 1000.0; }

std::string describe(ReportRow const &r)
{
  std::string s = std::string(to_string(r.status)) + " (" + r.actual + ", " + fmt(secs(r)) + ")";
  if (!r.note.empty())
    s += " " + r.note;
  return s;
}

// criterion 1
void orders(std::vector<CatalogEntry> const &entries)
{
  std::vector<std::string> const core{"A5", "A6", "A7", "A8", "S5", "S6", "S7", "S8", "L3(2)", "PGL2(7)",
                                      "L2(8)", "L2(11)", "U3(3)", "G2(2)", "SL2(5)", "SL2(7)", "M11", "M12"};
  bool ok = true;
  double worst = 0, cover = -1;
  std::string bad;
  auto check = [&](std::string const &name, double limit) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](auto const &e) { return e.name == name; });
    if (it == entries.end()) {
      ok = false;
      bad += " missing " + name;
      return -1.0;
    }
    auto t0 = Clock::now();
    PermGroup g(detail::parse_generators(it->degree, it->generators));
    double s = seconds_since(t0);
    if (g.order() != it->order || s >= limit) {
      ok = false;
      bad += " " + name + " (" + std::to_string(g.order()) + ", " + fmt(s) + ")";
    }
    return s;
  };
  for (auto const &n : core)
    worst = std::max(worst, check(n, 1.0));
  cover = check("2.M12", 10.0);
  line(1, ok, "orders", ok ? std::to_string(core.size() + 1) + " entries exact, slowest core " + fmt(worst) +
                               ", 2.M12 " + fmt(cover)
                           : "mismatch:" + bad);
}

// criterion 2
void presentations(std::vector<CatalogEntry> const &entries, RunConfig const &cfg)
{
  auto t0 = Clock::now();
  std::size_t n = 0;
  bool ok = true;
  std::string bad;
  for (auto const &e : entries) {
    if (e.order > 200000)
      continue;
    try {
      auto gens = detail::parse_generators(e.degree, e.generators);
      PermGroup g(gens);
      auto run = [&](std::vector<Permutation> const &imgs, std::vector<std::string> const &rels) {
        auto c = certify(Presentation::parse(generator_names(imgs.size()), rels), g, imgs, cfg.coset_cap);
        ok = ok && c.certified_order == e.order;
        ++n;
      };
      if (e.presentation)
        run(gens, e.presentation->relators);
      // alternates carry their own generator tuple
      for (auto const &a : e.alternates)
        run(detail::parse_generators(e.degree, a.generators), a.relators);
    } catch (Error const &ex) {
      ok = false;
      bad += " " + e.name + " (" + ex.what() + ")";
    }
  }
  double s = seconds_since(t0);
  ok = ok && s < 60.0;
  line(2, ok, "presentation certification",
       std::to_string(n) + " presentations certified in " + fmt(s) + bad);
}

// criterion 3
void oracle(Catalog const &cat)
{
  auto t0 = Clock::now();
  std::vector<std::string> targets, sources;
  for (auto const &e : cat.entries())
    if (cat.config().tier_enabled(e.tier)) {
      sources.push_back(e.name);
      if (e.order <= 400)
        targets.push_back(e.name);
    }
  bool ok = true;
  std::size_t pairs = 0;
  std::string bad;
  std::uint64_t a5a5 = 0;
  for (auto const &g : targets)
    for (auto const &k : sources) {
      auto kd = cat.data(k);
      auto gd = cat.data(g);
      auto pruned = gd->homs_from(kd->domain(), cat.config().search()).count();
      auto brute = count_homs_brute_force(*kd->group(), *gd->enumerated());
      ++pairs;
      if (pruned != brute) {
        ok = false;
        bad += " " + k + "->" + g;
      }
      if (k == "A5" && g == "A5")
        a5a5 = pruned;
    }
  ok = ok && a5a5 == 121;
  line(3, ok, "oracle equivalence",
       std::to_string(pairs) + " pairs with |G| <= 400 agree, |Hom(A5,A5)| = " + std::to_string(a5a5) + ", " +
         fmt(seconds_since(t0)) + bad);
}

} // namespace

int main(int argc, char **argv)
{
  std::string path = argc > 1 ? argv[1] : GROUPLOC_CATALOG;
  try {
    auto text = read_file(path);
    auto entries = parse_catalog(text);
    RunConfig cfg;
    cfg.workers = std::max(2u, std::thread::hardware_concurrency());

    orders(entries);
    presentations(entries, cfg);

    RunConfig core = cfg;
    core.tier = "core";
    auto cat = load_catalog_text(text, core);
    oracle(cat);

    auto rep = run_report(cat);
    auto const &l32 = row(rep, "localization L3(2) -> A8");
    line(4, passed(l32) && secs(l32) < 120, "L3(2) -> A8 not a localization",
         describe(l32) + ", image subgroups in " +
           l32.data.value("orbits", nlohmann::json::object()).value("subgroup_class_count", nlohmann::json()).dump() +
           " A8-classes / " +
           l32.data.value("orbits", nlohmann::json::object()).value("subgroup_aut_class_count", nlohmann::json()).dump() +
           " S8-classes");
    auto const &pgl = row(rep, "localization PGL2(7) -> S8");
    line(5, passed(pgl) && secs(pgl) < 300, "PGL2(7) -> S8 localization", describe(pgl));

    auto const &c5 = row(rep, "cover SL2(5)");
    auto const &c7 = row(rep, "cover SL2(7)");
    line(6, passed(c5) && passed(c7) && secs(c5) < 60 && secs(c7) < 60, "covers universal, projections localize",
         "SL2(5) " + describe(c5) + "; SL2(7) " + describe(c7));

    auto const &a5 = row(rep, "cover automorphisms SL2(5)");
    auto const &a7 = row(rep, "cover automorphisms SL2(7)");
    line(7, passed(a5) && passed(a7) && secs(a5) + secs(a7) < 120, "cover automorphisms biject",
         "SL2(5) " + describe(a5) + "; SL2(7) " + describe(a7));

    auto const &alt = row(rep, "localization A7 -> A8");
    auto const &sym = row(rep, "aut extension S7 -> S8");
    line(8, passed(alt) && passed(sym) && secs(alt) + secs(sym) < 600, "A7 -> A8 and S7 -> S8",
         describe(alt) + "; " + describe(sym));

    auto const &u = row(rep, "localization L3(2) -> U3(3)");
    auto const &g2 = row(rep, "aut extension PGL2(7) -> G2(2)");
    line(9, passed(u) && passed(g2) && secs(u) + secs(g2) < 600, "L2(7) -> U3(3) and PGL2(7) -> G2(2)",
         describe(u) + "; " + describe(g2));

    bool audits = true;
    double at = 0;
    std::string ad;
    for (auto const &g : {"A5", "A6", "L3(2)"}) {
      auto const &r = row(rep, std::string("audits ") + g);
      audits = audits && passed(r);
      at += secs(r);
      ad += std::string(g) + " " + to_string(r.status) + " ";
    }
    line(10, audits && at < 300, "automorphism audits", ad + "in " + fmt(at));

    auto const &prop = row(rep, "property maximal-implies-simple");
    line(11, passed(prop), "maximal simple image forces simple target", describe(prop));

    {
      RunConfig st = cfg;
      st.tier = "stretch";
      auto t0 = Clock::now();
      auto scat = load_catalog_text(text, st);
      auto srep = run_report(scat);
      auto const &m = row(srep, "localization M11 -> M12");
      auto const &mc = row(srep, "cover equivalence M11 -> M12");
      line(12, passed(m) && passed(mc), "M11 -> M12 and M11 -> 2.M12",
           describe(m) + "; " + describe(mc) + "; stretch report " + fmt(seconds_since(t0)));
    }

    {
      RunConfig one = core;
      one.workers = 1;
      auto cat1 = load_catalog_text(text, one);
      auto rep1 = run_report(cat1);
      auto x = rep1.comparable().dump(1);
      auto y = rep.comparable().dump(1);
      line(13, x == y, "determinism",
           std::string(x == y ? "identical" : "different") + " comparable sections for 1 and " +
             std::to_string(cfg.workers) + " workers (" + std::to_string(x.size()) + " bytes)");
    }

    std::cout << "report exit code " << rep.exit_code() << "\n";
  } catch (std::exception const &ex) {
    std::cout << "FAIL acceptance aborted: " << ex.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
