#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "automorphisms.hpp"
#include "catalog.hpp"
#include "localization.hpp"

namespace grouploc
{

inline constexpr int report_schema_version = 1;

enum class RowStatus
{
  pass,
  fail,
  indeterminate,
  skipped
};

inline char const *to_string(RowStatus s)
{
  switch (s) {
  case RowStatus::pass: return "PASS";
  case RowStatus::fail: return "FAIL";
  case RowStatus::indeterminate: return "INDETERMINATE";
  default: return "SKIPPED";
  }
}

/// One instance of the table. Everything except runtime_ms is deterministic.
struct ReportRow
{
  std::string id;
  std::string tier;
  std::string claim;
  std::string expected;
  std::string actual;
  RowStatus status = RowStatus::skipped;
  nlohmann::json data = nlohmann::json::object(); // verdict, hom_counts, witnesses, orbits, ...
  std::vector<std::string> caps_hit;
  std::string note;
  double runtime_ms = 0;
};

struct Report
{
  std::string tier;
  std::vector<ReportRow> rows;

  int exit_code() const
  {
    bool indeterminate = false;
    for (auto const &r : rows) {
      if (r.status == RowStatus::fail)
        return 1;
      if (r.status == RowStatus::indeterminate)
        indeterminate = true;
    }
    return indeterminate ? 2 : 0;
  }

  ReportRow const *find(std::string const &id) const
  {
    for (auto const &r : rows)
      if (r.id == id)
        return &r;
    return nullptr;
  }

  nlohmann::json comparable() const
  {
    auto rs = nlohmann::json::array();
    std::map<std::string, std::size_t> counts;
    for (auto const &r : rows) {
      ++counts[to_string(r.status)];
      nlohmann::json j{{"id", r.id},         {"tier", r.tier},     {"claim", r.claim},
                       {"expected", r.expected}, {"actual", r.actual}, {"status", to_string(r.status)},
                       {"caps_hit", r.caps_hit}, {"note", r.note}};
      for (auto const &[k, v] : r.data.items())
        j[k] = v;
      rs.push_back(std::move(j));
    }
    return {{"tier", tier}, {"rows", rs}, {"status_counts", counts}, {"exit_code", exit_code()}};
  }

  nlohmann::json timing() const
  {
    nlohmann::json t = nlohmann::json::object();
    double total = 0;
    for (auto const &r : rows) {
      t[r.id] = r.runtime_ms;
      total += r.runtime_ms;
    }
    return {{"runtime_ms", t}, {"total_ms", total}};
  }

  nlohmann::json document() const
  { return {{"schema_version", report_schema_version}, {"comparable", comparable()}, {"timing", timing()}}; }

  std::string summary() const
  {
    std::ostringstream os;
    for (auto const &r : rows) {
      os << std::left << std::setw(14) << to_string(r.status) << std::setw(34) << r.id << " expected "
         << r.expected << ", got " << r.actual;
      if (r.status != RowStatus::skipped)
        os << " (" << std::fixed << std::setprecision(0) << r.runtime_ms << " ms)";
      if (!r.note.empty())
        os << "\n" << std::string(14, ' ') << r.note;
      os << "\n";
    }
    os << "exit " << exit_code() << "\n";
    return os.str();
  }
};

namespace detail
{

inline nlohmann::json cycles(std::vector<Permutation> const &ps)
{
  auto a = nlohmann::json::array();
  for (auto const &p : ps)
    a.push_back(p.to_cycle_string());
  return a;
}

inline nlohmann::json optional_json(std::optional<std::uint64_t> const &x)
{ return x ? nlohmann::json(*x) : nlohmann::json(); }

inline nlohmann::json localization_json(LocalizationReport const &r)
{
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["embedding"] = cycles(r.phi.images);
  j["hom_counts"] = {{"hom_gg", r.hom_gg_count},
                     {"hom_hg", r.hom_hg_count},
                     {"mono_hg", r.mono_hg_count},
                     {"aut_g", r.aut_g_order}};
  nlohmann::json w = nlohmann::json::object();
  if (r.injectivity_witness)
    w["injectivity"] = {cycles(r.hom_gg->images(r.injectivity_witness->first)),
                        cycles(r.hom_gg->images(r.injectivity_witness->second))};
  if (r.surjectivity_witness)
    w["surjectivity"] = cycles(r.hom_hg->images(*r.surjectivity_witness));
  j["witnesses"] = w;
  j["orbits"] = {{"mono_orbit_count", optional_json(r.mono_orbit_count)},
                 {"subgroup_class_count", optional_json(r.subgroup_class_count)},
                 {"subgroup_aut_class_count", optional_json(r.subgroup_aut_class_count)}};
  return j;
}

/// Shared state for the rows of one run.
struct RowContext
{
  Catalog const &cat;
  LocalizationOptions opt;
  ReportRow &row;

  GroupDataPtr data(std::string const &n) const { return cat.data(n); }

  GroupHom embedding(GroupData const &h, GroupData const &g) const
  {
    auto phi = first_mono(h, g, opt.search);
    if (!phi)
      throw Error("no monomorphism " + h.name() + " -> " + g.name());
    return *phi;
  }

  void caps(std::vector<std::string> const &c) const
  {
    for (auto const &x : c)
      if (std::find(row.caps_hit.begin(), row.caps_hit.end(), x) == row.caps_hit.end())
        row.caps_hit.push_back(x);
  }

  /// Record a localization verdict; returns the verdict.
  Verdict record(LocalizationReport const &r, std::string const &key = {}) const
  {
    auto j = localization_json(r);
    if (key.empty())
      for (auto const &[k, v] : j.items())
        row.data[k] = v;
    else
      row.data[key] = j;
    caps(r.caps_hit);
    return r.verdict;
  }
};

inline RowStatus status_of(Verdict v, Verdict want)
{
  if (v == Verdict::indeterminate)
    return RowStatus::indeterminate;
  return v == want ? RowStatus::pass : RowStatus::fail;
}

struct RowSpec
{
  std::string id;
  std::string tier;
  std::string claim;
  std::string expected;
  std::vector<std::string> groups;
  std::function<void(RowContext &)> run;
};

/// Localization row; also records maximality of the image and simplicity of
/// the target for the maximal-implies-simple property.
inline RowSpec localization_row(std::string h, std::string g, bool want, std::string claim,
                                std::string tier = "core",
                                std::optional<std::uint64_t> want_aut_classes = std::nullopt)
{
  std::string expected = want ? "true" : "false";
  if (want_aut_classes)
    expected += ", " + std::to_string(*want_aut_classes) + " Aut-classes of image subgroups";
  return {"localization " + h + " -> " + g, tier, std::move(claim), expected, {h, g},
          [=](RowContext &c) {
            auto hd = c.data(h);
            auto gd = c.data(g);
            auto r = check_localization(*hd, *gd, c.embedding(*hd, *gd), c.opt);
            auto v = c.record(r);
            c.row.actual = to_string(v);
            c.row.status = status_of(v, want ? Verdict::yes : Verdict::no);
            if (want_aut_classes && v != Verdict::indeterminate) {
              c.row.actual += ", " + (r.subgroup_aut_class_count
                                          ? std::to_string(*r.subgroup_aut_class_count)
                                          : std::string("?")) +
                              " Aut-classes";
              if (r.subgroup_aut_class_count != want_aut_classes)
                c.row.status = RowStatus::fail;
            }
            if (v == Verdict::yes) {
              auto image = make_subgroup(gd->group(), r.phi.images);
              bool maximal = image.order() < gd->order() && is_maximal(image, *gd->enumerated());
              c.row.data["image_maximal"] = maximal;
              c.row.data["source_simple"] = is_simple(*hd->enumerated(), hd->classes());
              c.row.data["target_simple"] = is_simple(*gd->enumerated(), gd->classes());
            }
          }};
}

inline RowSpec cover_row(std::string cover, std::string claim)
{
  return {"cover " + cover, "core", std::move(claim), "universal, projection is a localization", {cover},
          [=](RowContext &c) {
            auto e = c.cat.extension(cover);
            bool universal = verify_universal_cover(e);
            c.row.data["universal"] = universal;
            c.row.data["kernel_order"] = e.kernel->order();
            auto r = check_localization(*e.total, *e.quotient, e.proj, c.opt);
            auto v = c.record(r);
            c.row.actual = std::string(universal ? "universal" : "not universal") +
                           ", projection " + to_string(v);
            c.row.status = universal ? status_of(v, Verdict::yes) : RowStatus::fail;
          }};
}

inline RowSpec cover_aut_row(std::string cover, std::string claim)
{
  return {"cover automorphisms " + cover, "core", std::move(claim), "|Aut| equal, induced map bijective",
          {cover}, [=](RowContext &c) {
            auto e = c.cat.extension(cover);
            auto cmp = compare_cover_automorphisms(e, c.opt.search);
            c.row.data["hom_counts"] = {{"aut_quotient", cmp.aut_quotient}, {"aut_cover", cmp.aut_total}};
            c.row.data["induced_injective"] = cmp.induced_injective;
            c.row.data["bijective"] = cmp.bijective;
            c.row.actual = std::to_string(cmp.aut_total) + " vs " + std::to_string(cmp.aut_quotient) +
                           (cmp.bijective ? ", bijective" : ", not bijective");
            c.row.status = cmp.aut_quotient == cmp.aut_total && cmp.bijective ? RowStatus::pass
                                                                               : RowStatus::fail;
          }};
}

inline RowSpec aut_row(std::string h, std::string g, std::string ah, std::string ag, std::string claim)
{
  return {"aut extension " + ah + " -> " + ag, "core", std::move(claim), "true, j: " + ah + " -> " + ag,
          {h, g, ah, ag}, [=](RowContext &c) {
            auto hd = c.data(h);
            auto gd = c.data(g);
            auto base = check_localization(*hd, *gd, c.embedding(*hd, *gd), c.opt);
            c.record(base, "group_level");
            if (base.verdict != Verdict::yes) {
              c.row.actual = std::string("group level ") + to_string(base.verdict);
              c.row.status = base.verdict == Verdict::indeterminate ? RowStatus::indeterminate
                                                                    : RowStatus::fail;
              return;
            }
            auto r = check_aut_localization(base, *hd, *gd, *c.data(ah), *c.data(ag), c.opt);
            c.row.data["extension"] = {{"j", cycles(r.extension.j.images)},
                                       {"autos_extended", r.extension.autos_extended}};
            c.row.data["out_orders"] = {r.out_h, r.out_g};
            c.row.data["hypothesis_holds"] = r.hypothesis_holds;
            c.row.data["prime_out_shortcut"] = r.prime_out_shortcut;
            if (!r.aut_level) {
              c.row.actual = "hypothesis fails";
              c.row.status = RowStatus::fail;
              return;
            }
            auto v = c.record(*r.aut_level);
            c.row.actual = to_string(v);
            c.row.status = status_of(v, Verdict::yes);
          }};
}

inline std::vector<std::string> audit_sources(Catalog const &cat, GroupData const &g, RunConfig const &cfg)
{
  std::vector<std::string> out;
  for (auto const &e : cat.entries())
    if (e.simple && cfg.tier_enabled(e.tier) && e.order <= g.order() && g.order() % e.order == 0)
      out.push_back(e.name);
  return out;
}

inline RowSpec audit_row(std::string g, std::string claim)
{
  return {"audits " + g, "core", std::move(claim), "both audits pass", {g}, [=](RowContext &c) {
            auto gd = c.data(g);
            auto a = audit_normal_subgroups_contain_inn(*gd, c.opt.search);
            bool ok = a.ok;
            c.row.data["normal_subgroups"] = {{"ok", a.ok}, {"checked", a.checked}, {"note", a.note}};
            auto monos = nlohmann::json::array();
            for (auto const &h : audit_sources(c.cat, *gd, c.cat.config())) {
              auto b = audit_simple_monos_in_inn(*c.data(h), *gd, c.opt.search);
              ok = ok && b.ok;
              monos.push_back({{"source", h}, {"ok", b.ok}, {"checked", b.checked}, {"note", b.note}});
            }
            c.row.data["simple_monos"] = monos;
            c.row.actual = ok ? "both audits pass" : "audit failed";
            c.row.status = ok ? RowStatus::pass : RowStatus::fail;
          }};
}

/// Cover equivalence row. `quotient_cover` empty means H is its own cover.
inline RowSpec cover_equivalence_row(std::string h, std::string g, std::string ht, std::string gt,
                                     std::optional<bool> want, std::string claim, std::string tier)
{
  std::string expected = want ? (std::string("both ") + (*want ? "true" : "false")) : "verdicts agree";
  std::vector<std::string> groups{h, g, gt};
  if (!ht.empty())
    groups.push_back(ht);
  return {"cover equivalence " + h + " -> " + g, tier, std::move(claim), expected, groups,
          [=](RowContext &c) {
            auto hd = c.data(h);
            auto gd = c.data(g);
            auto hx = ht.empty() ? identity_extension(hd) : c.cat.extension(ht);
            if (ht.empty())
              hx.mult_catalog = hd->mult;
            auto gx = c.cat.extension(gt);
            auto rep = check_cover_equivalence(c.embedding(*hd, *gd), hx, gx, {}, c.opt);
            c.row.data["hypothesis_holds"] = rep.hypothesis_holds;
            c.row.data["hypothesis_note"] = rep.hypothesis_note;
            c.row.data["cover_universal"] = c.cat.universal_cover_of(g) == c.cat.entry(gt).name;
            c.row.data["lift"] = cycles(rep.lift.images);
            auto b = c.record(rep.base, "base");
            auto t = c.record(rep.covers, "covers");
            c.row.data["verdict"] = rep.agree ? "agree" : "differ";
            c.row.actual = std::string(to_string(b)) + " / " + to_string(t);
            if (b == Verdict::indeterminate || t == Verdict::indeterminate)
              c.row.status = RowStatus::indeterminate;
            else if (want)
              c.row.status = b == t && (b == Verdict::yes) == *want ? RowStatus::pass : RowStatus::fail;
            else
              c.row.status = rep.agree ? RowStatus::pass : RowStatus::fail;
          }};
}

} // namespace detail

/// The instance table.
inline std::vector<detail::RowSpec> instance_table()
{
  using namespace detail;
  return {
    localization_row("L3(2)", "A8", false, "L3(2) in A8 is not a localization; two classes of image subgroups",
                     "core", 2),
    localization_row("PGL2(7)", "S8", true, "Aut(L3(2)) in S8 is a localization"),
    cover_row("SL2(5)", "SL2(5) is the universal cover of A5 and its projection is a localization"),
    cover_row("SL2(7)", "SL2(7) is the universal cover of L2(7) and its projection is a localization"),
    cover_aut_row("SL2(5)", "Aut(SL2(5)) = Aut(A5) via lifting"),
    cover_aut_row("SL2(7)", "Aut(SL2(7)) = Aut(L2(7)) via lifting"),
    localization_row("A7", "A8", true, "A7 in A8 is a localization"),
    aut_row("A7", "A8", "S7", "S8", "A7 in A8 extends to a localization S7 -> S8"),
    localization_row("L3(2)", "U3(3)", true, "L2(7) in U3(3) is a localization"),
    aut_row("L3(2)", "U3(3)", "PGL2(7)", "G2(2)", "L2(7) in U3(3) extends to Aut(L2(7)) -> G2(2)"),
    audit_row("A5", "normal subgroups of Aut(A5) contain Inn; simple subgroups lie in Inn"),
    audit_row("A6", "normal subgroups of Aut(A6) contain Inn; simple subgroups lie in Inn"),
    audit_row("L3(2)", "normal subgroups of Aut(L3(2)) contain Inn; simple subgroups lie in Inn"),
    cover_equivalence_row("A5", "A6", "SL2(5)", "2.A6", std::nullopt,
                          "A5 in A6 and its lift SL2(5) -> 2.A6 have the same verdict", "core"),
    cover_equivalence_row("A5", "L2(11)", "SL2(5)", "SL2(11)", false,
                          "A5 in L2(11) and its lift SL2(5) -> SL2(11) are both non-localizations", "core"),
    localization_row("M11", "M12", true, "M11 in M12 is a localization", "stretch"),
    cover_equivalence_row("M11", "M12", "", "2.M12", true,
                          "M11 in M12 and M11 in 2.M12 are both localizations", "stretch"),
  };
}

/// Over the localization rows with verdict true and a simple source whose image
/// is maximal, the target is simple.
inline ReportRow maximal_simple_row(std::vector<ReportRow> const &rows)
{
  ReportRow p;
  p.id = "property maximal-implies-simple";
  p.tier = "core";
  p.claim = "a localization onto a maximal simple subgroup has a simple target";
  p.expected = "holds on every row";
  std::uint64_t checked = 0;
  bool ok = true;
  auto consider = [&](nlohmann::json const &j) {
    if (j.contains("image_maximal") && j.at("image_maximal").get<bool>() && j.at("source_simple").get<bool>()) {
      ++checked;
      ok = ok && j.at("target_simple").get<bool>();
    }
  };
  for (auto const &r : rows) {
    if (r.status == RowStatus::skipped)
      continue;
    consider(r.data);
  }
  p.data["checked"] = checked;
  p.actual = ok ? "holds on " + std::to_string(checked) + " rows" : "violated";
  p.status = ok ? (checked > 0 ? RowStatus::pass : RowStatus::indeterminate) : RowStatus::fail;
  return p;
}

using RowCallback = std::function<void(ReportRow const &)>;

/// Run the instance table. Rows outside the configured tier are SKIPPED.
inline Report run_report(Catalog const &cat, RowCallback const &progress = {})
{
  auto const &cfg = cat.config();
  Report rep;
  rep.tier = cfg.tier;
  LocalizationOptions opt;
  opt.search = cfg.search();
  for (auto const &spec : instance_table()) {
    ReportRow row;
    row.id = spec.id;
    row.tier = spec.tier;
    row.claim = spec.claim;
    row.expected = spec.expected;
    if (!cfg.tier_enabled(spec.tier)) {
      row.actual = "not run";
      row.note = "tier " + spec.tier + " not selected";
      rep.rows.push_back(std::move(row));
      if (progress)
        progress(rep.rows.back());
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    detail::RowContext ctx{cat, opt, row};
    try {
      for (auto const &n : spec.groups)
        if (!cat.has(n))
          throw MissingCatalogDatum("catalog has no entry " + n);
      spec.run(ctx);
    } catch (CapExceeded const &ex) {
      row.status = RowStatus::indeterminate;
      row.actual = "indeterminate";
      ctx.caps({ex.cap()});
      row.note = ex.what();
    } catch (Error const &ex) {
      row.status = RowStatus::fail;
      row.actual = "error";
      row.note = ex.what();
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(std::move(row));
    if (progress)
      progress(rep.rows.back());
  }
  rep.rows.push_back(maximal_simple_row(rep.rows));
  if (progress)
    progress(rep.rows.back());
  return rep;
}

} // namespace grouploc
