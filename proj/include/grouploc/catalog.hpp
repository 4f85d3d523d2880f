#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "config.hpp"
#include "error.hpp"
#include "group_data.hpp"
#include "localization.hpp"
#include "perm_group.hpp"
#include "presentation.hpp"

namespace grouploc
{

inline constexpr int catalog_schema_version = 1;

struct PresentationSpec
{
  std::vector<std::string> generators; // cycle strings; empty means the entry's generators
  std::vector<std::string> relators;
  std::string provenance;
};

struct CoverLink
{
  std::string quotient;
  std::vector<std::string> projection; // images of the entry's generators in the quotient
};

struct CatalogEntry
{
  std::string name;
  std::vector<std::string> aliases;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::optional<PresentationSpec> presentation;
  std::vector<PresentationSpec> alternates;
  std::optional<AbelianInvariants> mult;
  std::string mult_provenance;
  std::optional<std::uint64_t> out_order;
  std::string out_provenance;
  std::optional<CoverLink> cover_of;
  std::optional<std::string> automorphism_group;
  bool simple = false;
  std::string tier = "core";
  std::string provenance;
};

/// Per-entry outcome of validation.
struct EntryValidation
{
  std::string name;
  bool ok = true;
  std::string reason;
  std::uint64_t bsgs_order = 0;
  std::optional<std::uint64_t> certified_order;
  std::vector<std::uint64_t> alternate_orders;
  std::optional<bool> cover_ok;

  friend bool operator==(EntryValidation const &, EntryValidation const &) = default;
};

inline std::vector<std::string> generator_names(std::size_t n)
{
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

namespace detail
{

inline CatalogEntry parse_entry(nlohmann::json const &j)
{
  auto need = [&](char const *key) -> nlohmann::json const & {
    if (!j.contains(key))
      throw ParseError("catalog entry " + j.value("name", std::string("?")) + " lacks \"" + key + "\"");
    return j.at(key);
  };
  auto pres = [](nlohmann::json const &p) {
    PresentationSpec s;
    s.generators = p.value("generators", std::vector<std::string>{});
    s.relators = p.at("relators").get<std::vector<std::string>>();
    s.provenance = p.value("provenance", std::string{});
    return s;
  };
  CatalogEntry e;
  try {
    e.name = need("name").get<std::string>();
    e.aliases = j.value("aliases", std::vector<std::string>{});
    e.order = need("order").get<std::uint64_t>();
    e.degree = need("degree").get<std::size_t>();
    e.generators = need("generators").get<std::vector<std::string>>();
    if (j.contains("presentation"))
      e.presentation = pres(j.at("presentation"));
    for (auto const &p : j.value("alternate_presentations", nlohmann::json::array()))
      e.alternates.push_back(pres(p));
    if (j.contains("mult") && !j.at("mult").is_null())
      e.mult = j.at("mult").get<AbelianInvariants>();
    e.mult_provenance = j.value("mult_provenance", std::string{});
    if (j.contains("out_order") && !j.at("out_order").is_null())
      e.out_order = j.at("out_order").get<std::uint64_t>();
    e.out_provenance = j.value("out_provenance", std::string{});
    if (j.contains("cover_of"))
      e.cover_of = CoverLink{j.at("cover_of").at("quotient").get<std::string>(),
                             j.at("cover_of").at("projection").get<std::vector<std::string>>()};
    if (j.contains("automorphism_group"))
      e.automorphism_group = j.at("automorphism_group").get<std::string>();
    e.simple = j.value("simple", false);
    e.tier = j.value("tier", std::string("core"));
    e.provenance = j.value("provenance", std::string{});
  } catch (nlohmann::json::exception const &ex) {
    throw ParseError("catalog entry " + e.name + ": " + ex.what());
  }
  if (!RunConfig::valid_tier(e.tier) || e.tier == "all")
    throw ParseError("catalog entry " + e.name + ": unknown tier " + e.tier);
  return e;
}

inline std::vector<Permutation> parse_generators(std::size_t degree, std::vector<std::string> const &cs)
{
  std::vector<Permutation> out;
  for (auto const &c : cs)
    out.push_back(Permutation::from_cycles(degree, c));
  return out;
}

inline std::uint64_t fnv1a(std::string const &s)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace detail

/// The group catalog: entries, validation results, and lazily built group
/// data (element indices, classes, endomorphisms) shared across queries.
class Catalog
{
public:
  Catalog() = default;
  Catalog(std::vector<CatalogEntry> entries, RunConfig config)
  : _entries(std::move(entries)), _config(std::move(config))
  {
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      add_name(_entries[i].name, i);
      for (auto const &a : _entries[i].aliases)
        add_name(a, i);
    }
  }

  std::vector<CatalogEntry> const &entries() const { return _entries; }
  std::vector<EntryValidation> const &validation() const { return _validation; }
  RunConfig const &config() const { return _config; }
  std::vector<std::string> const &warnings() const { return _warnings; }
  bool from_cache() const { return _from_cache; }

  bool has(std::string const &name) const { return _by_name.count(name) != 0; }

  CatalogEntry const &entry(std::string const &name) const
  {
    auto it = _by_name.find(name);
    if (it == _by_name.end())
      throw PreconditionError("no catalog entry named " + name);
    return _entries[it->second];
  }

  /// The permutation group generated by the entry's generator tuple.
  GroupPtr group(std::string const &name) const { return data(name)->group(); }

  /// Group data with the certified presentation attached (if any).
  GroupDataPtr data(std::string const &name) const
  {
    auto const &e = entry(name);
    std::lock_guard lock(*_mutex);
    auto it = _data.find(e.name);
    if (it != _data.end())
      return it->second;
    auto gens = detail::parse_generators(e.degree, e.generators);
    auto g = make_group(gens);
    std::optional<Presentation> pres;
    if (e.presentation) {
      auto p = Presentation::parse(generator_names(gens.size()), e.presentation->relators);
      p.provenance = e.presentation->provenance;
      auto v = validation_of(e.name);
      if (v && v->certified_order && *v->certified_order == g->order()) {
        p.certified_order = v->certified_order;
        p.method = CertificationMethod::todd_coxeter;
      }
      pres = std::move(p);
    }
    auto d = std::make_shared<GroupData>(e.name, g, std::move(pres), _config.element_cap);
    d->mult = e.mult;
    d->out_order = e.out_order;
    _data.emplace(e.name, d);
    return d;
  }

  /// The central extension recorded by a cover entry.
  CentralExtension extension(std::string const &cover) const
  {
    auto const &e = entry(cover);
    if (!e.cover_of)
      throw PreconditionError(cover + " is not recorded as a cover");
    auto q = data(e.cover_of->quotient);
    auto imgs = detail::parse_generators(q->group()->degree(), e.cover_of->projection);
    return make_central_extension(data(e.name), q, std::move(imgs));
  }

  /// The cover entry whose quotient is `name`, preferring one whose kernel
  /// order equals the recorded multiplier.
  std::optional<std::string> universal_cover_of(std::string const &name) const
  {
    auto const &q = entry(name);
    std::optional<std::string> any;
    for (auto const &e : _entries)
      if (e.cover_of && entry(e.cover_of->quotient).name == q.name) {
        if (q.mult && e.order == q.order * invariants_order(*q.mult))
          return e.name;
        if (!any)
          any = e.name;
      }
    return any;
  }

  void set_validation(std::vector<EntryValidation> v, bool from_cache)
  {
    _validation = std::move(v);
    _from_cache = from_cache;
  }

  void warn(std::string w) { _warnings.push_back(std::move(w)); }

private:
  void add_name(std::string const &n, std::size_t i)
  {
    if (!_by_name.emplace(n, i).second)
      throw ParseError("catalog name " + n + " is used twice");
  }

  std::optional<EntryValidation> validation_of(std::string const &name) const
  {
    for (auto const &v : _validation)
      if (v.name == name)
        return v;
    return std::nullopt;
  }

  std::vector<CatalogEntry> _entries;
  RunConfig _config;
  std::map<std::string, std::size_t> _by_name;
  std::vector<EntryValidation> _validation;
  std::vector<std::string> _warnings;
  bool _from_cache = false;
  mutable std::unique_ptr<std::mutex> _mutex = std::make_unique<std::mutex>();
  mutable std::map<std::string, GroupDataPtr> _data;
};

inline std::vector<CatalogEntry> parse_catalog(std::string const &text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const &ex) {
    throw ParseError(std::string("catalog: ") + ex.what());
  }
  if (j.value("schema_version", 0) != catalog_schema_version)
    throw ParseError("catalog: unsupported schema_version");
  std::vector<CatalogEntry> out;
  for (auto const &e : j.value("groups", nlohmann::json::array()))
    out.push_back(detail::parse_entry(e));
  return out;
}

/// Validate one entry: generators parse and reach the recorded order, the
/// presentation certifies against them, alternates certify against their own
/// tuples, and a cover link defines a central extension.
inline EntryValidation validate_entry(Catalog const &cat, CatalogEntry const &e)
{
  EntryValidation v;
  v.name = e.name;
  auto fail = [&](std::string reason) {
    v.ok = false;
    v.reason = std::move(reason);
    return v;
  };
  try {
    auto gens = detail::parse_generators(e.degree, e.generators);
    PermGroup g(gens);
    v.bsgs_order = g.order();
    if (g.order() != e.order)
      return fail("generators give order " + std::to_string(g.order()) + ", recorded " +
                  std::to_string(e.order));
    auto names = generator_names(gens.size());
    if (e.presentation) {
      auto p = certify(Presentation::parse(names, e.presentation->relators), g, gens,
                       cat.config().coset_cap);
      v.certified_order = p.certified_order;
    }
    for (auto const &alt : e.alternates) {
      auto agens = detail::parse_generators(e.degree, alt.generators);
      auto p = certify(Presentation::parse(generator_names(agens.size()), alt.relators), g, agens,
                       cat.config().coset_cap);
      v.alternate_orders.push_back(*p.certified_order);
    }
    if (e.cover_of) {
      if (!cat.has(e.cover_of->quotient))
        return fail("cover_of names unknown quotient " + e.cover_of->quotient);
      auto const &q = cat.entry(e.cover_of->quotient);
      auto qg = make_group(detail::parse_generators(q.degree, q.generators));
      auto imgs = detail::parse_generators(q.degree, e.cover_of->projection);
      auto t = std::make_shared<GroupData>(e.name, make_group(gens), std::nullopt, cat.config().element_cap);
      auto qd = std::make_shared<GroupData>(q.name, qg, std::nullopt, cat.config().element_cap);
      make_central_extension(t, qd, imgs);
      v.cover_ok = true;
    }
    if (e.automorphism_group && !cat.has(*e.automorphism_group))
      return fail("automorphism_group names unknown entry " + *e.automorphism_group);
  } catch (Error const &ex) {
    return fail(ex.what());
  }
  return v;
}

namespace detail
{

inline nlohmann::json validation_to_json(std::vector<EntryValidation> const &vs)
{
  auto arr = nlohmann::json::array();
  for (auto const &v : vs) {
    nlohmann::json j{{"name", v.name}, {"ok", v.ok}, {"reason", v.reason}, {"bsgs_order", v.bsgs_order},
                     {"alternate_orders", v.alternate_orders}};
    j["certified_order"] = v.certified_order ? nlohmann::json(*v.certified_order) : nlohmann::json();
    j["cover_ok"] = v.cover_ok ? nlohmann::json(*v.cover_ok) : nlohmann::json();
    arr.push_back(j);
  }
  return arr;
}

inline std::vector<EntryValidation> validation_from_json(nlohmann::json const &arr)
{
  std::vector<EntryValidation> out;
  for (auto const &j : arr) {
    EntryValidation v;
    v.name = j.at("name").get<std::string>();
    v.ok = j.at("ok").get<bool>();
    v.reason = j.at("reason").get<std::string>();
    v.bsgs_order = j.at("bsgs_order").get<std::uint64_t>();
    v.alternate_orders = j.at("alternate_orders").get<std::vector<std::uint64_t>>();
    if (!j.at("certified_order").is_null())
      v.certified_order = j.at("certified_order").get<std::uint64_t>();
    if (!j.at("cover_ok").is_null())
      v.cover_ok = j.at("cover_ok").get<bool>();
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace detail

/// Write `text` to `path` atomically (temporary file, then rename).
inline void write_file_atomic(std::filesystem::path const &path, std::string const &text)
{
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write " + tmp.string());
    out << text;
    if (!out.flush())
      throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::filesystem::path cache_path(RunConfig const &config, std::uint64_t content_hash)
{
  std::ostringstream name;
  name << "catalog-" << std::hex << content_hash << "-c" << std::dec << config.coset_cap << ".json";
  return std::filesystem::path(config.cache_dir) / name.str();
}

/// Load and validate a catalog. Entries outside the configured tier are
/// parsed but not validated. With `strict`, the first invalid entry raises
/// ValidationError; otherwise failures are recorded per entry. Validation
/// results are cached under config.cache_dir when it is set.
inline Catalog load_catalog_text(std::string const &text, RunConfig const &config, bool strict = true)
{
  Catalog cat(parse_catalog(text), config);
  if (cat.entries().empty())
    cat.warn("catalog is empty");
  std::uint64_t hash = detail::fnv1a(text);
  if (!config.cache_dir.empty()) {
    auto path = cache_path(config, hash);
    std::ifstream in(path);
    if (in) {
      try {
        auto j = nlohmann::json::parse(in);
        if (j.at("schema_version").get<int>() == catalog_schema_version &&
            j.at("tier").get<std::string>() == config.tier) {
          cat.set_validation(detail::validation_from_json(j.at("entries")), true);
          for (auto const &v : cat.validation())
            if (!v.ok && strict)
              throw ValidationError(v.name, v.reason);
          return cat;
        }
      } catch (nlohmann::json::exception const &) {
        cat.warn("ignoring unreadable cache " + path.string());
      }
    }
  }
  std::vector<EntryValidation> results;
  for (auto const &e : cat.entries()) {
    if (!config.tier_enabled(e.tier))
      continue;
    auto v = validate_entry(cat, e);
    if (!v.ok && strict)
      throw ValidationError(v.name, v.reason);
    results.push_back(std::move(v));
  }
  cat.set_validation(std::move(results), false);
  if (!config.cache_dir.empty()) {
    nlohmann::json j{{"schema_version", catalog_schema_version},
                     {"tier", config.tier},
                     {"entries", detail::validation_to_json(cat.validation())}};
    write_file_atomic(cache_path(config, hash), j.dump(1) + "\n");
  }
  return cat;
}

inline Catalog load_catalog(std::filesystem::path const &path, RunConfig const &config, bool strict = true)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open catalog " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_catalog_text(ss.str(), config, strict);
}

} // namespace grouploc
