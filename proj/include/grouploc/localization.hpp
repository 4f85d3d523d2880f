#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "analysis.hpp"
#include "automorphisms.hpp"
#include "error.hpp"
#include "group_data.hpp"
#include "hom_search.hpp"

namespace grouploc
{

inline constexpr std::uint64_t default_orbit_budget = 50000000;

enum class Verdict
{
  yes,
  no,
  indeterminate
};

inline char const *to_string(Verdict v)
{
  switch (v) {
  case Verdict::yes: return "true";
  case Verdict::no: return "false";
  default: return "indeterminate";
  }
}

struct LocalizationOptions
{
  HomSearchOptions search;
  std::uint64_t orbit_budget = default_orbit_budget;
  bool orbit_diagnostics = true;
};

/// Outcome of testing whether precomposition with phi: H -> G is a bijection
/// Hom(G, G) -> Hom(H, G).
struct LocalizationReport
{
  std::string source_name;
  std::string target_name;
  GroupHom phi;
  bool phi_injective = false;
  Verdict verdict = Verdict::indeterminate;
  std::uint64_t hom_gg_count = 0;
  std::uint64_t hom_hg_count = 0;
  std::uint64_t mono_hg_count = 0;
  std::uint64_t aut_g_order = 0;
  bool injective = false;
  bool surjective = false;
  /// Two endomorphisms of G (indices into hom_gg) with equal restriction.
  std::optional<std::pair<std::size_t, std::size_t>> injectivity_witness;
  /// A hom H -> G (index into hom_hg) that extends to no endomorphism of G.
  std::optional<std::size_t> surjectivity_witness;
  std::optional<std::uint64_t> mono_orbit_count;
  std::optional<std::uint64_t> subgroup_class_count;
  std::optional<std::uint64_t> subgroup_aut_class_count;
  std::vector<std::string> caps_hit;
  double runtime_ms = 0;

  std::shared_ptr<HomSet const> hom_gg;
  std::shared_ptr<HomSet const> hom_hg;
  std::vector<std::uint32_t> restriction; // hom_gg index -> hom_hg index

  bool holds() const { return verdict == Verdict::yes; }
};

namespace detail
{

inline std::vector<Permutation> letter_images(EnumeratedGroup const &g, std::span<ElementId const> ids)
{
  std::vector<Permutation> out;
  for (auto x : ids) {
    auto p = g.index().element(x);
    out.push_back(p);
    out.push_back(p.inverse());
  }
  return out;
}

/// For each hom psi in `homs` (into the enumerated group `g`, whose source is
/// g's group), the tuple psi(x_1), ..., psi(x_r) as element indices of g.
inline void post_compose(EnumeratedGroup const &g, std::span<ElementId const> psi,
                         std::vector<std::vector<std::size_t>> const &paths,
                         std::vector<ElementId> &out)
{
  auto letters = letter_images(g, psi);
  std::size_t deg = g.index().degree();
  std::vector<Point> acc(deg), tmp(deg);
  out.clear();
  for (auto const &path : paths) {
    std::iota(acc.begin(), acc.end(), Point{0});
    for (std::size_t l : path) {
      compose_into(tmp, acc, letters[l].images());
      std::swap(acc, tmp);
    }
    out.push_back(g.index().index_of(acc));
  }
}

template <typename F>
void parallel_for(std::size_t n, std::size_t workers, F &&body)
{
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n)
          return;
        try {
          body(i, w);
        } catch (...) {
          std::lock_guard lock(m);
          if (!failure)
            failure = std::current_exception();
          next.store(n);
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

struct UnionFind
{
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::size_t classes()
  {
    std::size_t n = 0;
    for (std::uint32_t i = 0; i < parent.size(); ++i)
      n += find(i) == i;
    return n;
  }
};

/// Distinct image subgroups of the monos in `hg`, as sorted element-index
/// sets; sub_of maps each hom to its subgroup (-1 for non-monos).
struct ImageSubgroups
{
  std::vector<std::vector<ElementId>> sets;
  std::vector<std::int32_t> sub_of;
};

inline ImageSubgroups image_subgroups(HomSet const &hg)
{
  auto const &g = *hg.target;
  ImageSubgroups out;
  out.sub_of.assign(hg.count(), -1);
  std::vector<std::vector<std::uint32_t>> containing(g.size());
  for (std::size_t i = 0; i < hg.count(); ++i) {
    if (!hg.is_mono(i))
      continue;
    auto t = hg.ids(i);
    std::int32_t found = -1;
    for (auto s : containing[t[0]]) {
      auto const &set = out.sets[s];
      bool all = std::all_of(t.begin(), t.end(),
                             [&](ElementId x) { return std::binary_search(set.begin(), set.end(), x); });
      if (all) {
        found = static_cast<std::int32_t>(s);
        break;
      }
    }
    if (found < 0) {
      std::vector<ElementId> set;
      auto imgs = hg.images(i);
      PermGroup sub(imgs);
      sub.for_each_element([&](Permutation const &p) { set.push_back(g.index().index_of(p)); });
      std::sort(set.begin(), set.end());
      found = static_cast<std::int32_t>(out.sets.size());
      for (auto x : set)
        containing[x].push_back(static_cast<std::uint32_t>(found));
      out.sets.push_back(std::move(set));
    }
    out.sub_of[i] = found;
  }
  return out;
}

/// Number of classes of the given subgroups under conjugation by g.
inline std::size_t subgroup_conjugacy_class_count(EnumeratedGroup const &g,
                                                  std::vector<std::vector<ElementId>> const &sets)
{
  std::unordered_map<std::vector<ElementId>, std::uint32_t, KeyHash> key;
  for (std::uint32_t s = 0; s < sets.size(); ++s)
    key.emplace(sets[s], s);
  UnionFind uf(sets.size());
  for (auto const &t : g.group().generators()) {
    auto conj = conjugation_map(g, t);
    for (std::uint32_t s = 0; s < sets.size(); ++s) {
      std::vector<ElementId> img;
      img.reserve(sets[s].size());
      for (auto x : sets[s])
        img.push_back(conj[x]);
      std::sort(img.begin(), img.end());
      auto it = key.find(img);
      if (it == key.end())
        throw Error("set of image subgroups is not closed under conjugation");
      uf.unite(s, it->second);
    }
  }
  return uf.classes();
}

} // namespace detail

/// Letter paths in g's Cayley tree for the given elements of g.
inline std::vector<std::vector<std::size_t>> element_paths(EnumeratedGroup const &g,
                                                           std::vector<Permutation> const &xs)
{
  std::vector<std::vector<std::size_t>> paths;
  for (auto const &x : xs)
    paths.push_back(g.letter_path(g.index().index_of(x)));
  return paths;
}

/// Decide whether phi: H -> G is a localization. Resource caps yield an
/// indeterminate verdict, never a guessed one.
inline LocalizationReport check_localization(GroupData const &h, GroupData const &g, GroupHom const &phi,
                                             LocalizationOptions const &opt = {})
{
  auto start = std::chrono::steady_clock::now();
  LocalizationReport r;
  r.source_name = h.name();
  r.target_name = g.name();
  r.phi = phi;
  auto finish = [&] {
    r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (phi.images.size() != h.group()->generators().size())
    throw PreconditionError("check_localization: phi must give one image per generator of H");
  r.phi_injective = phi.is_injective();

  try {
    r.hom_gg = g.endomorphisms(opt.search);
    r.hom_hg = std::make_shared<HomSet const>(g.homs_from(h.domain(), opt.search));
  } catch (CapExceeded const &e) {
    r.caps_hit.push_back(e.cap());
    r.verdict = Verdict::indeterminate;
    return finish();
  }
  auto const &gg = *r.hom_gg;
  auto const &hg = *r.hom_hg;
  auto const &ge = *g.enumerated();
  r.hom_gg_count = gg.count();
  r.hom_hg_count = hg.count();
  r.mono_hg_count = hg.mono_count;
  r.aut_g_order = gg.mono_count;

  auto paths = element_paths(ge, phi.images);
  r.restriction.assign(gg.count(), 0);
  std::vector<std::vector<ElementId>> scratch(std::max<std::size_t>(1, opt.search.workers));
  constexpr std::uint32_t missing = 0xffffffffu;
  detail::parallel_for(gg.count(), opt.search.workers, [&](std::size_t i, std::size_t w) {
    detail::post_compose(ge, gg.ids(i), paths, scratch[w]);
    auto j = hg.find(scratch[w]);
    r.restriction[i] = j ? static_cast<std::uint32_t>(*j) : missing;
  });
  for (std::size_t i = 0; i < gg.count(); ++i)
    if (r.restriction[i] == missing)
      throw Error("restriction of an endomorphism is missing from Hom(H, G)");

  std::vector<std::int64_t> first_hit(hg.count(), -1);
  r.injective = true;
  for (std::size_t i = 0; i < gg.count(); ++i) {
    auto j = r.restriction[i];
    if (first_hit[j] >= 0) {
      if (r.injective)
        r.injectivity_witness = {static_cast<std::size_t>(first_hit[j]), i};
      r.injective = false;
    } else {
      first_hit[j] = static_cast<std::int64_t>(i);
    }
  }
  r.surjective = true;
  for (std::size_t j = 0; j < hg.count(); ++j)
    if (first_hit[j] < 0) {
      r.surjective = false;
      r.surjectivity_witness = j;
      break;
    }
  r.verdict = r.injective && r.surjective ? Verdict::yes : Verdict::no;

  if (opt.orbit_diagnostics && hg.mono_count > 0) {
    auto subs = detail::image_subgroups(hg);
    r.subgroup_class_count = detail::subgroup_conjugacy_class_count(ge, subs.sets);
    std::vector<std::size_t> autos;
    for (std::size_t i = 0; i < gg.count(); ++i)
      if (gg.is_mono(i))
        autos.push_back(i);
    std::vector<std::uint8_t> seen(hg.count(), 0);
    detail::UnionFind uf(subs.sets.size());
    std::uint64_t orbits = 0;
    std::uint64_t work = 0;
    bool capped = false;
    std::vector<ElementId> tuple;
    for (std::size_t m = 0; m < hg.count() && !capped; ++m) {
      if (!hg.is_mono(m) || seen[m])
        continue;
      ++orbits;
      auto mpaths = element_paths(ge, hg.images(m));
      for (auto a : autos) {
        if (++work > opt.orbit_budget) {
          capped = true;
          break;
        }
        detail::post_compose(ge, gg.ids(a), mpaths, tuple);
        auto j = hg.find(tuple);
        if (!j || !hg.is_mono(*j))
          throw Error("post-composition with an automorphism left Mono(H, G)");
        seen[*j] = 1;
        uf.unite(static_cast<std::uint32_t>(subs.sub_of[m]), static_cast<std::uint32_t>(subs.sub_of[*j]));
      }
    }
    if (capped) {
      r.caps_hit.push_back("orbit_budget");
    } else {
      r.mono_orbit_count = orbits;
      r.subgroup_aut_class_count = uf.classes();
    }
  } else if (opt.orbit_diagnostics) {
    r.mono_orbit_count = 0;
    r.subgroup_class_count = 0;
    r.subgroup_aut_class_count = 0;
  }
  return finish();
}

/// The inclusion H -> G when H's generators, padded to G's degree, lie in G.
inline std::optional<GroupHom> literal_inclusion(GroupData const &h, GroupData const &g)
{
  if (h.group()->degree() > g.group()->degree())
    return std::nullopt;
  std::vector<Permutation> imgs;
  for (auto const &x : h.group()->generators()) {
    auto p = x.extended(g.group()->degree());
    if (!g.group()->contains(p))
      return std::nullopt;
    imgs.push_back(std::move(p));
  }
  GroupHom phi{h.group(), g.group(), std::move(imgs), HomVerification::graph_certified};
  if (!graph_test(*h.group(), phi.images))
    return std::nullopt;
  return phi;
}

/// The lexicographically first monomorphism H -> G, if any.
inline std::optional<GroupHom> first_mono(GroupData const &h, GroupData const &g,
                                          HomSearchOptions const &opt = {})
{
  auto hg = g.homs_from(h.domain(), opt);
  for (std::size_t i = 0; i < hg.count(); ++i)
    if (hg.is_mono(i))
      return hg.hom(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Central extensions

/// A surjection from `total` onto `quotient` with central kernel.
struct CentralExtension
{
  GroupDataPtr total;
  GroupDataPtr quotient;
  GroupHom proj;
  std::optional<Subgroup> kernel;
  std::optional<AbelianInvariants> mult_catalog;
  std::vector<ElementId> proj_table; // total element -> quotient element

  std::vector<ElementId> preimages(ElementId q) const
  {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < proj_table.size(); ++x)
      if (proj_table[x] == q)
        out.push_back(x);
    return out;
  }
};

/// Throws ValidationError unless proj_images define a surjection with central
/// kernel of order |total| / |quotient|.
inline CentralExtension make_central_extension(GroupDataPtr total, GroupDataPtr quotient,
                                               std::vector<Permutation> proj_images)
{
  std::string what = total->name() + " -> " + quotient->name();
  CentralExtension e;
  e.total = total;
  e.quotient = quotient;
  e.mult_catalog = quotient->mult;
  e.proj = make_hom(total->group(), quotient->group(), std::move(proj_images));
  if (!e.proj.is_surjective())
    throw ValidationError(what, "projection is not surjective");
  auto te = total->enumerated();
  auto qe = quotient->enumerated();
  auto letters = detail::letter_images(*qe, [&] {
    std::vector<ElementId> ids;
    for (auto const &p : e.proj.images)
      ids.push_back(qe->index().index_of(p));
    return ids;
  }());
  e.proj_table.resize(te->size());
  std::vector<Permutation> kernel;
  for (ElementId x = 0; x < te->size(); ++x) {
    e.proj_table[x] = qe->index().index_of(te->apply_letters(letters, x));
    if (e.proj_table[x] == 0 && x != 0)
      kernel.push_back(te->index().element(x));
  }
  e.kernel = make_subgroup(total->group(), kernel);
  if (e.kernel->order() * quotient->order() != total->order())
    throw ValidationError(what, "kernel order does not match |total| / |quotient|");
  auto const &z = total->center_subgroup();
  for (auto const &k : e.kernel->gens)
    if (!z.contains(k))
      throw ValidationError(what, "kernel is not central");
  return e;
}

/// The identity of H viewed as a (trivial) central extension.
inline CentralExtension identity_extension(GroupDataPtr h)
{ return make_central_extension(h, h, h->group()->generators()); }

/// Total group perfect, kernel central and of order |Mult(quotient)|.
/// Throws MissingCatalogDatum when the multiplier is not recorded.
inline bool verify_universal_cover(CentralExtension const &e)
{
  if (!e.mult_catalog)
    throw MissingCatalogDatum("Schur multiplier of " + e.quotient->name() + " not recorded");
  if (!is_perfect(e.total->group()))
    return false;
  auto const &z = e.total->center_subgroup();
  for (auto const &k : e.kernel->gens)
    if (!z.contains(k))
      return false;
  return e.kernel->order() == invariants_order(*e.mult_catalog);
}

struct CenterAudit
{
  bool ok = true;
  std::uint64_t homs_checked = 0;
  std::vector<GroupHom> violators;
};

/// Whether every hom Ht.total -> Gt.total maps Ht's kernel into Gt's kernel.
inline CenterAudit center_to_center_audit(CentralExtension const &ht, CentralExtension const &gt,
                                          HomSearchOptions const &opt = {})
{
  CenterAudit a;
  auto homs = gt.total->homs_from(ht.total->domain(), opt);
  auto he = ht.total->enumerated();
  std::vector<ElementId> kernel_ids;
  for (auto const &k : ht.kernel->gens)
    kernel_ids.push_back(he->index().index_of(k));
  for (std::size_t i = 0; i < homs.count(); ++i) {
    ++a.homs_checked;
    auto imgs = homs.images(i);
    for (auto k : kernel_ids) {
      auto y = he->apply(imgs, k);
      if (!gt.kernel->contains(y)) {
        a.ok = false;
        a.violators.push_back(homs.hom(i));
        break;
      }
    }
  }
  return a;
}

namespace detail
{

inline bool is_hom(SearchDomain const &src, std::vector<Permutation> const &imgs)
{
  if (src.certified()) {
    for (auto const &rel : src.presentation->relators)
      if (!evaluate(rel, imgs).is_identity())
        return false;
    return true;
  }
  return graph_test(*src.group, imgs);
}

} // namespace detail

/// The unique beta: Ht.total -> Gt.total with Gt.proj o beta = alpha o Ht.proj,
/// found by exhausting the kernel cosets over each generator. Throws NoLift
/// or NonUniqueLift.
inline GroupHom induced_cover_hom(GroupHom const &alpha, CentralExtension const &ht,
                                  CentralExtension const &gt)
{
  auto qh = ht.quotient->enumerated();
  auto qg = gt.quotient->enumerated();
  auto tg = gt.total->enumerated();
  std::vector<std::vector<ElementId>> choices;
  for (auto const &q : ht.proj.images) {
    auto v = qh->apply(alpha.images, qh->index().index_of(q));
    choices.push_back(gt.preimages(qg->index().index_of(v)));
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<GroupHom> found;
  for (;;) {
    std::vector<Permutation> imgs;
    for (std::size_t i = 0; i < choices.size(); ++i)
      imgs.push_back(tg->index().element(choices[i][pos[i]]));
    if (detail::is_hom(ht.total->domain(), imgs))
      found.push_back(GroupHom{ht.total->group(), gt.total->group(), std::move(imgs),
                               ht.total->domain().certified() ? HomVerification::relator_certified
                                                              : HomVerification::graph_certified});
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == choices[i].size())
      pos[i++] = 0;
    if (i == pos.size())
      break;
  }
  if (found.empty())
    throw NoLift("no lift of the hom " + ht.quotient->name() + " -> " + gt.quotient->name() +
                 " to the covers");
  if (found.size() > 1)
    throw NonUniqueLift(std::to_string(found.size()) + " lifts of the hom " + ht.quotient->name() +
                        " -> " + gt.quotient->name());
  return found.front();
}

struct CoverAutComparison
{
  std::uint64_t aut_quotient = 0;
  std::uint64_t aut_total = 0;
  bool induced_injective = false;
  bool bijective = false;
};

/// Lift every automorphism of the quotient to the cover and check that the
/// induced map Aut(G) -> Aut(G~) is a bijection.
inline CoverAutComparison compare_cover_automorphisms(CentralExtension const &e,
                                                      HomSearchOptions const &opt = {})
{
  CoverAutComparison c;
  auto qa = e.quotient->endomorphisms(opt);
  auto ta = e.total->endomorphisms(opt);
  c.aut_quotient = qa->mono_count;
  c.aut_total = ta->mono_count;
  std::vector<std::uint8_t> hit(ta->count(), 0);
  c.induced_injective = true;
  std::uint64_t lifted = 0;
  for (std::size_t i = 0; i < qa->count(); ++i) {
    if (!qa->is_mono(i))
      continue;
    auto beta = induced_cover_hom(qa->hom(i), e, e);
    auto j = ta->find(beta.images);
    if (!j || !ta->is_mono(*j))
      throw Error("lifted automorphism is not an automorphism of the cover");
    if (hit[*j])
      c.induced_injective = false;
    hit[*j] = 1;
    ++lifted;
  }
  c.bijective = c.induced_injective && lifted == c.aut_total;
  return c;
}

struct CentralExtensionSearch
{
  bool contains = false;
  std::optional<GroupHom> witness;
  std::string note;
};

/// Whether G contains a non-trivial central extension of H. For trivial
/// Mult(H) this is vacuously false; for prime-order Mult(H) the only such
/// extension is the cover itself. Other multipliers need the catalog to list
/// the intermediate covers in `others`; otherwise MissingCatalogDatum.
inline CentralExtensionSearch contains_central_extension_of(GroupData const &g, CentralExtension const &ht,
                                                            std::vector<GroupDataPtr> const &others = {},
                                                            HomSearchOptions const &opt = {})
{
  CentralExtensionSearch s;
  if (!ht.mult_catalog)
    throw MissingCatalogDatum("Schur multiplier of " + ht.quotient->name() + " not recorded");
  auto m = invariants_order(*ht.mult_catalog);
  if (m == 1) {
    s.note = "Mult(" + ht.quotient->name() + ") is trivial";
    return s;
  }
  std::vector<GroupDataPtr> exts;
  bool prime = m > 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0)
      prime = false;
  if (prime) {
    exts.push_back(ht.total);
  } else {
    if (others.empty())
      throw MissingCatalogDatum("central extensions of " + ht.quotient->name() +
                                " with multiplier " + invariants_to_string(*ht.mult_catalog) +
                                " are not in the catalog");
    exts = others;
  }
  for (auto const &x : exts) {
    if (g.order() % x->order() != 0)
      continue;
    auto homs = g.homs_from(x->domain(), opt);
    for (std::size_t i = 0; i < homs.count(); ++i)
      if (homs.is_mono(i)) {
        s.contains = true;
        s.witness = homs.hom(i);
        s.note = "mono from " + x->name();
        return s;
      }
  }
  s.note = "no mono from any non-trivial central extension";
  return s;
}

struct EquivalenceReport
{
  bool hypothesis_holds = false;
  std::string hypothesis_note;
  GroupHom lift;
  LocalizationReport base;
  LocalizationReport covers;
  bool agree = false;
};

/// Compare i: H -> G with its lift j: H~ -> G~. When G contains no
/// non-trivial central extension of H the two verdicts must agree; a
/// disagreement throws ConsistencyViolation.
inline EquivalenceReport check_cover_equivalence(GroupHom const &i, CentralExtension const &ht,
                                           CentralExtension const &gt,
                                           std::vector<GroupDataPtr> const &others = {},
                                           LocalizationOptions const &opt = {})
{
  EquivalenceReport rep;
  auto s = contains_central_extension_of(*gt.quotient, ht, others, opt.search);
  rep.hypothesis_holds = !s.contains;
  rep.hypothesis_note = s.note;
  rep.lift = induced_cover_hom(i, ht, gt);
  rep.base = check_localization(*ht.quotient, *gt.quotient, i, opt);
  rep.covers = check_localization(*ht.total, *gt.total, rep.lift, opt);
  bool determinate = rep.base.verdict != Verdict::indeterminate &&
                     rep.covers.verdict != Verdict::indeterminate;
  rep.agree = determinate && rep.base.verdict == rep.covers.verdict;
  if (rep.hypothesis_holds && determinate && !rep.agree)
    throw ConsistencyViolation("localization verdicts of " + ht.quotient->name() + " -> " +
                           gt.quotient->name() + " and of its lift to the covers disagree");
  return rep;
}

// ---------------------------------------------------------------------------
// Automorphism groups

namespace detail
{

/// Checks that `a` is Aut(x) acting by conjugation: x normal in a, trivial
/// centraliser, and |a| = |Aut(x)|.
inline void check_aut_container(GroupData const &x, GroupData const &a, std::uint64_t aut_order)
{
  auto const &xg = x.group()->generators();
  for (auto const &g : xg)
    if (g.degree() != a.group()->degree() || !a.group()->contains(g))
      throw PreconditionError(a.name() + " does not contain " + x.name());
  for (auto const &t : a.group()->generators())
    for (auto const &g : xg)
      if (!x.group()->contains(conjugate(t, g)))
        throw PreconditionError(x.name() + " is not normal in " + a.name());
  if (a.order() != aut_order)
    throw PreconditionError(a.name() + " has order " + std::to_string(a.order()) + ", but |Aut(" +
                            x.name() + ")| = " + std::to_string(aut_order));
  auto ae = a.enumerated();
  for (ElementId y = 1; y < ae->size(); ++y) {
    auto p = ae->index().element(y);
    if (std::all_of(xg.begin(), xg.end(), [&](auto const &g) { return p * g == g * p; }))
      throw PreconditionError(a.name() + " centralises " + x.name() + " non-trivially");
  }
}

/// The element of the enumerated group `a` whose conjugation sends each
/// generator of G to the matching entry of `targets`.
inline std::vector<Permutation> conjugators_matching(EnumeratedGroup const &a,
                                                     std::vector<Permutation> const &gens,
                                                     std::vector<Permutation> const &targets)
{
  std::vector<Permutation> out;
  for (ElementId y = 0; y < a.size(); ++y) {
    auto p = a.index().element(y);
    bool ok = true;
    for (std::size_t k = 0; k < gens.size() && ok; ++k)
      ok = p * gens[k] == targets[k] * p;
    if (ok)
      out.push_back(std::move(p));
  }
  return out;
}

} // namespace detail

struct AutExtension
{
  GroupHom j; // Aut(H) -> Aut(G), realised inside the catalog groups AH -> AG
  std::uint64_t aut_h = 0;
  std::uint64_t aut_g = 0;
  std::uint64_t autos_extended = 0;
};

/// Extend a verified localization i: H -> G to j: Aut(H) -> Aut(G), with
/// Aut(H), Aut(G) realised as the groups `ah`, `ag` acting by conjugation.
/// Every automorphism alpha of H has exactly one beta with beta o i = i o alpha;
/// throws ExtensionMissing or ExtensionNotUnique otherwise.
inline AutExtension extend_to_aut(LocalizationReport const &loc, GroupData const &h, GroupData const &g,
                                  GroupData const &ah, GroupData const &ag,
                                  HomSearchOptions const &opt = {})
{
  if (!loc.holds())
    throw PreconditionError("extend_to_aut needs a verified localization");
  AutExtension out;
  auto hh = h.endomorphisms(opt);
  out.aut_h = hh->mono_count;
  out.aut_g = loc.aut_g_order;
  detail::check_aut_container(h, ah, out.aut_h);
  detail::check_aut_container(g, ag, out.aut_g);

  auto he = h.enumerated();
  auto ge = g.enumerated();
  auto const &hg = *loc.hom_hg;
  auto const &gg = *loc.hom_gg;
  std::vector<std::vector<std::uint32_t>> preimage(hg.count());
  for (std::uint32_t psi = 0; psi < loc.restriction.size(); ++psi)
    preimage[loc.restriction[psi]].push_back(psi);

  // i o alpha for alpha given by images of H's generators
  auto i_letters = detail::letter_images(*ge, [&] {
    std::vector<ElementId> ids;
    for (auto const &p : loc.phi.images)
      ids.push_back(ge->index().index_of(p));
    return ids;
  }());
  auto beta_for = [&](std::vector<Permutation> const &alpha_imgs) -> std::uint32_t {
    std::vector<ElementId> t;
    for (auto const &x : alpha_imgs)
      t.push_back(ge->index().index_of(he->apply_letters(i_letters, he->index().index_of(x))));
    auto k = hg.find(t);
    if (!k || preimage[*k].empty())
      throw ExtensionMissing("an automorphism of " + h.name() + " has no extension to " + g.name());
    if (preimage[*k].size() > 1)
      throw ExtensionNotUnique("an automorphism of " + h.name() + " extends in " +
                               std::to_string(preimage[*k].size()) + " ways");
    auto b = preimage[*k].front();
    if (!gg.is_mono(b))
      throw ExtensionMissing("the extension of an automorphism of " + h.name() +
                             " is not an automorphism");
    return b;
  };

  std::vector<std::uint8_t> used(gg.count(), 0);
  for (std::size_t a = 0; a < hh->count(); ++a) {
    if (!hh->is_mono(a))
      continue;
    auto b = beta_for(hh->images(a));
    if (used[b])
      throw ConsistencyViolation("two automorphisms of " + h.name() + " extend to the same one");
    used[b] = 1;
    ++out.autos_extended;
  }

  auto age = ag.enumerated();
  std::vector<Permutation> j_images;
  auto const &hgens = h.group()->generators();
  auto const &ggens = g.group()->generators();
  for (auto const &t : ah.group()->generators()) {
    std::vector<Permutation> alpha;
    for (auto const &x : hgens)
      alpha.push_back(conjugate(t, x));
    auto b = beta_for(alpha);
    auto beta = gg.images(b);
    auto xs = detail::conjugators_matching(*age, ggens, beta);
    if (xs.size() != 1)
      throw Error(ag.name() + " realises an automorphism of " + g.name() + " " +
                  std::to_string(xs.size()) + " times");
    j_images.push_back(xs.front());
  }
  out.j = make_hom(ah.group(), ag.group(), std::move(j_images));
  if (!out.j.is_injective())
    throw ConsistencyViolation("extension " + ah.name() + " -> " + ag.name() + " is not injective");
  return out;
}

struct AutLocalizationReport
{
  LocalizationReport group_level;
  AutExtension extension;
  std::uint64_t out_h = 0;
  std::uint64_t out_g = 0;
  bool hypothesis_holds = false;
  bool prime_out_shortcut = false;  // |Out(H)| = |Out(G)| prime
  bool shortcut_discharge = false;  // j(Aut H) not inside Inn(G)
  std::optional<LocalizationReport> aut_level;
};

/// Aut-level check for a localization i: H -> G. The hypothesis is that j
/// induces Out(H) = Out(G): equal orders and ⟨j(Aut H), G⟩ = Aut(G). When it
/// holds, j must itself be a localization; otherwise ConsistencyViolation.
inline AutLocalizationReport check_aut_localization(LocalizationReport const &loc, GroupData const &h,
                                               GroupData const &g, GroupData const &ah, GroupData const &ag,
                                               LocalizationOptions const &opt = {})
{
  AutLocalizationReport r;
  r.group_level = loc;
  r.extension = extend_to_aut(loc, h, g, ah, ag, opt.search);
  r.out_h = r.extension.aut_h / (h.order() / h.center_subgroup().order());
  r.out_g = r.extension.aut_g / (g.order() / g.center_subgroup().order());
  bool beyond_inner = false;
  for (auto const &x : r.extension.j.images)
    if (!g.group()->contains(x))
      beyond_inner = true;
  std::vector<Permutation> gens = r.extension.j.images;
  for (auto const &x : g.group()->generators())
    gens.push_back(x);
  bool onto_out = PermGroup(gens).order() == ag.order();
  r.hypothesis_holds = r.out_h == r.out_g && onto_out;
  bool prime = r.out_h > 1;
  for (std::uint64_t d = 2; d * d <= r.out_h; ++d)
    if (r.out_h % d == 0)
      prime = false;
  r.prime_out_shortcut = r.out_h == r.out_g && prime;
  r.shortcut_discharge = beyond_inner;
  if (r.prime_out_shortcut && r.shortcut_discharge != r.hypothesis_holds)
    throw Error("prime-order shortcut disagrees with the direct Out comparison");
  if (r.hypothesis_holds) {
    r.aut_level = check_localization(ah, ag, r.extension.j, opt);
    if (r.aut_level->verdict == Verdict::no)
      throw ConsistencyViolation("extension " + ah.name() + " -> " + ag.name() +
                             " is not a localization although Out(H) = Out(G)");
  }
  return r;
}

struct LemmaAudit
{
  bool ok = true;
  std::uint64_t checked = 0;
  std::string note;
};

/// Every non-trivial normal subgroup of Aut(G) contains Inn(G).
inline LemmaAudit audit_normal_subgroups_contain_inn(GroupData const &g, HomSearchOptions const &opt = {})
{
  if (!is_simple(*g.enumerated(), g.classes()) || g.center_subgroup().order() == g.order())
    throw PreconditionError("audit_normal_subgroups_contain_inn needs a non-abelian simple group");
  auto aut = automorphism_group(g, opt);
  auto real = aut.perm_realization;
  EnumeratedGroup re(real);
  auto cls = conjugacy_classes(re);
  LemmaAudit a;
  for (std::size_t c = 1; c < cls.size(); ++c) {
    auto n = normal_closure(real, {re.index().element(cls.reps[c])});
    ++a.checked;
    if (!n.group->contains_group(*aut.inn->group)) {
      a.ok = false;
      a.note = "normal closure of order " + std::to_string(n.order()) + " misses Inn";
      return a;
    }
  }
  a.note = std::to_string(a.checked) + " class representatives of Aut(" + g.name() + ")";
  return a;
}

/// Every mono from the simple group H into Aut(G) lands in Inn(G).
inline LemmaAudit audit_simple_monos_in_inn(GroupData const &h, GroupData const &g, HomSearchOptions const &opt = {})
{
  if (!is_simple(*h.enumerated(), h.classes()) || h.center_subgroup().order() == h.order())
    throw PreconditionError("audit_simple_monos_in_inn needs a non-abelian simple source");
  auto aut = automorphism_group(g, opt);
  GroupData real("Aut(" + g.name() + ")", aut.perm_realization);
  auto homs = real.homs_from(h.domain(), opt);
  LemmaAudit a;
  for (std::size_t i = 0; i < homs.count(); ++i) {
    if (!homs.is_mono(i))
      continue;
    ++a.checked;
    for (auto const &x : homs.images(i))
      if (!aut.inn->contains(x)) {
        a.ok = false;
        a.note = "a mono leaves Inn(" + g.name() + ")";
        return a;
      }
  }
  a.note = std::to_string(a.checked) + " monos " + h.name() + " -> Aut(" + g.name() + ")";
  return a;
}

} // namespace grouploc
