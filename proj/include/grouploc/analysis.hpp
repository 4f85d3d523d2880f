#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_index.hpp"
#include "error.hpp"
#include "perm_group.hpp"

namespace grouploc
{

inline constexpr std::uint64_t default_subgroup_element_cap = 10000;
inline constexpr std::size_t default_subgroup_orbit_cap = 100000;
inline constexpr std::uint64_t default_transversal_cap = 1000000;

/// Abelian invariants of a finite abelian group; empty means trivial.
using AbelianInvariants = std::vector<std::uint64_t>;

inline std::uint64_t invariants_order(AbelianInvariants const &inv)
{
  std::uint64_t n = 1;
  for (auto d : inv)
    n *= d;
  return n;
}

inline std::string invariants_to_string(AbelianInvariants const &inv)
{
  if (inv.empty())
    return "1";
  std::string s;
  for (auto d : inv) {
    if (!s.empty())
      s += " x ";
    s += "C" + std::to_string(d);
  }
  return s;
}

/// A subgroup of an ambient group, given by generators.
struct Subgroup
{
  GroupPtr ambient;
  std::vector<Permutation> gens;
  GroupPtr group;
  std::optional<std::vector<Permutation>> elements; // sorted

  std::uint64_t order() const { return group->order(); }
  bool contains(Permutation const &p) const { return group->contains(p); }
};

/// Throws PreconditionError if a generator is not in `ambient`. Element lists
/// are filled in when the subgroup order is at most `element_cap`.
inline Subgroup make_subgroup(GroupPtr ambient, std::vector<Permutation> gens,
                              std::uint64_t element_cap = default_subgroup_element_cap)
{
  for (auto const &g : gens)
    if (g.degree() != ambient->degree() || !ambient->contains(g))
      throw PreconditionError("subgroup generator " + g.to_cycle_string() +
                              " is not in the ambient group");
  std::vector<Permutation> nontrivial;
  for (auto const &g : gens)
    if (!g.is_identity())
      nontrivial.push_back(g);
  if (nontrivial.empty())
    nontrivial.push_back(Permutation(ambient->degree()));
  Subgroup s{ambient, std::move(gens), make_group(std::move(nontrivial)), std::nullopt};
  if (ambient->order() % s.group->order() != 0)
    throw Error("subgroup order does not divide the ambient order");
  if (s.group->order() <= element_cap) {
    std::vector<Permutation> els;
    els.reserve(s.group->order());
    s.group->for_each_element([&](Permutation const &p) { els.push_back(p); });
    std::sort(els.begin(), els.end());
    s.elements = std::move(els);
  }
  return s;
}

/// Smallest normal subgroup of `g` containing `s`: the closure of ⟨s⟩ under
/// conjugation by the generators of `g`.
inline Subgroup normal_closure(GroupPtr const &g, std::vector<Permutation> const &s)
{
  std::vector<Permutation> gens;
  for (auto const &x : s) {
    if (!g->contains(x))
      throw PreconditionError("normal_closure: element " + x.to_cycle_string() +
                              " is not in the group");
    if (!x.is_identity())
      gens.push_back(x);
  }
  if (gens.empty())
    return make_subgroup(g, {Permutation(g->degree())});
  auto n = std::make_shared<PermGroup>(gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto const &t : g->generators()) {
      Permutation c = conjugate(t, gens[i]);
      if (!n->contains(c)) {
        gens.push_back(c);
        n = std::make_shared<PermGroup>(gens);
      }
    }
  return make_subgroup(g, gens);
}

/// Normal closure of the commutators of all pairs of generators.
inline Subgroup derived_subgroup(GroupPtr const &g)
{
  std::vector<Permutation> comms;
  auto const &gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto const &a = gens[i];
      auto const &b = gens[j];
      comms.push_back(a.inverse() * b.inverse() * a * b);
    }
  return normal_closure(g, comms);
}

inline bool is_perfect(GroupPtr const &g) { return derived_subgroup(g).order() == g->order(); }

/// Perfect with trivial Schur multiplier. The multiplier is a catalog datum;
/// throws MissingCatalogDatum when it is unknown.
inline bool is_superperfect_certified(GroupPtr const &g,
                                      std::optional<AbelianInvariants> const &mult)
{
  if (!mult)
    throw MissingCatalogDatum("Schur multiplier not recorded in the catalog");
  return is_perfect(g) && invariants_order(*mult) == 1;
}

/// Elements commuting with every generator, by a scan of the element index.
inline Subgroup center(EnumeratedGroup const &e)
{
  auto const &idx = e.index();
  auto const &gens = e.group().generators();
  std::vector<Point> xg(idx.degree()), gx(idx.degree());
  std::vector<Permutation> z;
  for (ElementId i = 1; i < idx.size(); ++i) {
    auto x = idx.images(i);
    bool central = true;
    for (auto const &g : gens) {
      compose_into(xg, x, g.images());
      compose_into(gx, g.images(), x);
      if (xg != gx) {
        central = false;
        break;
      }
    }
    if (central)
      z.push_back(idx.element(i));
  }
  return make_subgroup(e.group_ptr(), std::move(z));
}

/// Conjugacy classes of an enumerated group. Classes are numbered by their
/// smallest element index, which is also the representative; class 0 is the
/// identity. For every element x the table records a conjugator g with
/// g rep g^-1 = x.
struct ConjugacyClasses
{
  std::vector<ElementId> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> order_of_rep;
  std::vector<std::uint32_t> class_of;  // element -> class
  std::vector<ElementId> conjugator;    // element -> g with g rep g^-1 = element
  std::vector<std::vector<ElementId>> members;

  std::size_t size() const { return reps.size(); }
};

/// Table of x -> g x g^-1 on element indices.
inline std::vector<ElementId> conjugation_map(EnumeratedGroup const &e, Permutation const &g)
{
  auto const &idx = e.index();
  Permutation gi = g.inverse();
  std::vector<Point> t1(idx.degree()), t2(idx.degree());
  std::vector<ElementId> map(idx.size());
  for (ElementId x = 0; x < idx.size(); ++x) {
    compose_into(t1, idx.images(x), gi.images());
    compose_into(t2, g.images(), t1);
    map[x] = idx.index_of(t2);
  }
  return map;
}

inline ConjugacyClasses conjugacy_classes(EnumeratedGroup const &e)
{
  auto const &idx = e.index();
  auto const &gens = e.group().generators();
  std::vector<std::vector<ElementId>> conj;
  std::vector<ElementId> gen_ids;
  for (auto const &g : gens) {
    conj.push_back(conjugation_map(e, g));
    gen_ids.push_back(idx.index_of(g));
  }
  constexpr std::uint32_t unset = 0xffffffffu;
  ConjugacyClasses cc;
  cc.class_of.assign(idx.size(), unset);
  cc.conjugator.assign(idx.size(), 0);
  for (ElementId x = 0; x < idx.size(); ++x) {
    if (cc.class_of[x] != unset)
      continue;
    auto c = static_cast<std::uint32_t>(cc.reps.size());
    std::vector<ElementId> orbit{x};
    cc.class_of[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      ElementId y = orbit[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ElementId z = conj[k][y];
        if (cc.class_of[z] != unset)
          continue;
        cc.class_of[z] = c;
        cc.conjugator[z] = e.multiply(gen_ids[k], cc.conjugator[y]);
        orbit.push_back(z);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.reps.push_back(x);
    cc.sizes.push_back(orbit.size());
    cc.order_of_rep.push_back(idx.element_order(x));
    cc.members.push_back(std::move(orbit));
  }
  return cc;
}

/// Simple iff non-trivial and the normal closure of every non-identity class
/// representative is the whole group.
inline bool is_simple(EnumeratedGroup const &e, ConjugacyClasses const &cc)
{
  if (e.size() <= 1)
    return false;
  for (std::size_t c = 1; c < cc.size(); ++c)
    if (normal_closure(e.group_ptr(), {e.index().element(cc.reps[c])}).order() != e.size())
      return false;
  return true;
}

inline bool is_simple(EnumeratedGroup const &e) { return is_simple(e, conjugacy_classes(e)); }

/// Whether the proper subgroup `h` of the enumerated group `g` is maximal:
/// ⟨h, t⟩ = g for every transversal element t outside h. Throws
/// PreconditionError if h is not proper and CapExceeded if the index is above
/// `transversal_cap`.
inline bool is_maximal(Subgroup const &h, EnumeratedGroup const &g,
                       std::uint64_t transversal_cap = default_transversal_cap)
{
  if (h.order() == g.size())
    throw PreconditionError("is_maximal: the subgroup must be proper");
  std::uint64_t index = g.size() / h.order();
  if (index > transversal_cap)
    throw CapExceeded("transversal of " + std::to_string(index) + " cosets exceeds the cap",
                      "transversal_cap");
  auto const &idx = g.index();
  std::vector<ElementId> hids;
  h.group->for_each_element([&](Permutation const &p) { hids.push_back(idx.index_of(p)); });
  std::vector<bool> covered(g.size(), false);
  std::vector<Point> tmp(idx.degree());
  for (ElementId t = 0; t < g.size(); ++t) {
    if (covered[t])
      continue;
    for (ElementId x : hids) {
      compose_into(tmp, idx.images(x), idx.images(t));
      covered[idx.index_of(tmp)] = true;
    }
    if (h.contains(idx.element(t)))
      continue;
    auto gens = h.group->generators();
    gens.push_back(idx.element(t));
    if (PermGroup(gens).order() != g.size())
      return false;
  }
  return true;
}

struct ConjugacyWitness
{
  bool conjugate = false;
  std::optional<Permutation> witness; // g with g K g^-1 = L
  std::size_t orbit_size = 0;
};

namespace detail
{

inline std::vector<ElementId> element_key(Subgroup const &s, ElementIndex const &idx)
{
  std::vector<ElementId> key;
  key.reserve(s.order());
  s.group->for_each_element([&](Permutation const &p) { key.push_back(idx.index_of(p)); });
  std::sort(key.begin(), key.end());
  return key;
}

struct KeyHash
{
  std::size_t operator()(std::vector<ElementId> const &v) const
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v)
      h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

} // namespace detail

/// Decide whether K and L are conjugate in the enumerated group g by computing
/// the orbit of K's element set under conjugation by g's generators.
inline ConjugacyWitness subgroups_conjugate(Subgroup const &k, Subgroup const &l,
                                            EnumeratedGroup const &g,
                                            std::size_t orbit_cap = default_subgroup_orbit_cap)
{
  ConjugacyWitness out;
  if (k.order() != l.order())
    return out;
  auto const &idx = g.index();
  auto const &gens = g.group().generators();
  std::vector<std::vector<ElementId>> conj;
  for (auto const &t : gens)
    conj.push_back(conjugation_map(g, t));
  auto target = detail::element_key(l, idx);
  std::vector<std::vector<ElementId>> orbit{detail::element_key(k, idx)};
  std::vector<Permutation> via{Permutation(g.group().degree())};
  std::unordered_map<std::vector<ElementId>, std::size_t, detail::KeyHash> seen{{orbit[0], 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (orbit[i] == target) {
      out.conjugate = true;
      out.witness = via[i];
      out.orbit_size = orbit.size();
      return out;
    }
    for (std::size_t t = 0; t < gens.size(); ++t) {
      std::vector<ElementId> next;
      next.reserve(orbit[i].size());
      for (auto x : orbit[i])
        next.push_back(conj[t][x]);
      std::sort(next.begin(), next.end());
      if (seen.count(next))
        continue;
      if (orbit.size() >= orbit_cap)
        throw CapExceeded("subgroup conjugation orbit exceeds " + std::to_string(orbit_cap),
                          "subgroup_orbit_cap");
      seen.emplace(next, orbit.size());
      orbit.push_back(std::move(next));
      via.push_back(gens[t] * via[i]);
    }
  }
  out.orbit_size = orbit.size();
  return out;
}

} // namespace grouploc
