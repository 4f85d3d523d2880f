#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "analysis.hpp"
#include "error.hpp"
#include "group_data.hpp"
#include "hom_search.hpp"

namespace grouploc
{

/// Aut(G) = Mono(G, G), realised as a permutation group on the elements of
/// the smallest order k whose elements generate G. An automorphism fixing a
/// generating set pointwise is trivial, so the action is faithful.
struct AutRealization
{
  std::shared_ptr<HomSet const> endos;
  std::vector<std::size_t> autos; // indices of the monos in endos
  std::uint32_t k = 1;
  std::vector<ElementId> domain;
  std::vector<std::int32_t> position; // element -> point of the realization, -1 if absent
  EnumeratedPtr group;
  GroupPtr perm_realization;
  std::optional<Subgroup> inn;
  std::vector<std::size_t> generator_autos;
  std::uint64_t order = 1;
  std::uint64_t inn_order = 1;
  std::uint64_t out_order = 1;

  /// The realization of endomorphism `i` of `endos` (must be an automorphism).
  Permutation realize(std::size_t i) const
  {
    if (domain.empty())
      return Permutation(1);
    std::vector<Permutation> letters;
    for (auto const &im : endos->images(i)) {
      letters.push_back(im);
      letters.push_back(im.inverse());
    }
    std::vector<Point> img(domain.size());
    for (std::size_t p = 0; p < domain.size(); ++p) {
      auto y = group->index().index_of(group->apply_letters(letters, domain[p]));
      if (position[y] < 0)
        throw Error("automorphism does not preserve the realization domain");
      img[p] = static_cast<Point>(position[y]);
    }
    return Permutation(std::move(img));
  }

  /// The realization of conjugation x -> g x g^-1.
  Permutation realize_inner(Permutation const &g) const
  {
    if (domain.empty())
      return Permutation(1);
    std::vector<Point> img(domain.size());
    Permutation gi = g.inverse();
    for (std::size_t p = 0; p < domain.size(); ++p) {
      auto y = group->index().index_of(g * group->index().element(domain[p]) * gi);
      img[p] = static_cast<Point>(position[y]);
    }
    return Permutation(std::move(img));
  }
};

inline AutRealization automorphism_group(GroupData const &g, HomSearchOptions const &opt = {})
{
  AutRealization a;
  a.group = g.enumerated();
  a.endos = g.endomorphisms(opt);
  for (std::size_t i = 0; i < a.endos->count(); ++i)
    if (a.endos->is_mono(i))
      a.autos.push_back(i);
  a.order = a.autos.size();
  auto const &idx = a.group->index();
  a.inn_order = g.order() / g.center_subgroup().order();
  a.position.assign(idx.size(), -1);

  if (g.order() == 1) {
    a.perm_realization = make_group({Permutation(1)});
    a.inn = make_subgroup(a.perm_realization, {Permutation(1)});
    a.out_order = 1;
    return a;
  }

  std::vector<std::uint32_t> orders;
  for (ElementId x = 1; x < idx.size(); ++x)
    orders.push_back(idx.element_order(x));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (auto k : orders) {
    std::vector<Permutation> gens;
    std::shared_ptr<PermGroup> sub;
    for (ElementId x = 1; x < idx.size(); ++x) {
      if (idx.element_order(x) != k)
        continue;
      auto p = idx.element(x);
      if (sub && sub->contains(p))
        continue;
      gens.push_back(p);
      sub = std::make_shared<PermGroup>(gens);
    }
    if (sub && sub->order() == g.order()) {
      a.k = k;
      break;
    }
  }
  for (ElementId x = 1; x < idx.size(); ++x)
    if (idx.element_order(x) == a.k) {
      a.position[x] = static_cast<std::int32_t>(a.domain.size());
      a.domain.push_back(x);
    }
  if (a.domain.size() > max_degree)
    throw CapExceeded("automorphism realization domain too large", "realization_degree");

  std::vector<Permutation> inner;
  for (auto const &t : g.group()->generators())
    inner.push_back(a.realize_inner(t));
  std::vector<Permutation> gens = inner;
  auto real = std::make_shared<PermGroup>(gens);
  for (std::size_t i : a.autos) {
    if (real->order() == a.order)
      break;
    auto p = a.realize(i);
    if (real->contains(p))
      continue;
    gens.push_back(p);
    a.generator_autos.push_back(i);
    real = std::make_shared<PermGroup>(gens);
  }
  if (real->order() != a.order)
    throw Error("automorphism realization has order " + std::to_string(real->order()) +
                ", expected " + std::to_string(a.order));
  a.perm_realization = real;
  a.inn = make_subgroup(real, inner);
  if (a.inn->order() != a.inn_order)
    throw Error("inner automorphism group has unexpected order");
  a.out_order = a.order / a.inn_order;
  return a;
}

} // namespace grouploc
