#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace grouploc
{

/// One level of a stabilizer chain: the fundamental orbit of `base` under the
/// strong generators fixing all earlier base points, with explicit transversal
/// elements u (u(base) = orbit point) and their inverses.
struct ChainLevel
{
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> slot; // point -> position in orbit, -1 if absent
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  bool in_orbit(Point p) const { return slot[p] >= 0; }
};

/// A permutation group given by generators together with a base and strong
/// generating set computed by the deterministic Schreier-Sims algorithm.
///
/// Base points are the smallest point moved by the generator that forced a
/// new level. The chain is immutable once built.
class PermGroup
{
public:
  /// Throws PreconditionError on an empty generator list and DegreeMismatch on
  /// mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators)
  : _generators(std::move(generators))
  {
    if (_generators.empty())
      throw PreconditionError("a group needs at least one generator");
    _degree = _generators.front().degree();
    for (auto const &g : _generators)
      if (g.degree() != _degree)
        throw DegreeMismatch("generators of mixed degree");
    schreier_sims();
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup({Permutation(degree)}); }

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  std::uint64_t order() const { return _order; }
  std::vector<ChainLevel> const &chain() const { return _levels; }

  std::vector<Point> base() const
  {
    std::vector<Point> b;
    for (auto const &l : _levels)
      b.push_back(l.base);
    return b;
  }

  std::vector<std::size_t> fundamental_orbit_lengths() const
  {
    std::vector<std::size_t> lens;
    for (auto const &l : _levels)
      lens.push_back(l.orbit.size());
    return lens;
  }

  bool is_trivial() const { return _order == 1; }

  /// Sifting membership test.
  bool contains(Permutation const &p) const
  {
    if (p.degree() != _degree)
      throw DegreeMismatch("membership test: degree mismatch");
    auto [residue, level] = strip(p, 0);
    return level == _levels.size() && residue.is_identity();
  }

  /// Strip `g` through the chain from `from` on. Returns the residue and the
  /// level at which sifting stopped (chain size if it ran through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const
  {
    std::vector<Point> tmp(_degree);
    for (std::size_t l = from; l < _levels.size(); ++l) {
      auto const &lev = _levels[l];
      Point beta = g[lev.base];
      if (!lev.in_orbit(beta))
        return {std::move(g), l};
      compose_into(tmp, lev.transversal_inv[static_cast<std::size_t>(lev.slot[beta])].images(),
                   g.images());
      std::copy(tmp.begin(), tmp.end(), g.mutable_images().begin());
    }
    return {std::move(g), _levels.size()};
  }

  /// Visit every element exactly once, as products u_0 * u_1 * ... of
  /// transversal elements.
  template <typename F>
  void for_each_element(F &&visit) const
  {
    Permutation id(_degree);
    if (_levels.empty()) {
      visit(id);
      return;
    }
    std::vector<Permutation> partial(_levels.size() + 1, id);
    std::vector<std::size_t> pos(_levels.size(), 0);
    std::size_t depth = 0;
    for (;;) {
      if (depth == _levels.size()) {
        visit(partial[depth]);
        --depth;
        ++pos[depth];
      }
      if (pos[depth] < _levels[depth].orbit.size()) {
        compose_into(partial[depth + 1].mutable_images(), partial[depth].images(),
                     _levels[depth].transversal[pos[depth]].images());
        ++depth;
        if (depth < _levels.size())
          pos[depth] = 0;
        continue;
      }
      if (depth == 0)
        return;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
    }
  }

  /// Orbit of a point under the original generators, in discovery order.
  std::vector<Point> orbit(Point p) const
  {
    std::vector<bool> seen(_degree, false);
    std::vector<Point> orb{p};
    seen[p] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto const &g : _generators) {
        Point q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    return orb;
  }

  /// Whether every generator of `other` lies in this group.
  bool contains_group(PermGroup const &other) const
  {
    for (auto const &g : other.generators())
      if (!contains(g))
        return false;
    return true;
  }

private:
  void add_level(Point base)
  {
    ChainLevel lev;
    lev.base = base;
    lev.slot.assign(_degree, -1);
    _levels.push_back(std::move(lev));
  }

  void recompute_orbit(ChainLevel &lev) const
  {
    lev.orbit.assign(1, lev.base);
    lev.slot.assign(_degree, -1);
    lev.slot[lev.base] = 0;
    lev.transversal.assign(1, Permutation(_degree));
    lev.transversal_inv.assign(1, Permutation(_degree));
    for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
      Point beta = lev.orbit[i];
      for (auto const &s : lev.generators) {
        Point gamma = s[beta];
        if (lev.slot[gamma] >= 0)
          continue;
        lev.slot[gamma] = static_cast<std::int32_t>(lev.orbit.size());
        lev.orbit.push_back(gamma);
        Permutation u = s * lev.transversal[i];
        lev.transversal_inv.push_back(u.inverse());
        lev.transversal.push_back(std::move(u));
      }
    }
  }

  void schreier_sims()
  {
    std::vector<Permutation> strong;
    for (auto const &g : _generators)
      if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
        strong.push_back(g);

    for (auto const &s : strong) {
      bool fixes_base = true;
      for (auto const &l : _levels)
        if (s[l.base] != l.base) {
          fixes_base = false;
          break;
        }
      if (fixes_base)
        add_level(static_cast<Point>(s.first_moved_point()));
    }
    for (std::size_t i = 0; i < _levels.size(); ++i) {
      for (auto const &s : strong) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j)
          if (s[_levels[j].base] != _levels[j].base) {
            fixes = false;
            break;
          }
        if (fixes)
          _levels[i].generators.push_back(s);
      }
      recompute_orbit(_levels[i]);
    }

    std::vector<Point> tmp(_degree);
    std::size_t i = _levels.size();
    while (i > 0) {
      std::size_t level = i - 1;
      bool restarted = false;
      auto &lev = _levels[level];
      for (std::size_t b = 0; !restarted && b < lev.orbit.size(); ++b) {
        for (std::size_t si = 0; !restarted && si < lev.generators.size(); ++si) {
          auto const &s = lev.generators[si];
          Point gamma = s[lev.orbit[b]];
          // h = u_gamma^-1 * s * u_beta
          Permutation h(_degree);
          compose_into(tmp, s.images(), lev.transversal[b].images());
          compose_into(h.mutable_images(),
                       lev.transversal_inv[static_cast<std::size_t>(lev.slot[gamma])].images(),
                       tmp);
          if (h.is_identity())
            continue;
          auto [residue, stop] = strip(std::move(h), level + 1);
          if (stop == _levels.size() && residue.is_identity())
            continue;
          if (stop == _levels.size())
            add_level(static_cast<Point>(residue.first_moved_point()));
          for (std::size_t l = level + 1; l <= stop; ++l) {
            _levels[l].generators.push_back(residue);
            recompute_orbit(_levels[l]);
          }
          i = stop + 1;
          restarted = true;
        }
      }
      if (!restarted)
        --i;
    }

    _order = 1;
    for (auto const &l : _levels) {
      if (_order > std::numeric_limits<std::uint64_t>::max() / l.orbit.size())
        throw CapExceeded("group order does not fit in 64 bits", "order");
      _order *= l.orbit.size();
    }
  }

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<ChainLevel> _levels;
  std::uint64_t _order = 1;
};

using GroupPtr = std::shared_ptr<PermGroup const>;

inline GroupPtr make_group(std::vector<Permutation> generators)
{ return std::make_shared<PermGroup const>(std::move(generators)); }

/// A x B acting on the disjoint union of the two domains (A's points first).
inline PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &g : a.generators())
    gens.push_back(g.shifted(0, degree));
  for (auto const &g : b.generators())
    gens.push_back(g.shifted(a.degree(), degree));
  return PermGroup(std::move(gens));
}

} // namespace grouploc
