#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace grouploc
{

inline constexpr std::uint64_t default_element_cap = 200000;

using ElementId = std::uint32_t;

/// Canonical enumeration of all elements of a group: rows sorted
/// lexicographically by image sequence (so row 0 is the identity), with an
/// open-addressing hash for position lookup.
class ElementIndex
{
public:
  /// Throws CapExceeded if the group order exceeds `cap`.
  ElementIndex(PermGroup const &group, std::uint64_t cap = default_element_cap)
  : _degree(group.degree())
  {
    if (group.order() > cap)
      throw CapExceeded("element enumeration of a group of order " +
                          std::to_string(group.order()) + " exceeds the cap " +
                          std::to_string(cap),
                        "element_cap");
    _size = static_cast<std::size_t>(group.order());

    std::vector<Point> raw;
    raw.reserve(_size * _degree);
    group.for_each_element([&](Permutation const &p) {
      raw.insert(raw.end(), p.images().begin(), p.images().end());
    });

    std::vector<std::uint32_t> order(_size);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(raw.begin() + a * _degree, raw.begin() + (a + 1) * _degree,
                                          raw.begin() + b * _degree, raw.begin() + (b + 1) * _degree);
    });
    _data.resize(_size * _degree);
    for (std::size_t i = 0; i < _size; ++i)
      std::copy_n(raw.begin() + order[i] * _degree, _degree, _data.begin() + i * _degree);

    std::size_t cap_slots = 16;
    while (cap_slots < 2 * _size)
      cap_slots <<= 1;
    _mask = cap_slots - 1;
    _slots.assign(cap_slots, empty_slot);
    for (std::size_t i = 0; i < _size; ++i) {
      std::size_t h = hash_images(images(static_cast<ElementId>(i))) & _mask;
      while (_slots[h] != empty_slot)
        h = (h + 1) & _mask;
      _slots[h] = static_cast<std::uint32_t>(i);
    }

    _orders.resize(_size);
    for (std::size_t i = 0; i < _size; ++i)
      _orders[i] = static_cast<std::uint32_t>(element(static_cast<ElementId>(i)).order());
  }

  std::size_t size() const { return _size; }
  std::size_t degree() const { return _degree; }

  std::span<Point const> images(ElementId i) const
  { return {_data.data() + static_cast<std::size_t>(i) * _degree, _degree}; }

  Permutation element(ElementId i) const { return Permutation::from_span_unchecked(images(i)); }

  std::uint32_t element_order(ElementId i) const { return _orders[i]; }

  std::optional<ElementId> find(std::span<Point const> imgs) const
  {
    if (imgs.size() != _degree)
      return std::nullopt;
    std::size_t h = hash_images(imgs) & _mask;
    while (_slots[h] != empty_slot) {
      auto cand = images(_slots[h]);
      if (std::equal(cand.begin(), cand.end(), imgs.begin()))
        return _slots[h];
      h = (h + 1) & _mask;
    }
    return std::nullopt;
  }

  std::optional<ElementId> find(Permutation const &p) const { return find(p.images()); }

  /// Throws PreconditionError if `p` is not an element.
  ElementId index_of(std::span<Point const> imgs) const
  {
    auto i = find(imgs);
    if (!i)
      throw PreconditionError("permutation is not an element of the enumerated group");
    return *i;
  }

  ElementId index_of(Permutation const &p) const { return index_of(p.images()); }

private:
  static constexpr std::uint32_t empty_slot = 0xffffffffu;

  std::size_t _degree = 0;
  std::size_t _size = 0;
  std::vector<Point> _data;
  std::vector<std::uint32_t> _slots;
  std::size_t _mask = 0;
  std::vector<std::uint32_t> _orders;
};

/// A group together with its element index, multiplication tables for the
/// generators and a breadth-first spanning tree of the Cayley graph. The tree
/// gives every element a short word in the generators, which is how
/// homomorphisms given by generator images are evaluated.
class EnumeratedGroup
{
public:
  EnumeratedGroup(GroupPtr group, std::uint64_t cap = default_element_cap)
  : _group(std::move(group)), _index(*_group, cap)
  {
    auto const &gens = _group->generators();
    std::size_t n = _index.size();
    std::size_t deg = _group->degree();
    _letters.clear();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      _letter_perms.push_back(gens[g]);
      _letters.push_back(static_cast<int>(g) + 1);
      _letter_perms.push_back(gens[g].inverse());
      _letters.push_back(-static_cast<int>(g) - 1);
    }
    _right_mul.assign(_letter_perms.size(), std::vector<ElementId>(n));
    std::vector<Point> tmp(deg);
    for (std::size_t l = 0; l < _letter_perms.size(); ++l)
      for (std::size_t x = 0; x < n; ++x) {
        compose_into(tmp, _index.images(static_cast<ElementId>(x)), _letter_perms[l].images());
        _right_mul[l][x] = _index.index_of(tmp);
      }

    _parent.assign(n, none);
    _parent_letter.assign(n, 0);
    _depth.assign(n, 0);
    std::vector<ElementId> queue{0};
    _parent[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      ElementId x = queue[q];
      for (std::size_t l = 0; l < _letter_perms.size(); ++l) {
        ElementId y = _right_mul[l][x];
        if (_parent[y] != none)
          continue;
        _parent[y] = x;
        _parent_letter[y] = static_cast<std::uint8_t>(l);
        _depth[y] = _depth[x] + 1;
        queue.push_back(y);
      }
    }
  }

  GroupPtr const &group_ptr() const { return _group; }
  PermGroup const &group() const { return *_group; }
  ElementIndex const &index() const { return _index; }
  std::size_t size() const { return _index.size(); }
  std::size_t num_letters() const { return _letter_perms.size(); }

  /// idx(x * letter) for letter 2g (generator g) or 2g+1 (its inverse).
  ElementId right_multiply(ElementId x, std::size_t letter) const { return _right_mul[letter][x]; }

  /// Letter sequence (indices into the letter table) whose product is `x`.
  std::vector<std::size_t> letter_path(ElementId x) const
  {
    std::vector<std::size_t> path(_depth[x]);
    for (std::size_t i = _depth[x]; i > 0; --i) {
      path[i - 1] = _parent_letter[x];
      x = _parent[x];
    }
    return path;
  }

  /// Signed, 1-based generator word for `x` (negative = inverse).
  std::vector<int> word(ElementId x) const
  {
    std::vector<int> w;
    for (std::size_t l : letter_path(x))
      w.push_back(_letters[l]);
    return w;
  }

  /// The image of element `x` under the homomorphism sending generator g to
  /// images[g]. The images are not checked to define a homomorphism.
  Permutation apply(std::vector<Permutation> const &images, ElementId x) const
  {
    std::vector<Permutation> letter_images;
    letter_images.reserve(2 * images.size());
    for (auto const &im : images) {
      letter_images.push_back(im);
      letter_images.push_back(im.inverse());
    }
    return apply_letters(letter_images, x);
  }

  /// As apply(), with images of all letters (generator, inverse, ...) precomputed.
  Permutation apply_letters(std::vector<Permutation> const &letter_images, ElementId x) const
  {
    Permutation result(letter_images.front().degree());
    std::vector<Point> tmp(result.degree());
    for (std::size_t l : letter_path(x)) {
      compose_into(tmp, result.images(), letter_images[l].images());
      std::copy(tmp.begin(), tmp.end(), result.mutable_images().begin());
    }
    return result;
  }

  ElementId multiply(ElementId a, ElementId b) const
  {
    std::vector<Point> tmp(_group->degree());
    compose_into(tmp, _index.images(a), _index.images(b));
    return _index.index_of(tmp);
  }

  ElementId inverse(ElementId a) const
  { return _index.index_of(_index.element(a).inverse()); }

  /// idx(g x g^-1)
  ElementId conjugate(ElementId g, ElementId x) const
  {
    auto gp = _index.element(g);
    return _index.index_of(grouploc::conjugate(gp, _index.element(x)));
  }

private:
  static constexpr ElementId none = 0xffffffffu;

  GroupPtr _group;
  ElementIndex _index;
  std::vector<Permutation> _letter_perms;
  std::vector<int> _letters;
  std::vector<std::vector<ElementId>> _right_mul;
  std::vector<ElementId> _parent;
  std::vector<std::uint8_t> _parent_letter;
  std::vector<std::uint32_t> _depth;
};

using EnumeratedPtr = std::shared_ptr<EnumeratedGroup const>;

} // namespace grouploc
