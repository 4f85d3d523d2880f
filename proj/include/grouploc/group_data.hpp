#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "analysis.hpp"
#include "element_index.hpp"
#include "hom_search.hpp"
#include "perm_group.hpp"
#include "presentation.hpp"

namespace grouploc
{

/// A named group with its search tuple, optional presentation, catalog data,
/// and lazily computed element index, classes and endomorphisms.
class GroupData
{
public:
  GroupData(std::string name, GroupPtr group, std::optional<Presentation> presentation = std::nullopt,
            std::uint64_t element_cap = default_element_cap)
  : _name(std::move(name)), _domain{std::move(group), std::move(presentation)},
    _element_cap(element_cap)
  {}

  std::string const &name() const { return _name; }
  GroupPtr const &group() const { return _domain.group; }
  SearchDomain const &domain() const { return _domain; }
  std::uint64_t order() const { return _domain.group->order(); }

  std::optional<AbelianInvariants> mult;
  std::optional<std::uint64_t> out_order;

  EnumeratedPtr enumerated() const
  {
    std::lock_guard lock(_mutex);
    if (!_enumerated)
      _enumerated = std::make_shared<EnumeratedGroup const>(_domain.group, _element_cap);
    return _enumerated;
  }

  ConjugacyClasses const &classes() const
  {
    auto e = enumerated();
    std::lock_guard lock(_mutex);
    if (!_classes)
      _classes = std::make_shared<ConjugacyClasses const>(conjugacy_classes(*e));
    return *_classes;
  }

  /// Hom(K, this) for a search domain K.
  HomSet homs_from(SearchDomain const &k, HomSearchOptions const &opt = {}) const
  { return enumerate_homs(k, enumerated(), classes(), opt); }

  /// Hom(this, this), cached.
  std::shared_ptr<HomSet const> endomorphisms(HomSearchOptions const &opt = {}) const
  {
    auto const &cls = classes();
    {
      std::lock_guard lock(_mutex);
      if (_endos)
        return _endos;
    }
    auto h = std::make_shared<HomSet const>(enumerate_homs(_domain, enumerated(), cls, opt));
    std::lock_guard lock(_mutex);
    if (!_endos)
      _endos = h;
    return _endos;
  }

  Subgroup const &center_subgroup() const
  {
    auto e = enumerated();
    std::lock_guard lock(_mutex);
    if (!_center)
      _center = std::make_shared<Subgroup const>(center(*e));
    return *_center;
  }

private:
  std::string _name;
  SearchDomain _domain;
  std::uint64_t _element_cap;
  mutable std::mutex _mutex;
  mutable EnumeratedPtr _enumerated;
  mutable std::shared_ptr<ConjugacyClasses const> _classes;
  mutable std::shared_ptr<HomSet const> _endos;
  mutable std::shared_ptr<Subgroup const> _center;
};

using GroupDataPtr = std::shared_ptr<GroupData>;

} // namespace grouploc
