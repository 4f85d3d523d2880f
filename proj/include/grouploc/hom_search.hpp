#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "analysis.hpp"
#include "element_index.hpp"
#include "error.hpp"
#include "perm_group.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace grouploc
{

inline constexpr std::uint64_t default_leaf_budget = 100000000;

enum class HomVerification
{
  relator_certified,
  graph_certified
};

inline char const *to_string(HomVerification v)
{ return v == HomVerification::relator_certified ? "relator_certified" : "graph_certified"; }

/// A homomorphism recorded by the images of the source's generators.
struct GroupHom
{
  GroupPtr source;
  GroupPtr target;
  std::vector<Permutation> images;
  HomVerification verified = HomVerification::graph_certified;

  bool is_trivial() const
  {
    return std::all_of(images.begin(), images.end(), [](auto const &p) { return p.is_identity(); });
  }

  std::uint64_t image_order() const
  {
    if (is_trivial())
      return 1;
    return PermGroup(images).order();
  }

  bool is_injective() const { return image_order() == source->order(); }
  bool is_surjective() const { return image_order() == target->order(); }
};

/// The graph-subgroup test: images define a homomorphism iff the subgroup of
/// K x G generated by the pairs (k_i, im_i) has order |K|.
inline bool graph_test(PermGroup const &source, std::vector<Permutation> const &images)
{
  auto const &gens = source.generators();
  if (images.size() != gens.size())
    return false;
  std::size_t dk = source.degree();
  std::size_t deg = dk + images.front().degree();
  std::vector<Permutation> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Permutation p(deg);
    auto &im = p.mutable_images();
    for (std::size_t x = 0; x < dk; ++x)
      im[x] = gens[i][static_cast<Point>(x)];
    for (std::size_t x = 0; x < images[i].degree(); ++x)
      im[dk + x] = static_cast<Point>(dk + images[i][static_cast<Point>(x)]);
    pairs.push_back(std::move(p));
  }
  return PermGroup(pairs).order() == source.order();
}

/// Throws ValidationError unless the images define a homomorphism.
inline GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Permutation> images)
{
  if (images.size() != source->generators().size())
    throw PreconditionError("make_hom: need one image per source generator");
  for (auto const &im : images)
    if (!target->contains(im))
      throw PreconditionError("make_hom: image " + im.to_cycle_string() + " is not in the target");
  if (!graph_test(*source, images))
    throw ValidationError("hom", "generator images do not define a homomorphism");
  return GroupHom{std::move(source), std::move(target), std::move(images),
                  HomVerification::graph_certified};
}

/// g after f, where f's target is the enumerated group `mid` (generated by
/// g's source generators).
inline GroupHom compose_hom(GroupHom const &f, GroupHom const &g, EnumeratedGroup const &mid)
{
  std::vector<Permutation> letters;
  for (auto const &im : g.images) {
    letters.push_back(im);
    letters.push_back(im.inverse());
  }
  GroupHom out{f.source, g.target, {}, f.verified};
  for (auto const &x : f.images)
    out.images.push_back(mid.apply_letters(letters, mid.index().index_of(x)));
  return out;
}

/// A hom-search domain: a group whose generator list is the search tuple,
/// with an optional presentation on those generators.
struct SearchDomain
{
  GroupPtr group;
  std::optional<Presentation> presentation;

  bool certified() const { return presentation && presentation->is_certified(); }
};

struct HomSearchOptions
{
  std::size_t workers = 1;
  std::uint64_t leaf_budget = default_leaf_budget;
  bool class_seeding = true;
  bool use_relators = true;
  bool require_certified = false;
  /// Extra pruning: the image of a short word in two generators has order
  /// dividing that word's order in the source.
  bool short_word_pruning = true;
  std::function<void(std::uint64_t)> progress;
};

struct ClassFiber
{
  std::uint32_t class_index = 0;
  ElementId rep = 0;
  std::uint64_t class_size = 0;
  std::uint64_t fiber_size = 0;
  std::uint64_t mono_fiber_size = 0;
};

/// Hom(K, G) listed canonically: tuples of target element indices, sorted
/// lexicographically (equivalently, by concatenated image sequences).
class HomSet
{
public:
  GroupPtr source;
  EnumeratedPtr target;
  std::size_t arity = 0;
  std::vector<ElementId> flat;
  std::vector<std::uint8_t> mono;
  std::uint64_t mono_count = 0;
  std::vector<ClassFiber> class_fibers;
  HomVerification verification = HomVerification::graph_certified;
  std::uint64_t leaves = 0;

  std::size_t count() const { return arity ? flat.size() / arity : 0; }

  std::span<ElementId const> ids(std::size_t i) const { return {flat.data() + i * arity, arity}; }

  bool is_mono(std::size_t i) const { return mono[i] != 0; }

  std::vector<Permutation> images(std::size_t i) const
  {
    std::vector<Permutation> out;
    for (auto x : ids(i))
      out.push_back(target->index().element(x));
    return out;
  }

  GroupHom hom(std::size_t i) const
  { return GroupHom{source, target->group_ptr(), images(i), verification}; }

  std::optional<std::size_t> find(std::span<ElementId const> t) const
  {
    std::size_t lo = 0, hi = count();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = ids(mid);
      if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count() && std::equal(t.begin(), t.end(), ids(lo).begin()))
      return lo;
    return std::nullopt;
  }

  std::optional<std::size_t> find(std::vector<Permutation> const &imgs) const
  {
    std::vector<ElementId> t;
    for (auto const &p : imgs) {
      auto id = target->index().find(p);
      if (!id)
        return std::nullopt;
      t.push_back(*id);
    }
    return find(t);
  }

  /// Σ class size × fiber size over the seeded classes.
  std::uint64_t class_equation_total() const
  {
    std::uint64_t n = 0;
    for (auto const &f : class_fibers)
      n += f.class_size * f.fiber_size;
    return n;
  }
};

namespace detail
{

/// A constraint checked once generators 0..depth are assigned: either a
/// relator (must evaluate to the identity) or a short word whose image order
/// must divide `order`.
struct Constraint
{
  std::vector<int> letters;
  std::uint64_t order = 1;
  bool relator = false;
};

class HomSearcher
{
public:
  HomSearcher(SearchDomain const &dom, EnumeratedPtr target, ConjugacyClasses const &cls,
              HomSearchOptions const &opt)
  : _src(dom.group), _tgt(std::move(target)), _cls(cls), _opt(opt)
  {
    auto const &kgens = _src->generators();
    _r = kgens.size();
    auto const &idx = _tgt->index();
    _deg = idx.degree();
    for (auto const &k : kgens)
      _gen_orders.push_back(k.order());
    _relators = dom.certified() && opt.use_relators;
    if (dom.presentation && !dom.certified() && opt.require_certified)
      throw UncertifiedPresentation("presentation is not certified; refusing relator pruning");
    if (_relators && dom.presentation->num_generators() != _r)
      throw PreconditionError("presentation and generator tuple differ in length");

    _by_depth.resize(_r);
    if (_relators)
      for (auto const &w : dom.presentation->relators)
        add_constraint(Constraint{w.letters(), 1, true});
    if (opt.short_word_pruning)
      for (std::size_t i = 0; i < _r; ++i)
        for (std::size_t j = i + 1; j < _r; ++j) {
          int a = static_cast<int>(i) + 1, b = static_cast<int>(j) + 1;
          for (auto const &w : std::vector<std::vector<int>>{{a, b},
                                                              {a, -b},
                                                              {-a, -b, a, b},
                                                              {a, a, b},
                                                              {a, b, b},
                                                              {a, b, a, -b}}) {
            std::uint64_t o = evaluate(Word(w), kgens).order();
            add_constraint(Constraint{w, o, false});
          }
        }

    for (std::size_t i = 0; i < _r; ++i) {
      std::vector<ElementId> cand;
      for (ElementId x = 0; x < idx.size(); ++x)
        if (_gen_orders[i] % idx.element_order(x) == 0)
          cand.push_back(x);
      _candidates.push_back(std::move(cand));
    }
  }

  HomSet run()
  {
    HomSet out;
    out.source = _src;
    out.target = _tgt;
    out.arity = _r;
    out.verification = _relators ? HomVerification::relator_certified
                                 : HomVerification::graph_certified;

    // seeds for the first generator: class representatives or all candidates
    std::vector<ElementId> seeds;
    if (_opt.class_seeding) {
      for (std::size_t c = 0; c < _cls.size(); ++c)
        if (_gen_orders[0] % _cls.order_of_rep[c] == 0)
          seeds.push_back(_cls.reps[c]);
    } else {
      seeds = _candidates[0];
    }

    struct Task
    {
      std::size_t seed;
      std::size_t begin, end; // range over second-generator candidates
    };
    std::vector<Task> tasks;
    constexpr std::size_t chunk = 2048;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      if (_r == 1) {
        tasks.push_back({s, 0, 0});
        continue;
      }
      for (std::size_t b = 0; b < _candidates[1].size(); b += chunk)
        tasks.push_back({s, b, std::min(b + chunk, _candidates[1].size())});
    }

    struct Result
    {
      std::vector<ElementId> flat;
      std::vector<std::uint8_t> mono;
    };
    std::vector<Result> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> leaves{0};
    std::atomic<bool> over_budget{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
      std::vector<ElementId> assign(_r);
      Scratch sc(_deg, _r);
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= tasks.size() || over_budget.load())
          return;
        try {
          auto const &task = tasks[t];
          assign[0] = seeds[task.seed];
          if (!check_depth(0, assign, sc))
            continue;
          auto leaf = [&](std::vector<ElementId> const &a) {
            if (leaves.fetch_add(1) + 1 > _opt.leaf_budget) {
              over_budget.store(true);
              return;
            }
            if (!_relators && !graph_test(*_src, images_of(a)))
              return;
            results[t].flat.insert(results[t].flat.end(), a.begin(), a.end());
            results[t].mono.push_back(is_mono(a) ? 1 : 0);
          };
          if (_r == 1) {
            leaf(assign);
            continue;
          }
          for (std::size_t b = task.begin; b < task.end && !over_budget.load(); ++b) {
            assign[1] = _candidates[1][b];
            if (check_depth(1, assign, sc))
              descend(2, assign, sc, leaf);
          }
          if (_opt.progress)
            _opt.progress(leaves.load());
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          over_budget.store(true);
        }
      }
    };

    std::size_t nworkers = std::max<std::size_t>(1, std::min(_opt.workers, tasks.size()));
    if (nworkers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < nworkers; ++w)
        pool.emplace_back(worker);
      for (auto &th : pool)
        th.join();
    }
    if (failure)
      std::rethrow_exception(failure);
    if (over_budget.load())
      throw CapExceeded("hom search exceeded the leaf budget of " +
                          std::to_string(_opt.leaf_budget),
                        "leaf_budget");
    out.leaves = leaves.load();

    // gather leaves per seed, then rebuild full fibers by conjugation
    std::vector<std::vector<ElementId>> seed_flat(seeds.size());
    std::vector<std::vector<std::uint8_t>> seed_mono(seeds.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      auto s = tasks[t].seed;
      seed_flat[s].insert(seed_flat[s].end(), results[t].flat.begin(), results[t].flat.end());
      seed_mono[s].insert(seed_mono[s].end(), results[t].mono.begin(), results[t].mono.end());
    }

    auto const &idx = _tgt->index();
    std::vector<Point> t1(_deg), t2(_deg);
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      std::size_t nf = seed_mono[s].size();
      std::uint64_t monos = static_cast<std::uint64_t>(
        std::count(seed_mono[s].begin(), seed_mono[s].end(), std::uint8_t{1}));
      if (!_opt.class_seeding) {
        out.flat.insert(out.flat.end(), seed_flat[s].begin(), seed_flat[s].end());
        out.mono.insert(out.mono.end(), seed_mono[s].begin(), seed_mono[s].end());
        continue;
      }
      std::uint32_t c = _cls.class_of[seeds[s]];
      out.class_fibers.push_back({c, seeds[s], _cls.sizes[c], nf, monos});
      for (ElementId x : _cls.members[c]) {
        if (x == seeds[s]) {
          out.flat.insert(out.flat.end(), seed_flat[s].begin(), seed_flat[s].end());
          out.mono.insert(out.mono.end(), seed_mono[s].begin(), seed_mono[s].end());
          continue;
        }
        Permutation g = idx.element(_cls.conjugator[x]);
        Permutation gi = g.inverse();
        for (std::size_t h = 0; h < nf; ++h) {
          out.flat.push_back(x);
          for (std::size_t i = 1; i < _r; ++i) {
            compose_into(t1, idx.images(seed_flat[s][h * _r + i]), gi.images());
            compose_into(t2, g.images(), t1);
            out.flat.push_back(idx.index_of(t2));
          }
          out.mono.push_back(seed_mono[s][h]);
        }
      }
    }

    // canonical order
    std::size_t n = out.mono.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
      perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(out.flat.begin() + static_cast<long>(a * _r),
                                          out.flat.begin() + static_cast<long>((a + 1) * _r),
                                          out.flat.begin() + static_cast<long>(b * _r),
                                          out.flat.begin() + static_cast<long>((b + 1) * _r));
    });
    std::vector<ElementId> flat(out.flat.size());
    std::vector<std::uint8_t> mono(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy_n(out.flat.begin() + static_cast<long>(perm[i] * _r), _r,
                  flat.begin() + static_cast<long>(i * _r));
      mono[i] = out.mono[perm[i]];
    }
    out.flat = std::move(flat);
    out.mono = std::move(mono);
    out.mono_count = static_cast<std::uint64_t>(std::count(out.mono.begin(), out.mono.end(), 1));
    return out;
  }

private:
  struct Scratch
  {
    Scratch(std::size_t deg, std::size_t r)
    : acc(deg), tmp(deg), inv(r, std::vector<Point>(deg))
    {}
    std::vector<Point> acc, tmp;
    std::vector<std::vector<Point>> inv;
  };

  void add_constraint(Constraint c)
  {
    std::size_t depth = 0;
    for (int l : c.letters)
      depth = std::max<std::size_t>(depth, static_cast<std::size_t>(std::abs(l)) - 1);
    _by_depth[depth].push_back(std::move(c));
  }

  std::vector<Permutation> images_of(std::vector<ElementId> const &a) const
  {
    std::vector<Permutation> out;
    for (auto x : a)
      out.push_back(_tgt->index().element(x));
    return out;
  }

  bool is_mono(std::vector<ElementId> const &a) const
  {
    if (std::all_of(a.begin(), a.end(), [](ElementId x) { return x == 0; }))
      return _src->order() == 1;
    return PermGroup(images_of(a)).order() == _src->order();
  }

  bool check_depth(std::size_t d, std::vector<ElementId> const &a, Scratch &sc) const
  {
    auto const &idx = _tgt->index();
    auto im = idx.images(a[d]);
    for (std::size_t x = 0; x < _deg; ++x)
      sc.inv[d][im[x]] = static_cast<Point>(x);
    for (auto const &c : _by_depth[d]) {
      for (std::size_t x = 0; x < _deg; ++x)
        sc.acc[x] = static_cast<Point>(x);
      for (int l : c.letters) {
        std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
        std::span<Point const> f = l > 0 ? idx.images(a[g]) : std::span<Point const>(sc.inv[g]);
        compose_into(sc.tmp, sc.acc, f);
        std::swap(sc.acc, sc.tmp);
      }
      if (c.relator) {
        for (std::size_t x = 0; x < _deg; ++x)
          if (sc.acc[x] != x)
            return false;
      } else {
        auto id = idx.find(sc.acc);
        if (c.order % idx.element_order(*id) != 0)
          return false;
      }
    }
    return true;
  }

  template <typename Leaf>
  void descend(std::size_t d, std::vector<ElementId> &a, Scratch &sc, Leaf &leaf) const
  {
    if (d == _r) {
      leaf(a);
      return;
    }
    for (ElementId x : _candidates[d]) {
      a[d] = x;
      if (check_depth(d, a, sc))
        descend(d + 1, a, sc, leaf);
    }
  }

  GroupPtr _src;
  EnumeratedPtr _tgt;
  ConjugacyClasses const &_cls;
  HomSearchOptions _opt;
  std::size_t _r = 0;
  std::size_t _deg = 0;
  bool _relators = false;
  std::vector<std::uint64_t> _gen_orders;
  std::vector<std::vector<Constraint>> _by_depth;
  std::vector<std::vector<ElementId>> _candidates;
};

} // namespace detail

/// Hom(K, G). The first generator's image is seeded with one representative
/// per conjugacy class of G; the other generators range over elements whose
/// order divides the generator's order. Leaves are verified by the certified
/// relators, or by the graph-subgroup test when no certified presentation is
/// available, and full fibers are rebuilt by conjugation.
inline HomSet enumerate_homs(SearchDomain const &k, EnumeratedPtr g, ConjugacyClasses const &g_classes,
                             HomSearchOptions const &opt = {})
{
  return detail::HomSearcher(k, std::move(g), g_classes, opt).run();
}

/// Brute force over all image tuples with graph verification; for small oracles.
/// Every tuple in G^r is considered. Tuples whose image orders do not divide
/// the orders of the source generators cannot be homomorphisms and skip the
/// graph test; all others are graph-tested.
inline std::uint64_t count_homs_brute_force(PermGroup const &k, EnumeratedGroup const &g)
{
  auto const &gens = k.generators();
  std::size_t r = gens.size();
  if (r == 0)
    return 1;
  std::vector<std::vector<ElementId>> allowed(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto o = gens[i].order();
    for (ElementId x = 0; x < g.size(); ++x)
      if (o % g.index().element_order(x) == 0)
        allowed[i].push_back(x);
  }
  std::vector<std::size_t> a(r, 0);
  std::uint64_t count = 0;
  std::vector<Permutation> imgs(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      imgs[i] = g.index().element(allowed[i][a[i]]);
    if (graph_test(k, imgs))
      ++count;
    std::size_t i = 0;
    while (i < r && ++a[i] == allowed[i].size())
      a[i++] = 0;
    if (i == r)
      return count;
  }
}

} // namespace grouploc
