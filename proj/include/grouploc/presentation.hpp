#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "word.hpp"

namespace grouploc
{

inline constexpr std::size_t default_coset_cap = 2000000;

enum class CertificationMethod
{
  none,
  todd_coxeter,
  trusted_catalog
};

inline char const *to_string(CertificationMethod m)
{
  switch (m) {
  case CertificationMethod::todd_coxeter: return "todd_coxeter";
  case CertificationMethod::trusted_catalog: return "trusted_catalog";
  default: return "none";
  }
}

/// Abstract generators and relators. Relators are stored freely and
/// cyclically reduced.
struct Presentation
{
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  std::optional<std::uint64_t> certified_order;
  CertificationMethod method = CertificationMethod::none;
  std::string provenance;

  std::size_t num_generators() const { return generator_names.size(); }

  static Presentation parse(std::vector<std::string> names, std::vector<std::string> const &relators)
  {
    Presentation p;
    p.generator_names = std::move(names);
    for (auto const &r : relators) {
      Word w = parse_word(r, p.generator_names).cyclically_reduced();
      if (!w.empty())
        p.relators.push_back(std::move(w));
    }
    return p;
  }

  bool is_certified() const { return certified_order.has_value(); }
};

enum class CosetStrategy
{
  hlt,
  felsch
};

struct CosetEnumerationStats
{
  std::size_t max_rows = 0;
  std::size_t total_defined = 0;
  std::size_t lookaheads = 0;
  CosetStrategy strategy = CosetStrategy::hlt;
};

namespace detail
{

/// Coset table for enumeration over the trivial subgroup. Column 2g is
/// generator g, column 2g+1 its inverse.
class CosetTable
{
public:
  CosetTable(std::size_t ngens, std::vector<Word> const &relators, std::size_t cap)
  : _cols(2 * ngens), _cap(cap)
  {
    for (auto const &r : relators) {
      std::vector<std::uint32_t> cols;
      for (int l : r.letters())
        cols.push_back(l > 0 ? 2u * static_cast<std::uint32_t>(l - 1)
                             : 2u * static_cast<std::uint32_t>(-l - 1) + 1u);
      _relators.push_back(std::move(cols));
    }
    // cyclic conjugates of relators and their inverses, by first column
    _rotations.resize(_cols);
    for (auto const &rel : _relators) {
      std::vector<std::uint32_t> const &fwd = rel;
      std::vector<std::uint32_t> inv(rel.rbegin(), rel.rend());
      for (auto &x : inv)
        x ^= 1u;
      for (auto const *base : {&fwd, static_cast<std::vector<std::uint32_t> const *>(&inv)})
        for (std::size_t k = 0; k < base->size(); ++k) {
          std::vector<std::uint32_t> rot(base->begin() + static_cast<long>(k), base->end());
          rot.insert(rot.end(), base->begin(), base->begin() + static_cast<long>(k));
          auto &bucket = _rotations[rot.front()];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
            bucket.push_back(std::move(rot));
        }
    }
    new_row();
  }

  /// Felsch strategy: always fill the first undefined entry, then process
  /// all deductions against every cyclic conjugate of the relators.
  std::uint64_t run_felsch(CosetEnumerationStats &stats)
  {
    _track = true;
    for (;;) {
      bool full = false;
      try {
        for (std::size_t c = 0; c < rows(); ++c) {
          if (!live(c))
            continue;
          for (std::uint32_t x = 0; x < _cols && live(c); ++x)
            if (entry(c, x) == undef) {
              define(c, x);
              process_deductions();
            }
        }
      } catch (TableFull const &) {
        full = true;
      }
      if (full) {
        _deductions.clear();
        if (live_count() == rows())
          throw CapExceeded("coset enumeration exceeded " + std::to_string(_cap) + " rows",
                            "coset_cap");
        compact();
        // deductions lost on compaction are recovered by a full lookahead
        lookahead();
        compact();
        continue;
      }
      // every relator must close at every coset; otherwise keep going
      std::size_t before = live_count();
      lookahead();
      if (live_count() == before && complete())
        break;
      compact();
    }
    stats.max_rows = std::max(stats.max_rows, _max_rows);
    stats.total_defined = _defined;
    stats.strategy = CosetStrategy::felsch;
    return live_count();
  }

  /// Runs the enumeration; returns the index of the trivial subgroup, i.e.
  /// the group order. Throws CapExceeded when the table cannot grow further.
  std::uint64_t run(CosetEnumerationStats &stats)
  {
    for (;;) {
      try {
        hlt_pass();
        break;
      } catch (TableFull const &) {
        ++stats.lookaheads;
        std::size_t before = live_count();
        lookahead();
        if (before - live_count() < std::max<std::size_t>(1, _cap / 1000))
          throw CapExceeded("coset enumeration exceeded " + std::to_string(_cap) + " rows",
                            "coset_cap");
        compact();
      }
    }
    stats.max_rows = std::max(stats.max_rows, _max_rows);
    stats.total_defined = _defined;
    return live_count();
  }

private:
  struct TableFull
  {};

  static constexpr std::int32_t undef = -1;

  std::int32_t &entry(std::size_t row, std::size_t col) { return _table[row * _cols + col]; }

  std::size_t rows() const { return _forward.size(); }

  std::size_t live_count() const
  {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows(); ++r)
      if (_forward[r] == static_cast<std::int32_t>(r))
        ++n;
    return n;
  }

  bool live(std::size_t r) const { return _forward[r] == static_cast<std::int32_t>(r); }

  std::size_t new_row()
  {
    if (rows() >= _cap)
      throw TableFull{};
    std::size_t r = rows();
    _table.resize(_table.size() + _cols, undef);
    _forward.push_back(static_cast<std::int32_t>(r));
    _max_rows = std::max(_max_rows, rows());
    ++_defined;
    return r;
  }

  void define(std::size_t c, std::uint32_t col)
  {
    std::size_t d = new_row();
    entry(c, col) = static_cast<std::int32_t>(d);
    entry(d, col ^ 1u) = static_cast<std::int32_t>(c);
    deduce(static_cast<std::int32_t>(c), col);
  }

  void deduce(std::int32_t c, std::uint32_t col)
  {
    if (_track)
      _deductions.emplace_back(c, col);
  }

  void process_deductions()
  {
    while (!_deductions.empty()) {
      auto [c, x] = _deductions.back();
      _deductions.pop_back();
      if (!live(static_cast<std::size_t>(c)))
        continue;
      for (auto const &rot : _rotations[x]) {
        scan(static_cast<std::size_t>(c), rot, false);
        if (!live(static_cast<std::size_t>(c)))
          break;
      }
      if (!live(static_cast<std::size_t>(c)))
        continue;
      std::int32_t d = entry(static_cast<std::size_t>(c), x);
      if (d == undef || !live(static_cast<std::size_t>(d)))
        continue;
      for (auto const &rot : _rotations[x ^ 1u]) {
        scan(static_cast<std::size_t>(d), rot, false);
        if (!live(static_cast<std::size_t>(d)))
          break;
      }
    }
  }

  bool complete()
  {
    for (std::size_t r = 0; r < rows(); ++r)
      if (live(r))
        for (std::uint32_t x = 0; x < _cols; ++x)
          if (entry(r, x) == undef)
            return false;
    return true;
  }

  std::int32_t rep(std::int32_t c)
  {
    std::int32_t r = c;
    while (_forward[static_cast<std::size_t>(r)] != r)
      r = _forward[static_cast<std::size_t>(r)];
    while (_forward[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = _forward[static_cast<std::size_t>(c)];
      _forward[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t> &queue)
  {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    std::int32_t lo = std::min(k, l);
    std::int32_t hi = std::max(k, l);
    _forward[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b)
  {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t e = static_cast<std::size_t>(queue[q]);
      for (std::uint32_t x = 0; x < _cols; ++x) {
        std::int32_t f = entry(e, x);
        if (f == undef)
          continue;
        if (entry(static_cast<std::size_t>(f), x ^ 1u) == static_cast<std::int32_t>(e))
          entry(static_cast<std::size_t>(f), x ^ 1u) = undef;
        std::int32_t e1 = rep(static_cast<std::int32_t>(e));
        std::int32_t f1 = rep(f);
        std::int32_t &e1x = entry(static_cast<std::size_t>(e1), x);
        std::int32_t &f1xi = entry(static_cast<std::size_t>(f1), x ^ 1u);
        if (e1x != undef) {
          merge(f1, e1x, queue);
        } else if (f1xi != undef) {
          merge(e1, f1xi, queue);
        } else {
          e1x = f1;
          f1xi = e1;
          deduce(e1, x);
        }
      }
    }
  }

  /// Scan relator `rel` at coset c. With `fill`, undefined gaps are filled
  /// by new cosets; otherwise only deductions and coincidences are recorded.
  void scan(std::size_t c, std::vector<std::uint32_t> const &rel, bool fill)
  {
    if (rel.empty())
      return;
    std::int32_t f = static_cast<std::int32_t>(c);
    std::int32_t b = static_cast<std::int32_t>(c);
    std::size_t i = 0;
    std::size_t j = rel.size();
    for (;;) {
      while (i < j) {
        std::int32_t nf = entry(static_cast<std::size_t>(f), rel[i]);
        if (nf == undef)
          break;
        f = nf;
        ++i;
      }
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i) {
        std::int32_t nb = entry(static_cast<std::size_t>(b), rel[j - 1] ^ 1u);
        if (nb == undef)
          break;
        b = nb;
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(static_cast<std::size_t>(f), rel[i]) = b;
        entry(static_cast<std::size_t>(b), rel[i] ^ 1u) = f;
        deduce(f, rel[i]);
        return;
      }
      if (!fill)
        return;
      define(static_cast<std::size_t>(f), rel[i]);
    }
  }

  void hlt_pass()
  {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c))
        continue;
      for (auto const &rel : _relators) {
        scan(c, rel, true);
        if (!live(c))
          break;
      }
      if (!live(c))
        continue;
      for (std::uint32_t x = 0; x < _cols; ++x)
        if (entry(c, x) == undef)
          define(c, x);
    }
  }

  void lookahead()
  {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c))
        continue;
      for (auto const &rel : _relators) {
        scan(c, rel, false);
        if (!live(c))
          break;
      }
    }
  }

  /// Renumber live cosets consecutively, preserving their order.
  void compact()
  {
    std::vector<std::int32_t> renum(rows(), undef);
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows(); ++r)
      if (live(r))
        renum[r] = static_cast<std::int32_t>(n++);
    std::vector<std::int32_t> table(n * _cols, undef);
    for (std::size_t r = 0; r < rows(); ++r) {
      if (!live(r))
        continue;
      for (std::size_t x = 0; x < _cols; ++x) {
        std::int32_t v = entry(r, x);
        if (v != undef)
          v = renum[static_cast<std::size_t>(rep(v))];
        table[static_cast<std::size_t>(renum[r]) * _cols + x] = v;
      }
    }
    _table = std::move(table);
    _forward.resize(n);
    for (std::size_t r = 0; r < n; ++r)
      _forward[r] = static_cast<std::int32_t>(r);
  }

  std::size_t _cols;
  std::size_t _cap;
  std::vector<std::vector<std::uint32_t>> _relators;
  std::vector<std::vector<std::vector<std::uint32_t>>> _rotations;
  std::vector<std::pair<std::int32_t, std::uint32_t>> _deductions;
  bool _track = false;
  std::vector<std::int32_t> _table;
  std::vector<std::int32_t> _forward;
  std::size_t _max_rows = 0;
  std::size_t _defined = 0;
};

} // namespace detail

/// Order of the group presented by `p`, by coset enumeration over the trivial
/// subgroup. HLT with lookahead on table overflow is tried first; if it
/// exceeds the cap, the Felsch strategy is run with the same cap. Both are
/// deterministic, so the result and the strategy used are reproducible.
inline std::uint64_t todd_coxeter(Presentation const &p, std::size_t coset_cap = default_coset_cap,
                                  CosetEnumerationStats *stats = nullptr)
{
  if (p.num_generators() == 0)
    return 1;
  for (auto const &r : p.relators)
    if (r.generator_span() > p.num_generators())
      throw PreconditionError("relator uses an undeclared generator");
  CosetEnumerationStats local;
  auto &st = stats ? *stats : local;
  try {
    detail::CosetTable table(p.num_generators(), p.relators, coset_cap);
    return table.run(st);
  } catch (CapExceeded const &) {
  }
  detail::CosetTable table(p.num_generators(), p.relators, coset_cap);
  return table.run_felsch(st);
}

/// Certify that `images` realise an isomorphism from the presented group onto
/// `group`: relators hold, images generate, and coset enumeration yields |group|.
/// On success the presentation's certified_order is set.
inline Presentation certify(Presentation p, PermGroup const &group,
                            std::vector<Permutation> const &images,
                            std::size_t coset_cap = default_coset_cap)
{
  if (images.size() != p.num_generators())
    throw PreconditionError("certify: need one image per generator");
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (!evaluate(p.relators[i], images).is_identity())
      throw RelatorFails(i);
  PermGroup generated(images);
  if (!group.contains_group(generated) || generated.order() != group.order())
    throw GenerationFails("images generate a group of order " +
                          std::to_string(generated.order()) + ", expected " +
                          std::to_string(group.order()));
  std::uint64_t order = todd_coxeter(p, coset_cap);
  if (order != group.order())
    throw OrderMismatch("presentation defines a group of order " + std::to_string(order) +
                        ", expected " + std::to_string(group.order()));
  p.certified_order = order;
  p.method = CertificationMethod::todd_coxeter;
  return p;
}

} // namespace grouploc
