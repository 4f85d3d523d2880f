// Catalog maintenance: turns the raw generators emitted by build_groups.py into
// catalog entries with a 2-generator tuple and a presentation certified by
// coset enumeration. Relators are powers w^ord(w) of short words, added in
// shortlex order until the enumeration closes, then pruned.
//
//   python3 tools/catalog/build_groups.py > raw.json
//   refine_catalog raw.json > refined.json

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grouploc/element_index.hpp"
#include "grouploc/perm_group.hpp"
#include "grouploc/presentation.hpp"
#include <nlohmann/json.hpp>

using namespace grouploc;
using nlohmann::json;

namespace
{

// Letters are ranked a < b < a^-1 < b^-1 so that canonical words prefer
// positive letters.
int rank(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1 + 2; }

std::vector<Word> candidate_words(std::size_t max_len, bool a_involution, bool b_involution)
{
  // freely and cyclically reduced words over a, b, canonical under rotation
  // and inversion; involutions appear only as positive letters
  std::vector<Word> out;
  std::set<std::vector<int>> seen;
  std::vector<int> letters{1, 2};
  if (!a_involution)
    letters.push_back(-1);
  if (!b_involution)
    letters.push_back(-2);
  auto less = [](std::vector<int> const &x, std::vector<int> const &y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](int p, int q) { return rank(p) < rank(q); });
  };
  auto normal = [&](int l) { return (l == -1 && a_involution) || (l == -2 && b_involution) ? -l : l; };
  std::vector<std::vector<int>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (auto const &w : layer)
      for (int l : letters) {
        if (!w.empty() && (w.back() == -l || (w.back() == l && normal(-l) == l)))
          continue;
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    layer = next;
    for (auto const &w : layer) {
      if (w.size() >= 2 && (w.front() == -w.back() || (w.front() == w.back() && normal(-w.front()) == w.front())))
        continue;
      bool uses_a = false, uses_b = false;
      for (int l : w)
        (std::abs(l) == 1 ? uses_a : uses_b) = true;
      if (!uses_a || !uses_b)
        continue;
      std::vector<int> inv;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        inv.push_back(normal(-*it));
      std::vector<int> best = w;
      for (auto const &base : {w, inv})
        for (std::size_t r = 0; r < base.size(); ++r) {
          std::vector<int> rot(base.begin() + static_cast<long>(r), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
          if (less(rot, best))
            best = rot;
        }
      if (seen.insert(best).second)
        out.emplace_back(best);
    }
  }
  return out;
}

std::uint64_t try_tc(std::vector<Word> const &rels, std::size_t cap)
{
  try {
    CosetEnumerationStats stats;
    return detail::CosetTable(2, rels, cap).run_felsch(stats);
  } catch (CapExceeded const &) {
    return 0;
  }
}

std::string word_text(Word const &w, long power)
{
  static char const names[] = {'a', 'b'};
  std::string s;
  auto const &ls = w.letters();
  std::size_t runs = 0;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i])
      ++j;
    long e = static_cast<long>(j - i) * (ls[i] > 0 ? 1 : -1);
    if (!s.empty())
      s += '*';
    s += names[std::abs(ls[i]) - 1];
    if (e != 1)
      s += "^" + std::to_string(e);
    ++runs;
    i = j;
  }
  if (power == 1)
    return s;
  return (runs > 1 ? "(" + s + ")" : s) + "^" + std::to_string(power);
}

struct Refined
{
  Permutation a, b;
  std::vector<std::string> relators;
};

Refined refine(std::string const &name, GroupPtr const &g, std::size_t max_len)
{
  EnumeratedGroup e(g);
  auto const &idx = e.index();
  std::map<std::uint32_t, std::vector<ElementId>> by_order;
  for (ElementId i = 0; i < idx.size(); ++i)
    by_order[idx.element_order(i)].push_back(i);
  auto count_dividing = [&](std::uint32_t o) {
    std::size_t n = 0;
    for (auto const &[k, v] : by_order)
      if (o % k == 0)
        n += v.size();
    return n;
  };

  std::vector<std::pair<std::size_t, std::pair<std::uint32_t, std::uint32_t>>> pairs;
  for (auto const &[ob, vb] : by_order)
    for (auto const &[oa, va] : by_order)
      if (ob > 1 && oa > 1)
        pairs.push_back({count_dividing(ob) * 64 + oa, {ob, oa}});
  std::sort(pairs.begin(), pairs.end());

  for (auto const &[cost, ords] : pairs) {
    auto const &bs = by_order[ords.first];
    auto const &as = by_order[ords.second];
    for (std::size_t ib = 0; ib < std::min<std::size_t>(bs.size(), 40); ++ib)
      for (std::size_t ia = 0; ia < std::min<std::size_t>(as.size(), 400); ++ia) {
        Permutation a = idx.element(as[ia]);
        Permutation b = idx.element(bs[ib]);
        if (PermGroup({a, b}).order() != g->order())
          continue;
        auto rels_all = candidate_words(max_len, a.order() == 2, b.order() == 2);
        std::vector<Permutation> imgs{a, b};
        std::vector<Word> rels{Word::generator(0).power(static_cast<long>(a.order())),
                               Word::generator(1).power(static_cast<long>(b.order()))};
        std::vector<long> powers{static_cast<long>(a.order()), static_cast<long>(b.order())};
        std::vector<Word> bases{Word::generator(0), Word::generator(1)};
        std::size_t cap = std::max<std::size_t>(100000, 20 * g->order());
        cap = std::min<std::size_t>(cap, default_coset_cap);
        std::uint64_t got = 0;
        for (std::size_t w = 0; w < rels_all.size() && got != g->order(); ++w) {
          auto const &word = rels_all[w];
          long o = static_cast<long>(evaluate(word, imgs).order());
          bases.push_back(word);
          powers.push_back(o);
          rels.push_back(word.power(o));
          if (w + 1 == rels_all.size() || rels_all[w + 1].length() != word.length())
            got = try_tc(rels, cap);
        }
        if (got != g->order())
          got = try_tc(rels, cap);
        if (got != g->order()) {
          std::cerr << name << ": pair (" << ords.second << "," << ords.first
                    << ") did not close\n";
          goto next_pair;
        }
        // shortest closing prefix, then prune from the back
        {
          std::size_t lo = 3, hi = rels.size();
          while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            std::vector<Word> prefix(rels.begin(), rels.begin() + static_cast<long>(mid));
            if (try_tc(prefix, cap) == g->order())
              hi = mid;
            else
              lo = mid + 1;
          }
          rels.resize(lo);
          bases.resize(lo);
          powers.resize(lo);
        }
        for (std::size_t k = rels.size(); k-- > 2;) {
          auto trial = rels;
          trial.erase(trial.begin() + static_cast<long>(k));
          if (try_tc(trial, cap) == g->order()) {
            rels = trial;
            bases.erase(bases.begin() + static_cast<long>(k));
            powers.erase(powers.begin() + static_cast<long>(k));
          }
        }
        Refined out{a, b, {}};
        for (std::size_t k = 0; k < rels.size(); ++k)
          out.relators.push_back(word_text(bases[k], powers[k]));
        std::cerr << name << ": a order " << a.order() << ", b order " << b.order() << ", "
                  << rels.size() << " relators\n";
        return out;
      }
  next_pair:;
  }
  throw Error(name + ": no presentation found");
}

} // namespace

int main(int argc, char **argv)
{
  if (argc < 2) {
    std::cerr << "usage: refine_catalog raw.json [max_word_length [name...]]\n";
    return 3;
  }
  std::ifstream in(argv[1]);
  json raw = json::parse(in);
  std::size_t max_len = argc > 2 ? std::stoul(argv[2]) : 10;
  json out = json::object();
  std::set<std::string> only(argv + std::min(argc, 3), argv + argc);
  for (auto const &[name, e] : raw.items()) {
    if (!only.empty() && !only.count(name))
      continue;
    std::size_t degree = e["degree"];
    std::vector<Permutation> gens;
    for (auto const &c : e["gens"])
      gens.push_back(Permutation::from_cycles(degree, c.get<std::string>()));
    auto g = make_group(gens);
    auto r = refine(name, g, max_len);
    out[name] = {{"degree", degree},
                 {"generators", {r.a.to_cycle_string(), r.b.to_cycle_string()}},
                 {"relators", r.relators}};
    std::cout << out.dump(1) << std::endl;
  }
  return 0;
}
