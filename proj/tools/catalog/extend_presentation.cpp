// Catalog maintenance: presentation of an index-2 overgroup G of a refined
// group N = <a, b | R>. Picks an outer involution t with <a, t> = G, writes b
// as a word B(a, t), and eliminates b from
//   R(a, b), t^2, t a t^-1 = W_a(a, b), t b t^-1 = W_b(a, b).
// The output uses generators (a, t), named a and b.
//
//   extend_presentation raw.json refined_N.json N G > G.json

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grouploc/element_index.hpp"
#include "grouploc/presentation.hpp"

using namespace grouploc;
using nlohmann::json;

namespace
{

Word substitute(Word const &w, std::vector<Word> const &img)
{
  Word out;
  for (int l : w.letters()) {
    auto const &x = img[static_cast<std::size_t>(std::abs(l) - 1)];
    out = out * (l > 0 ? x : x.inverse());
  }
  return out;
}

std::vector<Permutation> perms(std::size_t degree, json const &cycles)
{
  std::vector<Permutation> out;
  for (auto const &c : cycles)
    out.push_back(Permutation::from_cycles(degree, c.get<std::string>()));
  return out;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc != 5) {
    std::cerr << "usage: extend_presentation raw.json refined_N.json N G\n";
    return 2;
  }
  try {
    json raw = json::parse(std::ifstream(argv[1]));
    json rn = json::parse(std::ifstream(argv[2]));
    std::string nname = argv[3], gname = argv[4];
    std::size_t degree = raw.at(gname).at("degree");
    auto G = make_group(perms(degree, raw.at(gname).at("gens")));
    auto ngens = perms(degree, rn.at(nname).at("generators"));
    auto N = make_group(ngens);
    std::vector<std::string> rels = rn.at(nname).at("relators");
    if (ngens.size() != 2 || G->order() != 2 * N->order() || !G->contains_group(*N)) {
      std::cerr << nname << " is not an index-2 subgroup of " << gname << " on two generators\n";
      return 1;
    }
    std::vector<std::string> const ab{"a", "b"};
    EnumeratedGroup ge(G);
    EnumeratedGroup ne(N);
    for (ElementId x = 1; x < ge.size(); ++x) {
      auto t = ge.index().element(x);
      if (t.order() != 2 || N->contains(t) || PermGroup({ngens[0], t}).order() != G->order())
        continue;
      EnumeratedGroup at(make_group({ngens[0], t}));
      std::vector<Word> sub{Word::generator(0), Word(at.word(at.index().index_of(ngens[1])))};
      Word T = Word::generator(1);
      std::vector<Word> out;
      for (auto const &r : rels)
        out.push_back(substitute(parse_word(r, ab), sub));
      out.push_back(T * T);
      for (std::size_t i = 0; i < 2; ++i) {
        Word w(ne.word(ne.index().index_of(t * ngens[i] * t.inverse())));
        out.push_back(T * sub[i] * T.inverse() * substitute(w, sub).inverse());
      }
      auto closes = [&](std::vector<Word> const &rs) {
        std::vector<std::string> s;
        for (auto const &w : rs)
          s.push_back(w.to_string(ab));
        try {
          return todd_coxeter(Presentation::parse(ab, s), default_coset_cap) == G->order();
        } catch (CapExceeded const &) {
          return false;
        }
      };
      for (std::size_t i = out.size(); i-- > 0;) {
        auto trial = out;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (closes(trial))
          out = trial;
      }
      std::vector<std::string> text;
      for (auto const &w : out)
        text.push_back(w.to_string(ab));
      auto p = certify(Presentation::parse(ab, text), *G, {ngens[0], t});
      json j;
      j[gname] = {{"degree", degree},
                  {"generators", {ngens[0].to_cycle_string(), t.to_cycle_string()}},
                  {"relators", text},
                  {"presentation_provenance",
                   "index-2 extension of the " + nname + " presentation by an outer involution, "
                   "second generator eliminated; certified by coset enumeration"}};
      std::cout << j.dump(1) << "\n";
      std::cerr << gname << ": " << text.size() << " relators, order " << *p.certified_order << "\n";
      return 0;
    }
    std::cerr << "no outer involution generates " << gname << " together with a\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
