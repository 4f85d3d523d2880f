// Catalog maintenance: builds a cover entry from raw cover generators and the
// refined entry of its quotient. The cover's generators are preimages of the
// quotient's generators, so the projection is the quotient's own tuple. The
// presentation lifts each quotient relator r to r*z^-e, where z is a short
// word for the central involution, and adds z^2 and [z, x] for the generators.
//
//   lift_cover raw.json quotient.json COVER > cover.json

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grouploc/group_data.hpp"
#include "grouploc/localization.hpp"
#include "grouploc/presentation.hpp"

using namespace grouploc;
using nlohmann::json;

namespace
{

std::vector<Permutation> parse_gens(std::size_t degree, json const &arr)
{
  std::vector<Permutation> out;
  for (auto const &c : arr)
    out.push_back(Permutation::from_cycles(degree, c.get<std::string>()));
  return out;
}

// images of the raw generators under p -> p mod dq, if that is a hom onto q
std::optional<std::vector<Permutation>> block_projection(std::vector<Permutation> const &gens,
                                                         PermGroup const &q)
{
  std::size_t dq = q.degree();
  if (gens.front().degree() % dq != 0)
    return std::nullopt;
  std::vector<Permutation> out;
  for (auto const &g : gens) {
    std::vector<Point> img(dq);
    std::vector<bool> hit(dq, false);
    for (std::size_t p = 0; p < dq; ++p) {
      img[p] = static_cast<Point>(g[static_cast<Point>(p)] % dq);
      if (hit[img[p]])
        return std::nullopt;
      hit[img[p]] = true;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<std::string> prune(std::vector<std::string> rels, PermGroup const &g,
                               std::vector<Permutation> const &gens)
{
  auto closes = [&](std::vector<std::string> const &rs) {
    try {
      certify(Presentation::parse({"a", "b"}, rs), g, gens, default_coset_cap);
      return true;
    } catch (Error const &) {
      return false;
    }
  };
  for (std::size_t i = rels.size(); i-- > 0;) {
    auto trial = rels;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (closes(trial))
      rels = trial;
  }
  return rels;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc != 4) {
    std::cerr << "usage: lift_cover raw.json quotient.json COVER\n";
    return 3;
  }
  json raw = json::parse(std::ifstream(argv[1]));
  json qj = json::parse(std::ifstream(argv[2]));
  std::string name = argv[3];
  auto const &qname = qj.begin().key();
  auto const &qe = qj.begin().value();
  auto const &ce = raw.at(name);

  auto cgens = parse_gens(ce.at("degree").get<std::size_t>(), ce.at("gens"));
  auto qgens = parse_gens(qe.at("degree").get<std::size_t>(), qe.at("generators"));
  auto cover = std::make_shared<GroupData>(name, make_group(cgens));
  auto quot = std::make_shared<GroupData>(qname, make_group(qgens));

  std::optional<std::vector<Permutation>> proj = block_projection(cgens, *quot->group());
  if (proj) {
    try {
      make_central_extension(cover, quot, *proj);
    } catch (Error const &) {
      proj.reset();
    }
  }
  if (!proj) {
    auto homs = quot->homs_from(cover->domain());
    for (std::size_t i = 0; i < homs.count() && !proj; ++i) {
      try {
        make_central_extension(cover, quot, homs.images(i));
        proj = homs.images(i);
      } catch (Error const &) {
      }
    }
  }
  if (!proj) {
    std::cerr << name << ": no central projection onto " << qname << "\n";
    return 1;
  }
  auto ext = make_central_extension(cover, quot, *proj);
  if (ext.kernel->order() != 2) {
    std::cerr << name << ": kernel order " << ext.kernel->order() << " is not handled\n";
    return 1;
  }

  auto te = cover->enumerated();
  auto qidx = quot->enumerated();
  std::vector<Permutation> lifts;
  for (auto const &x : qgens) {
    auto pre = ext.preimages(qidx->index().index_of(x));
    lifts.push_back(te->index().element(pre.front()));
  }
  PermGroup lifted(lifts);
  if (lifted.order() != cover->order()) {
    std::cerr << name << ": lifted generators do not generate\n";
    return 1;
  }

  Permutation z = ext.kernel->gens.front();
  std::vector<std::string> zcand;
  for (std::string base : {"a", "b", "(a*b)"})
    for (int k = 1; k <= 12; ++k)
      zcand.push_back(base + "^" + std::to_string(k));
  std::string zw;
  for (auto const &w : zcand)
    if (evaluate(parse_word(w, {"a", "b"}), lifts) == z) {
      zw = w;
      break;
    }
  if (zw.empty()) {
    std::cerr << name << ": no short word for the central involution\n";
    return 1;
  }

  std::vector<std::string> rels;
  for (auto const &r : qe.at("relators")) {
    auto text = r.get<std::string>();
    auto v = evaluate(parse_word(text, {"a", "b"}), lifts);
    if (v.is_identity())
      rels.push_back(text);
    else if (v == z)
      rels.push_back(text + "*" + zw);
    else {
      std::cerr << name << ": relator " << text << " lifts outside the kernel\n";
      return 1;
    }
  }
  rels.push_back(zw + "^2");
  if (zw.front() != 'a')
    rels.push_back("[" + zw + ",a]");
  if (zw.front() != 'b')
    rels.push_back("[" + zw + ",b]");
  rels = prune(rels, lifted, lifts);
  auto p = certify(Presentation::parse({"a", "b"}, rels), lifted, lifts, default_coset_cap);

  json out;
  out[name] = {{"degree", ce.at("degree")},
               {"generators", {lifts[0].to_cycle_string(), lifts[1].to_cycle_string()}},
               {"relators", rels},
               {"certified_order", *p.certified_order},
               {"cover_of", {{"quotient", qname}, {"projection", qe.at("generators")}}}};
  std::cout << out.dump(1) << "\n";
  std::cerr << name << ": " << rels.size() << " relators, order " << *p.certified_order << "\n";
  return 0;
}
