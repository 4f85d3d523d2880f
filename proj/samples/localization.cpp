// A5 as a point stabiliser in A6; checks that restriction Hom(A6,A6) -> Hom(A5,A6) is a bijection.
#include <iostream>

#include "grouploc/grouploc.hpp"

using namespace grouploc;

int main()
{
  auto p = [](char const *c) { return Permutation::from_cycles(6, c); };
  auto a6 = std::make_shared<GroupData>("A6", make_group({p("(1,2,3)"), p("(2,3,4,5,6)")}));
  auto a5 = std::make_shared<GroupData>("A5", make_group({p("(1,2,3)"), p("(1,2,3,4,5)")}));

  auto phi = make_hom(a5->group(), a6->group(), a5->group()->generators());
  auto r = check_localization(*a5, *a6, phi);

  std::cout << "verdict    " << to_string(r.verdict) << "\n"
            << "|Hom(G,G)| " << r.hom_gg_count << "\n"
            << "|Hom(H,G)| " << r.hom_hg_count << "\n"
            << "|Aut(G)|   " << r.aut_g_order << "\n";
  if (r.mono_orbit_count)
    std::cout << "mono orbits under Aut(G): " << *r.mono_orbit_count << "\n";
  return r.holds() ? 0 : 1;
}
