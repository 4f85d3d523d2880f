// Count homomorphisms S4 -> S5 two ways and list the injective ones.
#include <iostream>

#include "grouploc/grouploc.hpp"

using namespace grouploc;

int main()
{
  auto s4 = make_group({Permutation::from_cycles(4, "(1,2)"), Permutation::from_cycles(4, "(1,2,3,4)")});
  auto s5 = std::make_shared<GroupData>(
    "S5", make_group({Permutation::from_cycles(5, "(1,2)"), Permutation::from_cycles(5, "(1,2,3,4,5)")}));

  HomSearchOptions opt;
  opt.workers = 2;
  auto homs = s5->homs_from(SearchDomain{s4, std::nullopt}, opt);
  std::cout << "|Hom(S4,S5)| = " << homs.count() << " (brute force "
            << count_homs_brute_force(*s4, *s5->enumerated()) << ")\n";
  std::cout << homs.mono_count << " injective, first few:\n";
  std::size_t shown = 0;
  for (std::size_t i = 0; i < homs.count() && shown < 5; ++i)
    if (homs.is_mono(i)) {
      auto imgs = homs.images(i);
      std::cout << "  " << imgs[0].to_cycle_string() << ", " << imgs[1].to_cycle_string() << "\n";
      ++shown;
    }
}
