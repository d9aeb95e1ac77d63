// Applies sigma_m to every partition of n and prints the statistics it
// carries across.
//
//   sigma_walkthrough [n] [m]

#include <cstdlib>
#include <iostream>

#include "partid/partid.hpp"

int main(int argc, char** argv) {
  unsigned const n = argc > 1 ? std::atoi(argv[1]) : 6;
  unsigned const m = argc > 2 ? std::atoi(argv[2]) : 2;

  partid::for_each_partition(n, [&](partid::Partition const& p) {
    auto const image = partid::sigma(p, m);
    auto const s = partid::stat_vector(p, m);
    auto const t = partid::stat_vector(image, m);
    std::cout << partid::to_string(p) << "  ->  " << partid::to_string(image) << "    gamma " << s.gamma_o << " -> "
              << t.gamma_d << ", beta " << s.beta << " -> " << t.beta_floor << '\n';
  });
}
