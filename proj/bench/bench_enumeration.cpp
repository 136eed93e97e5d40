#include <chrono>
#include <iostream>

#include "friezekit/cluster.hpp"
#include "friezekit/frieze.hpp"

using namespace friezekit;

namespace {

template <class F>
double seconds(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const long bound = argc > 1 ? std::stol(argv[1]) : 40;
  const Seed a4 = Seed::base(Quiver::from_arrows(4, {{0, 1, 1}, {2, 1, 1}, {2, 3, 1}}));
  std::size_t ns = 0, np = 0;
  const double ts = seconds([&] { ns = enumerate_frieze_vectors_serial(a4, bound).size(); });
  const double tp = seconds([&] { np = enumerate_frieze_vectors(a4, bound).size(); });
  std::cout << "frieze vectors A4, bound " << bound << ": serial " << ns << " in " << ts << " s, openmp " << np
            << " in " << tp << " s" << (ns == np ? "" : "  MISMATCH") << '\n';

  const Seed d5 = Seed::base(Quiver::from_arrows(5, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}));
  std::size_t cs = 0, cp = 0;
  const double us = seconds([&] { cs = enumerate_clusters(d5, 100000).size(); });
  const double up = seconds([&] { cp = enumerate_clusters_parallel(d5, 100000).size(); });
  std::cout << "clusters D5: serial " << cs << " in " << us << " s, openmp " << cp << " in " << up << " s"
            << (cs == cp ? "" : "  MISMATCH") << '\n';
  return ns == np && cs == cp ? 0 : 1;
}
