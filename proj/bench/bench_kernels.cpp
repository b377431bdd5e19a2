// Serial exact solve against the multimodular kernel, with the OpenMP pool
// restricted to one thread and at its default size.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "mapcount/catalytic_kernel.hpp"
#include "mapcount/ising_catalytic.hpp"

using namespace mapcount;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t order = argc > 1 ? std::stoul(argv[1]) : 16;
  const int threads = omp_get_max_threads();

  CatalyticSolution exact, one, many;
  const double t_exact = seconds([&] { exact = solve_catalytic_bicoloured(order); });
  omp_set_num_threads(1);
  const double t_one = seconds([&] { one = solve_catalytic_multimodular(order); });
  omp_set_num_threads(threads);
  const double t_many = seconds([&] { many = solve_catalytic_multimodular(order); });

  const bool agree = exact.M11 == one.M11 && one.M11 == many.M11;
  std::cout << "order " << order << "\n"
            << "serial exact           " << t_exact << " s\n"
            << "multimodular 1 thread  " << t_one << " s\n"
            << "multimodular " << threads << " thread" << (threads == 1 ? " " : "s") << " " << t_many << " s\n"
            << "results " << (agree ? "agree" : "DIFFER") << "\n";
  return agree ? EXIT_SUCCESS : EXIT_FAILURE;
}
