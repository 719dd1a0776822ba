// Serial reference vs OpenMP kernels: all-pairs oracle and the round engine.
#include <chrono>
#include <iostream>

#include <omp.h>

#include "CLI11.hpp"
#include "distapx/generators.hpp"
#include "distapx/oracle.hpp"
#include "distapx/primitives.hpp"

using namespace distapx;

template <class F>
double best_ms(int reps, F f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

int main(int argc, char** argv) {
  std::vector<int> sizes = {200, 400, 800};
  int reps = 3;
  double degree = 8;
  std::uint64_t seed = 1;
  CLI::App app{"serial vs OpenMP kernel timings"};
  app.add_option("--n", sizes, "node counts");
  app.add_option("--reps", reps, "repetitions (best time is kept)");
  app.add_option("--degree", degree, "expected degree of the gnp graphs");
  app.add_option("--seed", seed, "generator seed");
  CLI11_PARSE(app, argc, argv);

  std::cout << "# schema=1\n";
  std::cout << "kernel,n,threads,serial_ms,parallel_ms,speedup,identical\n";
  bool all_identical = true;
  for (int n : sizes) {
    Rng rng(mix_seed(seed, n));
    const Graph g = gnp(n, std::min(1.0, degree / n), rng, false, {1, 20});

    std::vector<std::vector<Distance>> a, b;
    const double s1 = best_ms(reps, [&] { a = all_pairs(g, Execution::serial); });
    const double p1 = best_ms(reps, [&] { b = all_pairs(g, Execution::parallel); });
    all_identical &= a == b;
    std::cout << "all_pairs," << n << ',' << omp_get_max_threads() << ',' << s1 << ',' << p1 << ',' << s1 / p1 << ','
              << (a == b) << '\n';

    EngineConfig cfg;
    cfg.seed = seed;
    BfsResult x, y;
    const double s2 = best_ms(reps, [&] {
      cfg.exec = SimExec::serial;
      x = bfs(g, 0, cfg);
    });
    const double p2 = best_ms(reps, [&] {
      cfg.exec = SimExec::openmp;
      y = bfs(g, 0, cfg);
    });
    const bool same = to_json(x.report) == to_json(y.report);
    all_identical &= same;
    std::cout << "engine_bfs," << n << ',' << omp_get_max_threads() << ',' << s2 << ',' << p2 << ',' << s2 / p2 << ','
              << same << '\n';
  }
  return all_identical ? 0 : 1;
}
