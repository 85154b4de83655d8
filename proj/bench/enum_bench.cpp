// Benchmark: serial reference enumeration vs the OpenMP kernel.
// Results must be bit-identical; timings and speedup go to stdout.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "mixfair/errors.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/objective.hpp"
#include "mixfair/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mixfair;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Instance sized_instance(int agents, int indivisible, int divisible) {
  Instance inst;
  inst.n_agents = agents;
  std::vector<int> all;
  for (int i = 0; i < agents; ++i) all.push_back(i);
  for (int g = 0; g < indivisible; ++g) inst.indivisible.push_back(all);
  for (int g = 0; g < divisible; ++g) inst.divisible.push_back(all);
  return inst;
}

}  // namespace

int main(int argc, char** argv) {
  int agents = argc > 1 ? std::atoi(argv[1]) : 6;
  int indivisible = argc > 2 ? std::atoi(argv[2]) : 6;
  int divisible = argc > 3 ? std::atoi(argv[3]) : 2;
  Instance inst = sized_instance(agents, indivisible, divisible);
  Objective obj = parse_objective("square-sum");
  long long candidates = 1;  // every good is desired by every agent
  for (int g = 0; g < indivisible; ++g) candidates *= agents;
  std::printf("instance: %d agents, %d indivisible, %d divisible (%lld candidate assignments)\n",
              agents, indivisible, divisible, candidates);
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  OracleResult serial, parallel;
  double serial_secs = 0, parallel_secs = 0;
  try {
    auto t0 = std::chrono::steady_clock::now();
    serial = brute_force_optimal_serial(inst, obj);
    serial_secs = seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    parallel = brute_force_optimal(inst, obj);
    parallel_secs = seconds_since(t1);
  } catch (const CapExceededError& e) {
    std::printf("instance exceeds enumeration caps: %s\n", e.what());
    return 1;
  }

  if (serial.utilities != parallel.utilities ||
      serial.objective_value != parallel.objective_value ||
      serial.allocation.shares != parallel.allocation.shares) {
    std::printf("MISMATCH: serial and parallel enumeration disagree\n");
    return 1;
  }

  std::printf("optimum value: %s\n",
              serial.objective_value ? rat_to_string(*serial.objective_value).c_str()
                                     : "(lexicographic)");
  std::printf("serial:   %8.3fs\n", serial_secs);
  std::printf("parallel: %8.3fs\n", parallel_secs);
  if (parallel_secs > 0)
    std::printf("speedup:  %8.2fx\n", serial_secs / parallel_secs);
  return 0;
}
