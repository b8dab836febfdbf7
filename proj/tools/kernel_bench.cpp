// Compares the OpenMP kernels against their serial reference implementations
// on a synthetic workload and checks that both produce identical results.
//
//   msm_kernel_bench [n_sets] [nodes] [dim] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "msm/matchers.hpp"
#include "msm/parallel.hpp"
#include "msm/synthgen.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count() / reps;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-20s %12.3f %12.3f %9.2fx %10s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int n_sets = argc > 1 ? std::atoi(argv[1]) : 24;
  const int nodes = argc > 2 ? std::atoi(argv[2]) : 48;
  const int dim = argc > 3 ? std::atoi(argv[3]) : 5;
  const int reps = argc > 4 ? std::atoi(argv[4]) : 3;

  msm::SyntheticSpec spec;
  spec.n_sets = n_sets;
  spec.n_inliers = nodes;
  spec.dim = dim;
  spec.epsilon = 0.1;
  spec.seed = 7;
  const msm::Dataset data = msm::generate(spec);
  const msm::MatchOptions opts;

  std::printf("sets=%d nodes=%d dim=%d reps=%d threads=%d\n\n", n_sets, nodes, dim, reps,
              msm::thread_cap());
  std::printf("%-20s %12s %12s %9s %10s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "outputs");

  // Large two-set cost matrix: one set against another, scaled up.
  msm::SyntheticSpec big = spec;
  big.n_sets = 2;
  big.n_inliers = nodes * 40;
  const msm::Dataset pair_data = msm::generate(big);
  {
    msm::CostMatrix serial_out(1, 1), parallel_out(1, 1);
    const double s = time_ms(
        [&] { serial_out = msm::build_cost_serial(pair_data.sets[0], pair_data.sets[1], opts.cost); },
        reps);
    const double p = time_ms(
        [&] { parallel_out = msm::build_cost(pair_data.sets[0], pair_data.sets[1], opts.cost); },
        reps);
    bool same = serial_out.rows() == parallel_out.rows();
    for (int r = 0; same && r < serial_out.rows(); ++r)
      for (int c = 0; c < serial_out.cols(); ++c)
        if (serial_out(r, c) != parallel_out(r, c)) same = false;
    report("build_cost", s, p, same);
  }

  msm::MatchConfiguration serial_config, parallel_config;
  {
    const double s = time_ms([&] { serial_config = msm::hung_pair_serial(data.sets, opts); }, reps);
    const double p = time_ms([&] { parallel_config = msm::hung_pair(data.sets, opts); }, reps);
    report("hung_pair", s, p, serial_config == parallel_config);
  }

  {
    msm::ConsistencyReport serial_report, parallel_report;
    const double s =
        time_ms([&] { serial_report = msm::analyze_consistency_serial(serial_config); }, reps);
    const double p = time_ms([&] { parallel_report = msm::analyze_consistency(serial_config); }, reps);
    const bool same = serial_report.unary == parallel_report.unary &&
                      serial_report.reference == parallel_report.reference &&
                      serial_report.pairwise_to_ref == parallel_report.pairwise_to_ref;
    report("consistency", s, p, same);
  }

  return 0;
}
