// Serial reference against the OpenMP kernels: enumeration of W and the
// iota-fixed subgroup. Prints best-of-N wall times and checks the outputs agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "preproj/weyl.hpp"

using namespace preproj;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

bool same(const WeylGroup& a, const WeylGroup& b) {
  if (a.order() != b.order() || a.w0() != b.w0()) return false;
  for (std::size_t w = 0; w < a.order(); ++w) {
    if (a.matrix(w) != b.matrix(w) || a.length(w) != b.length(w)) return false;
    for (Vertex i = 1; i <= a.rank(); ++i)
      if (a.left(i, w) != b.left(i, w)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, both columns run serially\n");
#endif
  std::printf("%-4s %8s %12s %12s %12s %12s  %s\n", "type", "|W|", "enum serial", "enum omp", "fixed serial",
              "fixed omp", "agree");
  bool ok = true;
  for (auto [family, rank] : {std::pair{Family::A, 5}, {Family::A, 6}, {Family::D, 5}, {Family::D, 6},
                              {Family::E, 6}, {Family::A, 7}}) {
    const auto graph = build_dynkin(family, rank);
    const auto ref = enumerate_serial(graph);
    const auto par = enumerate(graph);
    const double es = best_of(reps, [&] { (void)enumerate_serial(graph); });
    const double ep = best_of(reps, [&] { (void)enumerate(graph); });
    const double fs = best_of(reps, [&] { (void)fixed_subgroup_serial(ref); });
    const double fp = best_of(reps, [&] { (void)fixed_subgroup(ref); });
    const bool agree = same(ref, par) && fixed_subgroup_serial(ref) == fixed_subgroup(par);
    ok &= agree;
    std::printf("%-4s %8zu %11.4fs %11.4fs %11.4fs %11.4fs  %s\n", graph.name().c_str(), ref.order(), es, ep,
                fs, fp, agree ? "yes" : "NO");
  }
  return ok ? 0 : 1;
}
