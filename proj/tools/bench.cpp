// Times the serial reference implementations against the OpenMP kernels and
// checks that both return identical results.
#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "spinblock/compat.hpp"
#include "spinblock/crystal.hpp"
#include "spinblock/donovan.hpp"
#include "spinblock/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spinblock;

namespace {

template <typename F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-28s %10.3fs %10.3fs %7.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs OpenMP kernels"};
  int p = 5;
  int graph_rank = 60;
  int compat_w = 12;
  int rep_p = 11;
  int rep_w = 3;
  app.add_option("-p", p, "modulus");
  app.add_option("--graph-rank", graph_rank, "rank window for the graph kernel");
  app.add_option("--compat-w", compat_w, "weight for the compatibility kernel");
  app.add_option("--rep-p", rep_p, "modulus for the enumeration kernel");
  app.add_option("--rep-w", rep_w, "weight for the enumeration kernel");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP with %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

  {
    BlockGraph gs, gp;
    double ts = seconds([&] { gs = block_reduced_graph(p, graph_rank, 100'000'000); });
    double tp = seconds(
        [&] { gp = block_reduced_graph(p, graph_rank, 100'000'000, Exec::Parallel); });
    bool equal = gs.vertices == gp.vertices && gs.edges == gp.edges;
    report("block graph", ts, tp, equal);
  }

  {
    StrictPartition nu = core_from_tuple(rock_core(p, 1));
    int index = 0; // rank-decreasing on the rock core
    CompatibilityReport rs, rp;
    double ts = seconds(
        [&] { rs = verify_w_compatible(nu, index, compat_w, p, 400'000'000); });
    double tp = seconds([&] {
      rp = verify_w_compatible(nu, index, compat_w, p, 400'000'000, Exec::Parallel);
    });
    bool equal = rs.passed() == rp.passed() && rs.pairs_checked == rp.pairs_checked &&
                 rs.jn_size == rp.jn_size;
    report("compatibility check", ts, tp, equal);
  }

  {
    std::vector<Representative> es, ep;
    double ts =
        seconds([&] { es = enumerate_representatives(rep_p, rep_w, 400'000'000); });
    double tp = seconds([&] {
      ep = enumerate_representatives(rep_p, rep_w, 400'000'000, Exec::Parallel);
    });
    bool equal = es.size() == ep.size();
    if (equal)
      for (std::size_t i = 0; i < es.size(); ++i)
        if (!(es[i].tuple == ep[i].tuple)) equal = false;
    report("representative scan", ts, tp, equal);
  }
  return 0;
}
